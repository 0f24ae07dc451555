#pragma once

#include <span>
#include <vector>

#include "qinterp/core_state.hpp"
#include "qinterp/transforms.hpp"

namespace qinterp {

// Probabilities on the grid x_i = origin + i * span / size().
struct DiscreteDistribution {
    std::vector<double> values;
    double origin = 0.0;
    double span = 1.0;

    double x(std::size_t i) const { return origin + span * static_cast<double>(i) / static_cast<double>(values.size()); }
};

// exp(-(x_i - mean)^2 / 2 sigma^2) on 2^n grid points, normalized to sum 1.
DiscreteDistribution gaussian_distribution(int n, double mean, double sigma, double origin = 0.0, double span = 1.0);

// Register "q" with amplitude sqrt(p_i) on |i>. Throws EncodingError for
// negative entries, a non power-of-two length or a sum away from 1.
Statevector encode_distribution(const DiscreteDistribution& dist);

// K = 2^n qubits in register "u"; weight k sits on the basis state whose only
// set qubit is position k (u_0 is the most significant qubit).
Statevector prepare_unary(const DiscreteDistribution& dist);
// Same with explicit amplitudes, normalized.
Statevector prepare_unary(std::span<const Amplitude> amplitudes);

// Unary-to-binary circuit over 2^n qubits: for each level, CNOT(q, q+qq), the CNOT chain into
// q, the controlled-SWAP fan, then q += qq; finally X on the last qubit.
std::vector<GateOp> unary_to_binary_gates(int n);

// Where the conversion leaves the label, most significant first: 2^n - 2^i, i = n..1.
std::vector<int> binary_positions(int n);

// Label the conversion writes for unary input u_k: the bitwise complement of k.
inline Index binary_label(Index k, int n) { return ((Index{1} << n) - 1) ^ k; }

// Runs the conversion circuit on a state of exactly 2^n qubits and relabels the result into
// registers "binary" (binary_positions order) and "clean". Throws
// InvariantError if a "clean" qubit is not |0> within 1e-9, which happens for
// inputs outside the unary subspace.
TransformResult unary_to_binary(Statevector state, int n);

struct UnaryPipelineResult {
    Statevector state;          // register "q" over 2^n qubits
    TransformReport conversion;  // conversion circuit plus the label reflection
    TransformReport interpolation;
};

// prepare_unary -> unary_to_binary -> X on the label (k instead of its
// complement) -> drop the clean qubits -> qft_interpolate with m = 2^n - n.
UnaryPipelineResult unary_uploading_pipeline(const DiscreteDistribution& dist, Path path = Path::Gates);
UnaryPipelineResult unary_uploading_pipeline(std::span<const Amplitude> amplitudes, Path path = Path::Gates);

}  // namespace qinterp
