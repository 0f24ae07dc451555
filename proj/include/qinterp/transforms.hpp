#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinterp/core_state.hpp"

namespace qinterp {

enum class TransformKind { QFT, IQFT, QCT, IQCT };

// Gates: apply the circuit gate by gate. Fast: radix-2 butterflies along the
// register axis; same unitary, same report.
enum class Path { Gates, Fast };

// Circuit description of a transform or interpolation.
//
// Gate positions are expressed in the circuit frame: the layout at the widest
// point of the circuit, i.e. with every ancilla that was ever allocated still
// present. Qubit insertion is virtual and contributes no gates.
struct TransformReport {
    std::vector<GateOp> gates;
    std::vector<int> ancillas_added;
    int depth = 0;
    double ancilla_residual = 0.0;

    std::size_t gate_count() const noexcept { return gates.size(); }

    // Renumbers recorded positions after `count` qubits were inserted at `at`.
    void shift(int at, int count);
    // Sequential composition in a shared frame; recomputes depth.
    void append(const TransformReport& next);
};

struct TransformResult {
    Statevector state;
    TransformReport report;
};

// ASAP layering depth of a gate sequence.
int circuit_depth(std::span<const GateOp> gates);

// Textbook QFT over `positions` (most significant first): H/CPhase ladder
// followed by the SWAP reversal, realizing w^{jk}/sqrt(N) with w = e^{+2 pi i/N}.
// k(k+1)/2 + floor(k/2) gates on k qubits.
std::vector<GateOp> qft_gates(std::span<const int> positions, bool inverse);

TransformResult qft(Statevector state, std::string_view reg, bool inverse, Path path = Path::Gates);

// Names of the two ancilla registers the cosine transform allocates for `reg`.
std::string qct_msb_name(std::string_view reg);
std::string qct_lsb_name(std::string_view reg);

// Forward: allocates ancilla A above the register and B below it, then
// H(A), CNOT(A -> every register qubit), X(B) and a QFT over the k+2 qubit
// block (A, reg..., B). The signal lands on odd indices of a 4I grid,
// mirrored, so block frequencies 0..I-1 carry the DCT-II coefficients
// (uniform normalization) scaled by 1/2.
// Inverse: exact adjoint; A and B are then dropped, failing with RangeError
// if their residual exceeds 1e-9.
TransformResult qct(Statevector state, std::string_view reg, bool inverse, Path path = Path::Gates);

Statevector fast_register_transform(Statevector state, std::string_view reg, TransformKind kind);

// Dense O(N^2) unitary DFT with entries w^{jk}/sqrt(N), w = e^{+2 pi i/N}
// (conjugated for the inverse).
std::vector<Amplitude> dft_oracle(std::span<const Amplitude> v, bool inverse);

enum class DctNormalization {
    Orthonormal,  // alpha_0 = sqrt(1/I), alpha_k = sqrt(2/I)
    Uniform,      // alpha_k = sqrt(2/I) for every k
};

// Direct-sum DCT-II, X_k = alpha_k sum_i x_i cos((2i+1) k pi / 2I).
// `inverse` returns the exact inverse for either normalization (the
// transpose for the orthonormal one).
std::vector<double> dct2_oracle(std::span<const double> v, bool inverse,
                                DctNormalization norm = DctNormalization::Orthonormal);

// In-place unitary radix-2 FFT in the same sign convention as dft_oracle.
void fft_unitary(std::span<Amplitude> line, bool inverse);

namespace detail {

// Cosine transform over the register entries [first, end) of `reg`; the
// public qct() is first = 0. Used by the block-wise interpolation.
TransformResult qct_block(Statevector state, std::string_view reg, std::size_t first, bool inverse, Path path);

// QFT over an explicit position list.
void apply_qft(Statevector& state, std::span<const int> positions, bool inverse, Path path);

}  // namespace detail

}  // namespace qinterp
