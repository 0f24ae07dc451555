#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinterp/core_state.hpp"
#include "qinterp/transforms.hpp"

namespace qinterp {

enum class Method { QFT, QCT, SQCT };

struct InterpSpec {
    Method method = Method::QCT;
    int m = 1;   // ancillas per axis
    int s = 3;   // block size in qubits, SQCT only
    std::vector<std::string> axes;
    Path path = Path::Fast;
};

// QFT, m |0> qubits inserted right below the register MSB, CNOT fan from the
// MSB into them, inverse QFT on the enlarged register. Spectral bins below
// N/2 stay put; bins N/2..N-1 (Nyquist included) move to the top of the
// enlarged spectrum.
TransformResult qft_interpolate(Statevector state, std::string_view reg, int m, Path path = Path::Gates);

// Same scheme around the cosine transform: the new qubits go right below the
// original MSB, which sits one below ancilla A in the frequency index.
// Ancillas A and B are removed afterwards (RangeError above 1e-9).
// Complex input is accepted with a warning on std::clog.
TransformResult qct_interpolate(Statevector state, std::string_view reg, int m, Path path = Path::Gates);

// Cosine interpolation of every 2^s block of the register in superposition:
// the n-s most significant qubits label the block and are never touched.
TransformResult s_qct_interpolate(Statevector state, std::string_view reg, int s, int m, Path path = Path::Gates);

// Applies the 1-D method to each axis in turn. Axes act on disjoint qubits,
// so the circuits run side by side: depth is the maximum over axes while
// gates are concatenated, each axis's gates in that axis's own frame.
TransformResult interpolate_nd(Statevector state, const InterpSpec& spec);

// Qubit count of the widest point of the circuit for `spec` on the given
// axis sizes, plus `other` untouched qubits.
int circuit_qubits(const InterpSpec& spec, std::span<const int> axis_sizes, int other);

struct ZeroPadVariant {
    enum Kind { QFT, DCT, BlockDCT } kind = QFT;
    int s = 3;  // BlockDCT block size in qubits

    static ZeroPadVariant qft() { return {QFT, 0}; }
    static ZeroPadVariant dct() { return {DCT, 0}; }
    static ZeroPadVariant block_dct(int s) { return {BlockDCT, s}; }
};

// Classical spectral zero padding from 2^n to 2^(n+m) samples, followed by
// renormalization. DCT variants act on real and imaginary parts separately.
std::vector<Amplitude> zero_pad_oracle(std::span<const Amplitude> v, int m, ZeroPadVariant variant);

}  // namespace qinterp
