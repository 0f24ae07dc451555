#include "qinterp/interpolate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>

#include "qinterp/errors.hpp"

namespace qinterp {

namespace {

void check_m(int m) {
    if (m < 0) throw ArgumentError("m must be non-negative");
}

// Inserts m qubits into `reg` right after entry `slot - 1` and fans a CNOT
// out to them from that entry.
void widen(Statevector& state, TransformReport& report, std::string_view reg, std::size_t slot, int m) {
    const int control = state.layout().positions(reg)[slot - 1];
    const int at = control + 1;
    state = insert_zero_qubits_at(std::move(state), at, m, reg, slot);
    report.shift(at, m);
    for (int i = 0; i < m; ++i) {
        const gate::CNOT g{control, at + i};
        state.apply(g);
        report.gates.emplace_back(g);
        report.ancillas_added.push_back(at + i);
    }
}

void warn_if_complex(const Statevector& state) {
    const auto a = state.amplitudes();
    const bool complex = std::any_of(a.begin(), a.end(), [](const Amplitude& x) { return std::abs(x.imag()) > 1e-12; });
    if (complex) std::clog << "warning: cosine interpolation of a complex-valued state\n";
}

TransformResult qct_block_interpolate(Statevector state, std::string_view reg, std::size_t first, int m, Path path) {
    check_m(m);
    warn_if_complex(state);
    auto fwd = detail::qct_block(std::move(state), reg, first, false, path);
    TransformReport report = std::move(fwd.report);
    state = std::move(fwd.state);
    widen(state, report, reg, first + 1, m);
    auto inv = detail::qct_block(std::move(state), reg, first, true, path);
    report.append(inv.report);
    return {std::move(inv.state), std::move(report)};
}

std::vector<double> dct_pad(std::span<const double> x, int m) {
    auto c = dct2_oracle(x, false);
    c.resize(x.size() << m, 0.0);
    return dct2_oracle(c, true);
}

}  // namespace

TransformResult qft_interpolate(Statevector state, std::string_view reg, int m, Path path) {
    check_m(m);
    auto fwd = qft(std::move(state), reg, false, path);
    TransformReport report = std::move(fwd.report);
    state = std::move(fwd.state);
    widen(state, report, reg, 1, m);
    auto inv = qft(std::move(state), reg, true, path);
    report.append(inv.report);
    return {std::move(inv.state), std::move(report)};
}

TransformResult qct_interpolate(Statevector state, std::string_view reg, int m, Path path) {
    return qct_block_interpolate(std::move(state), reg, 0, m, path);
}

TransformResult s_qct_interpolate(Statevector state, std::string_view reg, int s, int m, Path path) {
    const int n = state.layout().size_of(reg);
    if (s < 1 || s > n)
        throw ArgumentError("block size s=" + std::to_string(s) + " must lie in 1.." + std::to_string(n));
    return qct_block_interpolate(std::move(state), reg, static_cast<std::size_t>(n - s), m, path);
}

TransformResult interpolate_nd(Statevector state, const InterpSpec& spec) {
    check_m(spec.m);
    std::vector<int> all;
    for (const auto& axis : spec.axes) {
        const auto& p = state.layout().positions(axis);
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw LayoutError("interpolation axes overlap");

    TransformReport total;
    for (const auto& axis : spec.axes) {
        TransformResult r = [&] {
            switch (spec.method) {
                case Method::QFT: return qft_interpolate(std::move(state), axis, spec.m, spec.path);
                case Method::QCT: return qct_interpolate(std::move(state), axis, spec.m, spec.path);
                case Method::SQCT: return s_qct_interpolate(std::move(state), axis, spec.s, spec.m, spec.path);
            }
            throw ArgumentError("unknown interpolation method");
        }();
        state = std::move(r.state);
        total.gates.insert(total.gates.end(), r.report.gates.begin(), r.report.gates.end());
        total.ancillas_added.insert(total.ancillas_added.end(), r.report.ancillas_added.begin(),
                                    r.report.ancillas_added.end());
        total.depth = std::max(total.depth, r.report.depth);
        total.ancilla_residual = std::max(total.ancilla_residual, r.report.ancilla_residual);
    }
    return {std::move(state), std::move(total)};
}

int circuit_qubits(const InterpSpec& spec, std::span<const int> axis_sizes, int other) {
    int q = other;
    for (int n : axis_sizes) q += n + spec.m + (spec.method == Method::QFT ? 0 : 2);
    return q;
}

std::vector<Amplitude> zero_pad_oracle(std::span<const Amplitude> v, int m, ZeroPadVariant variant) {
    check_m(m);
    const std::size_t n = v.size();
    if (n == 0 || !std::has_single_bit(n)) throw ArgumentError("zero padding needs a power-of-two length");
    const std::size_t big = n << m;
    std::vector<Amplitude> out(big);

    if (variant.kind == ZeroPadVariant::QFT) {
        const auto spec = dft_oracle(v, false);
        std::vector<Amplitude> padded(big);
        for (std::size_t k = 0; k < n; ++k) padded[k < n / 2 ? k : k + big - n] = spec[k];
        out = dft_oracle(padded, true);
    } else {
        std::size_t block = n;
        if (variant.kind == ZeroPadVariant::BlockDCT) {
            if (variant.s < 1 || (std::size_t{1} << variant.s) > n)
                throw ArgumentError("block size exceeds the signal length");
            block = std::size_t{1} << variant.s;
        }
        std::vector<double> re(block), im(block);
        for (std::size_t b = 0; b < n / block; ++b) {
            for (std::size_t i = 0; i < block; ++i) {
                re[i] = v[b * block + i].real();
                im[i] = v[b * block + i].imag();
            }
            const auto pr = dct_pad(re, m), pi = dct_pad(im, m);
            const std::size_t wide = block << m;
            for (std::size_t i = 0; i < wide; ++i) out[b * wide + i] = {pr[i], pi[i]};
        }
    }

    double s = 0.0;
    for (const auto& x : out) s += std::norm(x);
    if (s == 0.0) throw DegenerateError("zero padding of the zero vector");
    const double inv = 1.0 / std::sqrt(s);
    for (auto& x : out) x *= inv;
    return out;
}

}  // namespace qinterp
