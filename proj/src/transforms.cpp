#include "qinterp/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "line_ops.hpp"
#include "qinterp/errors.hpp"

namespace qinterp {

namespace detail {

FftPlan::FftPlan(std::size_t n, bool inverse) : n_(n), scale_(1.0 / std::sqrt(static_cast<double>(n))) {
    if (n == 0 || !std::has_single_bit(n)) throw ArgumentError("FFT length must be a power of two");
    const int bits = std::countr_zero(n);
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (int b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::uint32_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }
    const double sign = inverse ? -1.0 : 1.0;
    twiddles_.resize(n / 2);
    for (std::size_t t = 0; t < n / 2; ++t)
        twiddles_[t] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
}

void FftPlan::operator()(std::span<Amplitude> x) const {
    if (x.size() != n_) throw ArgumentError("FFT length mismatch");
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(x[i], x[bitrev_[i]]);
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2, step = n_ / len;
        for (std::size_t s = 0; s < n_; s += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Amplitude u = x[s + j];
                const Amplitude v = x[s + j + half] * twiddles_[j * step];
                x[s + j] = u + v;
                x[s + j + half] = u - v;
            }
        }
    }
    for (auto& v : x) v *= scale_;
}

}  // namespace detail

namespace {

using detail::FftPlan;

void remap(int& p, int at, int count) {
    if (p >= at) p += count;
}

// Symmetrizing prologue of the cosine transform on one 4I-long line laid out
// as (A, block, B): H on A, A-controlled reversal of the block, X on B.
void qct_prologue(std::span<Amplitude> l) {
    const std::size_t half = l.size() / 2;
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < half; ++j) {
        const Amplitude x = l[j], y = l[j + half];
        l[j] = (x + y) * r;
        l[j + half] = (x - y) * r;
    }
    auto upper = l.subspan(half);
    // Reversing all block bits while keeping B maps 2j+b to 2(I-1-j)+b.
    for (std::size_t lo = 0, hi = half - 2; lo < hi; lo += 2, hi -= 2) {
        std::swap(upper[lo], upper[hi]);
        std::swap(upper[lo + 1], upper[hi + 1]);
    }
    for (std::size_t t = 0; t < l.size(); t += 2) std::swap(l[t], l[t + 1]);
}

void qct_epilogue(std::span<Amplitude> l) {
    const std::size_t half = l.size() / 2;
    for (std::size_t t = 0; t < l.size(); t += 2) std::swap(l[t], l[t + 1]);
    auto upper = l.subspan(half);
    for (std::size_t lo = 0, hi = half - 2; lo < hi; lo += 2, hi -= 2) {
        std::swap(upper[lo], upper[hi]);
        std::swap(upper[lo + 1], upper[hi + 1]);
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < half; ++j) {
        const Amplitude x = l[j], y = l[j + half];
        l[j] = (x + y) * r;
        l[j + half] = (x - y) * r;
    }
}

std::vector<GateOp> qct_symmetrizer(int a, std::span<const int> block, int b) {
    std::vector<GateOp> g;
    g.emplace_back(gate::H{a});
    for (int q : block) g.emplace_back(gate::CNOT{a, q});
    g.emplace_back(gate::X{b});
    return g;
}

}  // namespace

void TransformReport::shift(int at, int count) {
    for (auto& g : gates)
        std::visit(
            [&](auto& op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, gate::H> || std::is_same_v<T, gate::X>) {
                    remap(op.q, at, count);
                } else if constexpr (std::is_same_v<T, gate::CNOT> || std::is_same_v<T, gate::CPhase>) {
                    remap(op.control, at, count);
                    remap(op.target, at, count);
                } else if constexpr (std::is_same_v<T, gate::SWAP>) {
                    remap(op.a, at, count);
                    remap(op.b, at, count);
                } else {
                    remap(op.control, at, count);
                    remap(op.a, at, count);
                    remap(op.b, at, count);
                }
            },
            g);
    for (auto& p : ancillas_added) remap(p, at, count);
}

void TransformReport::append(const TransformReport& next) {
    gates.insert(gates.end(), next.gates.begin(), next.gates.end());
    ancillas_added.insert(ancillas_added.end(), next.ancillas_added.begin(), next.ancillas_added.end());
    ancilla_residual = std::max(ancilla_residual, next.ancilla_residual);
    depth = circuit_depth(gates);
}

int circuit_depth(std::span<const GateOp> gates) {
    std::vector<int> level;
    int depth = 0;
    for (const auto& g : gates) {
        const auto qs = qubits_of(g);
        int d = 0;
        for (int q : qs) {
            if (static_cast<std::size_t>(q) >= level.size()) level.resize(static_cast<std::size_t>(q) + 1, 0);
            d = std::max(d, level[static_cast<std::size_t>(q)]);
        }
        ++d;
        for (int q : qs) level[static_cast<std::size_t>(q)] = d;
        depth = std::max(depth, d);
    }
    return depth;
}

std::vector<GateOp> qft_gates(std::span<const int> positions, bool inverse) {
    const std::size_t k = positions.size();
    std::vector<GateOp> g;
    g.reserve(k * (k + 1) / 2 + k / 2);
    for (std::size_t i = 0; i < k; ++i) {
        g.emplace_back(gate::H{positions[i]});
        for (std::size_t j = i + 1; j < k; ++j)
            g.emplace_back(gate::CPhase{positions[j], positions[i], std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i))});
    }
    for (std::size_t i = 0; i < k / 2; ++i) g.emplace_back(gate::SWAP{positions[i], positions[k - 1 - i]});
    if (inverse) {
        std::reverse(g.begin(), g.end());
        for (auto& op : g)
            if (auto* cp = std::get_if<gate::CPhase>(&op)) cp->theta = -cp->theta;
    }
    return g;
}

namespace detail {

void apply_qft(Statevector& state, std::span<const int> positions, bool inverse, Path path) {
    if (path == Path::Gates) {
        for (const auto& g : qft_gates(positions, inverse)) state.apply(g);
        return;
    }
    const FftPlan plan(std::size_t{1} << positions.size(), inverse);
    for_each_line(state, positions, [&](std::span<Amplitude> line) { plan(line); });
}

TransformResult qct_block(Statevector state, std::string_view reg, std::size_t first, bool inverse, Path path) {
    const std::string msb = qct_msb_name(reg), lsb = qct_lsb_name(reg);
    {
        const auto& p = state.layout().positions(reg);
        if (first >= p.size()) throw ArgumentError("cosine-transform block is empty");
    }
    TransformReport report;

    if (!inverse) {
        if (state.layout().contains(msb) || state.layout().contains(lsb))
            throw LayoutError("register '" + std::string(reg) + "' already carries cosine-transform ancillas");
        const int top = state.layout().positions(reg)[first];
        state = insert_register(std::move(state), top, msb, 1);
        const int bottom = state.layout().positions(reg).back() + 1;
        state = insert_register(std::move(state), bottom, lsb, 1);
    } else if (state.layout().size_of(msb) != 1 || state.layout().size_of(lsb) != 1) {
        throw LayoutError("cosine-transform ancillas must be single qubits");
    }

    const int a = state.layout().positions(msb)[0];
    const int b = state.layout().positions(lsb)[0];
    const auto& rp = state.layout().positions(reg);
    const std::vector<int> block(rp.begin() + static_cast<std::ptrdiff_t>(first), rp.end());
    std::vector<int> wide;
    wide.reserve(block.size() + 2);
    wide.push_back(a);
    wide.insert(wide.end(), block.begin(), block.end());
    wide.push_back(b);

    auto sym = qct_symmetrizer(a, block, b);
    auto fourier = qft_gates(wide, inverse);
    if (!inverse) {
        report.gates = std::move(sym);
        report.gates.insert(report.gates.end(), fourier.begin(), fourier.end());
        report.ancillas_added = {a, b};
    } else {
        report.gates = std::move(fourier);
        report.gates.insert(report.gates.end(), sym.rbegin(), sym.rend());
    }

    if (path == Path::Gates) {
        for (const auto& g : report.gates) state.apply(g);
    } else {
        const FftPlan plan(std::size_t{1} << wide.size(), inverse);
        if (!inverse)
            for_each_line(state, wide, [&](std::span<Amplitude> l) {
                qct_prologue(l);
                plan(l);
            });
        else
            for_each_line(state, wide, [&](std::span<Amplitude> l) {
                plan(l);
                qct_epilogue(l);
            });
    }
    report.depth = circuit_depth(report.gates);

    if (inverse) {
        const int ab[2] = {a, b};
        const double residual = residual_norm(state, ab);
        if (residual > kPhysicalTolerance)
            throw RangeError("state is outside the range of the cosine transform", residual);
        auto removed = remove_qubits_measured(std::move(state), ab, kPhysicalTolerance);
        state = std::move(removed.state);
        report.ancilla_residual = removed.residual;
    }
    return {std::move(state), std::move(report)};
}

}  // namespace detail

TransformResult qft(Statevector state, std::string_view reg, bool inverse, Path path) {
    const std::vector<int> positions = state.layout().positions(reg);
    if (positions.empty()) throw ArgumentError("register '" + std::string(reg) + "' is empty");
    detail::apply_qft(state, positions, inverse, path);
    TransformReport report;
    report.gates = qft_gates(positions, inverse);
    report.depth = circuit_depth(report.gates);
    return {std::move(state), std::move(report)};
}

std::string qct_msb_name(std::string_view reg) { return std::string(reg) + ".qct_msb"; }
std::string qct_lsb_name(std::string_view reg) { return std::string(reg) + ".qct_lsb"; }

TransformResult qct(Statevector state, std::string_view reg, bool inverse, Path path) {
    return detail::qct_block(std::move(state), reg, 0, inverse, path);
}

Statevector fast_register_transform(Statevector state, std::string_view reg, TransformKind kind) {
    switch (kind) {
        case TransformKind::QFT: return qft(std::move(state), reg, false, Path::Fast).state;
        case TransformKind::IQFT: return qft(std::move(state), reg, true, Path::Fast).state;
        case TransformKind::QCT: return qct(std::move(state), reg, false, Path::Fast).state;
        case TransformKind::IQCT: return qct(std::move(state), reg, true, Path::Fast).state;
    }
    throw ArgumentError("unknown transform kind");
}

std::vector<Amplitude> dft_oracle(std::span<const Amplitude> v, bool inverse) {
    const std::size_t n = v.size();
    if (n == 0) throw ArgumentError("DFT of an empty vector");
    const double sign = inverse ? -1.0 : 1.0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Amplitude s{};
        for (std::size_t j = 0; j < n; ++j) {
            const double t = static_cast<double>((j * k) % n) / static_cast<double>(n);
            s += v[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi * t);
        }
        out[k] = s * scale;
    }
    return out;
}

std::vector<double> dct2_oracle(std::span<const double> v, bool inverse, DctNormalization norm) {
    const std::size_t n = v.size();
    if (n == 0) throw ArgumentError("DCT of an empty vector");
    const double a0 = std::sqrt(1.0 / static_cast<double>(n));
    const double ak = std::sqrt(2.0 / static_cast<double>(n));
    // Uniform normalization scales row 0 by sqrt(2) relative to the orthonormal one.
    const double row0 = norm == DctNormalization::Uniform ? std::sqrt(2.0) : 1.0;
    auto c = [&](std::size_t i, std::size_t k) {
        const std::size_t r = ((2 * i + 1) * k) % (4 * n);
        return std::cos(std::numbers::pi * static_cast<double>(r) / (2.0 * static_cast<double>(n)));
    };
    std::vector<double> out(n, 0.0);
    if (!inverse) {
        for (std::size_t k = 0; k < n; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += v[i] * c(i, k);
            out[k] = (k == 0 ? a0 * row0 : ak) * s;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[0] * a0 / row0 * c(i, 0);
            for (std::size_t k = 1; k < n; ++k) s += v[k] * ak * c(i, k);
            out[i] = s;
        }
    }
    return out;
}

void fft_unitary(std::span<Amplitude> line, bool inverse) { detail::FftPlan(line.size(), inverse)(line); }

}  // namespace qinterp
