#pragma once

// Shared helpers for the test binaries: seeded generators and dense
// reference operators built from Kronecker products.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "qinterp/core_state.hpp"

namespace testing {

using qinterp::Amplitude;
using qinterp::Statevector;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double normal() { return normal_(rng_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::vector<Amplitude> complex_vector(std::size_t n) {
        std::vector<Amplitude> v(n);
        for (auto& x : v) x = {normal(), normal()};
        return v;
    }
    std::vector<Amplitude> real_vector(std::size_t n) {
        std::vector<Amplitude> v(n);
        for (auto& x : v) x = normal();
        return v;
    }
    Statevector state(int q, bool real = false) {
        auto v = real ? real_vector(std::size_t{1} << q) : complex_vector(std::size_t{1} << q);
        return qinterp::state_from_amplitudes("q", v);
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
};

using Mat2 = std::array<Amplitude, 4>;  // row-major 2x2
using Dense = std::vector<std::vector<Amplitude>>;

inline const Mat2 kI{1, 0, 0, 1};
inline const Mat2 kX{0, 1, 1, 0};
inline const Mat2 kY{0, Amplitude{0, -1}, Amplitude{0, 1}, 0};
inline const Mat2 kZ{1, 0, 0, -1};
inline const double kR2 = 1.0 / std::numbers::sqrt2;
inline const Mat2 kH{kR2, kR2, kR2, -kR2};
inline const Mat2 kP0{1, 0, 0, 0};
inline const Mat2 kP1{0, 0, 0, 1};

// Kronecker product over Q qubits, qubit 0 leftmost; identity where unset.
inline Dense kron(int q, const std::map<int, Mat2>& factors) {
    Dense m{{Amplitude{1}}};
    for (int p = 0; p < q; ++p) {
        const auto it = factors.find(p);
        const Mat2& f = it == factors.end() ? kI : it->second;
        const std::size_t n = m.size();
        Dense r(2 * n, std::vector<Amplitude>(2 * n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b) r[i * 2 + a][j * 2 + b] = m[i][j] * f[a * 2 + b];
        m = std::move(r);
    }
    return m;
}

inline Dense operator+(Dense a, const Dense& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    return a;
}

inline Dense operator*(Amplitude s, Dense a) {
    for (auto& row : a)
        for (auto& x : row) x *= s;
    return a;
}

inline Dense swap_matrix(int q, int a, int b, const std::map<int, Mat2>& extra = {}) {
    Dense m = 0.0 * kron(q, {});
    for (const Mat2* p : {&kI, &kX, &kY, &kZ}) {
        auto f = extra;
        f[a] = *p;
        f[b] = *p;
        m = m + 0.5 * kron(q, f);
    }
    return m;
}

inline Dense dense_gate(int q, const qinterp::GateOp& g) {
    namespace gate = qinterp::gate;
    if (auto* h = std::get_if<gate::H>(&g)) return kron(q, {{h->q, kH}});
    if (auto* x = std::get_if<gate::X>(&g)) return kron(q, {{x->q, kX}});
    if (auto* c = std::get_if<gate::CNOT>(&g))
        return kron(q, {{c->control, kP0}}) + kron(q, {{c->control, kP1}, {c->target, kX}});
    if (auto* c = std::get_if<gate::CPhase>(&g))
        return kron(q, {}) + (std::polar(1.0, c->theta) - 1.0) * kron(q, {{c->control, kP1}, {c->target, kP1}});
    if (auto* s = std::get_if<gate::SWAP>(&g)) return swap_matrix(q, s->a, s->b);
    const auto& c = std::get<gate::CSWAP>(g);
    return kron(q, {{c.control, kP0}}) + swap_matrix(q, c.a, c.b, {{c.control, kP1}});
}

inline std::vector<Amplitude> matvec(const Dense& m, std::span<const Amplitude> v) {
    std::vector<Amplitude> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline double max_imag(std::span<const Amplitude> v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x.imag()));
    return m;
}

inline std::vector<Amplitude> as_complex(std::span<const double> v) {
    return {v.begin(), v.end()};
}

inline std::vector<double> real_parts(std::span<const Amplitude> v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].real();
    return r;
}

}  // namespace testing
