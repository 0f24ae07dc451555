#include "doctest.h"
#include "qinterp/errors.hpp"
#include "qinterp/interpolate.hpp"
#include "support.hpp"

using namespace qinterp;
using testing::Gen;

namespace {

std::vector<Amplitude> uniform(std::size_t n) { return std::vector<Amplitude>(n, 1.0 / std::sqrt(double(n))); }

// Amplitudes of `s` restricted to label value `c` of a trailing 2-qubit label.
std::vector<Amplitude> channel(std::span<const Amplitude> s, std::size_t c) {
    std::vector<Amplitude> r;
    for (std::size_t i = c; i < s.size(); i += 4) r.push_back(s[i]);
    return r;
}

// Band-limited n+m qubit state: random in-band spectrum, inverse DFT.
std::vector<Amplitude> band_limited(Gen& gen, int n, int m) {
    const std::size_t N = std::size_t{1} << n, M = std::size_t{1} << (n + m);
    std::vector<Amplitude> spec(M);
    for (std::size_t k = 0; k < N / 2; ++k) spec[k] = {gen.normal(), gen.normal()};
    for (std::size_t k = M - N / 2; k < M; ++k) spec[k] = {gen.normal(), gen.normal()};
    auto v = dft_oracle(spec, true);
    double nrm = 0;
    for (const auto& x : v) nrm += std::norm(x);
    for (auto& x : v) x /= std::sqrt(nrm);
    return v;
}

}  // namespace

TEST_SUITE("interpolate") {

TEST_CASE("uniform and constant inputs stay flat") {
    const auto u = state_from_amplitudes("q", uniform(4));
    const auto q = qft_interpolate(u, "q", 2);
    CHECK(q.state.num_qubits() == 4);
    CHECK(max_abs_diff(q.state.amplitudes(), uniform(16)) <= 1e-13);

    const auto c = qct_interpolate(state_from_amplitudes("q", uniform(8)), "q", 1);
    CHECK(c.state.num_qubits() == 4);
    CHECK(c.state.layout() == RegisterLayout::contiguous({{"q", 4}}));
    CHECK(max_abs_diff(c.state.amplitudes(), uniform(16)) <= 1e-12);

    CHECK(max_abs_diff(zero_pad_oracle(uniform(8), 2, ZeroPadVariant::qft()), uniform(32)) <= 1e-13);
    CHECK(max_abs_diff(zero_pad_oracle(uniform(8), 2, ZeroPadVariant::dct()), uniform(32)) <= 1e-13);
}

TEST_CASE("m = 0 is the identity") {
    Gen gen(41);
    const auto s = gen.state(4, true);
    CHECK(max_abs_diff(qft_interpolate(s, "q", 0).state.amplitudes(), s.amplitudes()) <= 1e-12);
    CHECK(max_abs_diff(qct_interpolate(s, "q", 0).state.amplitudes(), s.amplitudes()) <= 1e-12);
    CHECK(max_abs_diff(s_qct_interpolate(s, "q", 2, 0).state.amplitudes(), s.amplitudes()) <= 1e-12);
}

TEST_CASE("qft interpolation matches the padding oracle") {
    Gen gen(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + trial % 3;
        const auto s = gen.state(3);
        for (auto path : {Path::Gates, Path::Fast}) {
            const auto r = qft_interpolate(s, "q", m, path);
            CHECK(max_abs_diff(r.state.amplitudes(), zero_pad_oracle(s.amplitudes(), m, ZeroPadVariant::qft())) <=
                  1e-12);
        }
    }
}

TEST_CASE("qct interpolation matches the cosine padding oracle") {
    Gen gen(43);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 5, m = 1 + trial % 3;
        const auto s = gen.state(n, true);
        const auto r = qct_interpolate(s, "q", m, trial % 2 ? Path::Fast : Path::Gates);
        CHECK(max_abs_diff(r.state.amplitudes(), zero_pad_oracle(s.amplitudes(), m, ZeroPadVariant::dct())) <= 1e-11);
        CHECK(r.report.ancilla_residual <= 1e-11);
        CHECK(testing::max_imag(r.state.amplitudes()) <= 1e-10);
        CHECK(std::abs(r.state.norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("block cosine interpolation matches the blockwise oracle") {
    Gen gen(44);
    const auto two = gen.state(4, true);
    const auto r = s_qct_interpolate(two, "q", 3, 1);
    CHECK(max_abs_diff(r.state.amplitudes(), zero_pad_oracle(two.amplitudes(), 1, ZeroPadVariant::block_dct(3))) <=
          1e-11);

    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 4, s = 1 + trial % n, m = 1 + trial % 3;
        const auto v = gen.state(n, true);
        const auto out = s_qct_interpolate(v, "q", s, m, trial % 2 ? Path::Fast : Path::Gates);
        CHECK(max_abs_diff(out.state.amplitudes(), zero_pad_oracle(v.amplitudes(), m, ZeroPadVariant::block_dct(s))) <=
              1e-11);
        CHECK(out.report.ancilla_residual <= 1e-11);
        CHECK(testing::max_imag(out.state.amplitudes()) <= 1e-10);
    }
}

TEST_CASE("block size equal to the register reduces to the full cosine method") {
    Gen gen(45);
    const auto s = gen.state(3, true);
    CHECK(max_abs_diff(s_qct_interpolate(s, "q", 3, 2).state.amplitudes(),
                       qct_interpolate(s, "q", 2).state.amplitudes()) <= 1e-12);
    CHECK_THROWS_AS(s_qct_interpolate(s, "q", 4, 1), ArgumentError);
    CHECK_THROWS_AS(s_qct_interpolate(s, "q", 0, 1), ArgumentError);
    CHECK_THROWS_AS(qft_interpolate(s, "q", -1), ArgumentError);
}

TEST_CASE("block gate count does not depend on the register size") {
    Gen gen(46);
    for (int s : {1, 2, 3}) {
        for (int m : {1, 2}) {
            std::size_t count = 0;
            int depth = 0;
            for (int n : {s, s + 2, s + 5}) {
                const auto r = s_qct_interpolate(gen.state(n, true), "q", s, m);
                if (n == s) {
                    count = r.report.gate_count();
                    depth = r.report.depth;
                }
                CHECK(r.report.gate_count() == count);
                CHECK(r.report.depth == depth);
            }
        }
    }
}

TEST_CASE("band-limited states are recovered from their subsamples") {
    Gen gen(47);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 4, m = 1 + trial % 3;
        const auto v = band_limited(gen, n, m);
        std::vector<Amplitude> sub;
        for (std::size_t i = 0; i < v.size(); i += std::size_t{1} << m) sub.push_back(v[i]);
        const auto r = qft_interpolate(state_from_amplitudes("q", sub), "q", m, Path::Fast);
        CHECK(max_abs_diff(r.state.amplitudes(), v) <= 1e-10);
    }
}

TEST_CASE("two-dimensional interpolation is separable") {
    Gen gen(48);
    const auto f = gen.state(3, true), g = gen.state(2, true);
    std::vector<Amplitude> prod;
    for (const auto& a : f.amplitudes())
        for (const auto& b : g.amplitudes()) prod.push_back(a * b);
    Statevector s(RegisterLayout::contiguous({{"x", 3}, {"y", 2}}), prod);

    for (auto method : {Method::QFT, Method::QCT, Method::SQCT}) {
        InterpSpec spec{method, 2, 2, {"x", "y"}, Path::Fast};
        const auto r = interpolate_nd(s, spec);
        auto one = [&](const Statevector& v) {
            switch (method) {
                case Method::QFT: return qft_interpolate(v, "q", 2).state;
                case Method::QCT: return qct_interpolate(v, "q", 2).state;
                default: return s_qct_interpolate(v, "q", std::min(2, v.num_qubits()), 2).state;
            }
        };
        const auto fx = one(f), gy = one(g);
        std::vector<Amplitude> expect;
        for (const auto& a : fx.amplitudes())
            for (const auto& b : gy.amplitudes()) expect.push_back(a * b);
        CHECK(r.state.layout() == RegisterLayout::contiguous({{"x", 5}, {"y", 4}}));
        CHECK(max_abs_diff(r.state.amplitudes(), expect) <= 1e-11);
    }
}

TEST_CASE("constant image grows to a constant image") {
    Statevector s(RegisterLayout::contiguous({{"x", 2}, {"y", 2}}), uniform(16));
    for (auto method : {Method::QFT, Method::QCT}) {
        const auto r = interpolate_nd(s, InterpSpec{method, 1, 3, {"x", "y"}, Path::Gates});
        CHECK(max_abs_diff(r.state.amplitudes(), uniform(64)) <= 1e-12);
    }
}

TEST_CASE("labeled channels are interpolated independently") {
    Gen gen(49);
    // 8x8 image, three channels, label value 3 empty.
    std::vector<Amplitude> amps(8 * 8 * 4);
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (i % 4 != 3) amps[i] = gen.normal();
    Statevector rgb(RegisterLayout::contiguous({{"x", 3}, {"y", 3}, {"label", 2}}), amps);
    rgb.normalize();
    Statevector gray(RegisterLayout::contiguous({{"x", 3}, {"y", 3}}), channel(rgb.amplitudes(), 0));
    gray.normalize();

    for (auto method : {Method::QFT, Method::QCT, Method::SQCT}) {
        const InterpSpec spec{method, 1, 2, {"x", "y"}, Path::Gates};
        const auto r = interpolate_nd(rgb, spec);
        for (std::size_t c = 0; c < 4; ++c) {
            const auto in = channel(rgb.amplitudes(), c);
            double w = 0;
            for (const auto& x : in) w += std::norm(x);
            w = std::sqrt(w);
            const auto got = channel(r.state.amplitudes(), c);
            if (w == 0) {
                CHECK(max_abs_diff(got, std::vector<Amplitude>(got.size())) <= 1e-11);
                continue;
            }
            Statevector part(RegisterLayout::contiguous({{"x", 3}, {"y", 3}}), in);
            part.normalize();
            auto expect = std::move(interpolate_nd(part, spec).state).release();
            for (auto& x : expect) x *= w;
            CHECK(max_abs_diff(got, expect) <= 1e-11);
        }
        const auto g = interpolate_nd(gray, spec);
        CHECK(g.report.depth == r.report.depth);
        CHECK(g.report.gate_count() == r.report.gate_count());
    }
}

TEST_CASE("overlapping or missing axes are rejected") {
    Statevector s(RegisterLayout::contiguous({{"x", 2}, {"y", 2}}));
    CHECK_THROWS_AS(interpolate_nd(s, InterpSpec{Method::QFT, 1, 3, {"x", "x"}, Path::Fast}), LayoutError);
    CHECK_THROWS_AS(interpolate_nd(s, InterpSpec{Method::QFT, 1, 3, {"z"}, Path::Fast}), ArgumentError);
    const Amplitude three[] = {1, 2, 3};
    CHECK_THROWS_AS(zero_pad_oracle(three, 1, ZeroPadVariant::qft()), ArgumentError);
}

TEST_CASE("circuit width bookkeeping") {
    const int axes[] = {9, 9};
    CHECK(circuit_qubits(InterpSpec{Method::QCT, 2, 3, {"x", "y"}, Path::Fast}, axes, 0) == 26);
    CHECK(circuit_qubits(InterpSpec{Method::QFT, 2, 3, {"x", "y"}, Path::Fast}, axes, 0) == 22);
    CHECK(circuit_qubits(InterpSpec{Method::QCT, 1, 3, {"x", "y"}, Path::Fast}, axes, 2) == 26);
}

TEST_CASE("gate and fast paths agree on reports and states") {
    Gen gen(50);
    const auto s = gen.state(5, true);
    for (int m : {1, 2}) {
        const auto a = s_qct_interpolate(s, "q", 3, m, Path::Gates);
        const auto b = s_qct_interpolate(s, "q", 3, m, Path::Fast);
        CHECK(a.report.gate_count() == b.report.gate_count());
        CHECK(a.report.depth == b.report.depth);
        CHECK(max_abs_diff(a.state.amplitudes(), b.state.amplitudes()) <= 1e-11);
    }
}

}
