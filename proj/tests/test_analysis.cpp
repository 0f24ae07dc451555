#include "doctest.h"
#include "qinterp/analysis.hpp"
#include "qinterp/errors.hpp"
#include "qinterp/interpolate.hpp"
#include "support.hpp"

using namespace qinterp;
using testing::Gen;

namespace {

double sq_dist(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::norm(a[i] - b[i]);
    return d;
}

Statevector band_limited_state(Gen& gen, int n, int m) {
    const std::size_t N = std::size_t{1} << n, M = std::size_t{1} << (n + m);
    std::vector<Amplitude> spec(M);
    for (std::size_t k = 0; k < M; ++k)
        if (k < N / 2 || k >= M - N / 2) spec[k] = {gen.normal(), gen.normal()};
    return state_from_amplitudes("q", dft_oracle(spec, true));
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("band membership") {
    // n = 2 on 4 qubits: bins 0, 1 and 14, 15.
    for (Index k = 0; k < 16; ++k) CHECK(in_band(k, 2, 4) == (k < 2 || k >= 14));
    for (Index k = 0; k < 8; ++k) CHECK(in_band(k, 3, 3));
}

TEST_CASE("spectral split examples") {
    Gen gen(71);
    const auto bl = band_limited_state(gen, 3, 2);
    const auto s = spectral_split(bl, 3);
    CHECK(s.out_norm <= 1e-13);
    CHECK(std::abs(s.in_norm - 1.0) <= 1e-13);

    // Pure tone at bin 8 of 16 lies outside the n = 2 band.
    std::vector<Amplitude> tone(16);
    tone[8] = 1;
    const auto t = spectral_split(state_from_amplitudes("q", dft_oracle(tone, true)), 2);
    CHECK(std::abs(t.out_norm - 1.0) <= 1e-13);
    CHECK_THROWS_AS(band_limit_project(state_from_amplitudes("q", dft_oracle(tone, true)), 2), DegenerateError);

    for (int trial = 0; trial < 20; ++trial) {
        const auto r = spectral_split(gen.state(5), 3);
        CHECK(std::abs(r.in_norm * r.in_norm + r.out_norm * r.out_norm - 1.0) <= 1e-13);
    }
    CHECK_THROWS_AS(spectral_split(gen.state(3), 4), ArgumentError);
}

TEST_CASE("projection is the normalized in-band part") {
    Gen gen(72);
    const auto bl = band_limited_state(gen, 2, 3);
    CHECK(max_abs_diff(band_limit_project(bl, 2).amplitudes(), bl.amplitudes()) <= 1e-13);

    for (int trial = 0; trial < 20; ++trial) {
        const auto t = gen.state(2 + trial % 5);
        const int n = 1 + trial % (t.num_qubits());
        const auto split = spectral_split(t, n);
        const auto p = band_limit_project(t, n);
        // Direct: the in-band spectrum over its norm, back in time.
        auto spec = split.psi_in;
        for (auto& x : spec) x /= split.in_norm;
        CHECK(max_abs_diff(p.amplitudes(), dft_oracle(spec, true)) <= 1e-12);
        CHECK(std::abs(sq_dist(t.amplitudes(), p.amplitudes()) - bl_distance(split.out_norm)) <= 1e-12);
        CHECK(bl_distance(split.out_norm) <= 2 * split.out_norm * split.out_norm + 1e-15);
    }
}

TEST_CASE("closed-form distance values") {
    CHECK(bl_distance(0.0) == 0.0);
    CHECK(std::abs(bl_distance(1.0) - 2.0) < 1e-15);
    CHECK_THROWS_AS(bl_distance(1.5), ArgumentError);
    CHECK(alias_distance(0.0, 1.0) == 0.0);
    CHECK(std::abs(alias_distance(0.3, 1.0) - 2 * 0.09) < 1e-15);
    CHECK_THROWS_AS(alias_distance(0.3, 0.0), ArgumentError);
    CHECK(std::abs(alias_distance(0.3, 0.3, 1.1) - alias_distance(0.3, 1.1)) < 1e-15);
    CHECK(trace_bound(0.0) == 0.0);
    CHECK(std::abs(trace_bound(1.0) - 1.0) < 1e-15);
}

TEST_CASE("decimation equals spectral folding") {
    Gen gen(73);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3, m = 1 + trial % 2;
        const auto t = gen.state(n + m);
        const auto a = subsample_alias(t, n);

        // Oracle: sum the 2^m copies of the spectrum at stride 2^n, inverse DFT of size 2^n.
        const auto full = dft_oracle(t.amplitudes(), false);
        const std::size_t N = std::size_t{1} << n;
        std::vector<Amplitude> folded(N);
        for (std::size_t k = 0; k < full.size(); ++k) folded[k % N] += full[k];
        auto coarse = dft_oracle(folded, true);
        double nrm = 0;
        for (const auto& x : coarse) nrm += std::norm(x);
        for (auto& x : coarse) x /= std::sqrt(nrm);
        CHECK(max_abs_diff(a.state.amplitudes(), coarse) <= 1e-12);
        CHECK(std::abs(a.N - std::sqrt(nrm)) <= 1e-12);

        // In-band part plus folded copies has norm N.
        const auto phi = alias_spectrum(t, n);
        const auto split = spectral_split(t, n);
        double fn = 0;
        for (std::size_t k = 0; k < phi.size(); ++k) {
            fn += std::norm(phi[k] + split.psi_in[k]);
            if (!in_band(k, n, n + m)) CHECK(phi[k] == Amplitude{});
        }
        CHECK(std::abs(std::sqrt(fn) - a.N) <= 1e-12);
    }
}

TEST_CASE("uniform and band-limited targets alias trivially") {
    std::vector<Amplitude> flat(32, 1.0 / std::sqrt(32.0));
    const auto u = state_from_amplitudes("q", flat);
    const auto a = subsample_alias(u, 3);
    CHECK(std::abs(a.N - 1.0) <= 1e-13);
    const auto back = qft_interpolate(a.state, "q", 2);
    CHECK(sq_dist(back.state.amplitudes(), flat) <= 1e-26);

    Gen gen(74);
    const auto bl = band_limited_state(gen, 2, 2);
    const auto b = subsample_alias(bl, 2);
    CHECK(std::abs(b.N - 1.0) <= 1e-12);
    CHECK(max_abs_diff(qft_interpolate(b.state, "q", 2).state.amplitudes(), bl.amplitudes()) <= 1e-12);
}

TEST_CASE("aliased distance formula matches direct computation") {
    Gen gen(75);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3, m = 1 + trial % 3;
        const auto t = gen.state(n + m, trial % 2 == 0);
        const auto split = spectral_split(t, n);
        const auto a = subsample_alias(t, n);
        const auto rec = qft_interpolate(a.state, "q", m, Path::Fast);
        double phi = 0;
        for (const auto& x : alias_spectrum(t, n)) phi += std::norm(x);
        phi = std::sqrt(phi);
        CHECK(std::abs(sq_dist(t.amplitudes(), rec.state.amplitudes()) - alias_distance(split.out_norm, phi, a.N)) <=
              1e-11);
    }
}

TEST_CASE("trace distance routes agree") {
    Gen gen(76);
    const auto a = gen.state(3);
    CHECK(trace_distance(a, a) <= 1e-7);
    Statevector e0(RegisterLayout::contiguous({{"q", 2}})), e1 = e0;
    e1[0] = 0;
    e1[1] = 1;
    CHECK(std::abs(trace_distance(e0, e1) - 1.0) <= 1e-15);
    CHECK_THROWS_AS(trace_distance(gen.state(2), gen.state(3)), ArgumentError);

    for (int trial = 0; trial < 50; ++trial) {
        const bool real = trial % 2 == 0;
        const auto x = gen.state(4, real), y = gen.state(4, real);
        const double ov = std::abs(inner_product(x.amplitudes(), y.amplitudes()));
        const double direct = std::sqrt(std::max(0.0, 1 - ov * ov));
        CHECK(std::abs(trace_distance(x, y) - direct) <= 1e-12);
        if (real && inner_product(x.amplitudes(), y.amplitudes()).real() >= 0) {
            const double d = l2_distance(x.amplitudes(), y.amplitudes());
            CHECK(std::abs(trace_distance(x, y) - d * std::sqrt(1 - d * d / 4)) <= 1e-12);
        }
    }
}

TEST_CASE("band-limited targets give zero distances") {
    Gen gen(77);
    const auto r = verify_bounds(band_limited_state(gen, 3, 2), 3);
    CHECK(r.l2_distance <= 1e-10);
    CHECK(r.trace_distance <= 1e-7);
    CHECK(r.aliased_l2_distance <= 1e-10);
    CHECK(r.bound_eq3 <= 1e-12);
    CHECK(r.eq3_filtered_ok);
}

TEST_CASE("gaussian target report") {
    const auto g = [] {
        std::vector<Amplitude> v(128);
        for (std::size_t i = 0; i < 128; ++i) {
            const double x = i / 128.0;
            v[i] = std::sqrt(std::exp(-(x - 0.5) * (x - 0.5) / (2 * 0.125 * 0.125)));
        }
        return state_from_amplitudes("q", v);
    }();
    const auto r = verify_bounds(g, 4);
    CHECK(r.n == 4);
    CHECK(r.m == 3);
    CHECK(r.trace_distance <= r.bound_eq3);
    CHECK(r.eq3_filtered_ok);
    CHECK(std::abs(r.l2_distance - r.bound_eq2) <= 1e-12);
    CHECK(std::abs(r.aliased_l2_distance - r.bound_eq4_general) <= 1e-11);
    const auto j = to_json(r);
    for (const char* key : {"n", "m", "in_norm", "out_norm", "phi_norm", "alias_norm_N", "l2_distance", "trace_distance",
                            "aliased_l2_distance", "aliased_trace_distance", "bound_eq2", "bound_eq3", "bound_eq4",
                            "bound_eq4_general", "eq4_premises", "eq3_filtered_ok", "eq3_aliased_ok"})
        CHECK_MESSAGE(j.contains(key), key);
}

TEST_CASE("seeded bound sweep has no filtered violations") {
    Gen gen(78);
    int premise_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int total = 2 + trial % 7;
        const int n = 1 + trial % (total - 1);
        const auto t = trial % 4 == 0 ? band_limited_state(gen, n, total - n) : gen.state(total, trial % 3 == 0);
        const auto r = verify_bounds(t, n);
        CHECK(r.eq3_filtered_ok);
        CHECK(r.trace_distance >= 0.0);
        CHECK(r.trace_distance <= 1.0);
        CHECK(r.l2_distance <= std::sqrt(2.0) + 1e-12);
        if (r.eq4_premises) {
            ++premise_cases;
            CHECK(r.eq3_aliased_ok);
            CHECK(std::abs(r.bound_eq4 - r.bound_eq4_general) <= 1e-11);
        }
        if (trial % 4 == 0) CHECK(r.l2_distance <= 1e-10);
    }
    CHECK(premise_cases > 0);
}

}
