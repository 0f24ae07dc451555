#include "qinterp/analysis.hpp"

#include <cmath>

#include "qinterp/errors.hpp"
#include "qinterp/interpolate.hpp"
#include "qinterp/transforms.hpp"

namespace qinterp {

namespace {

void check_band(const Statevector& target, int n) {
    if (n < 1 || n > target.num_qubits())
        throw ArgumentError("band size n=" + std::to_string(n) + " must lie in 1.." + std::to_string(target.num_qubits()));
}

double norm_of(std::span<const Amplitude> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

Statevector flat(const Statevector& s) {
    std::vector<Amplitude> a(s.amplitudes().begin(), s.amplitudes().end());
    return Statevector(RegisterLayout::contiguous({{"q", s.num_qubits()}}), std::move(a));
}

// Representative in-band bin of residue class k mod 2^n.
Index representative(Index k, int n, int total) {
    const Index coarse = Index{1} << n;
    return k < coarse / 2 ? k : k + (Index{1} << total) - coarse;
}

std::vector<Amplitude> spectrum(const Statevector& s) {
    std::vector<Amplitude> f(s.amplitudes().begin(), s.amplitudes().end());
    fft_unitary(f, false);
    return f;
}

}  // namespace

bool in_band(Index k, int n, int total_qubits) {
    const Index half = Index{1} << (n - 1);
    return k < half || k >= (Index{1} << total_qubits) - half;
}

SpectralSplit spectral_split(const Statevector& target, int n) {
    check_band(target, n);
    const int q = target.num_qubits();
    const auto f = spectrum(target);
    SpectralSplit s;
    s.psi_in.assign(f.size(), Amplitude{});
    s.psi_out.assign(f.size(), Amplitude{});
    for (Index k = 0; k < f.size(); ++k) (in_band(k, n, q) ? s.psi_in : s.psi_out)[k] = f[k];
    s.in_norm = norm_of(s.psi_in);
    s.out_norm = norm_of(s.psi_out);
    return s;
}

Statevector band_limit_project(const Statevector& target, int n) {
    auto split = spectral_split(target, n);
    if (split.in_norm <= 1e-12) throw DegenerateError("target has no in-band content");
    for (auto& x : split.psi_in) x /= split.in_norm;
    fft_unitary(split.psi_in, true);
    return Statevector(target.layout(), std::move(split.psi_in));
}

double bl_distance(double out_norm) {
    if (!(out_norm >= 0.0) || out_norm > 1.0 + 1e-12) throw ArgumentError("out-of-band norm must lie in [0, 1]");
    const double o2 = std::min(out_norm * out_norm, 1.0);
    const double d2 = 2.0 * o2 / (1.0 + std::sqrt(1.0 - o2));
    if (d2 > 2.0 * o2 * (1.0 + 1e-15)) throw InvariantError("band-limit distance exceeds 2 o^2");
    return d2;
}

Aliased subsample_alias(const Statevector& target, int n) {
    check_band(target, n);
    const int m = target.num_qubits() - n;
    const Index stride = Index{1} << m;
    std::vector<Amplitude> d(std::size_t{1} << n);
    for (Index j = 0; j < d.size(); ++j) d[j] = target[j * stride];
    const double kept = norm_of(d);
    if (kept == 0.0) throw DegenerateError("all decimated samples are zero");
    for (auto& x : d) x /= kept;
    return {Statevector(RegisterLayout::contiguous({{"q", n}}), std::move(d)), kept * std::sqrt(static_cast<double>(stride))};
}

std::vector<Amplitude> alias_spectrum(const Statevector& target, int n) {
    check_band(target, n);
    const int q = target.num_qubits();
    const auto f = spectrum(target);
    const Index coarse = Index{1} << n;
    std::vector<Amplitude> phi(f.size());
    for (Index k = 0; k < f.size(); ++k)
        if (!in_band(k, n, q)) phi[representative(k % coarse, n, q)] += f[k];
    return phi;
}

double alias_distance(double out_norm, double N) { return alias_distance(out_norm, out_norm, N); }

double alias_distance(double out_norm, double phi_norm, double N) {
    if (!(N > 0.0)) throw ArgumentError("alias normalization N must be positive");
    if (out_norm < 0.0 || phi_norm < 0.0) throw ArgumentError("norms must be non-negative");
    const double d2 = (out_norm * out_norm + phi_norm * phi_norm) / N - (N - 1.0) * (N - 1.0) / N;
    if (N >= 1.0 && phi_norm == out_norm && d2 > 2.0 * out_norm * out_norm * (1.0 + 1e-15))
        throw InvariantError("aliasing distance exceeds 2 o^2 with N >= 1");
    return d2;
}

double trace_distance(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    const Amplitude overlap = inner_product(a, b);
    const double r = std::abs(overlap);
    const double by_overlap = std::sqrt(std::max(0.0, 1.0 - r * r));

    const Amplitude phase = r > 0.0 ? std::conj(overlap) / r : Amplitude{1.0};
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d2 += std::norm(a[i] - b[i] * phase);
    const double by_distance = std::sqrt(d2 * std::max(0.0, 1.0 - d2 / 4.0));

    if (std::abs(by_overlap * by_overlap - by_distance * by_distance) > 1e-12)
        throw InvariantError("trace-distance routes disagree");
    return by_distance;
}

double trace_distance(const Statevector& a, const Statevector& b) { return trace_distance(a.amplitudes(), b.amplitudes()); }

double trace_bound(double out_norm) {
    const double o2 = out_norm * out_norm;
    return std::sqrt(2.0) * out_norm * std::sqrt(std::max(0.0, 1.0 - o2 / 2.0));
}

DistanceReport verify_bounds(const Statevector& target_in, int n) {
    const Statevector target = flat(target_in);
    check_band(target, n);
    DistanceReport r;
    r.n = n;
    r.m = target.num_qubits() - n;

    const auto split = spectral_split(target, n);
    r.in_norm = split.in_norm;
    r.out_norm = split.out_norm;
    r.phi_norm = norm_of(alias_spectrum(target, n));

    const auto filtered = qft_interpolate(subsample_alias(band_limit_project(target, n), n).state, "q", r.m, Path::Fast).state;
    r.l2_distance = l2_distance(target.amplitudes(), filtered.amplitudes());
    r.trace_distance = trace_distance(target, filtered);

    const auto aliased = subsample_alias(target, n);
    r.alias_norm_N = aliased.N;
    const auto recon = qft_interpolate(aliased.state, "q", r.m, Path::Fast).state;
    r.aliased_l2_distance = l2_distance(target.amplitudes(), recon.amplitudes());
    r.aliased_trace_distance = trace_distance(target, recon);

    r.bound_eq2 = std::sqrt(bl_distance(r.out_norm));
    r.bound_eq3 = trace_bound(r.out_norm);
    r.bound_eq4 = std::sqrt(std::max(0.0, alias_distance(r.out_norm, r.alias_norm_N)));
    r.bound_eq4_general = std::sqrt(std::max(0.0, alias_distance(r.out_norm, r.phi_norm, r.alias_norm_N)));

    r.eq4_premises = r.alias_norm_N >= 1.0 - 1e-12 && std::abs(r.phi_norm - r.out_norm) <= 1e-12;
    r.eq3_filtered_ok = r.trace_distance <= r.bound_eq3 + 1e-12;
    r.eq3_aliased_ok = r.aliased_trace_distance <= r.bound_eq3 + 1e-12;
    return r;
}

nlohmann::json to_json(const DistanceReport& r) {
    return {
        {"n", r.n},
        {"m", r.m},
        {"in_norm", r.in_norm},
        {"out_norm", r.out_norm},
        {"phi_norm", r.phi_norm},
        {"alias_norm_N", r.alias_norm_N},
        {"l2_distance", r.l2_distance},
        {"trace_distance", r.trace_distance},
        {"aliased_l2_distance", r.aliased_l2_distance},
        {"aliased_trace_distance", r.aliased_trace_distance},
        {"bound_eq2", r.bound_eq2},
        {"bound_eq3", r.bound_eq3},
        {"bound_eq4", r.bound_eq4},
        {"bound_eq4_general", r.bound_eq4_general},
        {"eq4_premises", r.eq4_premises},
        {"eq3_filtered_ok", r.eq3_filtered_ok},
        {"eq3_aliased_ok", r.eq3_aliased_ok},
    };
}

}  // namespace qinterp
