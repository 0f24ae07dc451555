#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "qinterp/core_state.hpp"

namespace qinterp {

// Spectrum of an (n+m)-qubit state split at the n-qubit band. In band are
// bins [0, 2^(n-1)) and [2^(n+m) - 2^(n-1), 2^(n+m)); the Nyquist bin of the
// coarse grid lands in the upper part, matching qft_interpolate.
struct SpectralSplit {
    std::vector<Amplitude> psi_in;
    std::vector<Amplitude> psi_out;
    double in_norm = 0.0;
    double out_norm = 0.0;
};

bool in_band(Index k, int n, int total_qubits);

SpectralSplit spectral_split(const Statevector& target, int n);

// Psi_in / |Psi_in| back in the time domain, with the target's layout.
Statevector band_limit_project(const Statevector& target, int n);

// Squared distance between a state and its normalized in-band part,
// 2 o^2 / (1 + sqrt(1 - o^2)).
double bl_distance(double out_norm);

struct Aliased {
    Statevector state;  // register "q", n qubits
    double N;           // |Psi_in + Phi|
};

// Keeps samples 0, 2^m, 2*2^m, ... and renormalizes. N = 2^(m/2) times the
// norm of the kept samples, so that N = |Psi_in| when nothing aliases.
Aliased subsample_alias(const Statevector& target, int n);

// Out-of-band content folded onto the in-band bin of each residue class
// mod 2^n, as a full-length spectrum (zero out of band).
std::vector<Amplitude> alias_spectrum(const Statevector& target, int n);

// Squared distance of the aliased reconstruction, 2 o^2 / N - (N-1)^2 / N.
// Exact when |Phi| = |Psi_out|.
double alias_distance(double out_norm, double N);
// Exact for any |Phi|: (o^2 + phi^2) / N - (N-1)^2 / N.
double alias_distance(double out_norm, double phi_norm, double N);

// Trace distance of two pure states, sqrt(1 - |<a|b>|^2). Evaluated as
// d sqrt(1 - d^2/4) with d = |a - e^{i arg<a|b>} b| and checked against the
// overlap form.
double trace_distance(std::span<const Amplitude> a, std::span<const Amplitude> b);
double trace_distance(const Statevector& a, const Statevector& b);

// Upper bound on the trace distance, sqrt(2) o sqrt(1 - o^2/2).
double trace_bound(double out_norm);

struct DistanceReport {
    int n = 0;
    int m = 0;
    double in_norm = 0.0;
    double out_norm = 0.0;
    double phi_norm = 0.0;
    double alias_norm_N = 0.0;

    // Filtered route: band-limit, subsample, interpolate.
    double l2_distance = 0.0;
    double trace_distance = 0.0;
    // Aliased route: subsample the raw target, interpolate.
    double aliased_l2_distance = 0.0;
    double aliased_trace_distance = 0.0;

    double bound_eq2 = 0.0;  // predicted filtered l2 distance
    double bound_eq3 = 0.0;  // trace-distance bound
    double bound_eq4 = 0.0;  // predicted aliased l2 distance, |Phi| = |Psi_out| form
    double bound_eq4_general = 0.0;

    bool eq4_premises = false;  // N >= 1 and |Phi| = |Psi_out|
    bool eq3_filtered_ok = false;
    bool eq3_aliased_ok = false;
};

DistanceReport verify_bounds(const Statevector& target, int n);

nlohmann::json to_json(const DistanceReport& r);

}  // namespace qinterp
