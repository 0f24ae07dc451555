#include "qinterp/encode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qinterp/errors.hpp"
#include "qinterp/interpolate.hpp"

namespace qinterp {

namespace {

int log2_exact(std::size_t n, const char* what) {
    if (n == 0 || !std::has_single_bit(n)) throw EncodingError(std::string(what) + " length must be a power of two");
    return std::countr_zero(n);
}

void check_distribution(const DiscreteDistribution& d) {
    log2_exact(d.values.size(), "distribution");
    double sum = 0.0;
    for (double v : d.values) {
        if (!(v >= 0.0)) throw EncodingError("distribution has a negative or NaN entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw EncodingError("distribution sums to " + std::to_string(sum));
}

std::vector<Amplitude> sqrt_amplitudes(const DiscreteDistribution& d) {
    check_distribution(d);
    std::vector<Amplitude> a(d.values.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::sqrt(d.values[i]);
    return a;
}

}  // namespace

DiscreteDistribution gaussian_distribution(int n, double mean, double sigma, double origin, double span) {
    if (n < 0 || n > kMaxQubits) throw ArgumentError("grid size 2^" + std::to_string(n) + " unsupported");
    if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
    DiscreteDistribution d{std::vector<double>(std::size_t{1} << n), origin, span};
    double sum = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        const double z = (d.x(i) - mean) / sigma;
        d.values[i] = std::exp(-0.5 * z * z);
        sum += d.values[i];
    }
    if (sum == 0.0) throw DegenerateError("Gaussian underflows on the whole grid");
    for (auto& v : d.values) v /= sum;
    return d;
}

Statevector encode_distribution(const DiscreteDistribution& dist) {
    auto a = sqrt_amplitudes(dist);
    const int n = std::countr_zero(a.size());
    Statevector s(RegisterLayout::contiguous({{"q", n}}), std::move(a));
    s.normalize();
    return s;
}

Statevector prepare_unary(std::span<const Amplitude> amplitudes) {
    const std::size_t k = amplitudes.size();
    log2_exact(k, "unary input");
    if (k > static_cast<std::size_t>(kMaxQubits)) throw ResourceError("unary register too wide", 0);
    const int q = static_cast<int>(k);
    std::vector<Amplitude> v(std::size_t{1} << q);
    for (std::size_t i = 0; i < k; ++i) v[Index{1} << (q - 1 - static_cast<int>(i))] = amplitudes[i];
    Statevector s(RegisterLayout::contiguous({{"u", q}}), std::move(v));
    s.normalize();
    return s;
}

Statevector prepare_unary(const DiscreteDistribution& dist) { return prepare_unary(sqrt_amplitudes(dist)); }

std::vector<GateOp> unary_to_binary_gates(int n) {
    if (n < 1 || (1 << n) > kMaxQubits) throw ArgumentError("unary conversion needs 1 <= 2^n <= " + std::to_string(kMaxQubits));
    std::vector<GateOp> c;
    int q = 0;
    for (int i = 0; i < n; ++i) {
        const int qq = 1 << (n - i - 1);
        c.emplace_back(gate::CNOT{q, q + qq});
        for (int j = 1; j < qq; ++j) c.emplace_back(gate::CNOT{q + j, q});
        for (int j = 1; j < qq; ++j) c.emplace_back(gate::CSWAP{q, q + j, q + j + qq});
        q += qq;
    }
    c.emplace_back(gate::X{(1 << n) - 1});
    return c;
}

std::vector<int> binary_positions(int n) {
    std::vector<int> p;
    for (int i = n; i >= 1; --i) p.push_back((1 << n) - (1 << i));
    return p;
}

TransformResult unary_to_binary(Statevector state, int n) {
    auto gates = unary_to_binary_gates(n);
    if (state.num_qubits() != (1 << n))
        throw ArgumentError("unary conversion of n=" + std::to_string(n) + " needs " + std::to_string(1 << n) + " qubits");
    for (const auto& g : gates) state.apply(g);

    const auto bin = binary_positions(n);
    std::vector<int> clean;
    for (int p = 0; p < state.num_qubits(); ++p)
        if (std::find(bin.begin(), bin.end(), p) == bin.end()) clean.push_back(p);
    const double residual = residual_norm(state, clean);
    if (residual > kPhysicalTolerance)
        throw InvariantError("unary conversion left " + std::to_string(residual) + " outside the label qubits");

    std::vector<Register> regs{{"binary", bin}};
    if (!clean.empty()) regs.push_back({"clean", clean});
    state.relabel(RegisterLayout::from_registers(std::move(regs)));

    TransformReport report;
    report.gates = std::move(gates);
    report.depth = circuit_depth(report.gates);
    return {std::move(state), std::move(report)};
}

UnaryPipelineResult unary_uploading_pipeline(std::span<const Amplitude> amplitudes, Path path) {
    const int n = log2_exact(amplitudes.size(), "unary input");
    auto conv = unary_to_binary(prepare_unary(amplitudes), n);
    Statevector state = std::move(conv.state);
    for (int p : state.layout().positions("binary")) {
        const gate::X g{p};
        state.apply(g);
        conv.report.gates.emplace_back(g);
    }
    conv.report.depth = circuit_depth(conv.report.gates);

    if (state.layout().contains("clean")) {
        const auto clean = state.layout().positions("clean");
        state = remove_qubits(std::move(state), clean);
    }
    state.rename_register("binary", "q");
    auto interp = qft_interpolate(std::move(state), "q", (1 << n) - n, path);
    return {std::move(interp.state), std::move(conv.report), std::move(interp.report)};
}

UnaryPipelineResult unary_uploading_pipeline(const DiscreteDistribution& dist, Path path) {
    return unary_uploading_pipeline(sqrt_amplitudes(dist), path);
}

}  // namespace qinterp
