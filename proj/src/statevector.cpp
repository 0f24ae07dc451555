#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qinterp/core_state.hpp"
#include "qinterp/errors.hpp"

namespace qinterp {

namespace {

std::vector<Amplitude> zero_vector(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits)
        throw ArgumentError("qubit count " + std::to_string(num_qubits) + " unsupported");
    std::vector<Amplitude> v(std::size_t{1} << num_qubits);
    return v;
}

void check_qubit(int q, int num_qubits) {
    if (q < 0 || q >= num_qubits)
        throw ArgumentError("qubit " + std::to_string(q) + " outside 0.." + std::to_string(num_qubits - 1));
}

void check_distinct(std::initializer_list<int> qs, int num_qubits) {
    for (int q : qs) check_qubit(q, num_qubits);
    std::vector<int> v(qs);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ArgumentError("gate qubit arguments must be distinct");
}

struct GateApplier {
    std::vector<Amplitude>& a;
    int nq;

    Index bit(int q) const { return Index{1} << (nq - 1 - q); }

    void operator()(const gate::H& g) const {
        check_qubit(g.q, nq);
        const Index m = bit(g.q);
        const double r = 1.0 / std::sqrt(2.0);
        for (Index i = 0; i < a.size(); ++i) {
            if (i & m) continue;
            const Amplitude x = a[i], y = a[i | m];
            a[i] = (x + y) * r;
            a[i | m] = (x - y) * r;
        }
    }
    void operator()(const gate::X& g) const {
        check_qubit(g.q, nq);
        const Index m = bit(g.q);
        for (Index i = 0; i < a.size(); ++i)
            if (!(i & m)) std::swap(a[i], a[i | m]);
    }
    void operator()(const gate::CNOT& g) const {
        check_distinct({g.control, g.target}, nq);
        const Index c = bit(g.control), t = bit(g.target);
        for (Index i = 0; i < a.size(); ++i)
            if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
    }
    void operator()(const gate::CPhase& g) const {
        check_distinct({g.control, g.target}, nq);
        const Index both = bit(g.control) | bit(g.target);
        const Amplitude phase = std::polar(1.0, g.theta);
        for (Index i = 0; i < a.size(); ++i)
            if ((i & both) == both) a[i] *= phase;
    }
    void operator()(const gate::SWAP& g) const {
        check_distinct({g.a, g.b}, nq);
        const Index ma = bit(g.a), mb = bit(g.b);
        for (Index i = 0; i < a.size(); ++i)
            if ((i & ma) && !(i & mb)) std::swap(a[i], a[(i ^ ma) | mb]);
    }
    void operator()(const gate::CSWAP& g) const {
        check_distinct({g.control, g.a, g.b}, nq);
        const Index c = bit(g.control), ma = bit(g.a), mb = bit(g.b);
        for (Index i = 0; i < a.size(); ++i)
            if ((i & c) && (i & ma) && !(i & mb)) std::swap(a[i], a[(i ^ ma) | mb]);
    }
};

}  // namespace

std::vector<int> qubits_of(const GateOp& g) {
    return std::visit(
        [](const auto& op) -> std::vector<int> {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, gate::H> || std::is_same_v<T, gate::X>) return {op.q};
            else if constexpr (std::is_same_v<T, gate::CNOT> || std::is_same_v<T, gate::CPhase>)
                return {op.control, op.target};
            else if constexpr (std::is_same_v<T, gate::SWAP>) return {op.a, op.b};
            else return {op.control, op.a, op.b};
        },
        g);
}

std::string to_string(const GateOp& g) {
    std::ostringstream os;
    std::visit(
        [&](const auto& op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, gate::H>) os << "H(" << op.q << ")";
            else if constexpr (std::is_same_v<T, gate::X>) os << "X(" << op.q << ")";
            else if constexpr (std::is_same_v<T, gate::CNOT>) os << "CNOT(" << op.control << "," << op.target << ")";
            else if constexpr (std::is_same_v<T, gate::CPhase>)
                os << "CPhase(" << op.control << "," << op.target << "," << op.theta << ")";
            else if constexpr (std::is_same_v<T, gate::SWAP>) os << "SWAP(" << op.a << "," << op.b << ")";
            else os << "CSWAP(" << op.control << "," << op.a << "," << op.b << ")";
        },
        g);
    return os.str();
}

Statevector::Statevector(RegisterLayout layout) : layout_(std::move(layout)) {
    layout_.validate();
    amplitudes_ = zero_vector(layout_.num_qubits());
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(RegisterLayout layout, std::vector<Amplitude> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    layout_.validate();
    if (layout_.num_qubits() > kMaxQubits || amplitudes_.size() != (std::size_t{1} << layout_.num_qubits()))
        throw ArgumentError("amplitude count " + std::to_string(amplitudes_.size()) + " is not 2^" +
                            std::to_string(layout_.num_qubits()));
}

void Statevector::relabel(RegisterLayout layout) {
    layout.validate();
    if (layout.num_qubits() != num_qubits()) throw LayoutError("relabel must keep the qubit count");
    layout_ = std::move(layout);
}

void Statevector::rename_register(std::string_view from, std::string to) { layout_.rename(from, std::move(to)); }

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& x : amplitudes_) s += std::norm(x);
    return std::sqrt(s);
}

void Statevector::normalize() {
    const double n = norm();
    if (n == 0.0) throw DegenerateError("cannot normalize the zero vector");
    for (auto& x : amplitudes_) x /= n;
}

void Statevector::apply(const GateOp& g) { std::visit(GateApplier{amplitudes_, num_qubits()}, g); }

Index Statevector::register_value(std::string_view name, Index index) const {
    Index value = 0;
    for (int p : layout_.positions(name)) value = (value << 1) | ((index & bit(p)) ? 1 : 0);
    return value;
}

Statevector new_zero_state(RegisterLayout layout) { return Statevector(std::move(layout)); }

Statevector state_from_amplitudes(std::string name, std::span<const Amplitude> amplitudes) {
    const auto n = amplitudes.size();
    if (n == 0 || (n & (n - 1)) != 0) throw ArgumentError("amplitude count must be a power of two");
    const int q = std::countr_zero(n);
    Statevector s(RegisterLayout::contiguous({{std::move(name), q}}),
                  std::vector<Amplitude>(amplitudes.begin(), amplitudes.end()));
    s.normalize();
    return s;
}

Statevector& apply_gate(Statevector& state, const GateOp& g) {
    state.apply(g);
    return state;
}

Statevector insert_zero_qubits_at(Statevector state, int at, int count, std::string_view owner, std::size_t slot) {
    if (count < 0) throw ArgumentError("cannot insert a negative number of qubits");
    if (count == 0) return state;
    const int q = state.num_qubits();
    if (at < 0 || at > q) throw ArgumentError("insertion point outside the layout");
    RegisterLayout layout = state.layout();
    layout.insert(at, count, owner, slot);

    std::vector<Amplitude> out = zero_vector(q + count);
    const int low_bits = q - at;
    const Index low_mask = (Index{1} << low_bits) - 1;
    auto in = std::move(state).release();
    for (Index i = 0; i < in.size(); ++i) {
        if (in[i] == Amplitude{}) continue;
        const Index j = ((i & ~low_mask) << count) | (i & low_mask);
        out[j] = in[i];
    }
    return Statevector(std::move(layout), std::move(out));
}

Statevector insert_zero_qubits(Statevector state, int after_position, int count) {
    if (count < 0) throw ArgumentError("cannot insert a negative number of qubits");
    if (after_position < 0 || after_position >= state.num_qubits())
        throw ArgumentError("after_position " + std::to_string(after_position) + " outside the layout");
    const std::string owner = state.layout().owner(after_position);
    const auto& pos = state.layout().positions(owner);
    const auto slot = static_cast<std::size_t>(std::find(pos.begin(), pos.end(), after_position) - pos.begin()) + 1;
    return insert_zero_qubits_at(std::move(state), after_position + 1, count, owner, slot);
}

Statevector insert_register(Statevector state, int at, std::string name, int count) {
    if (state.layout().contains(name)) throw LayoutError("register '" + name + "' already exists");
    return insert_zero_qubits_at(std::move(state), at, count, name, 0);
}

double residual_norm(const Statevector& state, std::span<const int> positions) {
    const Index mask = state.layout().mask_of(positions);
    double r = 0.0;
    const auto a = state.amplitudes();
    for (Index i = 0; i < a.size(); ++i)
        if (i & mask) r += std::norm(a[i]);
    return std::sqrt(r);
}

Removal remove_qubits_measured(Statevector state, std::span<const int> positions, double tolerance) {
    for (int p : positions)
        if (p < 0 || p >= state.num_qubits()) throw ArgumentError("removal position out of range");
    if (positions.empty()) return {std::move(state), 0.0};

    RegisterLayout layout = state.layout();
    layout.erase(positions);  // also rejects duplicates
    const Index mask = state.layout().mask_of(positions);

    const auto a = state.amplitudes();
    double discarded = 0.0;
    for (Index i = 0; i < a.size(); ++i)
        if (i & mask) discarded += std::norm(a[i]);
    const double residual = std::sqrt(discarded);
    if (residual > tolerance)
        throw EntanglementError("qubits scheduled for removal are not in |0>", residual);

    std::vector<Amplitude> out = zero_vector(layout.num_qubits());
    double kept = 0.0;
    // Walk the indices with all removed bits clear; `j` counts them in order.
    Index i = 0;
    for (Index j = 0; j < out.size(); ++j) {
        out[j] = a[i];
        kept += std::norm(a[i]);
        i = ((i | mask) + 1) & ~mask;
    }
    if (kept == 0.0) throw DegenerateError("kept branch has zero norm");
    const double scale = 1.0 / std::sqrt(kept);
    if (scale != 1.0)
        for (auto& x : out) x *= scale;
    return {Statevector(std::move(layout), std::move(out)), residual};
}

Statevector remove_qubits(Statevector state, std::span<const int> positions, double tolerance) {
    return remove_qubits_measured(std::move(state), positions, tolerance).state;
}

std::vector<double> probabilities(const Statevector& state) {
    std::vector<double> p(state.size());
    const auto a = state.amplitudes();
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(a[i]);
    return p;
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) throw ArgumentError("dimension mismatch in inner product");
    Amplitude s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double l2_distance(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) throw ArgumentError("dimension mismatch in l2 distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) throw ArgumentError("dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace qinterp
