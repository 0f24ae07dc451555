#pragma once

// Dense statevector simulation over named qubit registers.
//
// Bit convention (used everywhere in the library): qubit position 0 is the
// most significant bit of the basis-state index, so a bit pattern b over Q
// qubits has index sum_i b_i * 2^(Q-1-i).

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qinterp {

using Amplitude = std::complex<double>;
using Index = std::uint64_t;

inline constexpr double kPhysicalTolerance = 1e-9;
inline constexpr int kMaxQubits = 40;

struct Register {
    std::string name;
    std::vector<int> positions;  // most significant first

    friend bool operator==(const Register&, const Register&) = default;
};

// Named registers whose positions together form a permutation of 0..Q-1.
// A register's own index reads its positions most-significant first, so
// positions need not be contiguous or ascending.
class RegisterLayout {
public:
    RegisterLayout() = default;

    // Registers laid out back to back in the given order, e.g. {{"x", 3}, {"y", 3}}.
    static RegisterLayout contiguous(const std::vector<std::pair<std::string, int>>& sizes);
    // Arbitrary assignment; validated as a whole.
    static RegisterLayout from_registers(std::vector<Register> registers);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<Register>& registers() const noexcept { return registers_; }

    bool contains(std::string_view name) const noexcept;
    const Register& at(std::string_view name) const;
    const std::vector<int>& positions(std::string_view name) const { return at(name).positions; }
    int size_of(std::string_view name) const { return static_cast<int>(at(name).positions.size()); }

    // Name of the register holding `position`.
    const std::string& owner(int position) const;

    // Throws LayoutError unless positions form a permutation of 0..Q-1.
    void validate() const;

    // Index mask with one bit set per position of the register.
    Index mask_of(std::string_view name) const;
    Index mask_of(std::span<const int> positions) const;

    // Positions >= at shift up by count. The new positions at..at+count-1
    // are spliced into register `owner` right before entry `slot` (slot may
    // equal the register size). If `owner` does not exist it is created at
    // the end of the register list with slot ignored.
    void insert(int at, int count, std::string_view owner, std::size_t slot);

    // Drops the listed positions, compacting the rest; registers that become
    // empty are erased.
    void erase(std::span<const int> positions);

    void add_register(std::string name, std::vector<int> positions);
    void remove_register(std::string_view name);
    void rename(std::string_view from, std::string to);

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

private:
    Register& at_mut(std::string_view name);

    std::vector<Register> registers_;
    int num_qubits_ = 0;
};

namespace gate {
struct H { int q; };
struct X { int q; };
struct CNOT { int control, target; };
struct CPhase { int control, target; double theta; };  // diag(1,1,1,e^{i theta})
struct SWAP { int a, b; };
struct CSWAP { int control, a, b; };
}  // namespace gate

using GateOp = std::variant<gate::H, gate::X, gate::CNOT, gate::CPhase, gate::SWAP, gate::CSWAP>;

std::vector<int> qubits_of(const GateOp& g);
std::string to_string(const GateOp& g);

class Statevector {
public:
    // |0...0> over the layout.
    explicit Statevector(RegisterLayout layout);

    // Takes ownership of the amplitudes; length must be 2^Q. The vector is
    // not renormalized here.
    Statevector(RegisterLayout layout, std::vector<Amplitude> amplitudes);

    int num_qubits() const noexcept { return layout_.num_qubits(); }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    const RegisterLayout& layout() const noexcept { return layout_; }

    // Virtual relabeling: swaps in a different register assignment over the
    // same qubits. Amplitudes are untouched.
    void relabel(RegisterLayout layout);
    void rename_register(std::string_view from, std::string to);

    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    const Amplitude& operator[](Index i) const { return amplitudes_[i]; }
    Amplitude& operator[](Index i) { return amplitudes_[i]; }

    Index bit(int position) const noexcept { return Index{1} << (num_qubits() - 1 - position); }

    double norm() const;
    void normalize();

    // In-place application of one primitive gate.
    void apply(const GateOp& g);

    // Value of a register in basis state `index`.
    Index register_value(std::string_view name, Index index) const;

    std::vector<Amplitude> release() && { return std::move(amplitudes_); }

private:
    RegisterLayout layout_;
    std::vector<Amplitude> amplitudes_;
};

Statevector new_zero_state(RegisterLayout layout);

// Copies `amplitudes` into a state over a single register and normalizes.
Statevector state_from_amplitudes(std::string name, std::span<const Amplitude> amplitudes);

Statevector& apply_gate(Statevector& state, const GateOp& g);

// Inserts `count` |0> qubits at positions after_position+1..after_position+count.
// They join the register owning after_position, directly after it.
Statevector insert_zero_qubits(Statevector state, int after_position, int count);

// Inserts a new register of `count` |0> qubits occupying at..at+count-1.
Statevector insert_register(Statevector state, int at, std::string name, int count);

// General form: the |0> qubits occupy at..at+count-1 and are spliced into
// register `owner` before its entry `slot` (see RegisterLayout::insert).
Statevector insert_zero_qubits_at(Statevector state, int at, int count, std::string_view owner,
                                  std::size_t slot);

struct Removal {
    Statevector state;
    double residual;  // l2 norm of the discarded branch
};

// Projects the listed qubits onto |0> and drops them. Fails with
// EntanglementError when the discarded branch has norm above `tolerance`;
// otherwise the kept branch is renormalized.
Removal remove_qubits_measured(Statevector state, std::span<const int> positions,
                               double tolerance = kPhysicalTolerance);
Statevector remove_qubits(Statevector state, std::span<const int> positions,
                          double tolerance = kPhysicalTolerance);

// l2 norm of the part of the state where any listed qubit is |1>.
double residual_norm(const Statevector& state, std::span<const int> positions);

std::vector<double> probabilities(const Statevector& state);

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);
double l2_distance(std::span<const Amplitude> a, std::span<const Amplitude> b);
double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace qinterp
