#include "qinterp/core_state.hpp"

#include <algorithm>

#include "qinterp/errors.hpp"

namespace qinterp {

RegisterLayout RegisterLayout::contiguous(const std::vector<std::pair<std::string, int>>& sizes) {
    RegisterLayout layout;
    int next = 0;
    for (const auto& [name, size] : sizes) {
        if (size < 0) throw LayoutError("register '" + name + "' has negative size");
        std::vector<int> positions(static_cast<std::size_t>(size));
        for (auto& p : positions) p = next++;
        layout.add_register(name, std::move(positions));
    }
    return layout;
}

RegisterLayout RegisterLayout::from_registers(std::vector<Register> registers) {
    RegisterLayout layout;
    for (const auto& r : registers) {
        if (layout.contains(r.name)) throw LayoutError("register '" + r.name + "' already exists");
        layout.num_qubits_ += static_cast<int>(r.positions.size());
        layout.registers_.push_back(r);
    }
    layout.validate();
    return layout;
}

bool RegisterLayout::contains(std::string_view name) const noexcept {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register& r) { return r.name == name; });
}

const Register& RegisterLayout::at(std::string_view name) const {
    for (const auto& r : registers_)
        if (r.name == name) return r;
    throw ArgumentError("unknown register '" + std::string(name) + "'");
}

Register& RegisterLayout::at_mut(std::string_view name) {
    for (auto& r : registers_)
        if (r.name == name) return r;
    throw ArgumentError("unknown register '" + std::string(name) + "'");
}

const std::string& RegisterLayout::owner(int position) const {
    for (const auto& r : registers_)
        if (std::find(r.positions.begin(), r.positions.end(), position) != r.positions.end())
            return r.name;
    throw ArgumentError("position " + std::to_string(position) + " is not in the layout");
}

void RegisterLayout::validate() const {
    std::vector<char> seen(static_cast<std::size_t>(num_qubits_), 0);
    int count = 0;
    for (const auto& r : registers_) {
        for (int p : r.positions) {
            if (p < 0 || p >= num_qubits_)
                throw LayoutError("register '" + r.name + "' position " + std::to_string(p) +
                                  " outside 0.." + std::to_string(num_qubits_ - 1));
            if (seen[static_cast<std::size_t>(p)])
                throw LayoutError("position " + std::to_string(p) + " used twice");
            seen[static_cast<std::size_t>(p)] = 1;
            ++count;
        }
    }
    if (count != num_qubits_) throw LayoutError("layout positions have gaps");
}

Index RegisterLayout::mask_of(std::string_view name) const { return mask_of(at(name).positions); }

Index RegisterLayout::mask_of(std::span<const int> positions) const {
    Index mask = 0;
    for (int p : positions) mask |= Index{1} << (num_qubits_ - 1 - p);
    return mask;
}

void RegisterLayout::insert(int at, int count, std::string_view owner, std::size_t slot) {
    if (count < 0) throw ArgumentError("cannot insert a negative number of qubits");
    if (at < 0 || at > num_qubits_)
        throw ArgumentError("insertion point " + std::to_string(at) + " outside 0.." +
                            std::to_string(num_qubits_));
    if (count == 0) return;
    for (auto& r : registers_)
        for (auto& p : r.positions)
            if (p >= at) p += count;
    num_qubits_ += count;

    std::vector<int> fresh(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) fresh[static_cast<std::size_t>(i)] = at + i;

    if (!contains(owner)) {
        registers_.push_back({std::string(owner), std::move(fresh)});
        return;
    }
    auto& dst = at_mut(owner).positions;
    slot = std::min(slot, dst.size());
    dst.insert(dst.begin() + static_cast<std::ptrdiff_t>(slot), fresh.begin(), fresh.end());
}

void RegisterLayout::erase(std::span<const int> positions) {
    std::vector<int> gone(positions.begin(), positions.end());
    std::sort(gone.begin(), gone.end());
    if (std::adjacent_find(gone.begin(), gone.end()) != gone.end())
        throw ArgumentError("duplicate position in removal list");
    for (int p : gone)
        if (p < 0 || p >= num_qubits_) throw ArgumentError("removal position out of range");

    for (auto& r : registers_) {
        std::erase_if(r.positions, [&](int p) { return std::binary_search(gone.begin(), gone.end(), p); });
        for (auto& p : r.positions) {
            auto below = std::lower_bound(gone.begin(), gone.end(), p) - gone.begin();
            p -= static_cast<int>(below);
        }
    }
    std::erase_if(registers_, [](const Register& r) { return r.positions.empty(); });
    num_qubits_ -= static_cast<int>(gone.size());
}

void RegisterLayout::add_register(std::string name, std::vector<int> positions) {
    if (contains(name)) throw LayoutError("register '" + name + "' already exists");
    num_qubits_ += static_cast<int>(positions.size());
    registers_.push_back({std::move(name), std::move(positions)});
    validate();
}

void RegisterLayout::remove_register(std::string_view name) {
    auto positions = at(name).positions;
    erase(positions);
}

void RegisterLayout::rename(std::string_view from, std::string to) {
    if (from == to) return;
    if (contains(to)) throw LayoutError("register '" + to + "' already exists");
    at_mut(from).name = std::move(to);
}

}  // namespace qinterp
