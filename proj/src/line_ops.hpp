#pragma once

// Gather/scatter of the amplitude "lines" that run along one register axis.

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "qinterp/core_state.hpp"

namespace qinterp::detail {

class FftPlan {
public:
    FftPlan(std::size_t n, bool inverse);

    std::size_t size() const noexcept { return n_; }
    void operator()(std::span<Amplitude> line) const;

private:
    std::size_t n_;
    std::vector<std::uint32_t> bitrev_;
    std::vector<Amplitude> twiddles_;  // e^{+-2 pi i t/n}, t < n/2
    double scale_;
};

// Calls f(std::span<Amplitude>) once per line. Line element j (the value of
// the register formed by `positions`, most significant first) maps to
// amplitude base + offset[j]. Consecutive bases that only differ in the low
// bits below every register qubit are gathered together so that each touched
// cache line is used fully.
template <class F>
void for_each_line(Statevector& state, std::span<const int> positions, F&& f) {
    const int k = static_cast<int>(positions.size());
    const std::size_t len = std::size_t{1} << k;
    const Index reg_mask = state.layout().mask_of(positions);

    std::vector<Index> offset(len, 0);
    for (int i = 0; i < k; ++i) {
        const Index b = state.bit(positions[static_cast<std::size_t>(i)]);
        const std::size_t jb = std::size_t{1} << (k - 1 - i);
        for (std::size_t j = 0; j < len; ++j)
            if (j & jb) offset[j] |= b;
    }

    // Free low bits below the lowest register bit form contiguous runs.
    const int trailing = reg_mask == 0 ? 0 : std::countr_zero(reg_mask);
    const std::size_t batch = std::size_t{1} << std::min(trailing, 4);

    auto a = state.amplitudes();
    const std::size_t lines = a.size() >> k;
    std::vector<Amplitude> buf(batch * len);

    Index base = 0;
    for (std::size_t done = 0; done < lines; done += batch) {
        for (std::size_t j = 0; j < len; ++j) {
            const Amplitude* src = &a[base + offset[j]];
            for (std::size_t b = 0; b < batch; ++b) buf[b * len + j] = src[b];
        }
        for (std::size_t b = 0; b < batch; ++b) f(std::span<Amplitude>(buf.data() + b * len, len));
        for (std::size_t j = 0; j < len; ++j) {
            Amplitude* dst = &a[base + offset[j]];
            for (std::size_t b = 0; b < batch; ++b) dst[b] = buf[b * len + j];
        }
        // Advance to the next base with every register bit clear.
        base += batch - 1;
        base = ((base | reg_mask) + 1) & ~reg_mask;
    }
}

}  // namespace qinterp::detail
