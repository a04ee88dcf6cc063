#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpd/parallel.hpp"

namespace dpd {

// LSD radix sort, 4 bits per pass. Stable: equal keys keep their input
// order, which the two-level reordering relies on. Deterministic for any
// worker count. bit_length must be a multiple of 4 and <= 32; keys with set
// bits at or above bit_length are unsupported.
void radix_sort(std::span<std::uint32_t> keys, std::span<std::uint32_t> values,
                int bit_length, WorkerPool& pool);

// Reusable scratch buffers for repeated sorts of similar size.
class RadixSorter {
public:
    void sort(std::span<std::uint32_t> keys, std::span<std::uint32_t> values,
              int bit_length, WorkerPool& pool);

private:
    std::vector<std::uint32_t> key_buf_, val_buf_;
    std::vector<std::uint32_t> hist_;
};

} // namespace dpd
