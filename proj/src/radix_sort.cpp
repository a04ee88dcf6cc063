#include "dpd/radix_sort.hpp"

#include <algorithm>
#include <utility>

#include "dpd/error.hpp"

namespace dpd {

namespace {
constexpr int kRadixBits = 4; // tuned width, fixed
constexpr std::uint32_t kRadix = 1u << kRadixBits;
constexpr std::uint32_t kDigitMask = kRadix - 1;
} // namespace

void RadixSorter::sort(std::span<std::uint32_t> keys, std::span<std::uint32_t> values,
                       int bit_length, WorkerPool& pool) {
    if (keys.size() != values.size())
        fail(ErrorCategory::config, "radix sort: keys/values length mismatch");
    if (bit_length < 0 || bit_length > 32 || bit_length % kRadixBits != 0)
        fail(ErrorCategory::config, "radix sort: bit length must be a multiple of 4, <= 32");
    const std::size_t n = keys.size();
    if (n == 0 || bit_length == 0) return;

    key_buf_.resize(n);
    val_buf_.resize(n);
    const unsigned chunks = pool.size();
    hist_.assign(std::size_t(chunks) * kRadix, 0);

    std::uint32_t* kin = keys.data();
    std::uint32_t* vin = values.data();
    std::uint32_t* kout = key_buf_.data();
    std::uint32_t* vout = val_buf_.data();

    for (int bit = 0; bit < bit_length; bit += kRadixBits) {
        // per-chunk digit histogram
        pool.run_chunks(n, [&](unsigned c, std::size_t b, std::size_t e) {
            std::uint32_t local[kRadix] = {};
            for (std::size_t i = b; i < e; ++i) local[(kin[i] >> bit) & kDigitMask]++;
            for (std::uint32_t d = 0; d < kRadix; ++d) hist_[c * kRadix + d] = local[d];
        });
        // exclusive prefix over (digit, chunk): digit-major keeps stability
        std::uint32_t sum = 0;
        for (std::uint32_t d = 0; d < kRadix; ++d)
            for (unsigned c = 0; c < chunks; ++c) {
                std::uint32_t cnt = hist_[c * kRadix + d];
                hist_[c * kRadix + d] = sum;
                sum += cnt;
            }
        // stable scatter
        pool.run_chunks(n, [&](unsigned c, std::size_t b, std::size_t e) {
            std::uint32_t offs[kRadix];
            for (std::uint32_t d = 0; d < kRadix; ++d) offs[d] = hist_[c * kRadix + d];
            for (std::size_t i = b; i < e; ++i) {
                const std::uint32_t d = (kin[i] >> bit) & kDigitMask;
                const std::uint32_t p = offs[d]++;
                kout[p] = kin[i];
                vout[p] = vin[i];
            }
        });
        std::swap(kin, kout);
        std::swap(vin, vout);
    }
    if (kin != keys.data()) {
        std::copy(kin, kin + n, keys.data());
        std::copy(vin, vin + n, values.data());
    }
}

void radix_sort(std::span<std::uint32_t> keys, std::span<std::uint32_t> values,
                int bit_length, WorkerPool& pool) {
    RadixSorter s;
    s.sort(keys, values, bit_length, pool);
}

} // namespace dpd
