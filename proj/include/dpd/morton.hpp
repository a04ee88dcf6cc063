#pragma once

#include <cstdint>

#include "dpd/error.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

namespace detail {
// Spreads the low 10 bits of x so bit k lands at bit 3k.
inline constexpr std::uint32_t spread3(std::uint32_t x) {
    x &= 0x3FFu;
    x = (x | (x << 16)) & 0x030000FFu;
    x = (x | (x << 8)) & 0x0300F00Fu;
    x = (x | (x << 4)) & 0x030C30C3u;
    x = (x | (x << 2)) & 0x09249249u;
    return x;
}
inline constexpr std::uint32_t compact3(std::uint32_t x) {
    x &= 0x09249249u;
    x = (x | (x >> 2)) & 0x030C30C3u;
    x = (x | (x >> 4)) & 0x0300F00Fu;
    x = (x | (x >> 8)) & 0x030000FFu;
    x = (x | (x >> 16)) & 0x3FFu;
    return x;
}
} // namespace detail

// Z-curve code with x least significant: bit 3k of the code is bit k of ix,
// bit 3k+1 of iy, bit 3k+2 of iz. Requires 3*bits_per_axis <= 32.
inline std::uint32_t morton_encode(std::uint32_t ix, std::uint32_t iy, std::uint32_t iz,
                                   int bits_per_axis) {
    if (bits_per_axis < 0 || 3 * bits_per_axis > 32)
        fail(ErrorCategory::config, "morton: 3*bits_per_axis must be <= 32");
    const std::uint32_t lim = bits_per_axis >= 32 ? 0xFFFFFFFFu : (1u << bits_per_axis) - 1;
    if (ix > lim || iy > lim || iz > lim)
        fail(ErrorCategory::config, "morton: lattice coordinate out of range");
    return detail::spread3(ix) | (detail::spread3(iy) << 1) | (detail::spread3(iz) << 2);
}

// Inverse, used by tests only.
inline IVec3 morton_decode(std::uint32_t code) {
    return {int(detail::compact3(code)), int(detail::compact3(code >> 1)),
            int(detail::compact3(code >> 2))};
}

} // namespace dpd
