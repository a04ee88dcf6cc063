#pragma once

// Communication-free pairwise random numbers. Every random value is a pure
// function of (global seed, step, particle tags, particle velocities), so
// any domain holding a ghost copy of a particle reproduces the identical
// stream without talking to the owner.

#include <bit>
#include <cstdint>

#include "dpd/fastmath.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

inline constexpr std::uint32_t kTeaDelta = 0x9E3779B9u; // golden-ratio constant
// Fixed public key schedule; any constant works, it only has to be shared.
inline constexpr std::uint32_t kTeaKey[4] = {0xA341316Cu, 0xC8013EA4u, 0xAD90777Du,
                                             0x7E95761Eu};

struct TeaPair {
    std::uint32_t v0, v1;
};

inline constexpr TeaPair tea_hash(int rounds, std::uint32_t v0, std::uint32_t v1) {
    std::uint32_t sum = 0;
    for (int r = 0; r < rounds; ++r) {
        sum += kTeaDelta;
        v0 += ((v1 << 4) + kTeaKey[0]) ^ ((v1 >> 5) + kTeaKey[1]) ^ (v1 + sum);
        v1 += ((v0 << 4) + kTeaKey[2]) ^ ((v0 >> 5) + kTeaKey[3]) ^ (v0 + sum);
    }
    return {v0, v1};
}

inline constexpr std::uint32_t bit_reverse(std::uint32_t x) {
    x = ((x & 0x55555555u) << 1) | ((x >> 1) & 0x55555555u);
    x = ((x & 0x33333333u) << 2) | ((x >> 2) & 0x33333333u);
    x = ((x & 0x0F0F0F0Fu) << 4) | ((x >> 4) & 0x0F0F0F0Fu);
    return (x << 24) | ((x & 0xFF00u) << 8) | ((x >> 8) & 0xFF00u) | (x >> 24);
}

// Leading 11 bits of the fraction field of a double.
inline std::uint32_t mantissa11(double v) {
    return std::uint32_t(std::bit_cast<std::uint64_t>(v) >> 41) & 0x7FFu;
}

// Per-particle 32-bit binary signature: bit-reversed tag blended with the
// interleaved leading mantissa bits of the velocity by 16 TEA rounds.
inline std::uint32_t make_signature(std::uint32_t tag, const Vec3& velocity) {
    const std::uint32_t bx = mantissa11(velocity.x);
    const std::uint32_t by = mantissa11(velocity.y);
    const std::uint32_t bz = mantissa11(velocity.z);
    // round-robin interleave from bit 0: x,y,z,x,y,z,... (33rd bit dropped)
    std::uint32_t v1 = 0;
    for (int k = 0; k < 11; ++k) {
        v1 |= ((bx >> k) & 1u) << (3 * k);
        v1 |= ((by >> k) & 1u) << (3 * k + 1);
        if (k < 10) v1 |= ((bz >> k) & 1u) << (3 * k + 2);
    }
    const TeaPair h = tea_hash(16, bit_reverse(tag), v1);
    return h.v0 ^ h.v1;
}

// Shared step state; identical on all domains at all times.
struct PairRandomState {
    std::uint32_t global_seed = 1;
    std::uint32_t step = 0;
    std::uint32_t step_mix = 0; // tea_hash(4, seed, step).v1, cached

    static PairRandomState at(std::uint32_t seed, std::uint32_t step) {
        return {seed, step, tea_hash(4, seed, step).v1};
    }
};

// Two uniform 32-bit words for an unordered pair; symmetric in (i,j) by
// ordering the inputs on the tag, the only cross-domain invariant identity.
inline TeaPair pair_uniforms(std::uint32_t sig_i, std::uint32_t sig_j,
                             std::uint32_t tag_i, std::uint32_t tag_j,
                             const PairRandomState& state) {
    const std::uint32_t lo = tag_i < tag_j ? sig_i : sig_j;
    const std::uint32_t hi = tag_i < tag_j ? sig_j : sig_i;
    return tea_hash(4, lo, hi ^ state.step_mix);
}

// Box-Muller: xi = sqrt(-2 ln u_a) cos(2 pi u_b), radial part from the
// custom logarithm, phase from the custom cosine. u_a = 0 is remapped to 1
// (probability 2^-32).
inline double gaussian(std::uint32_t u_a, std::uint32_t u_b) {
    u_a |= (u_a == 0);
    return std::sqrt(-2.0 * fastlog(u_a)) * fastcos2pi(u_b);
}

// Small counter-based stream for initialization (positions, velocities);
// reuses the same hash so runs are reproducible from the seed alone.
struct TeaStream {
    std::uint32_t seed;
    std::uint32_t counter = 0;

    explicit TeaStream(std::uint32_t s) : seed(s) {}
    TeaPair next_pair() { return tea_hash(16, seed, counter++); }
    std::uint32_t next_u32() { return next_pair().v0; }
    double next_u01() { return double(next_u32()) * 0x1p-32; }
    double next_gaussian() {
        const TeaPair p = next_pair();
        return gaussian(p.v0, p.v1);
    }
};

} // namespace dpd
