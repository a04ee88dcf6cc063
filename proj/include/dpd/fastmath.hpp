#pragma once

// Reduced-range, branch-free transcendental kernels for the pairwise
// interaction path:
//
//   fastlog(v)     ln(v * 2^-32) for a 32-bit uniform v >= 1
//   fastcos2pi(v)  cos(2*pi * v * 2^-32) for a 32-bit uniform
//   fastpow(a, b)  a^b = 2^(b*log2(a)) for a > 0
//
// The log cores reduce the mantissa into [sqrt(2)/2, sqrt(2)) and evaluate
// ln(x) = z*P(z^2) with z = (x-1)/(x+1); both x-1 and x+1 are exact there,
// which keeps the relative error flat across the whole uint32 range
// (including v near 2^32 where the result approaches zero). The cosine
// folds the top bit into a sign and evaluates an odd polynomial around the
// quadrant centre, so the reduction is exact. Coefficients are frozen from
// a one-time minimax fit; the sweep tests in tests/test_fastmath.cpp verify
// the error bounds against an 80-bit oracle.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>

namespace dpd {

namespace fm {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kLn2Hi = 0x1.62e42fef00000p-1;
inline constexpr double kLn2Lo = 0x1.473de6af278edp-34;
inline constexpr double kTwoInvLn2 = 0x1.71547652b82fep+1;     // 2/ln2 rounded
inline constexpr double kTwoInvLn2Res = 0x1.777d0ffda0d24p-55; // 2/ln2 - rounded

// ln(x)/z - 2 = w*Q(w), w = z^2 in [0, (3-2*sqrt(2))^2]
inline constexpr std::array<double, 6> kLnQ = {
    0x1.555555555397ap-1, 0x1.999999a28e942p-2, 0x1.2492417a9975ap-2,
    0x1.c72276984c243p-3, 0x1.732c520e537b1p-3, 0x1.587592fb5a518p-3,
};
// log2(x)/z - 2/ln2 = w*Q2(w), same w range
inline constexpr std::array<double, 7> kLog2Q = {
    0x1.ec709dc3a0455p-1, 0x1.2776c50ee73bep-1, 0x1.a61762d1f5b51p-2,
    0x1.484afcfb984e8p-2, 0x1.0ca11d4fbc32dp-2, 0x1.c479f5cc9ee5ep-3,
    0x1.b52725f185dd3p-3,
};
// 2^x = 1 + x*R(x) on [0,1]
inline constexpr std::array<double, 11> kExp2R = {
    0x1.62e42fefa39f5p-1,  0x1.ebfbdff82c04bp-3,  0x1.c6b08d7065838p-5,
    0x1.3b2ab6f73416fp-7,  0x1.5d87ff4d2262ap-10, 0x1.4308fa1dd16ddp-13,
    0x1.ffcfc6a9b62c8p-17, 0x1.628f3583fa66bp-20, 0x1.b85f42cc9ad9ap-24,
    0x1.c2c47913b09f9p-28, 0x1.58566e8b85bdfp-31,
};
// sin(pi*y)/y = S(y^2) on y in [-1/2, 1/2]; 6 nonzero terms of an
// 11th-order odd polynomial
inline constexpr std::array<double, 6> kSinP = {
    0x1.921fb5441e49dp+1,  -0x1.4abbce4f1a2d1p+2, 0x1.466bbfc24f863p+1,
    -0x1.32d11201b18c4p-1, 0x1.500ff7f212ce7p-4,  -0x1.cc345a6170d5cp-8,
};

template <std::size_t N>
inline double horner(const std::array<double, N>& c, double x) {
    double p = c[N - 1];
    for (std::size_t k = N - 1; k-- > 0;) p = std::fma(p, x, c[k]);
    return p;
}

struct Pair {
    double hi, lo;
};

// log2(x) for x in [1,2) as an unevaluated sum, error well below 1 ULP.
inline Pair log2_frac_ext(double x) {
    const bool big = x >= kSqrt2;
    const double xr = big ? 0.5 * x : x; // [sqrt2/2, sqrt2)
    const double z = (xr - 1.0) / (xr + 1.0);
    const double w = z * z;
    const double t = w * horner(kLog2Q, w);
    // Fast2Sum of the leading constant and the polynomial tail
    const double shi = kTwoInvLn2 + t;
    const double slo = ((kTwoInvLn2 - shi) + t) + kTwoInvLn2Res;
    const double fhi = z * shi;
    const double flo = std::fma(z, shi, -fhi) + z * slo;
    const double add = big ? 1.0 : 0.0;
    const double rhi = add + fhi;
    const double rlo = ((add - rhi) + fhi) + flo;
    return {rhi, rlo};
}

} // namespace fm

// Exact 2^n by exponent-field construction; n in [-1022, 1024]
// (1024 yields +inf).
inline double power2(int n) {
    return std::bit_cast<double>(std::uint64_t(1023 + n) << 52);
}

// 2^x for x in [0,1] (tolerates sub-ULP spill outside), error < 1 ULP.
inline double exp2_frac(double x) {
    return std::fma(x, fm::horner(fm::kExp2R, x), 1.0);
}

// log2(x) for x in [1,2], error < 1 ULP.
inline double log2_frac(double x) {
    const fm::Pair r = fm::log2_frac_ext(x);
    return r.hi + r.lo;
}

// ln(v * 2^-32), v >= 1. Max relative error <= 4.21e-12 over all of uint32.
inline double fastlog(std::uint32_t v) {
    const int e = 31 - std::countl_zero(v);
    const double x0 = double(v) * power2(-e); // [1,2), exact
    const bool big = x0 >= fm::kSqrt2;
    const double x = big ? 0.5 * x0 : x0; // [sqrt2/2, sqrt2)
    const double di = double(e + int(big) - 32);
    const double z = (x - 1.0) / (x + 1.0); // num/den exact
    const double w = z * z;
    const double lnx = std::fma(z * w, fm::horner(fm::kLnQ, w), 2.0 * z);
    return std::fma(di, fm::kLn2Hi, std::fma(di, fm::kLn2Lo, lnx));
}

// cos(2*pi * v * 2^-32). Max relative error <= 1.10e-10 away from the
// roots, absolute error of the same scale near them.
inline double fastcos2pi(std::uint32_t v) {
    const std::uint32_t b = v >> 31;
    const double u = double(v & 0x7FFFFFFFu) * 0x1p-31; // [0,1), exact
    const double y = u - 0.5;                           // exact
    const double r = y * fm::horner(fm::kSinP, y * y);  // sin(pi*y)
    // cos(2pi t) = -(-1)^b sin(pi*y)
    const std::uint64_t flip = std::uint64_t(b ^ 1u) << 63;
    return std::bit_cast<double>(std::bit_cast<std::uint64_t>(r) ^ flip);
}

// a^b for finite a > 0, finite b. <= 6 ULP for a in [1e-102, 1e102],
// b in [0,3]; <= 11 ULP for a in [1e-51, 1e51], b in [0,6]. No NaN/Inf or
// denormal handling: the cutoff test upstream precludes such inputs.
inline double fastpow(double a, double b) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(a);
    const int ie = int(bits >> 52) - 1023;
    const double m =
        std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull);
    const fm::Pair f = fm::log2_frac_ext(m);
    const double di = double(ie);
    const double y = b * (di + f.hi);
    double ii = std::floor(y);
    // clamp keeps the exponent construction valid; the result saturates
    if (ii > 1024.0) ii = 1024.0;
    if (ii < -1022.0) ii = -1022.0;
    // fractional part split off exactly to protect mantissa precision
    double frac = std::fma(b, f.hi, std::fma(b, di, -ii));
    frac = std::fma(b, f.lo, frac);
    return power2(int(ii)) * exp2_frac(frac);
}

} // namespace dpd
