#pragma once

#include "mhs/rational.hpp"

#include <cstdint>

namespace mhs {

/*
 * One-sided rational brackets for the transcendental values the bound
 * machinery needs. The hard contract is the side: every *_upper result
 * is >= the true value and every *_lower is <=, as exact rationals.
 * `bits` is the working precision in fractional bits; brackets tighten
 * as it grows (the defaults leave orders of magnitude of slack for every
 * comparison made in this project).
 */
inline constexpr unsigned kCertifiedBits = 96;

// Nearest multiple of 2^-bits from above / below.
Rational round_up_dyadic(const Rational& q, unsigned bits);
Rational round_down_dyadic(const Rational& q, unsigned bits);

// Requires x >= 0.
Rational sqrt_upper(const Rational& x, unsigned bits = kCertifiedBits);
Rational sqrt_lower(const Rational& x, unsigned bits = kCertifiedBits);

// Requires x >= 0 (all callers bound growing exponentials).
Rational exp_upper(const Rational& x, unsigned bits = kCertifiedBits);
Rational exp_lower(const Rational& x, unsigned bits = kCertifiedBits);

// Natural log of a positive integer.
Rational ln_upper(std::uint64_t n, unsigned bits = kCertifiedBits);
Rational ln_lower(std::uint64_t n, unsigned bits = kCertifiedBits);

Rational e_upper(unsigned bits = kCertifiedBits);
Rational e_lower(unsigned bits = kCertifiedBits);

}  // namespace mhs
