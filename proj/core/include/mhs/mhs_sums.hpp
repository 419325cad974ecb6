#pragma once

#include "mhs/dyadic.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mhs {

// Exponent tuple (s_1, ..., s_r): every entry >= 1, length r >= 1.
class Composition {
 public:
  explicit Composition(std::vector<std::uint32_t> exponents);

  std::size_t length() const noexcept { return exponents_.size(); }
  std::uint64_t weight() const noexcept { return weight_; }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept {
    return exponents_;
  }

  bool operator==(const Composition& o) const noexcept {
    return exponents_ == o.exponents_;
  }

  // Compact text form: runs of >= 3 equal entries print as "{v}^k"
  // (e.g. "1,4,{1}^3"); round-trips through parse_composition.
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t weight_;
};

/*
 * Grammar: item (',' item)*, item := INT | '{' INT '}' '^' INT, with
 * optional spaces between tokens; "{a}^k" expands to k copies of a.
 * Throws ParseError (with byte offset) on syntax errors, zero exponents,
 * zero repetitions, or an expansion longer than 100000 entries.
 */
Composition parse_composition(std::string_view text);

/*
 * Sum of 1/(k_1^{s_1} ... k_r^{s_r}) over strictly increasing tuples
 * k_1 < ... < k_r <= n, computed by the prefix recurrence
 * H_j(s_1..s_t) = H_{j-1}(s_1..s_t) + H_{j-1}(s_1..s_{t-1})/j^{s_t}.
 * Returns 0 for n < r (empty sum); n = 0 is allowed and gives 0.
 */
Rational mhs_eval(std::uint64_t n, const Composition& s);

// Weak-inequality variant: k_1 <= ... <= k_r <= n. Zero only when n = 0.
Rational mhs_star_eval(std::uint64_t n, const Composition& s);

/*
 * Suffix coefficients c_k = sum over k < k_2 < ... < k_r <= n of
 * 1/(k_2^{s_2} ... k_r^{s_r}), for k = 1..n-r+1, so that
 * H_n(s) = sum_k c_k / k^{s_1}. s_1 plays no role in the coefficients.
 * Requires r >= 2 and n > r.
 */
std::vector<Rational> suffix_coefficients(std::uint64_t n,
                                          const Composition& s);

// Same recurrence in upward-rounded arithmetic: result >= H_n(s) exactly.
DyadicUpper mhs_upper_eval(std::uint64_t n, const Composition& s,
                           unsigned precision = DyadicUpper::kDefaultPrecision);

// Weak-inequality variant of mhs_upper_eval: result >= H*_n(s) exactly.
DyadicUpper mhs_star_upper_eval(
    std::uint64_t n, const Composition& s,
    unsigned precision = DyadicUpper::kDefaultPrecision);

/*
 * Cost gate for exact evaluation: the DP performs n*r rational updates
 * with denominators that grow like lcm(1..n)^r, so callers route large
 * instances to mhs_upper_eval instead.
 */
inline constexpr std::uint64_t kDefaultExactThreshold = 4096;
inline bool exact_cost_ok(std::uint64_t n, const Composition& s,
                          std::uint64_t threshold = kDefaultExactThreshold) {
  return n * s.length() <= threshold;
}

}  // namespace mhs
