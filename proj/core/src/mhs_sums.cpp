#include "mhs/mhs_sums.hpp"

#include <algorithm>
#include <utility>

namespace mhs {

namespace {

constexpr std::size_t kMaxCompositionLength = 100000;

BigInt int_pow(std::uint64_t base, std::uint32_t exp) {
  BigInt acc = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return acc;
}

}  // namespace

Composition::Composition(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)), weight_(0) {
  if (exponents_.empty())
    throw std::invalid_argument("composition must have length >= 1");
  for (std::uint32_t e : exponents_) {
    if (e == 0) throw std::invalid_argument("composition entries must be >= 1");
    weight_ += e;
  }
}

std::string Composition::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < exponents_.size()) {
    std::size_t j = i;
    while (j < exponents_.size() && exponents_[j] == exponents_[i]) ++j;
    std::size_t run = j - i;
    if (!out.empty()) out += ',';
    if (run >= 3) {
      out += '{' + std::to_string(exponents_[i]) + "}^" + std::to_string(run);
    } else {
      for (std::size_t k = 0; k < run; ++k) {
        if (k != 0) out += ',';
        out += std::to_string(exponents_[i]);
      }
    }
    i = j;
  }
  return out;
}

namespace {

struct CompositionParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  std::uint64_t parse_int(const char* what) {
    skip_spaces();
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > kMaxCompositionLength * 1000)
        throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return value;
  }

  void expect(char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  void parse_item(std::vector<std::uint32_t>& out) {
    skip_spaces();
    if (pos < text.size() && text[pos] == '{') {
      ++pos;
      std::size_t value_at = pos;
      std::uint64_t value = parse_int("exponent");
      expect('}');
      expect('^');
      std::size_t rep_at = pos;
      std::uint64_t rep = parse_int("repetition count");
      if (value == 0) throw ParseError("zero exponent", value_at);
      if (rep == 0) throw ParseError("zero repetition count", rep_at);
      if (out.size() + rep > kMaxCompositionLength)
        throw ParseError("composition too long", rep_at);
      out.insert(out.end(), rep, static_cast<std::uint32_t>(value));
    } else {
      std::size_t value_at = pos;
      std::uint64_t value = parse_int("exponent");
      if (value == 0) throw ParseError("zero exponent", value_at);
      if (out.size() + 1 > kMaxCompositionLength)
        throw ParseError("composition too long", value_at);
      out.push_back(static_cast<std::uint32_t>(value));
    }
  }
};

}  // namespace

Composition parse_composition(std::string_view text) {
  CompositionParser parser{text};
  std::vector<std::uint32_t> out;
  parser.parse_item(out);
  for (;;) {
    parser.skip_spaces();
    if (parser.pos == text.size()) break;
    parser.expect(',');
    parser.parse_item(out);
  }
  return Composition(std::move(out));
}

Rational mhs_eval(std::uint64_t n, const Composition& s) {
  std::size_t r = s.length();
  std::vector<Rational> row(r + 1);
  row[0] = Rational(1);
  for (std::uint64_t j = 1; j <= n; ++j) {
    // Descending t keeps row[t-1] at its previous-j value, which is what
    // the strict inequality k_{t-1} < k_t requires.
    std::size_t top = std::min<std::uint64_t>(j, r);
    for (std::size_t t = top; t >= 1; --t)
      row[t] += row[t - 1] / Rational(int_pow(j, s[t - 1]));
  }
  return row[r];
}

Rational mhs_star_eval(std::uint64_t n, const Composition& s) {
  std::size_t r = s.length();
  std::vector<Rational> row(r + 1);
  row[0] = Rational(1);
  for (std::uint64_t j = 1; j <= n; ++j) {
    // Ascending t lets row[t-1] already include k_{t-1} = j, which is what
    // the weak inequality k_{t-1} <= k_t requires.
    for (std::size_t t = 1; t <= r; ++t)
      row[t] += row[t - 1] / Rational(int_pow(j, s[t - 1]));
  }
  return row[r];
}

std::vector<Rational> suffix_coefficients(std::uint64_t n,
                                          const Composition& s) {
  std::size_t r = s.length();
  if (r < 2) throw std::invalid_argument("suffix coefficients need length >= 2");
  if (n <= r)
    throw std::invalid_argument("suffix coefficients need n > length");
  /*
   * cur[k] holds sum over k < k_j < ... < k_r <= n of the reciprocal tail
   * product, built from j = r down to j = 2; index range k = 0..n.
   */
  const Rational row_of_ones(1);
  std::vector<Rational> next(n + 1), cur(n + 1);
  for (std::size_t jj = r; jj >= 2; --jj) {
    std::uint32_t exponent = s[jj - 1];
    cur[n] = Rational(0);
    for (std::int64_t k = static_cast<std::int64_t>(n) - 1; k >= 0; --k) {
      const Rational& tail = (jj == r) ? row_of_ones : next[k + 1];
      cur[k] = cur[k + 1] + tail / Rational(int_pow(k + 1, exponent));
    }
    std::swap(cur, next);
  }
  std::vector<Rational> out;
  out.reserve(n - r + 1);
  for (std::uint64_t k = 1; k + r - 1 <= n; ++k) out.push_back(next[k]);
  return out;
}

DyadicUpper mhs_upper_eval(std::uint64_t n, const Composition& s,
                           unsigned precision) {
  std::size_t r = s.length();
  std::vector<DyadicUpper> row(r + 1, DyadicUpper(precision));
  row[0] = DyadicUpper::from_integer(1, precision);
  std::vector<std::uint32_t> distinct(s.exponents());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<std::size_t> exp_index(r);
  for (std::size_t t = 0; t < r; ++t)
    exp_index[t] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), s[t]) -
        distinct.begin());
  const DyadicUpper one = DyadicUpper::from_integer(1, precision);
  std::vector<DyadicUpper> recip(distinct.size(), DyadicUpper(precision));
  for (std::uint64_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < distinct.size(); ++i)
      recip[i] = one.div_int(int_pow(j, distinct[i]));
    std::size_t top = std::min<std::uint64_t>(j, r);
    for (std::size_t t = top; t >= 1; --t)
      row[t] = row[t] + row[t - 1] * recip[exp_index[t - 1]];
  }
  return row[r];
}

DyadicUpper mhs_star_upper_eval(std::uint64_t n, const Composition& s,
                                unsigned precision) {
  std::size_t r = s.length();
  std::vector<DyadicUpper> row(r + 1, DyadicUpper(precision));
  row[0] = DyadicUpper::from_integer(1, precision);
  const DyadicUpper one = DyadicUpper::from_integer(1, precision);
  for (std::uint64_t j = 1; j <= n; ++j) {
    for (std::size_t t = 1; t <= r; ++t)
      row[t] = row[t] + row[t - 1] * one.div_int(int_pow(j, s[t - 1]));
  }
  return row[r];
}

}  // namespace mhs
