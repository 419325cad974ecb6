#include "mhs/domination.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mhs {

namespace {

constexpr std::size_t kMaxReportedTails = 16;

/*
 * Smallest valid split point l for s >= t over raw exponent arrays, or -1.
 * The suffix condition (s_i >= t_i for i > l) holds exactly for
 * l >= first_bad_suffix, the prefix condition (s_i <= t_i for i <= l) only
 * tightens as l grows, so the single candidate is l = first_bad_suffix.
 */
int smallest_split(const std::uint32_t* s, const std::uint32_t* t,
                   std::size_t r, std::uint64_t ws, std::uint64_t wt) {
  if (ws < wt) return -1;
  std::size_t first_bad_suffix = 0;
  for (std::size_t i = r; i >= 1; --i)
    if (s[i - 1] < t[i - 1]) {
      first_bad_suffix = i;
      break;
    }
  if (first_bad_suffix > r - 1) return -1;
  for (std::size_t i = 1; i <= first_bad_suffix; ++i)
    if (s[i - 1] > t[i - 1]) return -1;
  return static_cast<int>(first_bad_suffix);
}

}  // namespace

std::optional<DominationWitness> dominates(const Composition& s,
                                           const Composition& t) {
  if (s.length() != t.length())
    throw std::invalid_argument("domination requires equal lengths");
  int l = smallest_split(s.exponents().data(), t.exponents().data(),
                         s.length(), s.weight(), t.weight());
  if (l < 0) return std::nullopt;
  return DominationWitness{static_cast<std::size_t>(l)};
}

std::vector<std::size_t> domination_witnesses(const Composition& s,
                                              const Composition& t) {
  if (s.length() != t.length())
    throw std::invalid_argument("domination requires equal lengths");
  std::vector<std::size_t> out;
  if (s.weight() < t.weight()) return out;
  std::size_t r = s.length();
  for (std::size_t l = 0; l <= r - 1; ++l) {
    bool ok = true;
    for (std::size_t i = 1; i <= l && ok; ++i) ok = s[i - 1] <= t[i - 1];
    for (std::size_t i = l + 1; i <= r && ok; ++i) ok = s[i - 1] >= t[i - 1];
    if (ok) out.push_back(l);
  }
  return out;
}

bool is_excluded_tail(const Composition& tail,
                      const std::vector<Composition>& optimal) {
  std::size_t r = tail.length() + 1;
  std::vector<std::uint32_t> s;
  s.reserve(r);
  s.push_back(1);
  s.insert(s.end(), tail.exponents().begin(), tail.exponents().end());
  std::uint64_t ws = tail.weight() + 1;
  for (const Composition& opt : optimal) {
    if (opt.length() != r)
      throw std::invalid_argument("optimal tuple of mismatched length");
    if (smallest_split(s.data(), opt.exponents().data(), r, ws,
                       opt.weight()) >= 0)
      return false;
  }
  return true;
}

CoverReport exclusion_cover_report(std::size_t r,
                                   const std::vector<Composition>& optimal,
                                   const std::vector<Composition>& exclusion,
                                   std::uint32_t cap) {
  if (r < 2) throw std::invalid_argument("cover check needs length >= 2");
  if (cap < 1) throw std::invalid_argument("cover check needs cap >= 1");
  for (const Composition& opt : optimal)
    if (opt.length() != r)
      throw std::invalid_argument("optimal tuple of mismatched length");
  std::set<std::vector<std::uint32_t>> exclusion_set;
  for (const Composition& e : exclusion) {
    if (e.length() != r - 1)
      throw std::invalid_argument("exclusion tail of mismatched length");
    for (std::uint32_t v : e.exponents())
      if (v > cap)
        throw std::invalid_argument("exclusion tail entry above the cap");
    exclusion_set.insert(e.exponents());
  }

  CoverReport report;
  report.boundary_all_dominated = true;
  std::uint64_t uncovered_bad = 0;
  std::set<std::vector<std::uint32_t>> dominated_exclusion_rows;

  std::vector<std::uint32_t> s(r, 1);  // s = (1, tail), tail = s[1..r-1]
  const std::size_t k = r - 1;
  for (;;) {
    ++report.tails;
    std::uint64_t ws = 1;
    for (std::size_t i = 1; i <= k; ++i) ws += s[i];
    bool covered = false;
    for (const Composition& opt : optimal)
      if (smallest_split(s.data(), opt.exponents().data(), r, ws,
                         opt.weight()) >= 0) {
        covered = true;
        break;
      }
    if (covered) {
      ++report.dominated;
      if (!exclusion_set.empty()) {
        std::vector<std::uint32_t> tail(s.begin() + 1, s.end());
        if (exclusion_set.count(tail)) dominated_exclusion_rows.insert(tail);
      }
    } else {
      std::vector<std::uint32_t> tail(s.begin() + 1, s.end());
      if (!exclusion_set.count(tail)) {
        ++uncovered_bad;
        if (report.uncovered_non_exclusion.size() < kMaxReportedTails)
          report.uncovered_non_exclusion.push_back(Composition(tail));
      }
      if (*std::max_element(tail.begin(), tail.end()) == cap)
        report.boundary_all_dominated = false;
    }

    std::size_t pos = k;  // odometer over tail entries
    while (pos >= 1) {
      if (s[pos] < cap) {
        ++s[pos];
        break;
      }
      s[pos] = 1;
      --pos;
    }
    if (pos == 0) break;
  }

  report.ok = uncovered_bad == 0;
  for (const auto& row : dominated_exclusion_rows)
    report.exclusion_but_dominated.push_back(Composition(row));
  return report;
}

}  // namespace mhs
