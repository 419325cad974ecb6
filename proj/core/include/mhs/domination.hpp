#pragma once

#include "mhs/mhs_sums.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mhs {

/*
 * Witness for s >= t in the domination order: weight(s) >= weight(t) and
 * s_i <= t_i for i <= l, s_i >= t_i for i > l. Any valid l proves the
 * relation; the smallest is returned for determinism. s >= t implies
 * H_n(s) <= H_n(t) for every n (term-by-term comparison).
 */
struct DominationWitness {
  std::size_t l;
};

// Requires equal lengths; empty optional when the relation does not hold.
std::optional<DominationWitness> dominates(const Composition& s,
                                           const Composition& t);

// Every valid l in ascending order (for diagnostics; may be empty).
std::vector<std::size_t> domination_witnesses(const Composition& s,
                                              const Composition& t);

/*
 * A tail (s_2..s_r) is excluded when (1, tail) is dominated by no tuple of
 * the optimal set: the "< 1 at the threshold" argument does not reach it,
 * so it must be handled by the exhaustive s_1-capped check.
 */
bool is_excluded_tail(const Composition& tail,
                      const std::vector<Composition>& optimal);

struct CoverReport {
  bool ok = false;                // every tail dominated or an exclusion row
  std::uint64_t tails = 0;        // tails enumerated ([1..cap]^(r-1))
  std::uint64_t dominated = 0;    // tails dominated by an optimal tuple
  bool boundary_all_dominated = false;  // every tail with an entry == cap
  std::vector<Composition> uncovered_non_exclusion;  // empty when ok
  std::vector<Composition> exclusion_but_dominated;  // diagnostic: dead rows
};

/*
 * Enumerates every tail in [1..cap]^(r-1) and checks (ok) that each is
 * either dominated by an optimal tuple (as (1, tail)) or listed as an
 * exclusion tail. exclusion_but_dominated reports rows the cover makes
 * redundant (none expected). boundary_all_dominated certifies the cap is
 * high enough: a tail with any entry above cap clamps (entrywise min with
 * cap) onto a boundary tail, and (1, original) >= (1, clamped) pointwise,
 * so a fully dominated boundary layer extends the cover to unbounded
 * tails.
 *
 * Requires cap >= 1 and every exclusion tail of length r-1 with entries
 * <= cap.
 */
CoverReport exclusion_cover_report(std::size_t r,
                                   const std::vector<Composition>& optimal,
                                   const std::vector<Composition>& exclusion,
                                   std::uint32_t cap);

inline bool exclusion_cover_check(std::size_t r,
                                  const std::vector<Composition>& optimal,
                                  const std::vector<Composition>& exclusion,
                                  std::uint32_t cap) {
  return exclusion_cover_report(r, optimal, exclusion, cap).ok;
}

}  // namespace mhs
