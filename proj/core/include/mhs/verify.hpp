#pragma once

#include "mhs/mhs_sums.hpp"
#include "mhs/primes.hpp"
#include "mhs/rational.hpp"
#include "mhs/tables.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mhs {

enum class WitnessMethod { valuation, less_than_one, exact_value };

std::string_view to_string(WitnessMethod m);

/*
 * Replayable certificate that H_n(s) (resp. the star variant) is not an
 * integer:
 *   valuation     nu = padic_order(p, H) < 0, so the reduced denominator
 *                 carries a factor p;
 *   less_than_one an upward-rounded evaluation lies below 1 while the sum
 *                 is nonempty and positive;
 *   exact_value   the reduced exact value has denominator > 1.
 * detail is human-oriented context; replay uses only the typed fields.
 */
struct NonIntegralityWitness {
  std::uint64_t n = 0;
  Composition s;
  bool star = false;
  WitnessMethod method = WitnessMethod::valuation;
  std::uint64_t p = 0;   // valuation only
  std::int64_t nu = 0;   // valuation only; always < 0
  std::string detail;

  // One line, machine-readable: "kind=... n=... s=... method=... [p=... nu=...]"
  std::string to_line() const;
};

/*
 * Valuation witness at the largest prime p in (n/2, n], which exists for
 * every n >= 2: the only tuple of H*_n whose denominator can absorb p^|s|
 * is (p,...,p), so nu_p(H*_n(s)) = -|s|.  Requires 2 <= n <= sieve limit.
 */
NonIntegralityWitness star_witness(std::uint64_t n, const Composition& s,
                                   const PrimeSieve& sieve);

/*
 * Valuation witness from the prime window (n/(r+1), n/r]: a window prime
 * p > r has exactly r multiples in [1, n], so the tuple (p, 2p, ..., rp)
 * is the unique minimum of nu_p and nu_p(H_n(s)) = -|s|.  Picks the
 * smallest qualifying prime; empty when the window has none above r.
 * Requires n >= r = s.length() and floor(n/r) within the sieve.
 */
std::optional<NonIntegralityWitness> window_witness(std::uint64_t n,
                                                    const Composition& s,
                                                    const PrimeSieve& sieve);

/*
 * Re-derives the witness from scratch and compares field-by-field; when
 * exact evaluation is affordable (n*r <= exact_threshold) additionally
 * recomputes the claimed valuation / value on the exact rational.
 */
bool replay_witness(const NonIntegralityWitness& w, const PrimeSieve& sieve,
                    std::uint64_t exact_threshold = kDefaultExactThreshold);

enum class Outcome { verified, failed, skipped };

std::string_view to_string(Outcome o);

/*
 * One independently replayable claim: params carry everything needed to
 * rerun it (the pipelines are deterministic functions of the params plus
 * the shared sieve and tables).
 */
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Outcome outcome = Outcome::skipped;
  std::optional<NonIntegralityWitness> witness;
  std::string failure;      // nonempty iff failed
  std::string skip_reason;  // nonempty iff skipped
  double wall_ms = 0.0;
};

// Sub-check selector for verify_tables.
enum TableChecks : unsigned {
  kTableOptimal = 1u,    // decimal bounds at n = m_r
  kTableCover = 2u,      // enumeration cover of the exclusion rows
  kTableExclusion = 4u,  // s_1 caps dominate the computed bounds
  kTableClosure = 8u,    // (ln m_r + 1)^r / r! < 1 for lengths past the data
  kTableAll = 15u,
};

struct VerifyOptions {
  bool deterministic = false;  // zero wall_ms so manifests are byte-stable
  std::uint64_t exact_threshold = kDefaultExactThreshold;
  /*
   * Run sub-checks whose cost is beyond desk scale (cover enumeration for
   * r >= 11, exclusion sweeps for r >= 7); by default those claims are
   * reported as skipped with the cost in the reason.
   */
  bool include_slow = false;
  bool exhaustive = false;  // no n-sampling for lengths 7 and up
  unsigned jobs = 1;        // worker threads; claims merge by id either way
  std::function<void(const std::string&)> heartbeat;  // progress; may be empty
  unsigned table_checks = kTableAll;
};

struct VerifyRun {
  std::vector<VerificationReport> reports;  // sorted by claim id
  std::uint64_t verified = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;

  // Skipped claims are opt-outs, not failures.
  bool all_verified() const noexcept { return failed == 0; }
};

// Numeric-aware claim-id order: "r10" sorts after "r2".
bool claim_id_less(std::string_view a, std::string_view b);

/*
 * Star sweep: for every 2 <= n <= n_max and composition of length
 * <= r_max with weight <= weight_cap, derives the star witness and
 * replays it (exactly, when affordable); the n = 1 claim checks that
 * every such H*_1(s) equals 1.  One claim per length plus the n = 1
 * exception claim.
 */
VerifyRun verify_star_range(std::uint64_t n_max, std::uint64_t r_max,
                            std::uint64_t weight_cap, const PrimeSieve& sieve,
                            const VerifyOptions& options = {});

/*
 * Certifies the shipped bound-table data for lengths in [r_lo, r_hi]:
 *   tables.r{r}.optimal.{i}   upward-rounded H_{m_r}(row) < decimal bound
 *   tables.r{r}.cover         every tail in [1..cap]^(r-1) dominated or
 *                             listed; boundary layer fully dominated; no
 *                             redundant exclusion rows
 *   tables.r{r}.exclusion.{i} max of the s_1 bound over n in [r, m_r)
 *                             is at most the row's cap
 *   tables.r{r}.closure       for lengths 25..29, certified
 *                             (ln m_r + 1)^r / r! < 1
 * Select sub-checks with options.table_checks.
 */
VerifyRun verify_tables(const BoundTables& tables, const PrimeSieve& sieve,
                        std::uint32_t r_lo, std::uint32_t r_hi,
                        const VerifyOptions& options = {});

/*
 * Non-integrality of every H_n(s) with l(s) = r in [r_lo, r_hi] and
 * r <= n < m_r (for n >= m_r the window argument always applies; that is
 * what m_r means).  Per (r, n) claim:
 *   - a window prime > r discharges every composition at once;
 *   - n = r has a single tuple (1, 2, ..., n), never an integer;
 *   - otherwise every non-excluded tail is dominated (the per-r cover
 *     claim), and each exclusion row is checked exhaustively: the s_1
 *     bound must sit under the row's cap (beyond the cap the valuation
 *     argument applies) and s_1 = 1..cap are evaluated exactly.
 * Integer values found must match the known exceptions precisely; the
 * per-r "exceptions" claim fails on any discrepancy in either direction.
 * Lengths 7 and up sample the expensive n by default (options.exhaustive
 * turns sampling off); sampled-out n are reported as skipped.
 */
VerifyRun verify_ordinary_range(const BoundTables& tables,
                                const PrimeSieve& sieve, std::uint32_t r_lo,
                                std::uint32_t r_hi,
                                const VerifyOptions& options = {});

/*
 * JSON manifest: schema/version/command/deterministic/counts plus one
 * object per report in claim-id order, fields in fixed order.  Byte-stable
 * across runs when deterministic is set (wall times are zeroed).
 */
std::string manifest_json(const VerifyRun& run, const std::string& command,
                          bool deterministic);

}  // namespace mhs
