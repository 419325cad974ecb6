#include "mhs/mhs_sums.hpp"
#include "mhs/primes.hpp"
#include "mhs/rational.hpp"
#include "mhs/s1_bounds.hpp"
#include "mhs/tables.hpp"
#include "mhs/verify.hpp"
#include "mhs/version.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>

namespace {

// "A..B" (inclusive) or a single value.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto parse_uint = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("empty range endpoint");
    std::uint64_t v = 0;
    for (char c : part) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("range endpoint '" + part +
                                    "' is not a number");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 1000000) throw std::invalid_argument("range endpoint too large");
    }
    return v;
  };
  const std::size_t dots = text.find("..");
  std::uint64_t lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_uint(text);
  } else {
    lo = parse_uint(text.substr(0, dots));
    hi = parse_uint(text.substr(dots + 2));
  }
  if (lo < 1 || lo > hi)
    throw std::invalid_argument("range must satisfy 1 <= A <= B");
  return {lo, hi};
}

std::uint64_t sieve_limit_from_env() {
  const char* env = std::getenv("MHS_SIEVE_LIMIT");
  if (env == nullptr || *env == '\0') return mhs::PrimeSieve::kDefaultLimit;
  std::uint64_t v = 0;
  for (const char* c = env; *c != '\0'; ++c) {
    if (*c < '0' || *c > '9')
      throw std::invalid_argument(
          "MHS_SIEVE_LIMIT must be a positive integer");
    v = v * 10 + static_cast<std::uint64_t>(*c - '0');
    if (v >= (std::uint64_t{1} << 32))
      throw std::invalid_argument("MHS_SIEVE_LIMIT must be below 2^32");
  }
  return v;
}

struct VerifyFlags {
  std::string out_path;
  std::string tables_path;
  bool deterministic = false;
  bool slow = false;
  unsigned jobs = 1;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& flags) {
  cmd->add_option("--out", flags.out_path,
                  "write the JSON manifest to this file");
  cmd->add_option("--tables", flags.tables_path,
                  "load table data from this file instead of the embedded "
                  "copy")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--deterministic", flags.deterministic,
                "zero wall times so the manifest is byte-stable");
  cmd->add_flag("--slow", flags.slow,
                "also run sub-checks budgeted beyond desk scale");
  cmd->add_option("--jobs", flags.jobs,
                  "worker threads (capped at the hardware count)");
}

mhs::BoundTables load_tables_arg(const VerifyFlags& flags) {
  return flags.tables_path.empty()
             ? mhs::load_tables()
             : mhs::load_tables_from_file(flags.tables_path);
}

mhs::VerifyOptions make_options(const VerifyFlags& flags) {
  mhs::VerifyOptions options;
  options.deterministic = flags.deterministic;
  options.include_slow = flags.slow;
  options.jobs = flags.jobs;
  options.heartbeat = [](const std::string& line) {
    std::cerr << line << std::endl;
  };
  return options;
}

int finish_verify(const mhs::VerifyRun& run, const std::string& command,
                  const std::string& command_det, const VerifyFlags& flags) {
  const std::string& recorded = flags.deterministic ? command_det : command;
  std::cout << "claims: " << run.verified << " verified, " << run.failed
            << " failed, " << run.skipped << " skipped\n";
  for (const mhs::VerificationReport& rep : run.reports) {
    if (rep.outcome == mhs::Outcome::failed)
      std::cout << "FAILED " << rep.claim << ": " << rep.failure << "\n";
  }
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + flags.out_path);
    out << mhs::manifest_json(run, recorded, flags.deterministic);
    if (!out) throw std::runtime_error("write failed: " + flags.out_path);
  }
  return run.all_verified() ? 0 : 1;
}

// normalized: basename for argv[0], --out destination elided, so that a
// deterministic manifest's bytes do not depend on where it is written.
std::string command_line(int argc, char** argv, bool normalized) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (normalized) {
      if (i == 0) {
        const auto slash = arg.find_last_of('/');
        if (slash != std::string::npos) arg = arg.substr(slash + 1);
      } else if (arg == "--out") {
        ++i;
        continue;
      } else if (arg.rfind("--out=", 0) == 0) {
        continue;
      }
    }
    if (!cmd.empty()) cmd += ' ';
    cmd += arg;
  }
  return cmd;
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic verification engine for multiple harmonic sums"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mhs::kVersion);

  std::uint64_t n = 0;
  std::string s_text, tail_text, range_text;
  std::uint64_t threshold = mhs::kDefaultExactThreshold;
  bool exact_flag = false, upper_flag = false, star_flag = false;
  VerifyFlags flags;
  std::string theorem_range = "2..6";
  std::uint64_t n_max = 50, r_max = 3, weight_cap = 6;

  CLI::App* eval = app.add_subcommand(
      "eval", "exact H_n(s), or a certified decimal upper bound");
  eval->add_option("--n", n, "upper summation limit")->required();
  eval->add_option("--s", s_text, "composition, e.g. \"1,2\" or \"{1}^4,2\"")
      ->required();
  CLI::Option* eval_exact =
      eval->add_flag("--exact", exact_flag, "force exact evaluation");
  CLI::Option* eval_upper = eval->add_flag(
      "--upper", upper_flag, "certified decimal upper bound instead");
  eval_exact->excludes(eval_upper);
  eval->add_option("--threshold", threshold,
                   "exact-evaluation cost gate on n*r");

  CLI::App* eval_star = app.add_subcommand(
      "eval-star", "exact H*_n(s) (weak inequalities), or an upper bound");
  eval_star->add_option("--n", n, "upper summation limit")->required();
  eval_star->add_option("--s", s_text, "composition")->required();
  CLI::Option* star_exact =
      eval_star->add_flag("--exact", exact_flag, "force exact evaluation");
  CLI::Option* star_upper = eval_star->add_flag(
      "--upper", upper_flag, "certified decimal upper bound instead");
  star_exact->excludes(star_upper);
  eval_star->add_option("--threshold", threshold,
                        "exact-evaluation cost gate on n*r");

  CLI::App* witness = app.add_subcommand(
      "witness", "non-integrality witness for H_n(s) or H*_n(s)");
  witness->add_option("--n", n, "upper summation limit")->required();
  witness->add_option("--s", s_text, "composition")->required();
  witness->add_flag("--star", star_flag, "weak-inequality variant");
  witness->add_option("--threshold", threshold,
                      "exact-evaluation cost gate on n*r");

  CLI::App* mr = app.add_subcommand(
      "mr", "thresholds m_r: past them the window argument always applies");
  mr->add_option("--r", range_text, "length range, e.g. 1..5")->required();

  CLI::App* bounds = app.add_subcommand(
      "bounds", "s_1 cap above which the leading-prime valuation is negative");
  bounds->add_option("--n", n, "upper summation limit")->required();
  bounds->add_option("--tail", tail_text, "tail composition (s_2..s_r)")
      ->required();

  CLI::App* verify_tables_cmd = app.add_subcommand(
      "verify-tables", "certify the shipped bound tables");
  verify_tables_cmd->add_option("--r", range_text,
                                "length range (default 2..29)");
  VerifyFlags tables_flags;
  add_verify_flags(verify_tables_cmd, tables_flags);

  CLI::App* verify_theorem_cmd = app.add_subcommand(
      "verify-theorem",
      "non-integrality of every H_n(s) below the thresholds");
  verify_theorem_cmd->add_option("--r", theorem_range,
                                 "length range (default 2..6)");
  bool exhaustive = false;
  verify_theorem_cmd->add_flag(
      "--exhaustive", exhaustive,
      "disable n-sampling for lengths 7 and up (hours-scale)");
  VerifyFlags theorem_flags;
  add_verify_flags(verify_theorem_cmd, theorem_flags);

  CLI::App* verify_star_cmd = app.add_subcommand(
      "verify-star", "witness sweep for the weak-inequality sums");
  verify_star_cmd->add_option("--n-max", n_max, "largest n (default 50)");
  verify_star_cmd->add_option("--r-max", r_max, "largest length (default 3)");
  verify_star_cmd->add_option("--weight-cap", weight_cap,
                              "largest weight (default 6)");
  VerifyFlags star_flags;
  add_verify_flags(verify_star_cmd, star_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (eval->parsed() || eval_star->parsed()) {
    const bool star = eval_star->parsed();
    const mhs::Composition s = mhs::parse_composition(s_text);
    if (upper_flag) {
      const mhs::DyadicUpper u =
          star ? mhs::mhs_star_upper_eval(n, s) : mhs::mhs_upper_eval(n, s);
      std::cout << "<= " << u.to_decimal_upper_string(15) << "\n";
      return 0;
    }
    if (!exact_flag && !mhs::exact_cost_ok(n, s, threshold)) {
      std::cerr << "error: exact evaluation cost n*r = " << n * s.length()
                << " exceeds the threshold " << threshold
                << "; pass --upper for a certified bound, --exact to force, "
                   "or raise --threshold\n";
      return 2;
    }
    const mhs::Rational h =
        star ? mhs::mhs_star_eval(n, s) : mhs::mhs_eval(n, s);
    std::cout << h.to_string() << "\n";
    return 0;
  }

  if (witness->parsed()) {
    const mhs::Composition s = mhs::parse_composition(s_text);
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    if (star_flag) {
      if (n == 0) {
        std::cerr << "error: star sums need n >= 1\n";
        return 2;
      }
      if (n == 1) {
        std::cout << "integer: H*_1(" << s.to_string()
                  << ") = 1 (known exception)\n";
        return 1;
      }
      const mhs::NonIntegralityWitness w = mhs::star_witness(n, s, sieve);
      std::cout << w.to_line() << "\n";
      return mhs::replay_witness(w, sieve, threshold) ? 0 : 1;
    }
    if (n < s.length()) {
      std::cout << "integer: H_" << n << "(" << s.to_string()
                << ") = 0 (empty sum)\n";
      return 1;
    }
    if (auto w = mhs::window_witness(n, s, sieve)) {
      std::cout << w->to_line() << "\n";
      return mhs::replay_witness(*w, sieve, threshold) ? 0 : 1;
    }
    if (mhs::exact_cost_ok(n, s, threshold)) {
      const mhs::Rational h = mhs::mhs_eval(n, s);
      if (h.is_integer()) {
        std::cout << "integer: H_" << n << "(" << s.to_string()
                  << ") = " << h.to_string() << "\n";
        return 1;
      }
      const mhs::NonIntegralityWitness w{
          n,    s,
          false, mhs::WitnessMethod::exact_value,
          0,    0,
          "reduced denominator > 1"};
      std::cout << w.to_line() << "\n";
      return 0;
    }
    std::cerr << "error: no window prime above r at n = " << n
              << " and exact evaluation is over the cost threshold; raise "
                 "--threshold\n";
    return 2;
  }

  if (mr->parsed()) {
    const auto [lo, hi] = parse_range(range_text);
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    std::string line;
    for (std::uint64_t r = lo; r <= hi; ++r) {
      if (!line.empty()) line += ' ';
      line += std::to_string(r) + ":" +
              std::to_string(mhs::compute_m_r(r, sieve));
    }
    std::cout << line << "\n";
    return 0;
  }

  if (bounds->parsed()) {
    const mhs::Composition tail = mhs::parse_composition(tail_text);
    if (n < tail.length() + 1) {
      std::cerr << "error: need n >= r = " << tail.length() + 1 << "\n";
      return 2;
    }
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    const mhs::S1Bound b = mhs::s1_bound(n, tail, sieve);
    const char* variant = b.variant == mhs::S1Variant::scan ? "scan"
                          : b.variant == mhs::S1Variant::large_prime
                              ? "large-prime"
                              : "single-term";
    std::cout << "n=" << n << " tail=" << tail.to_string()
              << " variant=" << variant << " p=" << b.p
              << " bound=" << b.bound << "\n";
    return 0;
  }

  const std::string command = command_line(argc, argv, false);
  const std::string command_det = command_line(argc, argv, true);

  if (verify_tables_cmd->parsed()) {
    const auto [lo, hi] =
        parse_range(range_text.empty() ? "2..29" : range_text);
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    const mhs::BoundTables tables = load_tables_arg(tables_flags);
    const mhs::VerifyRun run = mhs::verify_tables(
        tables, sieve, static_cast<std::uint32_t>(lo),
        static_cast<std::uint32_t>(hi), make_options(tables_flags));
    return finish_verify(run, command, command_det, tables_flags);
  }

  if (verify_theorem_cmd->parsed()) {
    const auto [lo, hi] = parse_range(theorem_range);
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    const mhs::BoundTables tables = load_tables_arg(theorem_flags);
    mhs::VerifyOptions options = make_options(theorem_flags);
    options.exhaustive = exhaustive;
    const mhs::VerifyRun run = mhs::verify_ordinary_range(
        tables, sieve, static_cast<std::uint32_t>(lo),
        static_cast<std::uint32_t>(hi), options);
    return finish_verify(run, command, command_det, theorem_flags);
  }

  if (verify_star_cmd->parsed()) {
    const mhs::PrimeSieve sieve(sieve_limit_from_env());
    const mhs::VerifyRun run = mhs::verify_star_range(
        n_max, r_max, weight_cap, sieve, make_options(star_flags));
    return finish_verify(run, command, command_det, star_flags);
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mhs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
