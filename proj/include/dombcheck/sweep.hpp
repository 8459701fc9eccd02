#pragma once

// Batch driver behind `dombcheck verify`: sieve, dispatch, ordered reports.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dombcheck/congruences.hpp"

namespace dombcheck {

enum class ReportFormat { Csv, JsonLines, Table };

struct SweepConfig {
  u64 lo = 5;
  u64 hi = 100;
  std::vector<Target> targets;  // empty = all
  int guard = 1;
  int workers = 1;
  std::string out;  // empty = stdout
  ReportFormat format = ReportFormat::Csv;
  std::map<Target, u64> caps;  // overrides TargetInfo::default_cap
  bool timing = false;
};

/// Thrown for bad flags or configs; the CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Primes in [lo, hi] by Eratosthenes.
std::vector<u64> sieve_primes(u64 lo, u64 hi);

/// Comma-separated list of aliases (thm1.1, thm1.2, thm1.3, conj1, conj2,
/// musun, lemmas, all) and target ids. Result is sorted and deduplicated.
std::vector<Target> parse_targets(std::string_view list);

/// "lo:hi" or a single prime "p".
std::pair<u64, u64> parse_range(std::string_view text);

/// "TARGET=P" where TARGET may be an alias.
void parse_cap(std::string_view text, std::map<Target, u64>& caps);

ReportFormat parse_format(std::string_view text);

void validate(const SweepConfig& config);

u64 effective_cap(const SweepConfig& config, Target t);

/// Rows sorted by (prime, target) independent of scheduling. Arithmetic
/// errors at a prime become failing rows carrying the message in `detail`.
std::vector<CongruenceReport> run_sweep(const SweepConfig& config);

void write_csv(std::ostream& os, const std::vector<CongruenceReport>& rows);
void write_jsonl(std::ostream& os, const std::vector<CongruenceReport>& rows);
void write_table(std::ostream& os, const std::vector<CongruenceReport>& rows);
void write_report(std::ostream& os, ReportFormat format, const std::vector<CongruenceReport>& rows);

struct SweepSummary {
  std::size_t primes = 0;
  std::size_t targets = 0;
  std::size_t rows = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
};

SweepSummary summarize(const std::vector<CongruenceReport>& rows);

}  // namespace dombcheck
