// dombcheck: batch verification of Domb-number supercongruences.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dombcheck/domb_numbers.hpp"
#include "dombcheck/identities.hpp"
#include "dombcheck/quadform.hpp"
#include "dombcheck/sweep.hpp"

namespace dc = dombcheck;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct VerifyArgs {
  std::string targets = "all";
  std::string primes = "5:100";
  std::string format = "csv";
  std::vector<std::string> caps;
  dc::SweepConfig config;
};

int cmd_verify(VerifyArgs& args) {
  auto& cfg = args.config;
  try {
    cfg.targets = dc::parse_targets(args.targets);
    std::tie(cfg.lo, cfg.hi) = dc::parse_range(args.primes);
    cfg.format = dc::parse_format(args.format);
    for (const auto& c : args.caps) dc::parse_cap(c, cfg.caps);
    dc::validate(cfg);
  } catch (const dc::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto rows = dc::run_sweep(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out << '\n';
      return kUsage;
    }
  }
  std::ostream& report = cfg.out.empty() ? std::cout : file;
  std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;
  dc::write_report(report, cfg.format, rows);

  const auto s = dc::summarize(rows);
  if (s.primes == 0) log << "warning: no primes > 3 in " << cfg.lo << ':' << cfg.hi << ", nothing checked\n";
  log << "summary: " << s.primes << " primes, " << s.targets << " targets, " << s.rows << " rows, " << s.passes
      << " passed, " << s.failures << " failed, " << seconds << " s\n";
  for (const auto& r : rows) {
    if (!r.pass) {
      log << "FAIL p=" << r.prime << ' ' << dc::target_name(r.target) << " mod p^" << r.modulus_exponent
          << ": lhs=" << dc::to_string(r.lhs) << " rhs=" << dc::to_string(r.rhs);
      if (!r.detail.empty()) log << " [" << r.detail << ']';
      log << '\n';
    }
  }
  return s.failures == 0 ? kOk : kFailed;
}

int cmd_identities(long max_n, int workers) {
  if (max_n < 1) {
    std::cerr << "error: --max-n must be at least 1\n";
    return kUsage;
  }
  bool ok = true;
  for (const auto& r : dc::check_all(max_n, workers)) {
    std::cout << dc::identity_name(r.id) << ": " << (r.pass ? "ok" : "FAIL") << " (" << r.cases << " cases)";
    if (r.failure) {
      std::cout << " at n=" << r.failure->n << " j=" << r.failure->j << " lhs=" << r.failure->lhs.get_str()
                << " rhs=" << r.failure->rhs.get_str();
    }
    std::cout << '\n';
    ok = ok && r.pass;
  }
  return ok ? kOk : kFailed;
}

int cmd_domb(long long n) {
  if (n < 0) {
    std::cerr << "error: --n must be non-negative\n";
    return kUsage;
  }
  for (const auto& d : dc::domb_exact_range(static_cast<unsigned>(n))) std::cout << d.get_str() << '\n';
  return kOk;
}

int cmd_decompose(long long p) {
  if (p < 2 || !dc::is_prime(static_cast<dc::u64>(p)) || p <= 3) {
    std::cerr << "error: " << p << " is not a prime > 3\n";
    return kUsage;
  }
  try {
    const auto d = dc::decompose_x2_3y2(static_cast<dc::u64>(p));
    std::cout << p << " = " << d.x << "^2 + 3*" << d.y << "^2\n";
  } catch (const dc::ArithmeticError& e) {
    if (e.kind() != dc::ErrorKind::NotRepresentable) throw;
    std::cout << p << " is not representable as x^2 + 3y^2\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Domb-number supercongruences prime by prime"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Sweep primes and check congruence targets");
  v->add_option("--targets", verify.targets, "Comma-separated targets: thm1.1 thm1.2 thm1.3 conj1 conj2 musun lemmas all, or ids")
      ->capture_default_str();
  v->add_option("--primes", verify.primes, "Prime range lo:hi")->capture_default_str();
  v->add_option("--workers", verify.config.workers, "Worker threads")->capture_default_str();
  v->add_option("--out", verify.config.out, "Report file (default stdout)");
  v->add_option("--format", verify.format, "csv | jsonl | table")->capture_default_str();
  v->add_option("--guard", verify.config.guard, "Extra p-adic digits beyond the target modulus")->capture_default_str();
  v->add_option("--cap", verify.caps, "Per-target prime cap TARGET=P (repeatable)");
  v->add_flag("--timing", verify.config.timing, "Fill the millis column (makes reports run-dependent)");

  long max_n = 40;
  int id_workers = 1;
  auto* ids = app.add_subcommand("identities", "Check the binomial-sum identity catalog exactly");
  ids->add_option("--max-n", max_n, "Largest n")->capture_default_str();
  ids->add_option("--workers", id_workers, "Worker threads")->capture_default_str();

  long long domb_n = 10;
  auto* domb = app.add_subcommand("domb", "Print D_0..D_n exactly");
  domb->add_option("--n", domb_n, "Last index")->capture_default_str();

  long long prime = 0;
  auto* dec = app.add_subcommand("decompose", "Write a prime p = 1 mod 3 as x^2 + 3y^2");
  dec->add_option("p", prime, "Prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*v) return cmd_verify(verify);
    if (*ids) return cmd_identities(max_n, id_workers);
    if (*domb) return cmd_domb(domb_n);
    if (*dec) return cmd_decompose(prime);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
