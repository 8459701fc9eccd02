#include "dombcheck/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace dombcheck {

namespace {

struct Alias {
  std::string_view name;
  std::vector<Target> targets;
};

const std::vector<Alias>& aliases() {
  static const std::vector<Alias> table{
      {"thm1.1", {Target::THM11_4K, Target::THM11_16K}},
      {"thm1.2", {Target::THM12_4K, Target::THM12_16K}},
      {"thm1.3", {Target::THM13_K2_4K, Target::THM13_K2_16K, Target::THM13_K_4K, Target::THM13_K_16K}},
      {"conj1", {Target::CONJ1_DP1}},
      {"conj2", {Target::CONJ2_MODP2}},
      {"musun", {Target::MUSUN_P5}},
      {"lemmas",
       {Target::LEMMA22, Target::LEMMA_MPT, Target::LEMMA_P2J, Target::LEMMA_SUNH, Target::LEMMA_SH55}},
  };
  return table;
}

std::vector<Target> resolve(std::string_view name) {
  if (name == "all") {
    std::vector<Target> all;
    for (const auto& info : all_targets()) all.push_back(info.id);
    return all;
  }
  for (const auto& a : aliases()) {
    if (a.name == name) return a.targets;
  }
  if (auto t = parse_target_id(name)) return {*t};
  throw UsageError("unknown target '" + std::string(name) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

u64 parse_u64(std::string_view s, std::string_view what) {
  s = trim(s);
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string millis_text(double ms) {
  if (ms == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

nlohmann::json residue_json(u128 r) {
  if (r <= static_cast<u128>(~u64{0})) return static_cast<u64>(r);
  return to_string(r);
}

}  // namespace

std::vector<u64> sieve_primes(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

std::vector<Target> parse_targets(std::string_view list) {
  std::vector<Target> out;
  while (true) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (item.empty()) throw UsageError("empty target in list");
    auto ts = resolve(item);
    out.insert(out.end(), ts.begin(), ts.end());
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<u64, u64> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const u64 p = parse_u64(text, "prime range");
    return {p, p};
  }
  return {parse_u64(text.substr(0, colon), "range start"), parse_u64(text.substr(colon + 1), "range end")};
}

void parse_cap(std::string_view text, std::map<Target, u64>& caps) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw UsageError("cap must look like TARGET=P, got '" + std::string(text) + "'");
  const u64 bound = parse_u64(text.substr(eq + 1), "cap");
  for (Target t : resolve(trim(text.substr(0, eq)))) caps[t] = bound;
}

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "jsonl" || text == "json") return ReportFormat::JsonLines;
  if (text == "table") return ReportFormat::Table;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

void validate(const SweepConfig& config) {
  if (config.hi < config.lo) throw UsageError("empty prime range: hi < lo");
  if (config.workers < 1) throw UsageError("workers must be at least 1");
  if (config.guard < 0 || config.guard > 8) throw UsageError("guard must be in [0, 8]");
}

u64 effective_cap(const SweepConfig& config, Target t) {
  if (auto it = config.caps.find(t); it != config.caps.end()) return it->second;
  return target_info(t).default_cap;
}

std::vector<CongruenceReport> run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<Target> targets = config.targets;
  if (targets.empty()) targets = parse_targets("all");

  std::vector<u64> primes;
  for (u64 p : sieve_primes(config.lo, config.hi)) {
    if (p > 3) primes.push_back(p);
  }

  std::vector<std::vector<CongruenceReport>> slots(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      const u64 p = primes[i];
      std::vector<Target> here;
      for (Target t : targets) {
        if (p <= effective_cap(config, t) && applies(t, p)) here.push_back(t);
      }
      try {
        slots[i] = run_prime(p, here, config.guard, config.timing);
      } catch (const std::exception& e) {
        for (Target t : here) {
          CongruenceReport r;
          r.prime = p;
          r.target = t;
          r.modulus_exponent = modulus_exponent(t, p);
          r.detail = e.what();
          slots[i].push_back(std::move(r));
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto extra = std::min<std::size_t>(static_cast<std::size_t>(config.workers - 1), primes.size());
    for (std::size_t w = 0; w < extra; ++w) pool.emplace_back(work);
    work();
  }

  std::vector<CongruenceReport> rows;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(rows));
  return rows;  // slots are in prime order, each sorted by target
}

void write_csv(std::ostream& os, const std::vector<CongruenceReport>& rows) {
  os << "prime,target,modulus_exponent,lhs,rhs,pass,millis\n";
  for (const auto& r : rows) {
    os << r.prime << ',' << target_name(r.target) << ',' << r.modulus_exponent << ',' << to_string(r.lhs) << ','
       << to_string(r.rhs) << ',' << (r.pass ? "true" : "false") << ',' << millis_text(r.millis) << '\n';
  }
}

void write_jsonl(std::ostream& os, const std::vector<CongruenceReport>& rows) {
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["prime"] = r.prime;
    j["target"] = std::string(target_name(r.target));
    j["modulus_exponent"] = r.modulus_exponent;
    j["lhs"] = residue_json(r.lhs);
    j["rhs"] = residue_json(r.rhs);
    j["pass"] = r.pass;
    j["millis"] = r.millis;
    os << j.dump() << '\n';
  }
}

void write_table(std::ostream& os, const std::vector<CongruenceReport>& rows) {
  os << std::left << std::setw(8) << "prime" << std::setw(14) << "target" << std::setw(4) << "m" << std::setw(22)
     << "lhs" << std::setw(22) << "rhs" << "verdict\n";
  for (const auto& r : rows) {
    os << std::setw(8) << r.prime << std::setw(14) << target_name(r.target) << std::setw(4) << r.modulus_exponent
       << std::setw(22) << to_string(r.lhs) << std::setw(22) << to_string(r.rhs) << (r.pass ? "ok" : "FAIL");
    if (!r.pass && !r.detail.empty()) os << "  (" << r.detail << ')';
    os << '\n';
  }
}

void write_report(std::ostream& os, ReportFormat format, const std::vector<CongruenceReport>& rows) {
  switch (format) {
    case ReportFormat::Csv:
      write_csv(os, rows);
      break;
    case ReportFormat::JsonLines:
      write_jsonl(os, rows);
      break;
    case ReportFormat::Table:
      write_table(os, rows);
      break;
  }
}

SweepSummary summarize(const std::vector<CongruenceReport>& rows) {
  SweepSummary s;
  std::vector<u64> primes;
  std::vector<Target> targets;
  for (const auto& r : rows) {
    primes.push_back(r.prime);
    targets.push_back(r.target);
    ++(r.pass ? s.passes : s.failures);
  }
  std::sort(targets.begin(), targets.end());
  s.primes = static_cast<std::size_t>(std::unique(primes.begin(), primes.end()) - primes.begin());
  s.targets = static_cast<std::size_t>(std::unique(targets.begin(), targets.end()) - targets.begin());
  s.rows = rows.size();
  return s;
}

}  // namespace dombcheck
