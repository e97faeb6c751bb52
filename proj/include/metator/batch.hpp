#pragma once

#include "random_instance.hpp"
#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

namespace metator {

struct BatchOptions {
  std::uint64_t seed = 0;
  std::int64_t count = 1;
  Profile profile = Profile::standard;
  unsigned jobs = 1;
  std::optional<std::int64_t> cap;
  bool timing = false;
};

/// Applies a command-line cap to every enumeration budget of an instance.
inline void override_caps(InstanceFile& f, std::optional<std::int64_t> cap) {
  if (!cap) return;
  f.caps.center = *cap;
  f.caps.heisenberg = *cap;
  f.caps.real = *cap;
}

struct BatchEntry {
  std::string status;
  json report;
  double seconds = 0;
};

inline BatchEntry run_batch_entry(std::uint64_t seed, const BatchOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  BatchEntry e;
  InstanceFile f = random_instance(seed, opt.profile);
  override_caps(f, opt.cap);
  try {
    RunResult r = run_check(f);
    e.status = r.exit_code == exit_ok ? "passed" : "failed";
    e.report = std::move(r.report);
  } catch (const cap_exceeded& ex) {
    e.status = "cap_exceeded";
    e.report = cap_report(ex);
    e.report["instance"] = to_json(f);
  } catch (const error& ex) {
    e.status = "failed";
    e.report = {{"error", ex.what()}, {"instance", to_json(f)}};
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

/// Runs `check` over count generated instances. Instance i uses seed + i, so
/// each entry can be reproduced on its own with `gen` and `check`.
inline RunResult run_batch(const BatchOptions& opt) {
  if (opt.count < 1) throw error("count must be at least 1");
  const auto count = static_cast<std::size_t>(opt.count);
  std::vector<BatchEntry> entries(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      entries[i] = run_batch_entry(opt.seed + i, opt);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::int64_t passed = 0, failed = 0, capped = 0;
  std::map<std::string, std::int64_t> histogram;
  double max_seconds = 0;
  json list = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const BatchEntry& e = entries[i];
    if (e.status == "passed") ++passed;
    else if (e.status == "failed") ++failed;
    else ++capped;
    if (e.report.contains("packet")) ++histogram[e.report["packet"]["order"].dump()];
    max_seconds = std::max(max_seconds, e.seconds);
    json item = {{"index", i}, {"seed", opt.seed + i}, {"status", e.status}, {"report", e.report}};
    if (opt.timing) item["seconds"] = e.seconds;
    list.push_back(std::move(item));
  }
  RunResult out;
  out.report = {{"profile", profile_name(opt.profile)},
                {"seed", opt.seed},
                {"count", opt.count},
                {"passed", passed},
                {"failed", failed},
                {"cap_exceeded", capped},
                {"packet_orders", histogram},
                {"instances", list}};
  if (opt.timing) out.report["max_seconds"] = max_seconds;
  out.exit_code = failed > 0 ? exit_violation : (capped > 0 ? exit_cap : exit_ok);
  return out;
}

}  // namespace metator
