// metator: invariants and oracle checks for covers of tori.

#include <metator/metator.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using metator::json;

struct Output {
  std::string path;

  void emit(const json& j) const {
    const std::string text = metator::canonical_dump(j);
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw metator::error("cannot write " + path);
    out << text;
  }
};

json invalid(const std::string& path, const std::string& rule) {
  return metator::validation_error(path, rule).to_json();
}

metator::InstanceFile load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw metator::validation_error("", "cannot read " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw metator::validation_error("", std::string("malformed JSON: ") + e.what());
  }
  return metator::parse_instance(j);
}

/// Runs `body`, mapping exceptions onto the exit-code contract.
template <class F>
int guarded(const Output& out, F&& body) {
  try {
    return body();
  } catch (const metator::validation_error& e) {
    out.emit(e.to_json());
    return metator::exit_invalid;
  } catch (const metator::cap_exceeded& e) {
    out.emit(metator::cap_report(e));
    return metator::exit_cap;
  } catch (const metator::error& e) {
    out.emit({{"error", e.what()}});
    return metator::exit_violation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and oracle checks for tame covers of tori"};
  app.require_subcommand(1);

  Output out;
  std::string file;
  std::optional<std::int64_t> cap;
  bool timing = false;
  std::uint64_t seed = 0;
  std::int64_t count = 1;
  std::string profile = "default";
  unsigned jobs = 1;

  const auto common = [&](CLI::App* c) {
    c->add_option("--out", out.path, "Write the report to this file");
    c->add_option("--cap", cap, "Enumeration cap for the brute-force oracles")->check(CLI::PositiveNumber);
    c->add_flag("--timing", timing, "Include wall-clock timings (output is then not reproducible)");
  };

  auto* inv = app.add_subcommand("invariants", "Compute the invariants of an instance file");
  inv->add_option("file", file, "Instance JSON")->required();
  common(inv);

  auto* chk = app.add_subcommand("check", "Compute invariants and run every oracle comparison");
  chk->add_option("file", file, "Instance JSON")->required();
  common(chk);

  auto* bat = app.add_subcommand("batch", "Check a run of seeded random instances");
  bat->add_option("--seed", seed, "Base seed")->required();
  bat->add_option("--count", count, "Number of instances")->required()->check(CLI::PositiveNumber);
  bat->add_option("--profile", profile, "default | split | wide | real");
  bat->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(bat);

  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--profile", profile, "default | split | wide | real");
  gen->add_option("--out", out.path, "Write the instance to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : metator::exit_invalid;
  }

  const auto timed = [&](auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    metator::RunResult r = run();
    if (timing)
      r.report["timing"] = {
          {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    out.emit(r.report);
    return r.exit_code;
  };

  if (*inv || *chk) {
    return guarded(out, [&] {
      metator::InstanceFile f = load(file);
      metator::override_caps(f, cap);
      return timed([&] { return *inv ? metator::run_invariants(f) : metator::run_check(f); });
    });
  }

  const auto prof = metator::parse_profile(profile);
  if (!prof) {
    out.emit(invalid("profile", "must be one of default, split, wide, real"));
    return metator::exit_invalid;
  }

  if (*bat) {
    return guarded(out, [&] {
      metator::BatchOptions opt;
      opt.seed = seed;
      opt.count = count;
      opt.profile = *prof;
      opt.jobs = jobs;
      opt.cap = cap;
      opt.timing = timing;
      const metator::RunResult r = metator::run_batch(opt);
      out.emit(r.report);
      return r.exit_code;
    });
  }

  return guarded(out, [&] {
    out.emit(metator::to_json(metator::random_instance(seed, *prof)));
    return static_cast<int>(metator::exit_ok);
  });
}
