// Command-line front end: plan, construct, verify, batch.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hurwitz/liaison.hpp"
#include "hurwitz/pipeline.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/verify.hpp"

namespace {

using namespace hurwitz;
using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;

struct Common {
  std::uint32_t prime = 32009;
  std::string seed = "HurwitzSpaces";
  bool strict = false;
  int max_retries = 5;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--prime", c.prime, "coefficient field F_p")->envname("HURWITZ_PRIME")->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed string")->envname("HURWITZ_SEED")->capture_default_str();
  cmd->add_flag("--strict-saturation", c.strict, "saturate by all six x_i*y_j instead of x0*y0");
  cmd->add_option("--max-retries", c.max_retries, "attempts before giving up")->check(CLI::PositiveNumber)->capture_default_str();
}

void emit(const ordered_json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void validate(int genus, std::uint32_t prime) {
  if (!is_good_genus(genus)) derive_plan(genus);  // throws with the nearest covered genera
  if (!is_prime(prime) || prime == 2) throw CLI::ValidationError("--prime", std::to_string(prime) + " is not an odd prime");
  if (prime <= static_cast<std::uint32_t>(2 * genus + 10))
    throw CLI::ValidationError("--prime", "must exceed 2g+10 = " + std::to_string(2 * genus + 10));
}

PipelineOptions pipeline_options(const Common& c) {
  PipelineOptions o;
  o.strict_saturation = c.strict;
  o.max_retries = c.max_retries;
  return o;
}

int run_plan(const std::string& genus, bool json) {
  std::vector<LiaisonPlan> plans;
  if (genus == "all") {
    for (int g : good_genera()) plans.push_back(derive_plan(g));
  } else {
    plans.push_back(derive_plan(std::stoi(genus)));
  }
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : plans) arr.push_back(plan_to_json(p));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << plan_table(plans);
  }
  return 0;
}

struct BatchEntry {
  int genus = 0;
  bool pass = false;
  int attempts = 0;
  double millis = 0;
  std::string error;
  ordered_json report;
};

BatchEntry run_one(int g, const Common& c) {
  BatchEntry e;
  e.genus = g;
  auto t0 = std::chrono::steady_clock::now();
  try {
    validate(g, c.prime);
    ConstructionResult r = construct(g, c.prime, c.seed, pipeline_options(c));
    VerifyOptions vo;
    vo.strict_saturation = c.strict;
    VerificationReport rep = verify_all(r, vo);
    e.attempts = r.attempts;
    e.pass = rep.verdict();
    e.report = report_to_json(rep);
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

std::vector<int> parse_genera(const std::string& spec, bool heavy) {
  if (spec.empty()) {
    std::vector<int> out;
    for (int g : good_genera())
      if (heavy || g <= 12) out.push_back(g);
    return out;
  }
  if (spec == "all") return good_genera();
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
      for (int g = lo; g <= hi; ++g)
        if (is_good_genus(g)) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_batch(const std::vector<int>& genera, const Common& c, unsigned jobs, const std::string& out_dir) {
  std::vector<BatchEntry> entries(genera.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < genera.size(); k = next++) {
      entries[k] = run_one(genera[k], c);
      std::lock_guard lock(log_mutex);
      std::cerr << "g=" << genera[k] << (entries[k].pass ? " pass" : " fail") << "\n";
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& e : entries)
      if (!e.report.is_null()) emit(e.report, (std::filesystem::path(out_dir) / ("report_g" + std::to_string(e.genus) + ".json")).string());
  }
  int passed = 0;
  std::cout << std::setw(4) << "g" << "  " << std::setw(7) << "verdict" << "  " << std::setw(8) << "attempts" << "  "
            << std::setw(10) << "seconds" << "\n";
  for (const auto& e : entries) {
    passed += e.pass ? 1 : 0;
    std::cout << std::setw(4) << e.genus << "  " << std::setw(7) << (e.pass ? "pass" : "FAIL") << "  " << std::setw(8)
              << e.attempts << "  " << std::setw(10) << std::fixed << std::setprecision(1) << e.millis / 1000.0;
    if (!e.error.empty()) std::cout << "  " << e.error;
    std::cout << "\n";
  }
  std::cout << "passed " << passed << " of " << entries.size() << "\n";
  return passed == static_cast<int>(entries.size()) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liaison construction and verification of 6-gonal curves in P1 x P2"};
  app.require_subcommand(1);

  std::string plan_genus = "all";
  bool plan_json = false;
  auto* plan = app.add_subcommand("plan", "numerical data of the construction");
  plan->add_option("--genus", plan_genus, "genus or 'all'")->capture_default_str();
  plan->add_flag("--json", plan_json, "print JSON instead of a table");

  Common cc;
  int c_genus = 0;
  std::string dump_dir, c_output;
  auto* cons = app.add_subcommand("construct", "build a curve and print the construction summary");
  cons->add_option("--genus", c_genus, "genus")->required();
  add_common(cons, cc);
  cons->add_option("--dump-ideals", dump_dir, "write IC2/IXp/ICp/IX/IC ideal files here");
  cons->add_option("--output", c_output, "write JSON here instead of stdout");

  Common vc;
  int v_genus = 0;
  std::string load_ideal, v_output;
  auto* ver = app.add_subcommand("verify", "build (or load) a curve and run every check");
  ver->add_option("--genus", v_genus, "genus")->required();
  add_common(ver, vc);
  ver->add_option("--load-ideal", load_ideal, "verify this saturated curve ideal instead of constructing one");
  ver->add_option("--output", v_output, "write the report here instead of stdout");

  Common bc;
  std::string b_genera, b_out;
  bool heavy = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "construct and verify several genera");
  batch->add_option("--genera", b_genera, "comma list or ranges, e.g. 5-12,24; default 5-12");
  batch->add_flag("--heavy", heavy, "include every covered genus");
  batch->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  batch->add_option("--out", b_out, "directory for per-genus reports");
  add_common(batch, bc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*plan) return run_plan(plan_genus, plan_json);
    if (*cons) {
      validate(c_genus, cc.prime);
      ConstructionResult r = construct(c_genus, cc.prime, cc.seed, pipeline_options(cc));
      if (!dump_dir.empty()) dump_ideals(r, dump_dir);
      emit(construction_to_json(r), c_output);
      return 0;
    }
    if (*ver) {
      validate(v_genus, vc.prime);
      VerifyOptions vo;
      vo.strict_saturation = vc.strict;
      VerificationReport rep;
      if (!load_ideal.empty()) {
        Ideal ic = read_ideal_file(load_ideal);
        rep = verify_curve(ic, derive_plan(v_genus), vo);
        rep.seed = vc.seed;
      } else {
        rep = verify_all(construct(v_genus, vc.prime, vc.seed, pipeline_options(vc)), vo);
      }
      emit(report_to_json(rep), v_output);
      return rep.verdict() ? 0 : kExitFail;
    }
    if (*batch) return run_batch(parse_genera(b_genera, heavy), bc, jobs, b_out);
  } catch (const PlanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
