// corelab: cores of ideals in polynomial rings over exact finite fields.
//
// Subcommands wrap the library: analytic spread, height, fiber
// presentations, reduction numbers, the closed core formula with its
// stability grid, the Monte-Carlo intersection oracle, the power
// decomposition test, hypothesis reports, and the built-in example
// verification bundles.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "corelab/core.hpp"
#include "corelab/io.hpp"
#include "corelab/verify.hpp"

namespace {

using corelab::Error;
using corelab::Ideal;
using corelab::MathFindingError;
using nlohmann::json;

struct Common {
  std::string file;
  std::string ideal_name = "I";
  bool as_json = false;
};

corelab::ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return corelab::parse_problem(ss.str());
}

Ideal lookup_ideal(const corelab::ProblemFile& pf, const std::string& name) {
  auto it = pf.ideals.find(name);
  if (it == pf.ideals.end()) throw Error("no ideal named '" + name + "' in problem file");
  return it->second;
}

void warn_small_field(const corelab::FieldPtr& field) {
  if (field->size() < corelab::kSmallFieldThreshold)
    std::cerr << "warning: field " << field->describe()
              << " is below the genericity threshold 2^16; sampled elements "
                 "may not be general enough\n";
}

json ideal_json(const Ideal& I) { return json(corelab::ideal_strings(I)); }

struct Emitter {
  json doc;
  bool as_json;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Emitter(const std::string& command, const Common& c, json inputs)
      : as_json(c.as_json) {
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["notes"] = json::array();
    doc["seed"] = nullptr;
  }
  void note(const std::string& s) { doc["notes"].push_back(s); }
  void finish(std::ostream& os, const std::string& text) {
    auto stop = std::chrono::steady_clock::now();
    doc["timings_ms"] =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (as_json) {
      os << doc.dump(2) << "\n";
    } else {
      os << text;
      for (const auto& n : doc["notes"]) os << "note: " << n.get<std::string>() << "\n";
    }
  }
};

int run(int argc, char** argv) {
  CLI::App app{"cores of ideals over exact finite fields"};
  app.require_subcommand(1);
  Common common;
  app.add_option("-f,--file", common.file, "problem file")->required(false);
  app.add_option("-i,--ideal", common.ideal_name, "ideal name (default I)");
  app.add_flag("--json", common.as_json, "emit JSON");
  app.fallthrough();

  // spread
  auto* sp = app.add_subcommand("spread", "analytic spread of an ideal");
  // height
  auto* ht = app.add_subcommand("height", "height of an ideal");
  // fiber
  auto* fb = app.add_subcommand("fiber", "special fiber ring presentation");
  // rednum
  std::string j_name;
  auto* rn = app.add_subcommand("rednum", "reduction number of I w.r.t. J");
  rn->add_option("-j", j_name, "reduction ideal name")->required();
  int rn_bound = corelab::kDefaultReductionBound;
  rn->add_option("--bound", rn_bound, "search bound (default 20)");
  // core
  auto* co = app.add_subcommand("core", "closed-formula core with stability grid");
  int core_n = -1;
  uint64_t core_seed = 0;
  co->add_option("--n", core_n, "evaluate the formula at this n only");
  co->add_option("--seed", core_seed, "master seed")->required();
  // mc-core
  auto* mc = app.add_subcommand("mc-core", "Monte-Carlo intersection of reductions");
  int mc_trials = 40;
  int mc_stall = 16;
  uint64_t mc_seed = 0;
  bool mc_homog = false;
  mc->add_option("--trials", mc_trials, "minimum number of trials")->required();
  mc->add_option("--stall", mc_stall, "non-shrinking trials before stopping")->required();
  mc->add_option("--seed", mc_seed, "master seed")->required();
  mc->add_flag("--homogeneous", mc_homog, "sample within single degree classes");
  // decomp
  auto* dc = app.add_subcommand("decomp", "power decomposition test");
  int dc_s = 1;
  int dc_nmax = 5;
  uint64_t dc_seed = 0;
  dc->add_option("--s", dc_s, "number of extra general elements")->required();
  dc->add_option("--nmax", dc_nmax, "window end")->required();
  dc->add_option("--seed", dc_seed, "master seed")->required();
  // hyp
  auto* hy = app.add_subcommand("hyp", "hypothesis report for a reduction pair");
  std::string hy_j;
  std::string hy_primes;
  uint64_t hy_seed = 1;
  hy->add_option("-j", hy_j, "reduction ideal name")->required();
  hy->add_option("--primes", hy_primes,
                 "semicolon-separated candidate primes, e.g. 'T2,T3,T4;T1'");
  hy->add_option("--seed", hy_seed, "seed for embedding-dimension sampling");
  // verify
  auto* vf = app.add_subcommand("verify", "run a built-in example bundle");
  std::string vf_id;
  vf->add_option("--example", vf_id, "bundle id: 5.2, 5.3, mpowers")->required();

  CLI11_PARSE(app, argc, argv);

  auto need_problem = [&]() {
    if (common.file.empty()) throw Error("this subcommand needs -f <file>");
    return load_problem(common.file);
  };

  if (sp->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    Emitter em("spread", common, {{"file", common.file}, {"ideal", common.ideal_name}});
    int v = corelab::analytic_spread(I);
    em.doc["result"] = v;
    em.finish(std::cout, "analytic spread = " + std::to_string(v) + "\n");
    return 0;
  }
  if (ht->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    Emitter em("height", common, {{"file", common.file}, {"ideal", common.ideal_name}});
    int v = corelab::height(I);
    em.doc["result"] = v;
    em.finish(std::cout, "height = " + std::to_string(v) + "\n");
    return 0;
  }
  if (fb->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    Emitter em("fiber", common, {{"file", common.file}, {"ideal", common.ideal_name}});
    corelab::Presentation P = corelab::fiber_presentation(I);
    json result;
    result["ambient"] = P.ambient->var_names();
    result["defining"] = ideal_json(P.defining);
    json gmap = json::object();
    for (unsigned i = 0; i < P.generator_map.size(); ++i)
      gmap[P.ambient->var_name(i)] = corelab::to_string(P.generator_map[i]);
    result["generator_map"] = gmap;
    em.doc["result"] = result;
    std::ostringstream os;
    os << "fiber presentation: " << corelab::to_string(P.defining) << "\n";
    for (unsigned i = 0; i < P.generator_map.size(); ++i)
      os << "# " << P.ambient->var_name(i) << " -> "
         << corelab::to_string(P.generator_map[i]) << "\n";
    em.finish(std::cout, os.str());
    return 0;
  }
  if (rn->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    Ideal J = lookup_ideal(pf, j_name);
    Emitter em("rednum", common,
               {{"file", common.file}, {"ideal", common.ideal_name}, {"j", j_name}});
    int r = corelab::reduction_number(J, I, rn_bound);
    em.doc["result"] = r;
    em.finish(std::cout, "reduction number = " + std::to_string(r) + "\n");
    return 0;
  }
  if (co->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    warn_small_field(pf.field);
    Emitter em("core", common,
               {{"file", common.file}, {"ideal", common.ideal_name}, {"n", core_n}});
    em.doc["seed"] = core_seed;
    if (core_n >= 0) {
      // Fixed-n evaluation with two sampled reductions (stability across J).
      const int ell = corelab::analytic_spread(I);
      corelab::Rng rng(core_seed);
      auto rep1 = corelab::minimal_reduction(I, rng.next(), ell);
      auto rep2 = corelab::minimal_reduction(I, rng.next(), ell);
      Ideal v1 = corelab::core_formula(I, rep1.J, core_n);
      Ideal v2 = corelab::core_formula(I, rep2.J, core_n);
      if (!corelab::ideal_equal(v1, v2))
        throw MathFindingError("stability failure at fixed n = " +
                               std::to_string(core_n) + ": " + corelab::to_string(v1) +
                               " vs " + corelab::to_string(v2));
      em.doc["result"] = {{"core", ideal_json(v1)}, {"n", core_n}};
      em.finish(std::cout,
                "core (formula at n = " + std::to_string(core_n) +
                    ") = " + corelab::to_string(v1) + "\n");
      return 0;
    }
    corelab::CoreReport rep = corelab::core_auto(I, core_seed);
    json result;
    result["core"] = ideal_json(rep.formula_value);
    result["n"] = rep.n_used;
    result["g"] = rep.g;
    result["ell"] = rep.ell;
    result["r"] = rep.r;
    json grid = json::array();
    for (auto& [n, s] : rep.stability) grid.push_back({{"n", n}, {"seed", s}});
    result["stability"] = grid;
    em.doc["result"] = result;
    for (const auto& n : rep.hypothesis_notes) em.note(n);
    em.finish(std::cout, "core (formula) = " + corelab::to_string(rep.formula_value) +
                             "\n  g = " + std::to_string(rep.g) +
                             ", l = " + std::to_string(rep.ell) +
                             ", r = " + std::to_string(rep.r) +
                             ", n = " + std::to_string(rep.n_used) + "\n");
    return 0;
  }
  if (mc->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    warn_small_field(pf.field);
    Emitter em("mc-core", common,
               {{"file", common.file},
                {"ideal", common.ideal_name},
                {"trials", mc_trials},
                {"stall", mc_stall},
                {"homogeneous", mc_homog}});
    em.doc["seed"] = mc_seed;
    corelab::McCoreReport rep =
        corelab::core_monte_carlo(I, mc_trials, mc_stall, mc_seed, mc_homog);
    json result;
    result["core"] = ideal_json(rep.value);
    result["trials"] = rep.trials;
    result["stabilized_after"] = rep.stabilized_after;
    result["homogeneous"] = rep.homogeneous;
    em.doc["result"] = result;
    em.finish(std::cout,
              "mc-core = " + corelab::to_string(rep.value) + "\n  trials = " +
                  std::to_string(rep.trials) + ", stabilized after " +
                  std::to_string(rep.stabilized_after) + " non-shrinking trials\n");
    return 0;
  }
  if (dc->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    warn_small_field(pf.field);
    Emitter em("decomp", common,
               {{"file", common.file},
                {"ideal", common.ideal_name},
                {"s", dc_s},
                {"nmax", dc_nmax}});
    em.doc["seed"] = dc_seed;
    corelab::DecompositionReport rep =
        corelab::decomposition_check(I, dc_s, dc_nmax, dc_seed);
    json result;
    result["holds"] = rep.holds;
    result["n_lo"] = rep.n_lo;
    result["n_max"] = rep.n_max;
    result["generic_r"] = rep.generic_r;
    if (!rep.holds) result["first_failure_n"] = rep.first_failure_n;
    em.doc["result"] = result;
    std::ostringstream os;
    os << "decomposition with s = " << dc_s << " "
       << (rep.holds ? "holds" : "fails") << " on window [" << rep.n_lo << ", "
       << rep.n_max << "]";
    if (!rep.holds) os << " (first failure at n = " << rep.first_failure_n << ")";
    os << "\n";
    em.finish(std::cout, os.str());
    return 0;
  }
  if (hy->parsed()) {
    auto pf = need_problem();
    Ideal I = lookup_ideal(pf, common.ideal_name);
    Ideal J = lookup_ideal(pf, hy_j);
    Emitter em("hyp", common,
               {{"file", common.file}, {"ideal", common.ideal_name}, {"j", hy_j}});
    em.doc["seed"] = hy_seed;
    std::vector<corelab::PrimeCandidate> primes;
    if (!hy_primes.empty()) {
      corelab::Presentation P = corelab::fiber_presentation(I);
      std::stringstream groups(hy_primes);
      std::string group;
      while (std::getline(groups, group, ';')) {
        corelab::PrimeCandidate q;
        std::stringstream vars(group);
        std::string v;
        while (std::getline(vars, v, ',')) {
          if (v.empty()) continue;
          auto idx = P.ambient->var_index(v);
          if (!idx) throw Error("unknown fiber variable '" + v + "'");
          q.vars.push_back(*idx);
        }
        primes.push_back(std::move(q));
      }
    }
    corelab::HypothesisReport rep = corelab::hypothesis_report(I, J, primes, hy_seed);
    json result;
    result["g"] = rep.g;
    result["ell"] = rep.ell;
    result["r"] = rep.r;
    result["n_threshold"] = rep.n_threshold;
    result["characteristic"] = rep.characteristic;
    result["char_ok"] = rep.char_ok;
    result["equimultiple"] = rep.equimultiple;
    result["m_primary"] = rep.m_primary;
    json pnotes = json::array();
    for (const auto& p : rep.primes)
      pnotes.push_back({{"candidate", p.candidate},
                        {"certified", p.certified},
                        {"edim", p.edim}});
    result["primes"] = pnotes;
    em.doc["result"] = result;
    for (const auto& n : rep.notes) em.note(n);
    em.finish(std::cout,
              "g = " + std::to_string(rep.g) + ", l = " + std::to_string(rep.ell) +
                  ", r = " + std::to_string(rep.r) +
                  ", n threshold = " + std::to_string(rep.n_threshold) + "\n");
    return 0;
  }
  if (vf->parsed()) {
    Emitter em("verify", common, {{"example", vf_id}});
    auto results = corelab::verify_example(vf_id);
    bool all = true;
    json checks = json::array();
    std::ostringstream os;
    for (const auto& r : results) {
      all = all && r.pass;
      checks.push_back(
          {{"name", r.name}, {"pass", r.pass}, {"ms", r.ms}, {"detail", r.detail}});
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
         << static_cast<long long>(r.ms) << " ms)\n";
      if (!r.pass) os << "      " << r.detail << "\n";
    }
    em.doc["result"] = {{"checks", checks}, {"all_pass", all}};
    em.finish(std::cout, os.str());
    return all ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MathFindingError& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return 2;
  } catch (const corelab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
