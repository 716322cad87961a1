#include "belyi/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "belyi/charmass.hpp"
#include "belyi/enumeration.hpp"
#include "belyi/json_io.hpp"
#include "belyi/solver.hpp"
#include "belyi/store.hpp"
#include "belyi/verify.hpp"

namespace belyi {

namespace {

// split "(1 2),(2 3),(1 3 2)" at top-level commas
std::vector<std::string> split_triple(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int max_point(const std::string& cycles) {
  int mx = 0, cur = 0;
  bool in_num = false;
  for (char ch : cycles) {
    if (isdigit((unsigned char)ch)) {
      cur = cur * 10 + (ch - '0');
      in_num = true;
    } else {
      if (in_num) mx = std::max(mx, cur);
      cur = 0;
      in_num = false;
    }
  }
  if (in_num) mx = std::max(mx, cur);
  return mx;
}

PermutationTriple triple_from_cli(const std::string& text, int degree, std::ostream& err) {
  auto parts = split_triple(text);
  if (parts.size() != 3)
    throw CLI::ValidationError("--triple", "expected three comma-separated cycle strings");
  int d = degree;
  if (d <= 0)
    for (const auto& p : parts) d = std::max(d, max_point(p));
  if (d <= 0) throw CLI::ValidationError("--triple", "cannot infer the degree");
  bool repaired = false;
  auto t = parse_triple_cycles(parts[0], parts[1], parts[2], d, &repaired);
  if (repaired)
    err << "note: triple interpreted in the opposite composition convention; "
           "components inverted\n";
  return t;
}

}  // namespace

int command_dispatch(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"belyi: genus-0 Belyi maps from permutation triples, exactly"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  unsigned long long seed = 0;
  app.add_option("--seed", seed, "seed for sampling (default fixed)");
  int threads = (int)std::thread::hardware_concurrency();
  app.add_option("--threads", threads, "worker threads for searches");

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "genus of a permutation triple");
  std::string triple_text;
  int degree_opt = 0;
  genus_cmd->add_option("--triple", triple_text, "cycles, e.g. \"(1 2),(2 3),(1 3 2)\"")
      ->required();
  genus_cmd->add_option("--degree", degree_opt, "degree (default: inferred)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "representatives with prescribed classes");
  std::string classes_text;
  int degree_flag = 0;
  enum_cmd->add_option("--classes", classes_text, "e.g. \"2^3 1^1 / 3^2 1^1 / 6^1 1^1\"")
      ->required();
  enum_cmd->add_option("--degree", degree_flag, "expected degree (checked)");

  // mass
  auto* mass_cmd = app.add_subcommand("mass", "Frobenius mass of a class triple");
  std::string mass_classes;
  int mass_degree = 0;
  mass_cmd->add_option("--classes", mass_classes)->required();
  mass_cmd->add_option("--degree", mass_degree, "expected degree (checked)");

  // build-system
  auto* build_cmd = app.add_subcommand("build-system", "direct-method polynomial system");
  std::string build_classes;
  bool with_asd = false, with_strict = false;
  build_cmd->add_option("--classes", build_classes)->required();
  build_cmd->add_flag("--asd", with_asd, "add differentiation relations");
  build_cmd->add_flag("--strict", with_strict, "add distinct-root auxiliaries");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute models over number fields");
  std::string solve_classes;
  std::vector<long> solve_primes;
  long solve_max_q = 50000;
  bool no_asd = false;
  std::string store_path = ResultsStore::default_path();
  bool no_store = false;
  solve_cmd->add_option("--classes", solve_classes)->required();
  solve_cmd->add_option("--primes", solve_primes, "primes to try (default: good primes)");
  solve_cmd->add_option("--max-q", solve_max_q, "largest residue field scanned");
  solve_cmd->add_flag("--no-asd", no_asd, "skip differentiation relations");
  solve_cmd->add_option("--store", store_path, "results store path");
  solve_cmd->add_flag("--no-store", no_store, "do not append results to the store");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a model against a triple");
  std::string model_path, triple_path;
  int trials = 100;
  verify_cmd->add_option("--model", model_path, "model JSON file")->required();
  verify_cmd->add_option("--triple", triple_path, "triple JSON file");
  verify_cmd->add_option("--trials", trials, "sampling trials");

  // store
  auto* store_cmd = app.add_subcommand("store", "inspect the results store");
  auto* store_list = store_cmd->add_subcommand("list", "list keys");
  auto* store_export = store_cmd->add_subcommand("export", "dump entries as JSON lines");
  bool recheck = false;
  std::string store_path2 = ResultsStore::default_path();
  store_cmd->add_option("--store", store_path2, "results store path");
  store_cmd->add_flag("--recheck", recheck, "re-verify every entry on load");

  std::vector<const char*> argv;
  argv.push_back("belyi");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*genus_cmd) {
      auto t = triple_from_cli(triple_text, degree_opt, err);
      int g = genus_of_triple(t);
      if (as_json)
        out << json{{"genus", g}, {"passport", to_json(passport_of(t))}}.dump() << "\n";
      else
        out << g << "\n";
      return 0;
    }

    if (*enum_cmd) {
      CycleType c0, c1, cInf;
      parse_classes(classes_text, c0, c1, cInf);
      if (degree_flag > 0 && degree_flag != c0.degree())
        throw std::invalid_argument("--degree disagrees with the classes");
      auto res = triples_with_classes(c0, c1, cInf);
      for (size_t i = 0; i < res.representatives.size(); ++i) {
        json line = to_json(res.representatives[i]);
        line["autOrder"] = res.aut_orders[i].get_str();
        line["transitive"] = (bool)res.transitive_flags[i];
        line["groupOrder"] = res.group_orders[i].get_str();
        out << line.dump() << "\n";
      }
      if (!as_json)
        err << "# " << res.representatives.size() << " classes, "
            << res.transitive_count() << " transitive\n";
      return res.representatives.empty() ? 1 : 0;
    }

    if (*mass_cmd) {
      CycleType c0, c1, cInf;
      parse_classes(mass_classes, c0, c1, cInf);
      if (mass_degree > 0 && mass_degree != c0.degree())
        throw std::invalid_argument("--degree disagrees with the classes");
      mpq_class mass = frobenius_mass(c0, c1, cInf);
      json j{{"mass", mass.get_str()}};
      std::string breakdown;
      EnumOptions eo;
      bool feasible = c0.degree() <= eo.degree_cap && class_size(c1) <= eo.class_budget;
      if (feasible) {
        auto res = triples_with_classes(c0, c1, cInf);
        // group representatives by (transitive, autOrder)
        std::map<std::pair<bool, std::string>, long> buckets;
        for (size_t i = 0; i < res.representatives.size(); ++i)
          buckets[{!res.transitive_flags[i], res.aut_orders[i].get_str()}]++;
        std::ostringstream bs;
        bool first = true;
        for (const auto& [key, count] : buckets) {
          if (!first) bs << " + ";
          bs << count << "/" << key.second;
          if (key.first) bs << " (intransitive)";
          first = false;
        }
        breakdown = bs.str();
        j["breakdown"] = breakdown;
        j["transitive"] = res.transitive_count();
        j["classesTotal"] = res.representatives.size();
      }
      if (as_json)
        out << j.dump() << "\n";
      else {
        out << mass.get_str() << "\n";
        if (!breakdown.empty()) out << "= " << breakdown << "\n";
      }
      return 0;
    }

    if (*build_cmd) {
      CycleType c0, c1, cInf;
      parse_classes(build_classes, c0, c1, cInf);
      auto build = build_system(c0, c1, cInf);
      json cases = json::array();
      for (auto& cs : build.cases) {
        PolynomialSystem s = close_nondegenerate(cs, with_strict);
        if (with_asd) s = asd_augment(s);
        cases.push_back(to_json(s));
      }
      json j{{"base", to_json(build.base)}, {"cases", cases}};
      out << j.dump(as_json ? -1 : 2) << "\n";
      return 0;
    }

    if (*solve_cmd) {
      CycleType c0, c1, cInf;
      parse_classes(solve_classes, c0, c1, cInf);
      SolveOptions opt;
      opt.primes = solve_primes;
      opt.max_q = solve_max_q;
      opt.use_asd = !no_asd;
      opt.threads = std::max(1, threads);
      auto rep = solve_passport(c0, c1, cInf, opt);
      if (!no_store) {
        ResultsStore store(store_path);
        for (const auto& m : rep.models) store.append(m);
      }
      if (as_json)
        out << to_json(rep).dump() << "\n";
      else {
        out << "passport: " << rep.passport_transitive
            << " transitive classes, field degree bound " << rep.field_degree_bound << "\n";
        for (const auto& m : rep.models) out << "model: " << m.to_string() << "\n";
        for (const auto& u : rep.unresolved) out << "unresolved: " << u << "\n";
        out << (rep.complete ? "complete" : "incomplete") << "\n";
      }
      return rep.models.empty() ? 1 : 0;
    }

    if (*verify_cmd) {
      std::ifstream mf(model_path);
      if (!mf) throw std::invalid_argument("cannot read model file " + model_path);
      json mj = json::parse(mf);
      if (mj.contains("model")) mj = mj["model"];  // accept store entries
      BelyiMapModel m = model_from_json(mj);
      auto chk = is_belyi(m);
      json j{{"isBelyi", chk.ok},
             {"classesMatch", chk.classes_match},
             {"reason", chk.reason}};
      if (chk.ok)
        j["computedClasses"] = {to_json(chk.over0), to_json(chk.over1), to_json(chk.overInf)};
      int status = (chk.ok && chk.classes_match) ? 0 : 1;
      if (!triple_path.empty() && chk.ok) {
        std::ifstream tf(triple_path);
        if (!tf) throw std::invalid_argument("cannot read triple file " + triple_path);
        PermutationTriple t = triple_from_json(json::parse(tf));
        auto rep = monodromy_consistent(m, t, trials, seed);
        j["monodromy"] = rep.verdict == Verdict::Consistent ? "CONSISTENT" : "INCONSISTENT";
        j["note"] = rep.note;
        j["samples"] = rep.samples_taken;
        if (rep.verdict != Verdict::Consistent) {
          j["witness"] = rep.witness;
          status = 1;
        }
      }
      if (as_json)
        out << j.dump() << "\n";
      else {
        out << (chk.ok ? "belyi map: yes" : "belyi map: NO (" + chk.reason + ")") << "\n";
        if (j.contains("monodromy")) out << "monodromy: " << j["monodromy"] << " (statistical)\n";
      }
      return status;
    }

    if (*store_cmd) {
      ResultsStore store(store_path2);
      auto entries = store.load(recheck);
      if (*store_export) {
        for (const auto& e : entries) out << e.raw << "\n";
      } else if (*store_list || true) {
        for (const auto& e : entries)
          out << e.degree << " | " << e.classes << " | #" << e.index << " | "
              << e.model.field->describe() << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace belyi
