// ============================================================================
// colog — command-line front end
// ============================================================================
//
// Subcommands:
//   prove        derivability in the base substructural calculus
//   prove-modal  derivability in a modal extension
//   consistent   consistency of a set of formulas (JSON array of DSL strings)
//   translate    classical formula -> additive substructural image
//   aggregate    run an aggregation rule over a profile file
//   modelcheck   evaluate a formula in a resource model
//   countermodel search for a small falsifying model of a sequent
//   scenario     run a bundled scenario, optionally against its golden set
//   verify       exhaustive majority-preservation checks
//
// Exit codes: 0 affirmative answer, 1 negative/unknown answer, 2 usage error.
// ============================================================================

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "colog/json_io.hpp"

namespace fs = std::filesystem;
using namespace colog;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<F> read_formula_list(const std::string& path) {
  std::vector<F> out;
  for (const auto& s : read_json_file(path)) out.push_back(parse_formula(s.get<std::string>()));
  return out;
}

int verdict_exit(Verdict v) { return v == Verdict::Derivable ? 0 : 1; }

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string tri_text(Tri t) {
  return t == Tri::Yes ? "consistent" : t == Tri::No ? "inconsistent" : "unknown";
}

// Scenario lookup: a path, a file stem under scenarios/, or the "name" field
// of a bundled scenario file.
fs::path resolve_scenario(const std::string& name) {
  if (fs::exists(name)) return name;
  std::vector<fs::path> roots = {"scenarios"};
  if (const char* env = std::getenv("COLOG_SCENARIO_DIR")) roots.insert(roots.begin(), env);
  for (const auto& root : roots) {
    if (!fs::is_directory(root)) continue;
    fs::path direct = root / (name + ".json");
    if (fs::exists(direct)) return direct;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.path().extension() != ".json") continue;
      try {
        json j = read_json_file(entry.path().string());
        if (j.value("name", "") == name) return entry.path();
      } catch (...) {
      }
    }
  }
  throw std::runtime_error("scenario not found: " + name);
}

Agenda default_doctrinal_agenda() {
  return close_agenda({parse_classical("p"), parse_classical("q"), parse_classical("p /\\ q"),
                       parse_classical("(p /\\ q) -> r"), parse_classical("r")});
}

Agenda belief_agenda(int agents) {
  Agenda a;
  for (int i = 1; i <= agents; ++i) {
    std::string c = "{" + std::to_string(i) + "}";
    for (const char* body : {"p", "q", "p /\\ q"}) {
      CF pos = parse_classical("B" + c + "(" + body + ")");
      CF neg = parse_classical("B" + c + "(-(" + std::string(body) + "))");
      a.issues.push_back({pos, neg});
    }
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"substructural logics of collective attitudes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // ---- prove -------------------------------------------------------------
  auto* prove_cmd = app.add_subcommand("prove", "derivability in the base calculus");
  std::string sequent_text, fragment = "ills", emit_proof;
  std::uint64_t budget = kDefaultBudget;
  prove_cmd->add_option("sequent", sequent_text, "e.g. \"p, p -o q |- q\"")->required();
  prove_cmd->add_option("--fragment", fragment)->check(CLI::IsMember({"ills", "aills"}));
  prove_cmd->add_option("--budget", budget);
  prove_cmd->add_option("--emit-proof", emit_proof, "write the proof tree to a file");

  // ---- prove-modal -------------------------------------------------------
  auto* pm_cmd = app.add_subcommand("prove-modal", "derivability in a modal extension");
  std::string pm_sequent, pm_logic = "UILLs";
  int max_instances = 2;
  pm_cmd->add_option("sequent", pm_sequent)->required();
  pm_cmd->add_option("--logic", pm_logic);
  pm_cmd->add_option("--budget", budget);
  pm_cmd->add_option("--max-instances", max_instances);

  // ---- consistent ---------------------------------------------------------
  auto* cons_cmd = app.add_subcommand("consistent", "consistency of a formula set");
  std::string cons_logic = "ILLs", cons_file;
  cons_cmd->add_option("--logic", cons_logic)->required();
  cons_cmd->add_option("file", cons_file, "JSON array of formulas")->required();

  // ---- translate -----------------------------------------------------------
  auto* tr_cmd = app.add_subcommand("translate", "classical -> additive image");
  std::string tr_formula;
  tr_cmd->add_option("formula", tr_formula);
  tr_cmd->allow_extras();  // classical negation starts with '-'

  // ---- aggregate -----------------------------------------------------------
  auto* agg_cmd = app.add_subcommand("aggregate", "aggregate a profile file");
  std::string rule = "majority", profile_file;
  agg_cmd->add_option("--rule", rule)->check(CLI::IsMember({"majority", "majority-c", "two-step"}));
  agg_cmd->add_option("profile", profile_file)->required();

  // ---- modelcheck ----------------------------------------------------------
  auto* mc_cmd = app.add_subcommand("modelcheck", "evaluate a formula in a model");
  std::string model_file, mc_formula;
  mc_cmd->add_option("model", model_file)->required();
  mc_cmd->add_option("formula", mc_formula)->required();

  // ---- countermodel ---------------------------------------------------------
  auto* cm_cmd = app.add_subcommand("countermodel", "search for a falsifying model");
  std::string cm_sequent;
  int max_size = 4;
  cm_cmd->add_option("sequent", cm_sequent)->required();
  cm_cmd->add_option("--max-size", max_size);
  cm_cmd->add_option("--logic", pm_logic);

  // ---- scenario --------------------------------------------------------------
  auto* sc_cmd = app.add_subcommand("scenario", "run a bundled scenario");
  std::string sc_name, reading;
  sc_cmd->add_option("name", sc_name, "scenario name or file path")->required();
  sc_cmd->add_option("--reading", reading, "which reading to run (default: all)");

  // ---- verify ------------------------------------------------------------------
  auto* vf_cmd = app.add_subcommand("verify", "exhaustive preservation checks");
  std::string job, agenda_file;
  int agents = 3;
  bool control = false;
  vf_cmd->add_option("--job", job)->required()->check(CLI::IsMember({"doctrinal", "belief"}));
  vf_cmd->add_option("--agenda", agenda_file, "JSON array of positive agenda formulas");
  vf_cmd->add_option("--agents", agents);
  vf_cmd->add_flag("--control", control, "check classical consistency instead (expect failures)");

  CLI11_PARSE(app, argc, argv);
  bool as_json = format == "json";

  try {
    if (*prove_cmd) {
      auto ps = parse_sequent(sequent_text);
      auto frag = fragment == "aills" ? FragmentId::aILLs : FragmentId::ILLs;
      auto r = prove(Sequent{ps.hyps, ps.goal}, frag, budget);
      if (!emit_proof.empty() && r.proof) {
        std::ofstream out(emit_proof);
        out << to_json(*r.proof).dump(2) << "\n";
      }
      emit(as_json,
           {{"verdict", verdict_name(r.verdict)}, {"nodes", r.nodes}},
           verdict_name(r.verdict));
      return verdict_exit(r.verdict);
    }

    if (*pm_cmd || *cm_cmd) {
      auto logic = logic_from_name(pm_logic);
      if (!logic) throw CLI::ValidationError("--logic", "unknown logic " + pm_logic);
      if (*pm_cmd) {
        auto ps = parse_sequent(pm_sequent);
        ModalOptions opt;
        opt.budget = budget;
        opt.max_instances = max_instances;
        auto r = prove_modal(Sequent{ps.hyps, ps.goal}, *logic, opt);
        json j = {{"verdict", verdict_name(r.verdict)},
                  {"nodes", r.nodes},
                  {"instances_used", to_json(r.instances_used)}};
        emit(as_json, j, verdict_name(r.verdict));
        return verdict_exit(r.verdict);
      }
      auto ps = parse_sequent(cm_sequent);
      auto found = find_countermodel(Sequent{ps.hyps, ps.goal}, max_size);
      if (found) {
        emit(as_json, to_json(*found),
             "countermodel found (size " + std::to_string(found->alg.n) + ")");
        return 0;
      }
      emit(as_json, {{"countermodel", nullptr}},
           "no countermodel up to size " + std::to_string(max_size));
      return 1;
    }

    if (*cons_cmd) {
      auto logic = logic_from_name(cons_logic);
      if (!logic) throw CLI::ValidationError("--logic", "unknown logic " + cons_logic);
      auto set = read_formula_list(cons_file);
      Tri t;
      std::string witness;
      bool additive = std::all_of(set.begin(), set.end(),
                                  [](const F& f) { return is_additive(f); });
      if (additive) {
        auto rep = set_consistent_additive(set, *logic);
        t = rep.consistent;
        witness = rep.witness;
      } else {
        t = is_consistent(set) ? Tri::Yes : Tri::No;
      }
      emit(as_json, {{"consistent", tri_text(t)}, {"witness", witness}}, tri_text(t));
      return t == Tri::Yes ? 0 : 1;
    }

    if (*tr_cmd) {
      if (tr_formula.empty()) {
        auto rest = tr_cmd->remaining();
        if (rest.empty()) throw CLI::ValidationError("translate", "formula required");
        for (const auto& part : rest) tr_formula += part;
      }
      F out = additive_translate(parse_classical(tr_formula));
      emit(as_json, {{"formula", out->repr}}, out->repr);
      return 0;
    }

    if (*agg_cmd) {
      Scenario sc = load_scenario(read_json_file(profile_file));
      if (rule == "two-step") {
        auto rep = run_scenario(sc, sc.readings.front().first);
        std::string text = "outcome:";
        for (const auto& f : rep.result.outcome) text += " " + f->repr + ";";
        emit(as_json, to_json(rep), text + " " + tri_text(rep.outcome_consistent));
        return rep.result.conflict ? 1 : 0;
      }
      auto outcome = rule == "majority-c" ? majority_coalitions(sc.profile) : majority(sc.profile);
      std::string text = "majority:";
      for (const auto& f : outcome) text += " " + f->repr + ";";
      emit(as_json, {{"majority", to_json(outcome)}}, text);
      return 0;
    }

    if (*mc_cmd) {
      Model mo = load_model(read_json_file(model_file));
      auto errs = validate_model(mo);
      if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "model error: " << e << "\n";
        return 2;
      }
      bool ok = holds_in_model(mo, parse_formula(mc_formula));
      emit(as_json, {{"holds", ok}}, ok ? "holds" : "fails");
      return ok ? 0 : 1;
    }

    if (*sc_cmd) {
      Scenario sc = load_scenario(read_json_file(resolve_scenario(sc_name).string()));
      std::vector<std::string> keys;
      if (!reading.empty())
        keys.push_back(reading);
      else
        for (const auto& [k, _] : sc.readings) keys.push_back(k);
      json all = json::array();
      bool pass = true;
      std::string text;
      for (const auto& k : keys) {
        auto rep = run_scenario(sc, k);
        all.push_back(to_json(rep));
        pass = pass && rep.golden_pass;
        text += sc.name + "/" + k + ": " + (rep.golden_pass ? "ok" : "MISMATCH") + " (" +
                tri_text(rep.outcome_consistent) + ")";
        if (!rep.golden_pass) text += "\n" + rep.golden_diff;
        text += "\n";
      }
      emit(as_json, all, text);
      return pass ? 0 : 1;
    }

    if (*vf_cmd) {
      PreservationReport rep;
      if (job == "doctrinal") {
        Agenda a = agenda_file.empty() ? default_doctrinal_agenda() : [&] {
          std::vector<CF> pos;
          for (const auto& s : read_json_file(agenda_file))
            pos.push_back(parse_classical(s.get<std::string>()));
          return close_agenda(pos);
        }();
        if (control) {
          // classical control: count profiles whose plain majority outcome is
          // classically inconsistent
          auto sets = rational_judgment_sets(a, ClassicalLogicId::CL);
          rep.rational_sets = sets.size();
          std::vector<std::size_t> pick(agents, 0);
          auto rec = [&](auto&& self, int i) -> void {
            if (i == agents) {
              ++rep.profiles;
              Profile p;
              p.agenda = a;
              for (int t = 0; t < agents; ++t) p.judgments.push_back(sets[pick[t]]);
              if (classical_consistent(majority(p), ClassicalLogicId::CL) != Tri::Yes)
                ++rep.failures;
              return;
            }
            for (std::size_t s = 0; s < sets.size(); ++s) {
              pick[i] = s;
              self(self, i + 1);
            }
          };
          rec(rec, 0);
        } else {
          rep = check_majority_preservation(a, agents, ModalLogicId::aILLs, false);
        }
      } else {
        Agenda a = belief_agenda(agents);
        std::vector<std::vector<JudgmentSet>> pools;
        for (int i = 1; i <= agents; ++i) {
          Agenda own;
          for (int t = 0; t < 3; ++t) own.issues.push_back(a.issues[(i - 1) * 3 + t]);
          pools.push_back(rational_judgment_sets(own, ClassicalLogicId::BCL));
        }
        rep = check_majority_preservation_profiles(a, pools, ModalLogicId::BILLs, true);
      }
      std::string text = "profiles: " + std::to_string(rep.profiles) +
                         ", failures: " + std::to_string(rep.failures);
      emit(as_json, to_json(rep), text);
      bool ok = control ? rep.failures > 0 : rep.failures == 0;
      return ok ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
