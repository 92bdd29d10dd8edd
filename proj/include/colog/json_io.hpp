// ============================================================================
// colog/json_io.hpp — JSON encodings for formulas, proofs, models, profiles
// ============================================================================

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "colog/aggregation.hpp"
#include "colog/formula.hpp"
#include "colog/parser.hpp"
#include "colog/prover.hpp"
#include "colog/semantics.hpp"

namespace colog {

using json = nlohmann::json;

inline json to_json(const F& f) { return f->repr; }
inline json to_json(const CF& f) { return f->repr; }

inline json to_json(const std::vector<F>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f->repr);
  return a;
}

inline json to_json(const std::vector<CF>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f->repr);
  return a;
}

inline json to_json(const Sequent& s) {
  return {{"hypotheses", to_json(s.hyps)}, {"goal", s.goal->repr}, {"text", s.str()}};
}

inline json to_json(const ProofNode& p) {
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(to_json(q));
  return {{"rule", p.rule}, {"sequent", p.sequent}, {"premises", premises}};
}

inline json to_json(const Coalition& c) { return c.str(); }

inline json to_json(const ResourceAlgebra& alg) {
  json meet = json::array(), prod = json::array();
  for (int i = 0; i < alg.n; ++i) {
    json mrow = json::array(), prow = json::array();
    for (int j = 0; j < alg.n; ++j) {
      mrow.push_back(alg.mt(i, j));
      prow.push_back(alg.pr(i, j));
    }
    meet.push_back(mrow);
    prod.push_back(prow);
  }
  return {{"size", alg.n}, {"identity", alg.e}, {"greatest", alg.omega},
          {"meet", meet}, {"product", prod}};
}

inline json to_json(const Model& m) {
  json j;
  j["algebra"] = to_json(m.alg);
  json vp = json::object(), vn = json::object();
  for (const auto& [a, mask] : m.vpos) vp[a] = mask;
  for (const auto& [a, mask] : m.vneg) vn[a] = mask;
  j["valuation_pos"] = vp;
  j["valuation_neg"] = vn;
  auto fam = [&](const std::map<NKey, NFamily>& fs) {
    json out = json::array();
    for (const auto& [key, nf] : fs) {
      json at = json::array();
      for (Mask x : nf.at) at.push_back(x);
      out.push_back({{"family", std::string(1, key.fam)},
                     {"coalition", key.coal.str()},
                     {"at", at}});
    }
    return out;
  };
  j["neighborhoods_pos"] = fam(m.npos);
  j["neighborhoods_neg"] = fam(m.nneg);
  return j;
}

inline json to_json(const Profile& p) {
  json issues = json::array();
  for (const auto& is : p.agenda.issues)
    issues.push_back({is.accepted->repr, is.rejected->repr});
  json js = json::array();
  for (const auto& j : p.judgments) js.push_back(to_json(j));
  return {{"agenda", issues}, {"judgments", js}};
}

inline json to_json(const TwoStepResult& r) {
  return {{"majority", to_json(r.majority_outcome)},
          {"accepted", to_json(r.accepted)},
          {"outcome", to_json(r.outcome)},
          {"derived", to_json(r.derived)},
          {"conflict", r.conflict},
          {"conflict_witness", r.conflict_witness},
          {"warnings", r.warnings}};
}

// --------------------------------------------------------------------------
// Model files: named carrier elements, meet/product tables as nested label
// arrays, valuations as label sets, neighborhoods as per-world subset lists
// --------------------------------------------------------------------------

inline Model load_model(const json& j) {
  std::vector<std::string> carrier = j.at("carrier").get<std::vector<std::string>>();
  int n = static_cast<int>(carrier.size());
  auto idx = [&](const std::string& label) {
    for (int i = 0; i < n; ++i)
      if (carrier[i] == label) return i;
    throw std::invalid_argument("unknown carrier element: " + label);
  };
  Model mo;
  mo.alg.n = n;
  mo.alg.e = idx(j.at("identity").get<std::string>());
  mo.alg.omega = idx(j.at("greatest").get<std::string>());
  auto table = [&](const char* key) {
    std::vector<int> t(n * n);
    const json& rows = j.at(key);
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("bad table size");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t[r * n + c] = idx(rows[r][c].get<std::string>());
    return t;
  };
  mo.alg.meet = table("meet");
  mo.alg.prod = table("product");

  auto mask_of = [&](const json& labels) {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask(1) << idx(l.get<std::string>());
    return m;
  };
  const json vpos = j.value("valuation_pos", json::object());
  const json vneg = j.value("valuation_neg", json::object());
  for (const auto& [atom_name, labels] : vpos.items())
    mo.vpos[atom_name] = mask_of(labels);
  for (const auto& [atom_name, labels] : vneg.items())
    mo.vneg[atom_name] = mask_of(labels);

  auto load_fams = [&](const char* key, std::map<NKey, NFamily>& out) {
    const json fams = j.value(key, json::array());
    for (const auto& fam : fams) {
      NKey k;
      k.fam = fam.at("family").get<std::string>().at(0);
      k.coal = parse_coalition_text(fam.at("coalition").get<std::string>());
      NFamily nf;
      nf.at.assign(n, 0);
      for (const auto& [world, subsets] : fam.at("at").items()) {
        int w = idx(world);
        for (const auto& sub : subsets) nf.at[w] |= Mask(1) << mask_of(sub);
      }
      out[k] = nf;
    }
  };
  load_fams("neighborhoods_pos", mo.npos);
  load_fams("neighborhoods_neg", mo.nneg);
  return mo;
}

// --------------------------------------------------------------------------
// Scenario files
// --------------------------------------------------------------------------

// A reading of a scenario: one choice of constraints (sigma) and designated
// conclusions (delta), optionally with a golden expected outcome.
struct Reading {
  TwoStepSpec spec;
  std::optional<std::vector<std::size_t>> issue_subset;  // agenda restriction
  std::vector<std::string> expected_outcome;  // canonical reprs, sorted; empty = none
  std::optional<bool> expect_conflict;
  std::optional<bool> expect_consistent;
};

struct Scenario {
  std::string name;
  ModalLogicId logic = ModalLogicId::ILLs;
  Profile profile;
  std::vector<std::pair<std::string, Reading>> readings;  // insertion order

  const Reading& reading(const std::string& key) const {
    for (const auto& [k, r] : readings)
      if (k == key) return r;
    throw std::invalid_argument("no such reading: " + key);
  }
};

namespace detail {

inline TwoStepSpec load_spec(const json& j, ModalLogicId logic, bool use_coalitions,
                             const std::vector<std::string>& agent_keys) {
  TwoStepSpec spec;
  spec.logic = logic;
  spec.use_coalitions = use_coalitions;
  for (const auto& s : j.value("sigma", json::array()))
    spec.constraints.push_back(parse_formula(s.get<std::string>()));
  for (const auto& s : j.value("delta", json::array()))
    spec.conclusions.push_back(parse_formula(s.get<std::string>()));
  if (j.contains("sigma_votes")) {
    for (const auto& k : agent_keys) {
      std::vector<F> one;
      for (const auto& s : j["sigma_votes"].value(k, json::array()))
        one.push_back(parse_formula(s.get<std::string>()));
      spec.accepted_constraints.push_back(std::move(one));
    }
  }
  return spec;
}

}  // namespace detail

// Profile/scenario files: {agents, dialect, agenda | agenda_pairs,
// judgments: {agent: [...]}, sigma, delta, sigma_votes} with optional named
// "readings" overriding sigma/delta per run.
inline Scenario load_scenario(const json& j) {
  Scenario sc;
  sc.name = j.value("name", "unnamed");
  if (j.contains("logic")) {
    auto l = logic_from_name(j["logic"].get<std::string>());
    if (!l) throw std::invalid_argument("unknown logic: " + j["logic"].get<std::string>());
    sc.logic = *l;
  }
  bool use_coalitions = j.value("use_coalitions", false);

  if (j.contains("agenda_pairs")) {
    for (const auto& pr : j["agenda_pairs"])
      sc.profile.agenda.issues.push_back(
          {parse_classical(pr[0].get<std::string>()), parse_classical(pr[1].get<std::string>())});
  } else {
    std::vector<CF> pos;
    for (const auto& s : j.at("agenda")) pos.push_back(parse_classical(s.get<std::string>()));
    sc.profile.agenda = close_agenda(pos);
  }

  int agents = j.value("agents", 0);
  std::vector<std::string> agent_keys;
  const json& js = j.at("judgments");
  if (agents == 0) agents = static_cast<int>(js.size());
  for (int i = 1; i <= agents; ++i) agent_keys.push_back(std::to_string(i));
  for (const auto& k : agent_keys) {
    JudgmentSet set;
    for (const auto& s : js.at(k)) set.push_back(parse_classical(s.get<std::string>()));
    sc.profile.judgments.push_back(std::move(set));
  }

  if (j.contains("readings")) {
    for (const auto& [key, body] : j["readings"].items()) {
      Reading r;
      r.spec = detail::load_spec(body, sc.logic, use_coalitions, agent_keys);
      if (body.contains("issues"))
        r.issue_subset = body["issues"].get<std::vector<std::size_t>>();
      for (const auto& s : body.value("expected_outcome", json::array()))
        r.expected_outcome.push_back(parse_formula(s.get<std::string>())->repr);
      std::sort(r.expected_outcome.begin(), r.expected_outcome.end());
      if (body.contains("expect_conflict")) r.expect_conflict = body["expect_conflict"].get<bool>();
      if (body.contains("expect_consistent"))
        r.expect_consistent = body["expect_consistent"].get<bool>();
      sc.readings.emplace_back(key, std::move(r));
    }
  } else {
    Reading r;
    r.spec = detail::load_spec(j, sc.logic, use_coalitions, agent_keys);
    sc.readings.emplace_back("default", std::move(r));
  }
  return sc;
}

struct ScenarioReport {
  std::string name;
  std::string reading;
  ModalLogicId logic = ModalLogicId::ILLs;
  TwoStepResult result;
  Tri outcome_consistent = Tri::Unknown;  // additive fragment only
  bool golden_checked = false;
  bool golden_pass = true;
  std::string golden_diff;
};

inline ScenarioReport run_scenario(const Scenario& sc, const std::string& reading_key,
                                   const ModalOptions& opt = {}) {
  const Reading& rd = sc.reading(reading_key);
  ScenarioReport rep;
  rep.name = sc.name;
  rep.reading = reading_key;
  rep.logic = sc.logic;
  Profile prof = sc.profile;
  if (rd.issue_subset) {
    Profile sub;
    for (std::size_t i : *rd.issue_subset) sub.agenda.issues.push_back(prof.agenda.issues.at(i));
    for (const auto& jset : prof.judgments) {
      JudgmentSet filtered;
      for (const auto& f : jset)
        if (sub.agenda.issue_of(f)) filtered.push_back(f);
      sub.judgments.push_back(std::move(filtered));
    }
    prof = std::move(sub);
  }
  rep.result = two_step(prof, rd.spec, opt);
  bool additive = std::all_of(rep.result.outcome.begin(), rep.result.outcome.end(),
                              [](const F& f) { return is_additive(f); });
  if (additive)
    rep.outcome_consistent = set_consistent_additive(rep.result.outcome, sc.logic, opt).consistent;

  if (!rd.expected_outcome.empty()) {
    rep.golden_checked = true;
    std::vector<std::string> got;
    for (const auto& f : rep.result.outcome) got.push_back(f->repr);
    std::sort(got.begin(), got.end());
    if (got != rd.expected_outcome) {
      rep.golden_pass = false;
      for (const auto& s : rd.expected_outcome)
        if (std::find(got.begin(), got.end(), s) == got.end())
          rep.golden_diff += "missing: " + s + "\n";
      for (const auto& s : got)
        if (std::find(rd.expected_outcome.begin(), rd.expected_outcome.end(), s) ==
            rd.expected_outcome.end())
          rep.golden_diff += "extra: " + s + "\n";
    }
  }
  if (rd.expect_conflict) {
    rep.golden_checked = true;
    if (rep.result.conflict != *rd.expect_conflict) {
      rep.golden_pass = false;
      rep.golden_diff += std::string("conflict flag: expected ") +
                         (*rd.expect_conflict ? "true" : "false") + "\n";
    }
  }
  if (rd.expect_consistent) {
    rep.golden_checked = true;
    Tri want = *rd.expect_consistent ? Tri::Yes : Tri::No;
    if (rep.outcome_consistent != want) {
      rep.golden_pass = false;
      rep.golden_diff += "consistency verdict mismatch\n";
    }
  }
  return rep;
}

inline json to_json(const ScenarioReport& rep) {
  json j = to_json(rep.result);
  j["name"] = rep.name;
  j["reading"] = rep.reading;
  j["logic"] = logic_name(rep.logic);
  j["outcome_consistent"] =
      rep.outcome_consistent == Tri::Yes ? "yes"
      : rep.outcome_consistent == Tri::No ? "no" : "unknown";
  if (rep.golden_checked) {
    j["golden_pass"] = rep.golden_pass;
    if (!rep.golden_pass) j["golden_diff"] = rep.golden_diff;
  }
  return j;
}

// --------------------------------------------------------------------------
// Exhaustive majority-preservation checks
// --------------------------------------------------------------------------

struct PreservationReport {
  std::size_t rational_sets = 0;
  std::size_t profiles = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Every profile of `n` rational judgment sets over the agenda has a majority
// outcome whose additive image is consistent.  When `use_coalitions` is set,
// the coalition-forming majority is used and consistency is checked in the
// given modal logic.
inline PreservationReport check_majority_preservation(const Agenda& agenda, int n,
                                                      ModalLogicId logic,
                                                      bool use_coalitions,
                                                      const ModalOptions& opt = {}) {
  PreservationReport rep;
  auto sets = rational_judgment_sets(agenda, classical_counterpart(logic));
  rep.rational_sets = sets.size();
  std::vector<std::size_t> pick(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++rep.profiles;
      Profile p;
      p.agenda = agenda;
      for (int t = 0; t < n; ++t) p.judgments.push_back(sets[pick[t]]);
      auto outcome = additive_image(use_coalitions ? majority_coalitions(p) : majority(p));
      if (set_consistent_additive(outcome, logic, opt).consistent != Tri::Yes) {
        ++rep.failures;
        if (rep.first_failure.empty()) {
          for (const auto& f : outcome) rep.first_failure += f->repr + "; ";
        }
      }
      return;
    }
    for (std::size_t s = 0; s < sets.size(); ++s) {
      pick[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return rep;
}

// Variant where each individual draws from their own pool of rational
// judgment sets (e.g. agent-indexed belief agendas).  The shared agenda must
// contain every individual's issues.
inline PreservationReport check_majority_preservation_profiles(
    const Agenda& agenda, const std::vector<std::vector<JudgmentSet>>& per_individual,
    ModalLogicId logic, bool use_coalitions, const ModalOptions& opt = {}) {
  PreservationReport rep;
  int n = static_cast<int>(per_individual.size());
  for (const auto& pool : per_individual) rep.rational_sets += pool.size();
  std::vector<std::size_t> pick(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++rep.profiles;
      Profile p;
      p.agenda = agenda;
      for (int t = 0; t < n; ++t) p.judgments.push_back(per_individual[t][pick[t]]);
      auto outcome = additive_image(use_coalitions ? majority_coalitions(p) : majority(p));
      if (set_consistent_additive(outcome, logic, opt).consistent != Tri::Yes) {
        ++rep.failures;
        if (rep.first_failure.empty())
          for (const auto& f : outcome) rep.first_failure += f->repr + "; ";
      }
      return;
    }
    for (std::size_t s = 0; s < per_individual[i].size(); ++s) {
      pick[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return rep;
}

inline json to_json(const PreservationReport& rep) {
  return {{"rational_sets", rep.rational_sets},
          {"profiles", rep.profiles},
          {"failures", rep.failures},
          {"first_failure", rep.first_failure}};
}

}  // namespace colog
