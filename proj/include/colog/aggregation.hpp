// ============================================================================
// colog/aggregation.hpp — judgment aggregation by majority, with a two-step
// premise/conclusion operator over substructural translations
// ============================================================================
//
// An agenda is a set of issues; each issue is a formula paired with its
// rejection.  Individuals submit judgment sets (one pick per issue, or
// abstention where allowed); profiles collect an odd number of them.
//
// Aggregation pipeline:
//   1. majority            — classical agenda, plain majority (>= (n+1)/2).
//   2. additive image      — each winner mapped through the additive
//                            translation (¬ -> ~, ∧ -> &, ∨ -> ⊕).
//   3. coalition majority  — modal formulas are grouped by shape (the
//                            formula with its coalitions blanked out) and
//                            the winning shape is re-indexed at the exact
//                            coalition of its supporters.
//   4. two-step operator   — the majority outcome is combined with a set of
//                            collective constraints (aggregated by majority
//                            over the individually accepted constraints,
//                            unanimity by default) and closed under a
//                            designated set of conclusions: a conclusion is
//                            added when some sub-multiset of the accepted
//                            formulas derives it.
//
// A derived conclusion may consume only part of the accepted set — linear
// hypotheses are resources, and unused ones simply stay unused.
// ============================================================================

#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "colog/classical.hpp"
#include "colog/formula.hpp"
#include "colog/modal.hpp"
#include "colog/prover.hpp"
#include "colog/transform.hpp"

namespace colog {

// --------------------------------------------------------------------------
// Agendas and profiles (classical dialect)
// --------------------------------------------------------------------------

struct Issue {
  CF accepted;
  CF rejected;
};

struct Agenda {
  std::vector<Issue> issues;

  std::vector<CF> all_formulas() const {
    std::vector<CF> out;
    for (const auto& is : issues) {
      out.push_back(is.accepted);
      out.push_back(is.rejected);
    }
    return out;
  }

  std::optional<std::size_t> issue_of(const CF& f) const {
    for (std::size_t i = 0; i < issues.size(); ++i)
      if (ceq(f, issues[i].accepted) || ceq(f, issues[i].rejected)) return i;
    return std::nullopt;
  }
};

// Default agenda closure: pair each formula with its outer negation.
inline Agenda close_agenda(const std::vector<CF>& formulas) {
  Agenda a;
  std::set<std::string, std::less<>> seen;
  for (const auto& f : formulas) {
    CF pos = f;
    CF neg = complement(f);
    if (seen.count(pos->repr) || seen.count(neg->repr)) continue;
    seen.insert(pos->repr);
    seen.insert(neg->repr);
    a.issues.push_back({pos, neg});
  }
  return a;
}

using JudgmentSet = std::vector<CF>;

struct Profile {
  Agenda agenda;
  std::vector<JudgmentSet> judgments;

  int n() const { return static_cast<int>(judgments.size()); }

  void validate() const {
    if (judgments.size() < 3 || judgments.size() % 2 == 0)
      throw std::invalid_argument("profile needs an odd number (>= 3) of judgment sets");
    for (const auto& j : judgments)
      for (const auto& f : j)
        if (!agenda.issue_of(f))
          throw std::invalid_argument("judgment outside the agenda: " + f->repr);
  }
};

// --------------------------------------------------------------------------
// Plain majority
// --------------------------------------------------------------------------

inline std::vector<int> supporters(const Profile& p, const CF& f) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); ++i)
    for (const auto& g : p.judgments[i])
      if (ceq(f, g)) {
        out.push_back(i + 1);  // individuals are 1-based
        break;
      }
  return out;
}

inline int majority_threshold(int n) { return (n + 1) / 2; }

inline std::vector<CF> majority(const Profile& p) {
  std::vector<CF> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& f : p.agenda.all_formulas()) {
    if (seen.count(f->repr)) continue;
    seen.insert(f->repr);
    if (static_cast<int>(supporters(p, f).size()) >= majority_threshold(p.n()))
      out.push_back(f);
  }
  return out;
}

inline std::vector<F> additive_image(const std::vector<CF>& fs) {
  std::vector<F> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(additive_translate(f));
  return out;
}

// --------------------------------------------------------------------------
// Coalition majority: modal winners are re-indexed at the coalition of
// their exact supporter set
// --------------------------------------------------------------------------

namespace detail {

// Canonical shape of a classical formula: every coalition blanked out.
inline std::string shape_of(const CF& f) {
  std::string s;
  auto rec = [&](auto&& self, const CF& g) -> void {
    switch (g->k) {
      case CConn::Atom: s += g->atom; break;
      case CConn::Neg: s += "-("; self(self, g->a); s += ")"; break;
      case CConn::And: s += "("; self(self, g->a); s += "/\\"; self(self, g->b); s += ")"; break;
      case CConn::Or: s += "("; self(self, g->a); s += "\\/"; self(self, g->b); s += ")"; break;
      case CConn::Imp: s += "("; self(self, g->a); s += "->"; self(self, g->b); s += ")"; break;
      case CConn::Modal:
        s += mod_letter(g->mod);
        s += "{_}(";
        self(self, g->a);
        s += ")";
        break;
    }
  };
  rec(rec, f);
  return s;
}

inline bool mentions_modal(const CF& f) {
  if (f->k == CConn::Modal) return true;
  if (f->a && mentions_modal(f->a)) return true;
  return f->b && mentions_modal(f->b);
}

}  // namespace detail

// Majority with coalition formation.  Non-modal formulas aggregate plainly;
// for modal formulas, supporters of the same shape elect the shape and the
// result carries the coalition of exactly those supporters.
inline std::vector<CF> majority_coalitions(const Profile& p) {
  std::vector<CF> out;
  std::set<std::string, std::less<>> done;
  for (const auto& f : p.agenda.all_formulas()) {
    if (!detail::mentions_modal(f)) {
      if (done.count(f->repr)) continue;
      done.insert(f->repr);
      if (static_cast<int>(supporters(p, f).size()) >= majority_threshold(p.n()))
        out.push_back(f);
      continue;
    }
    std::string shape = detail::shape_of(f);
    if (done.count(shape)) continue;
    done.insert(shape);
    std::set<int> supp;
    for (const auto& g : p.agenda.all_formulas())
      if (detail::shape_of(g) == shape)
        for (int i : supporters(p, g)) supp.insert(i);
    if (static_cast<int>(supp.size()) < majority_threshold(p.n())) continue;
    Coalition c = Coalition::of_agents(std::vector<int>(supp.begin(), supp.end()));
    out.push_back(collapse_coalitions(f, c));
  }
  return out;
}

// --------------------------------------------------------------------------
// Derivation from an accepted pool: some sub-multiset proves the goal
// --------------------------------------------------------------------------

inline bool submultiset_derives(const std::vector<F>& pool, const F& goal,
                                ModalLogicId logic, const ModalOptions& opt = {}) {
  std::size_t n = pool.size();
  if (n > 20) throw std::invalid_argument("accepted pool too large");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t m : masks) {
    std::vector<F> hyps;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) hyps.push_back(pool[i]);
    if (prove_modal(Sequent{hyps, goal}, logic, opt).verdict == Verdict::Derivable)
      return true;
  }
  return false;
}

inline std::vector<F> deductive_closure(const std::vector<F>& accepted,
                                        const std::vector<F>& candidates,
                                        ModalLogicId logic, const ModalOptions& opt = {}) {
  std::vector<F> out = accepted;
  auto contains = [&](const F& f) {
    return std::any_of(out.begin(), out.end(), [&](const F& g) { return eq(f, g); });
  };
  for (const auto& c : candidates)
    if (!contains(c) && submultiset_derives(out, c, logic, opt)) out.push_back(c);
  return out;
}

// --------------------------------------------------------------------------
// Two-step operator: majority + collective constraints + conclusions
// --------------------------------------------------------------------------

struct TwoStepSpec {
  std::vector<F> constraints;   // candidate collective constraints
  std::vector<F> conclusions;   // designated conclusions, derived if possible
  // per-individual accepted constraints; empty means unanimous acceptance
  std::vector<std::vector<F>> accepted_constraints;
  bool use_coalitions = false;  // aggregate modal formulas into coalitions
  ModalLogicId logic = ModalLogicId::ILLs;
};

struct TwoStepResult {
  std::vector<CF> majority_outcome;  // step 1 (classical dialect)
  std::vector<F> accepted;           // additive image + accepted constraints
  std::vector<F> outcome;            // accepted + derived conclusions
  std::vector<F> derived;            // the conclusions actually added
  bool conflict = false;             // outcome contains complementary attitudes
  std::string conflict_witness;
  std::vector<std::string> warnings;
};

inline std::vector<F> majority_constraints(const TwoStepSpec& spec, int n) {
  if (spec.accepted_constraints.empty()) return spec.constraints;  // unanimity
  if (static_cast<int>(spec.accepted_constraints.size()) != n)
    throw std::invalid_argument("one accepted-constraint set per individual required");
  std::vector<F> out;
  for (const auto& s : spec.constraints) {
    int count = 0;
    for (const auto& acc : spec.accepted_constraints)
      for (const auto& f : acc)
        if (eq(f, s)) {
          ++count;
          break;
        }
    if (count >= majority_threshold(n)) out.push_back(s);
  }
  return out;
}

// Two attitudes clash when, read at a single common agent and under a shared
// stack of modalities, their contents are strong-negation complements (e.g.
// obligations to bring about r and to bring about ~r).
inline bool attitude_conflict(const std::vector<F>& outcome, std::string& witness) {
  Coalition h = fresh_collapse_coalition();
  std::vector<F> collapsed;
  for (const auto& f : outcome) collapsed.push_back(to_nnf(collapse_coalitions(f, h)));
  auto clash = [](F x, F y) {
    while (x->k == Conn::Modal && y->k == Conn::Modal && x->mod == y->mod &&
           x->coal == y->coal) {
      x = x->a;
      y = y->a;
    }
    return eq(x, to_nnf(sneg(y)));
  };
  for (std::size_t i = 0; i < collapsed.size(); ++i)
    for (std::size_t j = i + 1; j < collapsed.size(); ++j) {
      if (clash(collapsed[i], collapsed[j])) {
        witness = outcome[i]->repr + "  //  " + outcome[j]->repr;
        return true;
      }
    }
  return false;
}

inline TwoStepResult two_step(const Profile& p, const TwoStepSpec& spec,
                              const ModalOptions& opt = {}) {
  p.validate();
  TwoStepResult r;
  r.majority_outcome = spec.use_coalitions ? majority_coalitions(p) : majority(p);
  r.accepted = additive_image(r.majority_outcome);

  // constraints and conclusions must come from outside the agenda
  std::vector<F> agenda_image = additive_image(p.agenda.all_formulas());
  auto in_agenda = [&](const F& f) {
    return std::any_of(agenda_image.begin(), agenda_image.end(),
                       [&](const F& a) { return eq(f, a); });
  };
  for (const auto& s : spec.constraints)
    if (in_agenda(s)) throw std::invalid_argument("constraint overlaps the agenda: " + s->repr);
  for (const auto& d : spec.conclusions)
    if (in_agenda(d)) throw std::invalid_argument("conclusion overlaps the agenda: " + d->repr);

  // the consistency guarantee needs small minimal inconsistencies in
  // agenda + constraints; warn when that fails (modal formulas are opaque
  // to this check and skipped)
  if (!spec.use_coalitions) {
    std::vector<F> guard = agenda_image;
    for (const auto& s : spec.constraints) guard.push_back(s);
    bool plain = std::all_of(guard.begin(), guard.end(), [](const F& f) {
      std::set<std::string> atoms;
      collect_atoms(f, atoms);
      return f->repr.find('{') == std::string::npos && !atoms.empty();
    });
    if (plain && guard.size() <= 10 && !has_median_property(guard))
      r.warnings.push_back("agenda plus constraints has a minimal inconsistent subset larger than 2");
  }

  std::vector<F> cons = majority_constraints(spec, p.n());
  for (const auto& s : cons) r.accepted.push_back(s);

  // one axiom instance per closure step suffices: derived conclusions join
  // the pool, so longer chains are reached one candidate at a time
  ModalOptions closure_opt = opt;
  closure_opt.max_instances = std::min(opt.max_instances, 1);
  r.outcome = deductive_closure(r.accepted, spec.conclusions, spec.logic, closure_opt);
  for (std::size_t i = r.accepted.size(); i < r.outcome.size(); ++i)
    r.derived.push_back(r.outcome[i]);

  r.conflict = attitude_conflict(r.outcome, r.conflict_witness);
  return r;
}

// --------------------------------------------------------------------------
// Rational judgment set enumeration (for exhaustive preservation checks)
// --------------------------------------------------------------------------

// All judgment sets over the agenda that pick at most one side per issue and
// are consistent in the given classical logic.  `complete` additionally
// requires one pick per issue.
inline std::vector<JudgmentSet> rational_judgment_sets(const Agenda& agenda,
                                                       ClassicalLogicId logic,
                                                       bool complete = true) {
  std::size_t k = agenda.issues.size();
  if (k > 16) throw std::invalid_argument("agenda too large for enumeration");
  std::vector<JudgmentSet> out;
  std::vector<int> pick(k, 0);  // 0 = abstain, 1 = accepted, 2 = rejected
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      JudgmentSet j;
      for (std::size_t t = 0; t < k; ++t) {
        if (pick[t] == 1) j.push_back(agenda.issues[t].accepted);
        if (pick[t] == 2) j.push_back(agenda.issues[t].rejected);
      }
      if (classical_consistent(j, logic) == Tri::Yes) out.push_back(std::move(j));
      return;
    }
    for (int v = complete ? 1 : 0; v <= 2; ++v) {
      pick[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace colog
