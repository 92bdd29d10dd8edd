// ============================================================================
// colog/modal.hpp — modal extensions of the substructural prover
// ============================================================================
//
// The modal Hilbert systems extend the base logic with coalition-indexed
// non-normal modalities:
//
//   E (agency)     : E1  E_C a -o a
//                    E2  E_C a & E_C b -o E_C (a & b)
//                    E3  E_C a * E_D b -o E_{C|D} (a * b)
//                    rules E(re) and, from |- a, |- ~E_C a
//   B (belief)     : B1  ~B_C bot
//                    B2  B_C a & B_C b -o B_C (a & b)
//                    B3  B_C a * B_D b -o B_{C|D} (a * b)
//                    B4  B_C a -o B_C B_C a
//                    B5  B_C (a & b) -o B_C a
//                    rule B(re)
//   O (obligation) : O1  ~O_C bot
//                    O2/O3 as above
//                    O4  ~O_C a -o P_C ~a      O5  ~P_C a -o O_C ~a
//                    O6  O_C a -o P_C a
//                    rule O(re); the duality O_C a -||- ~P_C ~a is taken
//                    from the semantics (O4-O6 alone do not chain into it)
//
// The fusion takes all three schedules side by side with no interaction
// axioms.  The corporate agent G composes with everything to G and its
// additive combination (E2/B2/O2 at G) is switched off, so corporate
// attitudes only combine multiplicatively.
//
// prove_modal instantiates the axiom schemas over the subformula closure of
// the query (contents one * or & layer deep, coalitions one | layer deep),
// inserts up to `max_instances` of them as extra hypotheses, and runs the
// base sequent search.  This is sound; NotDerivable means the bounded search
// was exhausted, and Unknown that the node budget ran out.
//
// Additive-fragment consistency for modal judgment sets works at the level
// the aggregation theorems use: a set is inconsistent when bot is derivable
// from it in the additive fragment, or when some member is the strong
// negation of a theorem (~B_C bot, ~O_C bot, ~E_C a for provable a) — the
// attitude is then provably falsified.  Pairs are first screened through the
// classical collapse: map both members to the classical dialect over a
// single fresh agent; classical consistency certifies substructural
// consistency for additive formulas, since every additive axiom erases to a
// classical tautology.
// ============================================================================

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colog/classical.hpp"
#include "colog/formula.hpp"
#include "colog/prover.hpp"
#include "colog/transform.hpp"

namespace colog {

enum class ModalLogicId { ILLs, aILLs, AILLs, BILLs, OILLs, UILLs };

inline const char* logic_name(ModalLogicId l) {
  switch (l) {
    case ModalLogicId::ILLs: return "ILLs";
    case ModalLogicId::aILLs: return "aILLs";
    case ModalLogicId::AILLs: return "AILLs";
    case ModalLogicId::BILLs: return "BILLs";
    case ModalLogicId::OILLs: return "OILLs";
    case ModalLogicId::UILLs: return "UILLs";
  }
  return "?";
}

inline std::optional<ModalLogicId> logic_from_name(const std::string& s) {
  for (ModalLogicId l : {ModalLogicId::ILLs, ModalLogicId::aILLs, ModalLogicId::AILLs,
                         ModalLogicId::BILLs, ModalLogicId::OILLs, ModalLogicId::UILLs})
    if (s == logic_name(l)) return l;
  return std::nullopt;
}

inline ClassicalLogicId classical_counterpart(ModalLogicId l) {
  switch (l) {
    case ModalLogicId::ILLs:
    case ModalLogicId::aILLs: return ClassicalLogicId::CL;
    case ModalLogicId::AILLs: return ClassicalLogicId::ACL;
    case ModalLogicId::BILLs: return ClassicalLogicId::BCL;
    case ModalLogicId::OILLs: return ClassicalLogicId::OCL;
    case ModalLogicId::UILLs: return ClassicalLogicId::UCL;
  }
  return ClassicalLogicId::CL;
}

inline bool modality_in_logic(Mod m, ModalLogicId l) {
  switch (l) {
    case ModalLogicId::ILLs:
    case ModalLogicId::aILLs: return false;
    case ModalLogicId::AILLs: return m == Mod::E;
    case ModalLogicId::BILLs: return m == Mod::B;
    case ModalLogicId::OILLs: return m == Mod::O || m == Mod::P;
    case ModalLogicId::UILLs: return true;
  }
  return false;
}

// coalition composition: G absorbs, otherwise disjoint union
inline Coalition compose(const Coalition& c, const Coalition& d) {
  if (c.is_corporate() || d.is_corporate()) return Coalition::corporate();
  return disjoint_union(c, d);
}

namespace detail {

inline void collect_modal_subformulas(const F& f, std::vector<F>& out,
                                      std::set<std::string>& seen) {
  if (f->k == Conn::Modal && seen.insert(f->repr).second) out.push_back(f);
  if (f->a) collect_modal_subformulas(f->a, out, seen);
  if (f->b) collect_modal_subformulas(f->b, out, seen);
}

inline bool interderivable(const F& x, const F& y, std::uint64_t budget) {
  if (eq(x, y)) return true;
  return prove({x}, y, FragmentId::ILLs, budget).verdict == Verdict::Derivable &&
         prove({y}, x, FragmentId::ILLs, budget).verdict == Verdict::Derivable;
}

}  // namespace detail

struct ModalOptions {
  std::uint64_t budget = kDefaultBudget;
  int max_instances = 2;       // axiom instances inserted per attempt
  std::uint64_t re_budget = 20'000;  // budget for interderivability probes
};

// Axiom instances drawn from the query's subformula closure.
inline std::vector<F> modal_axiom_instances(const std::vector<F>& hyps, const F& goal,
                                            ModalLogicId logic,
                                            const ModalOptions& opt = {}) {
  std::vector<F> modal_subs;
  std::set<std::string> seen;
  for (const auto& h : hyps) detail::collect_modal_subformulas(h, modal_subs, seen);
  detail::collect_modal_subformulas(goal, modal_subs, seen);

  std::vector<Coalition> coals;
  for (const auto& m : modal_subs)
    if (std::find(coals.begin(), coals.end(), m->coal) == coals.end())
      coals.push_back(m->coal);

  std::vector<F> out;
  std::set<std::string> emitted;
  auto emit = [&](F inst) {
    if (emitted.insert(inst->repr).second) out.push_back(std::move(inst));
  };

  auto fam_of = [](Mod m) { return m == Mod::P ? Mod::O : m; };

  for (const auto& mf : modal_subs) {
    Mod m = mf->mod;
    if (!modality_in_logic(m, logic)) continue;
    const Coalition& c = mf->coal;
    const F& body = mf->a;

    if (m == Mod::E) {
      emit(lolli(mf, body));  // E1
      if (prove({}, body, FragmentId::ILLs, opt.re_budget).verdict == Verdict::Derivable)
        for (const auto& coal : coals) emit(sneg(modal(Mod::E, coal, body)));  // ~nec
    }
    if (m == Mod::B) {
      emit(lolli(mf, modal(Mod::B, c, mf)));  // B4
      if (body->k == Conn::With) {            // B5, both conjuncts via (re)
        emit(lolli(mf, modal(Mod::B, c, body->a)));
        emit(lolli(mf, modal(Mod::B, c, body->b)));
      }
    }
    if (m == Mod::O) {
      F nbody = to_nnf(sneg(body));
      emit(lolli(sneg(mf), modal(Mod::P, c, nbody)));             // O4
      emit(lolli(mf, modal(Mod::P, c, body)));                    // O6
      emit(lolli(mf, sneg(modal(Mod::P, c, nbody))));             // duality
      emit(lolli(sneg(modal(Mod::P, c, nbody)), F(mf)));          // duality
    }
    if (m == Mod::P) {
      F nbody = to_nnf(sneg(body));
      emit(lolli(sneg(mf), modal(Mod::O, c, nbody)));             // O5
      emit(lolli(modal(Mod::O, c, nbody), sneg(F(mf))));          // duality
      emit(lolli(sneg(F(mf)), modal(Mod::O, c, nbody)));          // duality
      emit(lolli(F(mf), sneg(modal(Mod::O, c, nbody))));          // duality
      emit(lolli(sneg(modal(Mod::O, c, nbody)), F(mf)));          // duality
    }
  }

  // falsified-bot attitudes, for every coalition in sight
  for (const auto& coal : coals) {
    if (modality_in_logic(Mod::B, logic)) emit(sneg(modal(Mod::B, coal, bot())));  // B1
    if (modality_in_logic(Mod::O, logic)) emit(sneg(modal(Mod::O, coal, bot())));  // O1
  }

  // combination axioms over pairs of modal subformulas
  for (const auto& x : modal_subs) {
    if (!modality_in_logic(x->mod, logic) || x->mod == Mod::P) continue;
    for (const auto& y : modal_subs) {
      if (y->mod != x->mod) continue;
      Mod fam = fam_of(x->mod);
      if (x->coal == y->coal && !x->coal.is_corporate())  // E2/B2/O2
        emit(lolli(with(F(x), F(y)), modal(fam, x->coal, with(x->a, y->a))));
      Coalition cd = compose(x->coal, y->coal);           // E3/B3/O3
      emit(lolli(tensor(F(x), F(y)), modal(fam, cd, tensor(x->a, y->a))));
    }
  }

  // congruence: interderivable contents exchange under the same modality
  for (const auto& x : modal_subs) {
    if (!modality_in_logic(x->mod, logic)) continue;
    for (const auto& y : modal_subs) {
      if (y->mod != x->mod || !(y->coal == x->coal) || eq(x->a, y->a)) continue;
      if (detail::interderivable(x->a, y->a, opt.re_budget))
        emit(lolli(F(x), F(y)));
    }
  }

  return out;
}

struct ModalProveResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<ProofNode> proof;
  std::vector<F> instances_used;
  std::uint64_t nodes = 0;
};

inline ModalProveResult prove_modal(const Sequent& s, ModalLogicId logic,
                                    const ModalOptions& opt = {}) {
  if (logic == ModalLogicId::ILLs || logic == ModalLogicId::aILLs) {
    auto base = prove(s, logic == ModalLogicId::aILLs ? FragmentId::aILLs : FragmentId::ILLs,
                      opt.budget);
    return {base.verdict, base.proof, {}, base.nodes};
  }

  std::vector<F> hyps;
  for (const auto& h : s.hyps) hyps.push_back(to_nnf(h));
  F goal = to_nnf(s.goal);
  std::vector<F> instances = modal_axiom_instances(hyps, goal, logic, opt);

  ModalProveResult r;
  bool clipped = false;

  // ascending number of inserted instances; combinations without repetition
  std::vector<std::size_t> idx;
  auto attempt = [&](const std::vector<std::size_t>& picks) -> bool {
    std::vector<F> ext = hyps;
    for (auto i : picks) ext.push_back(instances[i]);
    auto res = prove(Sequent{ext, goal}, FragmentId::ILLs, opt.budget);
    r.nodes += res.nodes;
    if (res.verdict == Verdict::Derivable) {
      r.verdict = Verdict::Derivable;
      r.proof = res.proof;
      for (auto i : picks) r.instances_used.push_back(instances[i]);
      return true;
    }
    if (res.verdict == Verdict::Unknown) clipped = true;
    return false;
  };

  std::vector<std::size_t> picks;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> bool {
    if (attempt(picks)) return true;
    if (remaining == 0) return false;
    for (std::size_t i = from; i < instances.size(); ++i) {
      picks.push_back(i);
      bool hit = self(self, i + 1, remaining - 1);
      picks.pop_back();
      if (hit) return true;
    }
    return false;
  };
  if (!rec(rec, 0, opt.max_instances))
    r.verdict = clipped ? Verdict::Unknown : Verdict::NotDerivable;
  return r;
}

// ---------------------------------------------------------------------------
// Additive-fragment consistency for modal judgment sets
// ---------------------------------------------------------------------------

// |- ~theta for the falsified-attitude theorems of the logic.
inline bool negation_is_theorem(const F& theta, ModalLogicId logic,
                                const ModalOptions& opt = {}) {
  F goal = to_nnf(sneg(theta));
  auto r = prove_modal(Sequent{{}, goal}, logic, opt);
  return r.verdict == Verdict::Derivable;
}

inline Coalition fresh_collapse_coalition() { return Coalition::of_agents({0}); }

struct ConsistencyReport {
  Tri consistent = Tri::Unknown;
  std::string witness;  // offending member or pair, when inconsistent
};

// Single additive formula.
inline Tri additive_formula_consistent(const F& f, ModalLogicId logic,
                                       const ModalOptions& opt = {}) {
  if (!is_additive(f)) throw std::invalid_argument("not additive: " + f->repr);
  auto r = prove(Sequent{{to_nnf(f)}, bot()}, FragmentId::aILLs, opt.budget);
  if (r.verdict == Verdict::Derivable) return Tri::No;
  if (negation_is_theorem(f, logic, opt)) return Tri::No;
  return r.verdict == Verdict::NotDerivable ? Tri::Yes : Tri::Unknown;
}

// Pair of additive formulas, screened through the classical collapse first.
inline Tri pair_consistent_additive(const F& x, const F& y, ModalLogicId logic,
                                    const ModalOptions& opt = {}) {
  if (!is_additive(x) || !is_additive(y))
    throw std::invalid_argument("pair_consistent_additive needs additive formulas");
  Coalition h = fresh_collapse_coalition();
  Tri classical = Tri::Unknown;
  try {
    classical = classical_consistent(
        {to_classical(collapse_coalitions(x, h)), to_classical(collapse_coalitions(y, h))},
        classical_counterpart(logic));
  } catch (const std::invalid_argument&) {
    classical = Tri::Unknown;  // modality outside the classical counterpart
  }
  if (classical == Tri::Yes) return Tri::Yes;

  auto r = prove(Sequent{{to_nnf(x), to_nnf(y)}, bot()}, FragmentId::aILLs, opt.budget);
  if (r.verdict == Verdict::Derivable) return Tri::No;
  if (negation_is_theorem(x, logic, opt) || negation_is_theorem(y, logic, opt))
    return Tri::No;
  return r.verdict == Verdict::NotDerivable ? Tri::Yes : Tri::Unknown;
}

// Every singleton and pair must be consistent, and the whole set must not
// derive bot outright.
inline ConsistencyReport set_consistent_additive(const std::vector<F>& set,
                                                 ModalLogicId logic,
                                                 const ModalOptions& opt = {}) {
  ConsistencyReport rep;
  bool unknown = false;
  if (!set.empty()) {
    std::vector<F> nnf;
    for (const auto& f : set) nnf.push_back(to_nnf(f));
    auto whole = prove(Sequent{nnf, bot()}, FragmentId::aILLs, opt.budget);
    if (whole.verdict == Verdict::Derivable) return {Tri::No, "whole set derives bot"};
    if (whole.verdict == Verdict::Unknown) unknown = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    Tri t = additive_formula_consistent(set[i], logic, opt);
    if (t == Tri::No) return {Tri::No, set[i]->repr};
    if (t == Tri::Unknown) unknown = true;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      Tri p = pair_consistent_additive(set[i], set[j], logic, opt);
      if (p == Tri::No) return {Tri::No, set[i]->repr + "  //  " + set[j]->repr};
      if (p == Tri::Unknown) unknown = true;
    }
  }
  rep.consistent = unknown ? Tri::Unknown : Tri::Yes;
  return rep;
}

// Re-indexes every modality to the corporate agent G.
inline F corporate_lift(const F& f) { return collapse_coalitions(f, Coalition::corporate()); }

inline std::vector<F> corporate_lift(const std::vector<F>& set) {
  std::vector<F> out;
  out.reserve(set.size());
  for (const auto& f : set) out.push_back(corporate_lift(f));
  return out;
}

}  // namespace colog
