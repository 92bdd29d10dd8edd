// ============================================================================
// colog/classical.hpp — classical consistency oracle (plain and modal)
// ============================================================================
//
// Plain CL is decided exactly by truth tables.  The modal counterparts
// (E with veridicality, B with introspection/monotonicity, O minimal deontic,
// and their fusion) are non-normal logics whose only rules are RE plus the
// combination axioms
//
//   []_C a /\ []_D b  ->  []_{C u D} (a /\ b)        (same modality family)
//
// with, per family:  E_C a -> a  and  -E_C t for tautologous t;
// B4 (positive introspection), B5 (conjunct decomposition, which with RE
// gives full monotonicity of believed contents);  -B_C bot / -O_C bot.
//
// Decision procedure: abstract every outermost modal subformula to a fresh
// variable, conjoin the veridicality clauses, and truth-table the result.
// Each propositional witness is then checked for modal coherence: positive
// modal facts are saturated under combination (contents conjoin, coalitions
// union), any derived attitude with an inconsistent content (or, for E, a
// valid one) refutes the witness, and any negative modal literal whose
// formula becomes derivable — by content equivalence, or entailment in the
// monotone case of B — refutes it too.  Content-level reasoning recurses
// into the same procedure, so nested modalities (O_C E_C r) resolve.  The
// check mirrors the canonical filter construction for these logics; the
// verdict is Unknown when the variable or recursion caps are exceeded.
// ============================================================================

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "colog/formula.hpp"
#include "colog/transform.hpp"

namespace colog {

enum class ClassicalLogicId { CL, ACL, BCL, OCL, UCL };

enum class Tri { Yes, No, Unknown };

inline Tri tri_not(Tri t) {
  if (t == Tri::Yes) return Tri::No;
  if (t == Tri::No) return Tri::Yes;
  return Tri::Unknown;
}

namespace detail {

constexpr int kMaxClassicalVars = 20;
constexpr int kDefaultModalDepth = 4;

struct ModalVar {
  Mod mod;
  Coalition coal;
  CF body;
};

// Collects atoms and outermost modal subformulas into the variable pool.
inline void collect_vars(const CF& f, std::vector<std::string>& order,
                         std::map<std::string, CF>& modal_bodies,
                         std::set<std::string>& seen) {
  if (f->k == CConn::Atom || f->k == CConn::Modal) {
    if (seen.insert(f->repr).second) {
      order.push_back(f->repr);
      if (f->k == CConn::Modal) modal_bodies[f->repr] = f;
    }
    return;
  }
  if (f->a) collect_vars(f->a, order, modal_bodies, seen);
  if (f->b) collect_vars(f->b, order, modal_bodies, seen);
}

inline bool eval_abstract(const CF& f, const std::map<std::string, bool>& env) {
  switch (f->k) {
    case CConn::Atom:
    case CConn::Modal: return env.at(f->repr);
    case CConn::Neg: return !eval_abstract(f->a, env);
    case CConn::And: return eval_abstract(f->a, env) && eval_abstract(f->b, env);
    case CConn::Or: return eval_abstract(f->a, env) || eval_abstract(f->b, env);
    case CConn::Imp: return !eval_abstract(f->a, env) || eval_abstract(f->b, env);
  }
  return false;
}

inline bool family_allowed(Mod m, ClassicalLogicId logic) {
  switch (logic) {
    case ClassicalLogicId::CL: return false;
    case ClassicalLogicId::ACL: return m == Mod::E;
    case ClassicalLogicId::BCL: return m == Mod::B;
    case ClassicalLogicId::OCL: return m == Mod::O;
    case ClassicalLogicId::UCL: return true;
  }
  return false;
}

}  // namespace detail

inline Tri classical_consistent(const std::vector<CF>& set, ClassicalLogicId logic,
                                int depth = detail::kDefaultModalDepth);

namespace detail {

inline Tri content_inconsistent(const CF& content, ClassicalLogicId logic, int depth) {
  return tri_not(classical_consistent({content}, logic, depth));
}

inline Tri content_entails(const CF& premise, const CF& target, ClassicalLogicId logic,
                           int depth) {
  return tri_not(classical_consistent({premise, cneg(target)}, logic, depth));
}

inline Tri content_equivalent(const CF& x, const CF& y, ClassicalLogicId logic,
                              int depth) {
  Tri a = content_entails(x, y, logic, depth);
  Tri b = content_entails(y, x, logic, depth);
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  if (a == Tri::No || b == Tri::No) return Tri::No;
  return Tri::Unknown;
}

struct ModalFact {
  Mod mod;
  std::set<int> agents;  // classical coalitions are plain agent sets
  CF content;
};

// Checks whether the positive/negative modal literals of one propositional
// witness can be realized.  Yes/No/Unknown.
inline Tri coherent(const std::vector<ModalFact>& pos, const std::vector<ModalFact>& neg,
                    ClassicalLogicId logic, int depth) {
  if (depth <= 0) return Tri::Unknown;

  // saturate under combination within each modality family
  std::vector<ModalFact> derived;
  for (Mod m : {Mod::E, Mod::B, Mod::O}) {
    std::vector<const ModalFact*> fam;
    for (const auto& f : pos)
      if (f.mod == m) fam.push_back(&f);
    if (fam.size() > 14) return Tri::Unknown;
    for (std::uint32_t mask = 1; mask < (1u << fam.size()); ++mask) {
      ModalFact d;
      d.mod = m;
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (mask >> i & 1) {
          d.agents.insert(fam[i]->agents.begin(), fam[i]->agents.end());
          d.content = d.content ? cand(d.content, fam[i]->content) : fam[i]->content;
        }
      derived.push_back(std::move(d));
    }
  }

  bool sub_unknown = false;
  for (const auto& d : derived) {
    Tri bad = content_inconsistent(d.content, logic, depth - 1);
    if (bad == Tri::Yes) return Tri::No;  // []_C of an inconsistent content
    if (bad == Tri::Unknown) sub_unknown = true;
    if (d.mod == Mod::E) {
      Tri taut = tri_not(classical_consistent({cneg(d.content)}, logic, depth - 1));
      if (taut == Tri::Yes) return Tri::No;  // nothing brings about a tautology
      if (taut == Tri::Unknown) sub_unknown = true;
    }
  }

  auto derivable = [&](const ModalFact& want) -> Tri {
    bool unknown = false;
    for (const auto& d : derived) {
      if (d.mod != want.mod || d.agents != want.agents) continue;
      Tri hit = want.mod == Mod::B
                    ? content_entails(d.content, want.content, logic, depth - 1)
                    : content_equivalent(d.content, want.content, logic, depth - 1);
      if (hit == Tri::Yes) return Tri::Yes;
      if (hit == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::No;
  };

  for (const auto& nf : neg) {
    Tri hit = derivable(nf);
    if (hit == Tri::Yes) return Tri::No;
    if (hit == Tri::Unknown) sub_unknown = true;
    // positive introspection: -B_C B_C a clashes with a derivable B_C a
    if (nf.mod == Mod::B && nf.content->k == CConn::Modal &&
        nf.content->mod == Mod::B && nf.content->coal.agents() == nf.agents) {
      ModalFact inner{Mod::B, nf.agents, nf.content->a};
      Tri hit2 = derivable(inner);
      if (hit2 == Tri::Yes) return Tri::No;
      if (hit2 == Tri::Unknown) sub_unknown = true;
    }
  }
  return sub_unknown ? Tri::Unknown : Tri::Yes;
}

}  // namespace detail

inline Tri classical_consistent(const std::vector<CF>& set, ClassicalLogicId logic,
                                int depth) {
  using namespace detail;
  if (set.empty()) return Tri::Yes;

  // variable pool: atoms and outermost modal subformulas, grown by the
  // veridicality clauses until stable
  std::vector<std::string> order;
  std::map<std::string, CF> modal_bodies;
  std::set<std::string> seen;
  std::vector<CF> formulas = set;
  for (const auto& f : formulas) collect_vars(f, order, modal_bodies, seen);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = modal_bodies.find(order[i]);
    if (it == modal_bodies.end()) continue;
    const CF& mf = it->second;
    if (mf->mod == Mod::E && family_allowed(Mod::E, logic)) {
      CF clause = cimp(mf, mf->a);
      collect_vars(clause, order, modal_bodies, seen);
      formulas.push_back(clause);
    }
  }

  if (order.size() > std::size_t(kMaxClassicalVars)) return Tri::Unknown;
  for (const auto& [repr, mf] : modal_bodies)
    if (!family_allowed(mf->mod, logic))
      throw std::invalid_argument("modality not in this logic: " + repr);

  bool any_unknown = false;
  const std::uint64_t limit = 1ull << order.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::map<std::string, bool> env;
    for (std::size_t i = 0; i < order.size(); ++i) env[order[i]] = bits >> i & 1;
    bool sat = true;
    for (const auto& f : formulas)
      if (!eval_abstract(f, env)) {
        sat = false;
        break;
      }
    if (!sat) continue;
    if (modal_bodies.empty()) return Tri::Yes;

    std::vector<ModalFact> pos, neg;
    for (const auto& [repr, mf] : modal_bodies) {
      ModalFact fact{mf->mod, mf->coal.agents(), mf->a};
      (env[repr] ? pos : neg).push_back(std::move(fact));
    }
    Tri ok = coherent(pos, neg, logic, depth);
    if (ok == Tri::Yes) return Tri::Yes;
    if (ok == Tri::Unknown) any_unknown = true;
  }
  return any_unknown ? Tri::Unknown : Tri::No;
}

// Exact classical consequence for plain CL formulas (used by agenda guards).
inline bool classical_tautology(const CF& f) {
  return classical_consistent({cneg(f)}, ClassicalLogicId::CL) == Tri::No;
}

inline bool classical_unsatisfiable(const CF& f) {
  return classical_consistent({f}, ClassicalLogicId::CL) == Tri::No;
}

}  // namespace colog
