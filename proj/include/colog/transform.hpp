// ============================================================================
// colog/transform.hpp — NNF, dialect translation, coalition rewriting
// ============================================================================
//
// to_nnf drives strong negation inward until it rests on atoms or modal
// formulas (negated modal formulas are kept as literals):
//
//   ~1 -> bot     ~top -> bot     ~bot -> top     ~~A -> A
//   ~(A * B)  -> ~A * ~B          ~(A -o B) -> A * ~B
//   ~(A & B)  -> ~A + ~B          ~(A + B)  -> ~A & ~B
//
// additive_translate maps the classical dialect into the additive fragment:
// - becomes ~, /\ becomes &, \/ becomes +, A -> B becomes ~A + B, modalities
// and atoms are kept.
//
// to_classical is the reverse erasure used by consistency oracles: additives
// and multiplicatives both land on /\ (resp. \/ for +), ~ on -, -o on ->.
// Every axiom of the substructural system erases to a classical tautology,
// so classical consistency of the image certifies substructural consistency.
// ============================================================================

#pragma once

#include <set>
#include <vector>

#include "colog/formula.hpp"

namespace colog {

inline F to_nnf(const F& f);

namespace detail {
inline F nnf_neg(const F& f) {
  switch (f->k) {
    case Conn::Atom: return sneg(f);
    case Conn::One: return bot();
    case Conn::Top: return bot();
    case Conn::Bot: return top();
    case Conn::SNeg: return to_nnf(f->a);
    case Conn::Tensor: return tensor(nnf_neg(f->a), nnf_neg(f->b));
    case Conn::Lolli: return tensor(to_nnf(f->a), nnf_neg(f->b));
    case Conn::With: return oplus(nnf_neg(f->a), nnf_neg(f->b));
    case Conn::Oplus: return with(nnf_neg(f->a), nnf_neg(f->b));
    case Conn::Modal: return sneg(modal(f->mod, f->coal, to_nnf(f->a)));
  }
  return f;
}
}  // namespace detail

inline F to_nnf(const F& f) {
  switch (f->k) {
    case Conn::Atom:
    case Conn::One:
    case Conn::Top:
    case Conn::Bot: return f;
    case Conn::SNeg: return detail::nnf_neg(f->a);
    case Conn::Tensor: return tensor(to_nnf(f->a), to_nnf(f->b));
    case Conn::Lolli: return lolli(to_nnf(f->a), to_nnf(f->b));
    case Conn::With: return with(to_nnf(f->a), to_nnf(f->b));
    case Conn::Oplus: return oplus(to_nnf(f->a), to_nnf(f->b));
    case Conn::Modal: return modal(f->mod, f->coal, to_nnf(f->a));
  }
  return f;
}

inline F additive_translate(const CF& f) {
  switch (f->k) {
    case CConn::Atom: return atom(f->atom);
    case CConn::Neg: return sneg(additive_translate(f->a));
    case CConn::And: return with(additive_translate(f->a), additive_translate(f->b));
    case CConn::Or: return oplus(additive_translate(f->a), additive_translate(f->b));
    case CConn::Imp:
      return oplus(sneg(additive_translate(f->a)), additive_translate(f->b));
    case CConn::Modal:
      return modal(f->mod, f->coal, additive_translate(f->a));
  }
  return atom(f->atom);
}

inline CF to_classical(const F& f) {
  switch (f->k) {
    case Conn::Atom: return catom(f->atom);
    case Conn::One: return cneg(cand(catom("p0"), cneg(catom("p0"))));
    case Conn::Top: return cneg(cand(catom("p0"), cneg(catom("p0"))));
    case Conn::Bot: return cand(catom("p0"), cneg(catom("p0")));
    case Conn::SNeg: return cneg(to_classical(f->a));
    case Conn::Tensor: return cand(to_classical(f->a), to_classical(f->b));
    case Conn::Lolli: return cimp(to_classical(f->a), to_classical(f->b));
    case Conn::With: return cand(to_classical(f->a), to_classical(f->b));
    case Conn::Oplus: return cor(to_classical(f->a), to_classical(f->b));
    case Conn::Modal:
      if (f->mod == Mod::P)  // classically P is the dual of O
        return cneg(cmodal(Mod::O, f->coal, cneg(to_classical(f->a))));
      return cmodal(f->mod, f->coal, to_classical(f->a));
  }
  return catom(f->atom);
}

// Rewrites every coalition index (corporate or not) to the given coalition.
inline F collapse_coalitions(const F& f, const Coalition& c) {
  switch (f->k) {
    case Conn::Atom:
    case Conn::One:
    case Conn::Top:
    case Conn::Bot: return f;
    case Conn::SNeg: return sneg(collapse_coalitions(f->a, c));
    case Conn::Tensor: return tensor(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case Conn::Lolli: return lolli(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case Conn::With: return with(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case Conn::Oplus: return oplus(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case Conn::Modal: return modal(f->mod, c, collapse_coalitions(f->a, c));
  }
  return f;
}

inline CF collapse_coalitions(const CF& f, const Coalition& c) {
  switch (f->k) {
    case CConn::Atom: return f;
    case CConn::Neg: return cneg(collapse_coalitions(f->a, c));
    case CConn::And: return cand(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case CConn::Or: return cor(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case CConn::Imp: return cimp(collapse_coalitions(f->a, c), collapse_coalitions(f->b, c));
    case CConn::Modal: return cmodal(f->mod, c, collapse_coalitions(f->a, c));
  }
  return f;
}

// True when the formula is free of multiplicative connectives (*, -o, 1).
inline bool is_additive(const F& f) {
  switch (f->k) {
    case Conn::Tensor:
    case Conn::Lolli:
    case Conn::One: return false;
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot: return true;
    case Conn::SNeg:
    case Conn::Modal: return is_additive(f->a);
    case Conn::With:
    case Conn::Oplus: return is_additive(f->a) && is_additive(f->b);
  }
  return true;
}

inline void collect_atoms(const F& f, std::set<std::string>& out) {
  if (f->k == Conn::Atom) out.insert(f->atom);
  if (f->a) collect_atoms(f->a, out);
  if (f->b) collect_atoms(f->b, out);
}

inline void collect_atoms(const CF& f, std::set<std::string>& out) {
  if (f->k == CConn::Atom) out.insert(f->atom);
  if (f->a) collect_atoms(f->a, out);
  if (f->b) collect_atoms(f->b, out);
}

// Complements in the agenda sense: strip one outer negation, else add one.
inline F complement(const F& f) {
  return f->k == Conn::SNeg ? f->a : sneg(f);
}

inline CF complement(const CF& f) {
  return f->k == CConn::Neg ? f->a : cneg(f);
}

}  // namespace colog
