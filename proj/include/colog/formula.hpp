// ============================================================================
// colog/formula.hpp — coalitions and formula ASTs
// ============================================================================
//
// Two formula languages live here:
//
//   Formula          : the substructural language.  Connectives are the
//                      multiplicatives * (tensor) and -o (linear implication),
//                      the additives & (with) and + (plus), units 1, top, bot,
//                      strong negation ~, and coalition-indexed modalities
//                      E/B/O/P.  The additive implication A ~> B is parser
//                      sugar for ~A + B and never appears as a node.
//
//   ClassicalFormula : the classical control language with -, /\, \/, ->
//                      and modalities E/B/O.
//
// Nodes are immutable and shared.  Every node caches its canonical printed
// form, so equality, ordering and hashing are string comparisons on `repr`.
//
// Coalitions are finite sets of occurrences (agent, provenance-tag list).
// The disjoint union C | D is plain union when the agent sets are disjoint;
// otherwise every occurrence of C gets tag 1 appended and every occurrence
// of D gets tag 0, keeping the two copies of a shared agent apart.  The
// corporate agent G is a distinguished coalition that composes with
// everything to G and never takes provenance tags.
// ============================================================================

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace colog {

// ---------------------------------------------------------------------------
// Coalitions
// ---------------------------------------------------------------------------

struct Occurrence {
  int agent = 0;
  std::vector<int> tags;  // provenance bits, oldest first

  auto operator<=>(const Occurrence&) const = default;
};

class Coalition {
 public:
  Coalition() = default;

  static Coalition corporate() {
    Coalition c;
    c.corporate_ = true;
    return c;
  }

  static Coalition of_agents(std::vector<int> agents) {
    Coalition c;
    for (int a : agents) c.occs_.push_back({a, {}});
    c.normalize();
    return c;
  }

  static Coalition of_occurrences(std::vector<Occurrence> occs) {
    Coalition c;
    c.occs_ = std::move(occs);
    c.normalize();
    return c;
  }

  bool is_corporate() const { return corporate_; }
  const std::vector<Occurrence>& occurrences() const { return occs_; }

  std::set<int> agents() const {
    std::set<int> out;
    for (const auto& o : occs_) out.insert(o.agent);
    return out;
  }

  bool empty() const { return !corporate_ && occs_.empty(); }
  auto operator<=>(const Coalition&) const = default;

  std::string str() const {
    if (corporate_) return "{G}";
    std::string s = "{";
    bool first = true;
    for (const auto& o : occs_) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(o.agent);
      if (!o.tags.empty()) {
        s += ":";
        for (int t : o.tags) s += char('0' + t);
      }
    }
    return s + "}";
  }

 private:
  void normalize() {
    std::sort(occs_.begin(), occs_.end());
    occs_.erase(std::unique(occs_.begin(), occs_.end()), occs_.end());
  }

  bool corporate_ = false;
  std::vector<Occurrence> occs_;
};

// C | D: plain union on disjoint agent sets, tagged union otherwise.
// The corporate agent does not participate (it composes via corporate
// composition, see modal.hpp).
inline Coalition disjoint_union(const Coalition& c, const Coalition& d) {
  if (c.is_corporate() || d.is_corporate())
    throw std::invalid_argument("disjoint_union: corporate agent G does not take |");
  std::set<int> ca = c.agents(), da = d.agents();
  bool overlap = std::any_of(ca.begin(), ca.end(),
                             [&](int a) { return da.count(a) > 0; });
  std::vector<Occurrence> occs;
  for (auto o : c.occurrences()) {
    if (overlap) o.tags.push_back(1);
    occs.push_back(std::move(o));
  }
  for (auto o : d.occurrences()) {
    if (overlap) o.tags.push_back(0);
    occs.push_back(std::move(o));
  }
  return Coalition::of_occurrences(std::move(occs));
}

// ---------------------------------------------------------------------------
// Substructural formulas
// ---------------------------------------------------------------------------

enum class Conn : std::uint8_t {
  Atom,    // propositional atom
  One,     // multiplicative unit 1
  Top,     // additive truth
  Bot,     // additive falsity
  SNeg,    // strong negation ~
  Tensor,  // *
  Lolli,   // -o
  With,    // &
  Oplus,   // +
  Modal,   // E/B/O/P with coalition index
};

enum class Mod : std::uint8_t { E, B, O, P };

inline char mod_letter(Mod m) {
  switch (m) {
    case Mod::E: return 'E';
    case Mod::B: return 'B';
    case Mod::O: return 'O';
    case Mod::P: return 'P';
  }
  return '?';
}

struct FormulaNode;
using F = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Conn k;
  std::string atom;   // Atom
  Mod mod = Mod::E;   // Modal
  Coalition coal;     // Modal
  F a, b;             // children
  std::string repr;   // canonical print, set at construction
};

namespace detail {
// precedence: ~/modal (4) > * & (3) > + (2) > -o (1)
inline int prec(Conn k) {
  switch (k) {
    case Conn::Lolli: return 1;
    case Conn::Oplus: return 2;
    case Conn::Tensor:
    case Conn::With: return 3;
    default: return 4;
  }
}

inline std::string wrap(const F& child, int outer) {
  return prec(child->k) < outer ? "(" + child->repr + ")" : child->repr;
}

// binaries are right-associative: the left child needs parens at equal
// precedence, the right child does not.
inline std::string wrap_left(const F& child, int outer) {
  return prec(child->k) <= outer ? "(" + child->repr + ")" : child->repr;
}
}  // namespace detail

inline F mk(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }

inline F atom(std::string name) {
  FormulaNode n{Conn::Atom};
  n.repr = name;
  n.atom = std::move(name);
  return mk(std::move(n));
}

inline F one() {
  FormulaNode n{Conn::One};
  n.repr = "1";
  return mk(std::move(n));
}

inline F top() {
  FormulaNode n{Conn::Top};
  n.repr = "top";
  return mk(std::move(n));
}

inline F bot() {
  FormulaNode n{Conn::Bot};
  n.repr = "bot";
  return mk(std::move(n));
}

inline F sneg(F x) {
  FormulaNode n{Conn::SNeg};
  n.repr = "~" + detail::wrap(x, 4);
  n.a = std::move(x);
  return mk(std::move(n));
}

inline F binop(Conn k, const char* sym, F x, F y) {
  FormulaNode n{k};
  int p = detail::prec(k);
  n.repr = detail::wrap_left(x, p) + " " + sym + " " + detail::wrap(y, p);
  n.a = std::move(x);
  n.b = std::move(y);
  return mk(std::move(n));
}

inline F tensor(F x, F y) { return binop(Conn::Tensor, "*", std::move(x), std::move(y)); }
inline F lolli(F x, F y) { return binop(Conn::Lolli, "-o", std::move(x), std::move(y)); }
inline F with(F x, F y) { return binop(Conn::With, "&", std::move(x), std::move(y)); }
inline F oplus(F x, F y) { return binop(Conn::Oplus, "+", std::move(x), std::move(y)); }

// additive implication A ~> B, sugar for ~A + B
inline F aimp(F x, F y) { return oplus(sneg(std::move(x)), std::move(y)); }

inline F modal(Mod m, Coalition c, F body) {
  FormulaNode n{Conn::Modal};
  n.mod = m;
  n.repr = std::string(1, mod_letter(m)) + c.str() + detail::wrap(body, 4);
  n.coal = std::move(c);
  n.a = std::move(body);
  return mk(std::move(n));
}

inline bool eq(const F& x, const F& y) { return x->repr == y->repr; }

struct FLess {
  bool operator()(const F& x, const F& y) const { return x->repr < y->repr; }
};

// ---------------------------------------------------------------------------
// Classical formulas
// ---------------------------------------------------------------------------

enum class CConn : std::uint8_t { Atom, Neg, And, Or, Imp, Modal };

struct CFormulaNode;
using CF = std::shared_ptr<const CFormulaNode>;

struct CFormulaNode {
  CConn k;
  std::string atom;
  Mod mod = Mod::E;  // E/B/O only in the classical dialect
  Coalition coal;
  CF a, b;
  std::string repr;
};

namespace detail {
inline int cprec(CConn k) {
  switch (k) {
    case CConn::Imp: return 1;
    case CConn::Or: return 2;
    case CConn::And: return 3;
    default: return 4;
  }
}
inline std::string cwrap(const CF& child, int outer) {
  return cprec(child->k) < outer ? "(" + child->repr + ")" : child->repr;
}
inline std::string cwrap_left(const CF& child, int outer) {
  return cprec(child->k) <= outer ? "(" + child->repr + ")" : child->repr;
}
}  // namespace detail

inline CF cmk(CFormulaNode n) { return std::make_shared<const CFormulaNode>(std::move(n)); }

inline CF catom(std::string name) {
  CFormulaNode n{CConn::Atom};
  n.repr = name;
  n.atom = std::move(name);
  return cmk(std::move(n));
}

inline CF cneg(CF x) {
  CFormulaNode n{CConn::Neg};
  n.repr = "-" + detail::cwrap(x, 4);
  n.a = std::move(x);
  return cmk(std::move(n));
}

inline CF cbinop(CConn k, const char* sym, CF x, CF y) {
  CFormulaNode n{k};
  int p = detail::cprec(k);
  n.repr = detail::cwrap_left(x, p) + " " + sym + " " + detail::cwrap(y, p);
  n.a = std::move(x);
  n.b = std::move(y);
  return cmk(std::move(n));
}

inline CF cand(CF x, CF y) { return cbinop(CConn::And, "/\\", std::move(x), std::move(y)); }
inline CF cor(CF x, CF y) { return cbinop(CConn::Or, "\\/", std::move(x), std::move(y)); }
inline CF cimp(CF x, CF y) { return cbinop(CConn::Imp, "->", std::move(x), std::move(y)); }

inline CF cmodal(Mod m, Coalition c, CF body) {
  if (m == Mod::P)
    throw std::invalid_argument("classical dialect has no P modality");
  CFormulaNode n{CConn::Modal};
  n.mod = m;
  n.repr = std::string(1, mod_letter(m)) + c.str() + " " + detail::cwrap(body, 4);
  n.coal = std::move(c);
  n.a = std::move(body);
  return cmk(std::move(n));
}

inline bool ceq(const CF& x, const CF& y) { return x->repr == y->repr; }

struct CFLess {
  bool operator()(const CF& x, const CF& y) const { return x->repr < y->repr; }
};

}  // namespace colog
