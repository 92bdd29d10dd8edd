// ============================================================================
// colog/prover.hpp — backward proof search for the substructural base logic
// ============================================================================
//
// Sequents are multisets Gamma with a single goal.  Derivability is decided
// by cut-free backward search over the following rules, applied to formulas
// in negation normal form (strong negation rests on atoms and modal
// formulas, which the search treats as opaque literals):
//
//   id    : A |- A
//   topR  : Gamma |- top
//   botL  : Gamma, bot |- C
//   oneR  : |- 1
//   oneL  : Gamma, 1 |- C          from  Gamma |- C
//   tensL : Gamma, A*B |- C        from  Gamma, A, B |- C
//   plusL : Gamma, A+B |- C        from  Gamma, A |- C  and  Gamma, B |- C
//   lolR  : Gamma |- A -o B        from  Gamma, A |- B
//   withR : Gamma |- A & B         from  Gamma |- A  and  Gamma |- B
//   plusR : Gamma |- A + B         from  Gamma |- A  (or |- B)
//   withL : Gamma, A & B |- C      from  Gamma, A |- C  (or with B)
//   tensR : Gamma, Delta |- A * B  from  Gamma |- A  and  Delta |- B
//   lolL  : Gamma, Delta, A -o B |- C  from  Gamma |- A  and  Delta, B |- C
//
// Invertible rules fire eagerly; the rest backtrack, with all 2^k context
// splits enumerated for tensR/lolL.  Every rule shrinks the sequent, so the
// search terminates; NotDerivable is definitive unless the node budget runs
// out first, in which case the verdict is Unknown.
//
// There is deliberately no atom-level explosion: p, ~p |- bot fails.  No
// axiom of the Hilbert system licenses it, and the dual valuations of the
// resource semantics may overlap.
//
// The additive fragment ("we drop the -o rule") is exposed as a fragment
// id: queries must be free of *, -o and 1, and only the additive rules can
// fire on such sequents.
// ============================================================================

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "colog/formula.hpp"
#include "colog/transform.hpp"

namespace colog {

enum class FragmentId { ILLs, aILLs };
enum class Verdict { Derivable, NotDerivable, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Derivable: return "derivable";
    case Verdict::NotDerivable: return "not-derivable";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct Sequent {
  std::vector<F> hyps;  // multiset
  F goal;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      if (i) s += ", ";
      s += hyps[i]->repr;
    }
    return s + (s.empty() ? "|- " : " |- ") + goal->repr;
  }
};

struct ProofNode {
  std::string rule;
  std::string sequent;
  std::vector<ProofNode> premises;
};

struct ProveResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<ProofNode> proof;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

namespace detail {

struct SearchCtx {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool clipped = false;  // set when the budget cut off a subtree
};

inline std::vector<F> without(const std::vector<F>& hyps, std::size_t idx) {
  std::vector<F> out;
  out.reserve(hyps.size() - 1);
  for (std::size_t i = 0; i < hyps.size(); ++i)
    if (i != idx) out.push_back(hyps[i]);
  return out;
}

inline std::string seq_str(const std::vector<F>& hyps, const F& goal) {
  Sequent s{hyps, goal};
  return s.str();
}

inline std::optional<ProofNode> search(const std::vector<F>& hyps, const F& goal,
                                       SearchCtx& ctx) {
  if (ctx.nodes >= ctx.budget) {
    ctx.clipped = true;
    return std::nullopt;
  }
  ++ctx.nodes;

  auto leaf = [&](const char* rule) {
    return ProofNode{rule, seq_str(hyps, goal), {}};
  };
  auto node1 = [&](const char* rule, ProofNode p) {
    return ProofNode{rule, seq_str(hyps, goal), {std::move(p)}};
  };
  auto node2 = [&](const char* rule, ProofNode p, ProofNode q) {
    return ProofNode{rule, seq_str(hyps, goal), {std::move(p), std::move(q)}};
  };

  // leaves
  if (hyps.size() == 1 && eq(hyps[0], goal)) return leaf("id");
  if (goal->k == Conn::Top) return leaf("topR");
  for (const auto& h : hyps)
    if (h->k == Conn::Bot) return leaf("botL");
  if (goal->k == Conn::One && hyps.empty()) return leaf("oneR");

  // invertible left rules
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i]->k == Conn::One) {
      auto rest = without(hyps, i);
      if (auto p = search(rest, goal, ctx)) return node1("oneL", std::move(*p));
      return std::nullopt;
    }
    if (hyps[i]->k == Conn::Tensor) {
      auto rest = without(hyps, i);
      rest.push_back(hyps[i]->a);
      rest.push_back(hyps[i]->b);
      if (auto p = search(rest, goal, ctx)) return node1("tensL", std::move(*p));
      return std::nullopt;
    }
    if (hyps[i]->k == Conn::Oplus) {
      auto left = without(hyps, i), right = left;
      left.push_back(hyps[i]->a);
      right.push_back(hyps[i]->b);
      auto p = search(left, goal, ctx);
      if (!p) return std::nullopt;
      auto q = search(right, goal, ctx);
      if (!q) return std::nullopt;
      return node2("plusL", std::move(*p), std::move(*q));
    }
  }

  // invertible right rules
  if (goal->k == Conn::Lolli) {
    auto ext = hyps;
    ext.push_back(goal->a);
    if (auto p = search(ext, goal->b, ctx)) return node1("lolR", std::move(*p));
    return std::nullopt;
  }
  if (goal->k == Conn::With) {
    auto p = search(hyps, goal->a, ctx);
    if (!p) return std::nullopt;
    auto q = search(hyps, goal->b, ctx);
    if (!q) return std::nullopt;
    return node2("withR", std::move(*p), std::move(*q));
  }

  // backtracking choices
  if (goal->k == Conn::Oplus) {
    if (auto p = search(hyps, goal->a, ctx)) return node1("plusR1", std::move(*p));
    if (auto p = search(hyps, goal->b, ctx)) return node1("plusR2", std::move(*p));
  }

  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i]->k != Conn::With) continue;
    for (const F& pick : {hyps[i]->a, hyps[i]->b}) {
      auto rest = without(hyps, i);
      rest.push_back(pick);
      if (auto p = search(rest, goal, ctx))
        return node1(eq(pick, hyps[i]->a) ? "withL1" : "withL2", std::move(*p));
    }
  }

  if (goal->k == Conn::Tensor) {
    const std::size_t n = hyps.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<F> left, right;
      for (std::size_t i = 0; i < n; ++i)
        (mask >> i & 1 ? left : right).push_back(hyps[i]);
      auto p = search(left, goal->a, ctx);
      if (!p) continue;
      auto q = search(right, goal->b, ctx);
      if (!q) continue;
      return node2("tensR", std::move(*p), std::move(*q));
    }
  }

  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i]->k != Conn::Lolli) continue;
    auto rest = without(hyps, i);
    const std::size_t n = rest.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<F> left, right;
      for (std::size_t j = 0; j < n; ++j)
        (mask >> j & 1 ? left : right).push_back(rest[j]);
      auto p = search(left, hyps[i]->a, ctx);
      if (!p) continue;
      right.push_back(hyps[i]->b);
      auto q = search(right, goal, ctx);
      if (!q) continue;
      return node2("lolL", std::move(*p), std::move(*q));
    }
  }

  return std::nullopt;
}

}  // namespace detail

inline ProveResult prove(const Sequent& s, FragmentId fragment = FragmentId::ILLs,
                         std::uint64_t budget = kDefaultBudget) {
  std::vector<F> hyps;
  hyps.reserve(s.hyps.size());
  for (const auto& h : s.hyps) hyps.push_back(to_nnf(h));
  F goal = to_nnf(s.goal);

  if (fragment == FragmentId::aILLs) {
    for (const auto& h : hyps)
      if (!is_additive(h))
        throw std::invalid_argument("additive fragment rejects multiplicatives: " + h->repr);
    if (!is_additive(goal))
      throw std::invalid_argument("additive fragment rejects multiplicatives: " + goal->repr);
  }

  detail::SearchCtx ctx{budget};
  auto proof = detail::search(hyps, goal, ctx);
  ProveResult r;
  r.nodes = ctx.nodes;
  if (proof) {
    r.verdict = Verdict::Derivable;
    r.proof = std::move(*proof);
  } else {
    r.verdict = ctx.clipped ? Verdict::Unknown : Verdict::NotDerivable;
  }
  return r;
}

inline ProveResult prove(const std::vector<F>& hyps, const F& goal,
                         FragmentId fragment = FragmentId::ILLs,
                         std::uint64_t budget = kDefaultBudget) {
  return prove(Sequent{hyps, goal}, fragment, budget);
}

// S |- bot with every member at multiplicity 1.  A derivation of bot from a
// sub-multiset extends to the full multiset (dead hypotheses ride along on
// botL), so the exact query already decides subset-inconsistency.
inline Verdict consistency(const std::vector<F>& set, FragmentId fragment = FragmentId::ILLs,
                           std::uint64_t budget = kDefaultBudget) {
  auto r = prove(Sequent{set, bot()}, fragment, budget);
  switch (r.verdict) {
    case Verdict::Derivable: return Verdict::NotDerivable;     // inconsistent
    case Verdict::NotDerivable: return Verdict::Derivable;     // consistent
    default: return Verdict::Unknown;
  }
}

inline bool is_consistent(const std::vector<F>& set, FragmentId fragment = FragmentId::ILLs,
                          std::uint64_t budget = kDefaultBudget) {
  return prove(Sequent{set, bot()}, fragment, budget).verdict != Verdict::Derivable;
}

inline std::vector<std::vector<F>> minimal_inconsistent_subsets(
    const std::vector<F>& set, FragmentId fragment = FragmentId::ILLs,
    std::uint64_t budget = kDefaultBudget) {
  const std::size_t n = set.size();
  std::vector<std::uint64_t> bad;  // masks of inconsistent subsets
  std::vector<std::vector<F>> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool has_bad_subset = std::any_of(bad.begin(), bad.end(), [&](std::uint64_t b) {
      return (b & mask) == b;
    });
    if (has_bad_subset) continue;  // not minimal
    std::vector<F> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(set[i]);
    if (!is_consistent(sub, fragment, budget)) {
      bad.push_back(mask);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

inline bool has_median_property(const std::vector<F>& set,
                                FragmentId fragment = FragmentId::ILLs,
                                std::uint64_t budget = kDefaultBudget) {
  for (const auto& mis : minimal_inconsistent_subsets(set, fragment, budget))
    if (mis.size() > 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The Hilbert axiom table, instantiated with atoms p, q, r.
// ---------------------------------------------------------------------------

struct NamedAxiom {
  int number;
  F formula;
};

inline std::vector<NamedAxiom> axiom_suite() {
  F p = atom("p"), q = atom("q"), r = atom("r");
  auto L = [](F x, F y) { return lolli(std::move(x), std::move(y)); };
  std::vector<NamedAxiom> ax;
  ax.push_back({1, L(p, top())});
  ax.push_back({2, L(bot(), p)});
  ax.push_back({3, L(p, p)});
  ax.push_back({4, L(L(p, q), L(L(q, r), L(p, r)))});
  ax.push_back({5, L(L(p, L(q, r)), L(q, L(p, r)))});
  ax.push_back({6, L(p, L(q, tensor(p, q)))});
  ax.push_back({7, L(L(p, L(q, r)), L(tensor(p, q), r))});
  ax.push_back({8, one()});
  ax.push_back({9, L(one(), L(p, p))});
  ax.push_back({10, L(with(p, q), p)});
  ax.push_back({11, L(with(p, q), q)});
  ax.push_back({12, L(with(L(p, q), L(p, r)), L(p, with(q, r)))});
  ax.push_back({13, L(p, oplus(p, q))});
  ax.push_back({14, L(q, oplus(p, q))});
  ax.push_back({15, L(with(L(p, r), L(q, r)), L(oplus(p, q), r))});
  ax.push_back({16, L(p, sneg(sneg(p)))});
  ax.push_back({17, L(sneg(sneg(p)), p)});
  ax.push_back({18, L(sneg(one()), p)});
  ax.push_back({19, L(sneg(top()), p)});
  ax.push_back({20, L(p, sneg(bot()))});
  // axiom 21 in its corrected form, matching axiom 22 and the falsification
  // clause for -o (the falsifier of A -o B pairs a verifier of A with a
  // falsifier of B)
  ax.push_back({21, L(sneg(L(p, q)), tensor(p, sneg(q)))});
  ax.push_back({22, L(tensor(p, sneg(q)), sneg(L(p, q)))});
  ax.push_back({23, L(sneg(with(p, q)), oplus(sneg(p), sneg(q)))});
  ax.push_back({24, L(oplus(sneg(p), sneg(q)), sneg(with(p, q)))});
  ax.push_back({25, L(sneg(oplus(p, q)), with(sneg(p), sneg(q)))});
  ax.push_back({26, L(with(sneg(p), sneg(q)), sneg(oplus(p, q)))});
  ax.push_back({27, L(sneg(tensor(p, q)), tensor(sneg(p), sneg(q)))});
  ax.push_back({28, L(tensor(sneg(p), sneg(q)), sneg(tensor(p, q)))});
  return ax;
}

}  // namespace colog
