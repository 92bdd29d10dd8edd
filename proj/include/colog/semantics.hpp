// ============================================================================
// colog/semantics.hpp — Kripke resource algebras and neighborhood models
// ============================================================================
//
// A resource algebra is a meet-semilattice with greatest element omega
// (order: x <= y iff x meet y = x) carrying a commutative monoid with
// identity e, with omega absorbing (x . omega = omega) and the monoid
// distributing over meets: z.(x^y).w = (z.x.w) ^ (z.y.w).
//
// Worlds are 0..n-1 (n <= 5), sets of worlds are bit masks, and a
// neighborhood family maps each world to a set of subsets, stored as a
// bit mask over subset indices.  Valuations and the per-subset indicator
// sets {m | X in N(m)} must both satisfy the heredity shape
// (m^n in S iff m in S and n in S), i.e. they are filters.
//
// Formula evaluation returns the full verifier/falsifier extensions:
//
//   ||p||+ = V+(p)                     ||p||- = V-(p)
//   ||1||+ = up(e)                     ||1||- = {omega}
//   ||top||+ = M, ||bot||+ = {omega}   ||top||- = {omega}, ||bot||- = M
//   ||A*B||+  = up(||A||+ . ||B||+)    and dually with falsifiers
//   ||A&B||+  = ||A||+ and ||B||+
//   ||A&B||-  = up(meets of ||A||- u ||B||-)   (m1 = m2 permitted)
//   ||A+B||+  = up(meets of ||A||+ u ||B||+)
//   ||A+B||-  = ||A||- and ||B||-
//   ||A-oB||+ = {m | all n in ||A||+: n.m in ||B||+}
//   ||A-oB||- = up(||A||+ . ||B||-)
//   ||~A||+/- swap
//   ||[]_C A||+ = {m | ||A||+ in N+_C(m)},  ||[]_C A||- likewise with N-
//   ||P_C A||+  = {m | ||A||- not in O-_C(m)},  ||P_C A||- = {m | ||A||- in O+_C(m)}
//
// The positive clauses for + and the negative clause for & allow the two
// witnesses to coincide, so a single verifier of either disjunct suffices.
// P has no neighborhoods of its own; it reads the O family.
// ============================================================================

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colog/formula.hpp"
#include "colog/prover.hpp"
#include "colog/transform.hpp"

namespace colog {

using Mask = std::uint32_t;

struct ResourceAlgebra {
  int n = 0;
  int e = 0;
  int omega = 0;
  std::vector<int> meet;  // n*n, row-major
  std::vector<int> prod;

  int mt(int x, int y) const { return meet[x * n + y]; }
  int pr(int x, int y) const { return prod[x * n + y]; }
  bool leq(int x, int y) const { return mt(x, y) == x; }

  // upward closure of a set of worlds
  Mask up(Mask s) const {
    Mask out = 0;
    for (int m = 0; m < n; ++m) {
      bool in = false;
      for (int x = 0; x < n && !in; ++x)
        if ((s >> x & 1) && leq(x, m)) in = true;
      if (in) out |= Mask(1) << m;
    }
    return out;
  }

  // up-closure of the pointwise product of two sets
  Mask up_prod(Mask a, Mask b) const {
    Mask raw = 0;
    for (int x = 0; x < n; ++x)
      if (a >> x & 1)
        for (int y = 0; y < n; ++y)
          if (b >> y & 1) raw |= Mask(1) << pr(x, y);
    return up(raw);
  }

  // up-closure of pairwise meets of a set (with both picks from the set)
  Mask up_meets(Mask s) const {
    Mask raw = 0;
    for (int x = 0; x < n; ++x)
      if (s >> x & 1)
        for (int y = 0; y < n; ++y)
          if (s >> y & 1) raw |= Mask(1) << mt(x, y);
    return up(raw);
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> errs;
    auto bad = [&](std::string msg) { errs.push_back(std::move(msg)); };
    for (int x = 0; x < n; ++x) {
      if (mt(x, x) != x) bad("meet not idempotent at " + std::to_string(x));
      if (mt(x, omega) != x) bad("omega not greatest for " + std::to_string(x));
      if (pr(x, e) != x) bad("e not an identity at " + std::to_string(x));
      if (pr(x, omega) != omega) bad("omega not absorbing at " + std::to_string(x));
      for (int y = 0; y < n; ++y) {
        if (mt(x, y) != mt(y, x)) bad("meet not commutative");
        if (pr(x, y) != pr(y, x)) bad("product not commutative");
        for (int z = 0; z < n; ++z) {
          if (mt(mt(x, y), z) != mt(x, mt(y, z))) bad("meet not associative");
          if (pr(pr(x, y), z) != pr(x, pr(y, z))) bad("product not associative");
        }
      }
    }
    for (int z = 0; z < n && errs.empty(); ++z)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int w = 0; w < n; ++w)
            if (pr(pr(z, mt(x, y)), w) != mt(pr(pr(z, x), w), pr(pr(z, y), w))) {
              bad("product does not distribute over meet");
              x = y = w = n;
            }
    return errs;
  }
};

// All subsets of worlds satisfying the heredity shape (filters, including
// the empty set and the full carrier).
inline std::vector<Mask> filters(const ResourceAlgebra& a) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask(1) << a.n); ++s) {
    bool ok = true;
    for (int m = 0; m < a.n && ok; ++m)
      for (int x = 0; x < a.n && ok; ++x) {
        bool both = (s >> m & 1) && (s >> x & 1);
        bool in = s >> a.mt(m, x) & 1;
        if (both != in) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

// Neighborhood family for one (modality letter, coalition, sign): for each
// world, the set of subsets in the neighborhood, as a mask over subset ids.
struct NFamily {
  std::vector<Mask> at;  // indexed by world; bit X set <=> subset X in N(m)

  bool has(int world, Mask x) const { return at[world] >> x & 1; }
};

struct NKey {
  char fam;  // 'E', 'B' or 'O'
  Coalition coal;
  auto operator<=>(const NKey&) const = default;
};

struct Model {
  ResourceAlgebra alg;
  std::map<std::string, Mask> vpos, vneg;
  std::map<NKey, NFamily> npos, nneg;

  Mask val(const std::map<std::string, Mask>& v, const std::string& a) const {
    auto it = v.find(a);
    return it == v.end() ? 0 : it->second;
  }
};

struct Extension {
  Mask pos = 0;
  Mask neg = 0;
};

namespace detail {
inline char family_of(Mod m) {
  switch (m) {
    case Mod::E: return 'E';
    case Mod::B: return 'B';
    case Mod::O: return 'O';
    case Mod::P: return 'O';  // P reads O's neighborhoods
  }
  return 'E';
}

inline const NFamily* find_family(const std::map<NKey, NFamily>& ns, char fam,
                                  const Coalition& c) {
  auto it = ns.find(NKey{fam, c});
  return it == ns.end() ? nullptr : &it->second;
}
}  // namespace detail

struct MissingFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Extension eval(const Model& mo, const F& f,
                      std::map<std::string, Extension>* memo = nullptr) {
  if (memo) {
    auto it = memo->find(f->repr);
    if (it != memo->end()) return it->second;
  }
  const ResourceAlgebra& a = mo.alg;
  const Mask all = (Mask(1) << a.n) - 1;
  const Mask womega = Mask(1) << a.omega;
  Extension r;
  switch (f->k) {
    case Conn::Atom:
      r = {mo.val(mo.vpos, f->atom), mo.val(mo.vneg, f->atom)};
      break;
    case Conn::One:
      r = {a.up(Mask(1) << a.e), womega};
      break;
    case Conn::Top:
      r = {all, womega};
      break;
    case Conn::Bot:
      r = {womega, all};
      break;
    case Conn::SNeg: {
      Extension x = eval(mo, f->a, memo);
      r = {x.neg, x.pos};
      break;
    }
    case Conn::Tensor: {
      Extension x = eval(mo, f->a, memo), y = eval(mo, f->b, memo);
      r = {a.up_prod(x.pos, y.pos), a.up_prod(x.neg, y.neg)};
      break;
    }
    case Conn::With: {
      Extension x = eval(mo, f->a, memo), y = eval(mo, f->b, memo);
      r = {x.pos & y.pos, a.up_meets(x.neg | y.neg)};
      break;
    }
    case Conn::Oplus: {
      Extension x = eval(mo, f->a, memo), y = eval(mo, f->b, memo);
      r = {a.up_meets(x.pos | y.pos), x.neg & y.neg};
      break;
    }
    case Conn::Lolli: {
      Extension x = eval(mo, f->a, memo), y = eval(mo, f->b, memo);
      Mask pos = 0;
      for (int m = 0; m < a.n; ++m) {
        bool ok = true;
        for (int v = 0; v < a.n && ok; ++v)
          if ((x.pos >> v & 1) && !(y.pos >> a.pr(v, m) & 1)) ok = false;
        if (ok) pos |= Mask(1) << m;
      }
      r = {pos, a.up_prod(x.pos, y.neg)};
      break;
    }
    case Conn::Modal: {
      Extension x = eval(mo, f->a, memo);
      char fam = detail::family_of(f->mod);
      const NFamily* np = detail::find_family(mo.npos, fam, f->coal);
      const NFamily* nn = detail::find_family(mo.nneg, fam, f->coal);
      if (!np || !nn)
        throw MissingFamily("model has no " + std::string(1, fam) +
                            " neighborhoods for " + f->coal.str());
      Mask pos = 0, neg = 0;
      for (int m = 0; m < a.n; ++m) {
        if (f->mod == Mod::P) {
          if (!nn->has(m, x.neg)) pos |= Mask(1) << m;
          if (np->has(m, x.neg)) neg |= Mask(1) << m;
        } else {
          if (np->has(m, x.pos)) pos |= Mask(1) << m;
          if (nn->has(m, x.pos)) neg |= Mask(1) << m;
        }
      }
      r = {pos, neg};
      break;
    }
  }
  if (memo) (*memo)[f->repr] = r;
  return r;
}

inline bool holds_in_model(const Model& mo, const F& f) {
  return eval(mo, f).pos >> mo.alg.e & 1;
}

// ---------------------------------------------------------------------------
// Frame conditions.  Numbers follow the soundness appendix:
//   (3)/(4) heredity of the indicator sets {m | X in N(m)}   (always on)
//   (5)  e in X implies X in E-_C(e)                 [negative necessitation]
//   (6)  X in E+_C(m) implies m in X                 [veridicality]
//   (7)/(12)/(15)  X,Y in N+_C(m) implies X^Y in N+_C(m)  [additive combination]
//   (8)/(13)/(16)  X in N+_C(m), Y in N+_D(n) implies up(X.Y) in N+_{C|D}(m.n)
//   (9)/(14)  {omega} in N-_C(e)                     [no bot attitudes]
//   (10) X in B+_C(m) implies {n | X in B+_C(n)} in B+_C(m)  [introspection]
//   (11) X in B+_C(m), X subset Y implies Y in B+_C(m)       [monotonicity]
// Condition (11) is used in the superset direction, which is what makes
// belief decomposition sound.  The condition for O6 is deliberately absent.
// ---------------------------------------------------------------------------

struct FrameConditions {
  bool e_nec = true;      // (5)
  bool e_verid = true;    // (6)
  bool e_comb = true;     // (7)
  bool e_mult = true;     // (8)
  bool b_bot = true;      // (9)
  bool b_intro = true;    // (10)
  bool b_mono = true;     // (11)
  bool b_comb = true;     // (12)
  bool b_mult = true;     // (13)
  bool o_bot = true;      // (14)
  bool o_comb = true;     // (15)
  bool o_mult = true;     // (16)
};

inline std::vector<std::string> validate_model(const Model& mo,
                                               const FrameConditions& fc = {}) {
  std::vector<std::string> errs = mo.alg.validate();
  const ResourceAlgebra& a = mo.alg;
  const Mask nsub = Mask(1) << a.n;

  auto is_filter = [&](Mask s) {
    for (int m = 0; m < a.n; ++m)
      for (int x = 0; x < a.n; ++x) {
        bool both = (s >> m & 1) && (s >> x & 1);
        if (both != bool(s >> a.mt(m, x) & 1)) return false;
      }
    return true;
  };

  // the greatest element is the inconsistent world: it verifies and
  // falsifies every atom, which is what keeps bot -o p and its kin sound
  for (const auto& [atom_name, s] : mo.vpos) {
    if (!is_filter(s)) errs.push_back("V+(" + atom_name + ") violates heredity");
    if (!(s >> a.omega & 1))
      errs.push_back("V+(" + atom_name + ") misses the greatest element");
  }
  for (const auto& [atom_name, s] : mo.vneg) {
    if (!is_filter(s)) errs.push_back("V-(" + atom_name + ") violates heredity");
    if (!(s >> a.omega & 1))
      errs.push_back("V-(" + atom_name + ") misses the greatest element");
  }

  auto indicator = [&](const NFamily& nf, Mask x) {
    Mask ind = 0;
    for (int m = 0; m < a.n; ++m)
      if (nf.has(m, x)) ind |= Mask(1) << m;
    return ind;
  };

  auto check_base = [&](const std::map<NKey, NFamily>& ns, const char* sign) {
    for (const auto& [key, nf] : ns) {
      if (nf.at.size() != std::size_t(a.n)) {
        errs.push_back("family size mismatch");
        continue;
      }
      for (Mask x = 0; x < nsub; ++x)
        if (!is_filter(indicator(nf, x)))
          errs.push_back(std::string("indicator of ") + key.fam + key.coal.str() +
                         sign + " violates heredity");
    }
  };
  check_base(mo.npos, "+");
  check_base(mo.nneg, "-");

  auto pos_fam = [&](char fam, const Coalition& c) {
    return detail::find_family(mo.npos, fam, c);
  };
  auto neg_fam = [&](char fam, const Coalition& c) {
    return detail::find_family(mo.nneg, fam, c);
  };

  for (const auto& [key, nf] : mo.npos) {
    const char famc = key.fam;
    // additive combination (7)/(12)/(15)
    bool comb = (famc == 'E' && fc.e_comb) || (famc == 'B' && fc.b_comb) ||
                (famc == 'O' && fc.o_comb);
    if (comb)
      for (int m = 0; m < a.n; ++m)
        for (Mask x = 0; x < nsub; ++x)
          if (nf.has(m, x))
            for (Mask y = 0; y < nsub; ++y)
              if (nf.has(m, y) && !nf.has(m, x & y))
                errs.push_back(std::string(1, famc) + key.coal.str() +
                               "+ not closed under intersections");
    if (famc == 'E' && fc.e_verid)
      for (int m = 0; m < a.n; ++m)
        for (Mask x = 0; x < nsub; ++x)
          if (nf.has(m, x) && !(x >> m & 1))
            errs.push_back("E" + key.coal.str() + "+ violates veridicality");
    if (famc == 'B' && fc.b_mono)
      for (int m = 0; m < a.n; ++m)
        for (Mask x = 0; x < nsub; ++x)
          if (nf.has(m, x))
            for (Mask y = 0; y < nsub; ++y)
              if ((x & y) == x && !nf.has(m, y))
                errs.push_back("B" + key.coal.str() + "+ not superset-closed");
    if (famc == 'B' && fc.b_intro)
      for (int m = 0; m < a.n; ++m)
        for (Mask x = 0; x < nsub; ++x)
          if (nf.has(m, x) && !nf.has(m, indicator(nf, x)))
            errs.push_back("B" + key.coal.str() + "+ violates introspection");
    // multiplicative combination (8)/(13)/(16), only when C|D is present
    bool mult = (famc == 'E' && fc.e_mult) || (famc == 'B' && fc.b_mult) ||
                (famc == 'O' && fc.o_mult);
    if (mult && !key.coal.is_corporate()) {
      for (const auto& [key2, nf2] : mo.npos) {
        if (key2.fam != famc || key2.coal.is_corporate()) continue;
        Coalition cd = disjoint_union(key.coal, key2.coal);
        const NFamily* target = pos_fam(famc, cd);
        if (!target) continue;
        for (int m = 0; m < a.n; ++m)
          for (Mask x = 0; x < nsub; ++x) {
            if (!nf.has(m, x)) continue;
            for (int w = 0; w < a.n; ++w)
              for (Mask y = 0; y < nsub; ++y)
                if (nf2.has(w, y) && !target->has(a.pr(m, w), a.up_prod(x, y)))
                  errs.push_back(std::string(1, famc) + key.coal.str() + "+ x " +
                                 key2.coal.str() +
                                 "+ violates multiplicative combination");
          }
      }
    }
  }

  const Mask womega = Mask(1) << a.omega;
  for (const auto& [key, nf] : mo.nneg) {
    if (key.fam == 'E' && fc.e_nec) {
      for (Mask x = 0; x < nsub; ++x)
        if ((x >> a.e & 1) && !nf.has(a.e, x))
          errs.push_back("E" + key.coal.str() +
                         "- misses an e-containing set at e");
    }
    if (key.fam == 'B' && fc.b_bot && !nf.has(a.e, womega))
      errs.push_back("B" + key.coal.str() + "- misses {omega} at e");
    if (key.fam == 'O' && fc.o_bot && !nf.has(a.e, womega))
      errs.push_back("O" + key.coal.str() + "- misses {omega} at e");
  }
  (void)neg_fam;
  return errs;
}

// ---------------------------------------------------------------------------
// Enumeration.  Algebras are generated exhaustively for n <= 4 and reduced
// to canonical representatives under carrier relabeling; the counts are
// pinned in the regression tests.
// ---------------------------------------------------------------------------

namespace detail {
// odometer over `cells` slots with `base` values each; calls fn per state
template <typename Fn>
void odometer(std::size_t cells, int base, Fn&& fn) {
  std::vector<int> state(cells, 0);
  while (true) {
    fn(state);
    std::size_t j = 0;
    while (j < cells && ++state[j] == base) state[j++] = 0;
    if (j == cells) break;
  }
}
}  // namespace detail

inline std::vector<ResourceAlgebra> enumerate_algebras(int n) {
  std::vector<ResourceAlgebra> out;
  if (n <= 0 || n > 4) return out;
  std::vector<std::string> seen;

  // omega is pinned to the last world; relabeling makes that harmless
  const int omega = n - 1;

  auto canonical = [&](const ResourceAlgebra& a) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
      std::string enc;
      enc += char('0' + perm[a.e]);
      enc += char('0' + perm[a.omega]);
      std::vector<int> m2(n * n), p2(n * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          m2[perm[x] * n + perm[y]] = perm[a.mt(x, y)];
          p2[perm[x] * n + perm[y]] = perm[a.pr(x, y)];
        }
      for (int v : m2) enc += char('0' + v);
      for (int v : p2) enc += char('0' + v);
      if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::vector<std::pair<int, int>> mcells;  // upper triangle
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) mcells.emplace_back(x, y);

  for (int e = 0; e < n; ++e) {
    detail::odometer(mcells.size(), n, [&](const std::vector<int>& mc) {
      ResourceAlgebra a;
      a.n = n;
      a.e = e;
      a.omega = omega;
      a.meet.assign(n * n, 0);
      for (int x = 0; x < n; ++x) a.meet[x * n + x] = x;
      for (std::size_t i = 0; i < mcells.size(); ++i) {
        auto [x, y] = mcells[i];
        a.meet[x * n + y] = a.meet[y * n + x] = mc[i];
      }
      for (int x = 0; x < n; ++x) {
        if (a.mt(x, omega) != x) return;
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (a.mt(a.mt(x, y), z) != a.mt(x, a.mt(y, z))) return;
      }
      // product cells not pinned by identity/absorption
      std::vector<std::pair<int, int>> pcells;
      for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
          if (x != e && y != e && x != omega && y != omega) pcells.emplace_back(x, y);
      detail::odometer(pcells.size(), n, [&](const std::vector<int>& pc) {
        a.prod.assign(n * n, 0);
        for (int x = 0; x < n; ++x) {
          a.prod[x * n + e] = a.prod[e * n + x] = x;
          a.prod[x * n + omega] = a.prod[omega * n + x] = omega;
        }
        for (std::size_t i = 0; i < pcells.size(); ++i) {
          auto [x, y] = pcells[i];
          a.prod[x * n + y] = a.prod[y * n + x] = pc[i];
        }
        if (!a.validate().empty()) return;
        std::string enc = canonical(a);
        if (std::find(seen.begin(), seen.end(), enc) == seen.end()) {
          seen.push_back(enc);
          out.push_back(a);
        }
      });
    });
  }
  return out;
}

// Visits every propositional model (algebra x filter valuations) of carrier
// size exactly n, for the given atoms.  Returns false if the visitor stopped.
template <typename Visit>
bool enumerate_propositional_models(int n, const std::vector<std::string>& atoms,
                                    Visit&& visit) {
  for (const auto& alg : enumerate_algebras(n)) {
    std::vector<Mask> fs;  // valuations must contain the greatest element
    for (Mask s : filters(alg))
      if (s >> alg.omega & 1) fs.push_back(s);
    const std::size_t k = atoms.size() * 2;
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      Model mo;
      mo.alg = alg;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        mo.vpos[atoms[i]] = fs[pick[2 * i]];
        mo.vneg[atoms[i]] = fs[pick[2 * i + 1]];
      }
      if (!visit(mo)) return false;
      std::size_t j = 0;
      while (j < k && ++pick[j] == fs.size()) pick[j++] = 0;
      if (j == k) break;
      if (k == 0) break;
    }
    if (k == 0) continue;
  }
  return true;
}

// Searches for a valid propositional model whose identity element verifies
// the tensor of the hypotheses but not the goal.
inline std::optional<Model> find_countermodel(const Sequent& s, int max_size) {
  F hyp;
  for (const auto& h : s.hyps) hyp = hyp ? tensor(hyp, h) : h;
  std::set<std::string> atom_set;
  for (const auto& h : s.hyps) collect_atoms(h, atom_set);
  collect_atoms(s.goal, atom_set);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

  std::optional<Model> found;
  for (int n = 1; n <= max_size && !found; ++n) {
    enumerate_propositional_models(n, atoms, [&](const Model& mo) {
      if (hyp && !holds_in_model(mo, hyp)) return true;
      if (holds_in_model(mo, s.goal)) return true;
      found = mo;
      return false;
    });
  }
  return found;
}

}  // namespace colog
