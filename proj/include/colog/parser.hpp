// ============================================================================
// colog/parser.hpp — recursive-descent parser for both formula dialects
// ============================================================================
//
// Substructural dialect:
//
//   formula := add ( ('-o' | '~>') formula )?          right-assoc
//   add     := mult ( '+' add )?
//   mult    := unary ( ('*' | '&') mult )?
//   unary   := '~' unary | MOD '{' coalition '}' unary | primary
//   primary := ATOM | '1' | 'top' | 'bot' | '(' formula ')'
//
// Classical dialect:
//
//   formula := or ( '->' formula )?
//   or      := and ( '\/' or )?
//   and     := unary ( '/\' and )?
//   unary   := '-' unary | MOD '{' coalition '}' unary | primary
//   primary := ATOM | 'top' | 'bot' | '(' formula ')'
//
// Atoms match [a-z][a-zA-Z0-9_]* ('top' and 'bot' are reserved).  MOD is one
// of E, B, O, P (P only in the substructural dialect).  A coalition is 'G'
// or a comma list of occurrences `agent(:tagbits)?`, e.g. {1,2} or
// {1:1,2:1,1:0,3:0}.  A ~> B desugars to ~A + B at parse time.
//
// Sequents are written "Gamma |- phi" with Gamma a comma-separated,
// possibly empty multiset.
// ============================================================================

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "colog/formula.hpp"

namespace colog {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(const std::string& tok) {
    skip_ws();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  char peek_char() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !std::islower(static_cast<unsigned char>(s_[pos_])))
      fail("expected atom");
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected number");
    int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

inline Coalition parse_coalition(Cursor& c) {
  c.expect("{");
  if (c.eat("G")) {
    c.expect("}");
    return Coalition::corporate();
  }
  std::vector<Occurrence> occs;
  do {
    Occurrence o;
    o.agent = c.number();
    if (c.eat(":")) {
      while (std::isdigit(static_cast<unsigned char>(c.peek_char()))) {
        char d = c.peek_char();
        if (d != '0' && d != '1') c.fail("provenance tags are 0/1");
        c.eat(std::string(1, d));
        o.tags.push_back(d - '0');
      }
      if (o.tags.empty()) c.fail("expected provenance tags after ':'");
    }
    occs.push_back(std::move(o));
  } while (c.eat(","));
  c.expect("}");
  return Coalition::of_occurrences(std::move(occs));
}

inline bool peek_modal(Cursor& c, bool classical, Mod* out) {
  char ch = c.peek_char();
  switch (ch) {
    case 'E': *out = Mod::E; return true;
    case 'B': *out = Mod::B; return true;
    case 'O': *out = Mod::O; return true;
    case 'P':
      if (classical) return false;
      *out = Mod::P;
      return true;
    default: return false;
  }
}

// ---- substructural dialect ----

inline F parse_formula_impl(Cursor& c);

inline F parse_primary(Cursor& c) {
  if (c.eat("(")) {
    F f = parse_formula_impl(c);
    c.expect(")");
    return f;
  }
  if (c.eat("1")) return one();
  std::string name = c.ident();
  if (name == "top") return top();
  if (name == "bot") return bot();
  return atom(std::move(name));
}

inline F parse_unary(Cursor& c) {
  if (c.eat("~") && true) {
    // '~>' never reaches here: binary operators are consumed by callers
    return sneg(parse_unary(c));
  }
  Mod m;
  if (peek_modal(c, false, &m)) {
    c.eat(std::string(1, mod_letter(m)));
    Coalition coal = parse_coalition(c);
    return modal(m, std::move(coal), parse_unary(c));
  }
  return parse_primary(c);
}

inline F parse_mult(Cursor& c) {
  F lhs = parse_unary(c);
  if (c.eat("*")) return tensor(std::move(lhs), parse_mult(c));
  if (c.peek("&")) {
    c.eat("&");
    return with(std::move(lhs), parse_mult(c));
  }
  return lhs;
}

inline F parse_add(Cursor& c) {
  F lhs = parse_mult(c);
  if (c.eat("+")) return oplus(std::move(lhs), parse_add(c));
  return lhs;
}

inline F parse_formula_impl(Cursor& c) {
  F lhs = parse_add(c);
  if (c.eat("-o")) return lolli(std::move(lhs), parse_formula_impl(c));
  if (c.eat("~>")) return aimp(std::move(lhs), parse_formula_impl(c));
  return lhs;
}

// ---- classical dialect ----

inline CF parse_cformula_impl(Cursor& c);

inline CF parse_cprimary(Cursor& c) {
  if (c.eat("(")) {
    CF f = parse_cformula_impl(c);
    c.expect(")");
    return f;
  }
  std::string name = c.ident();
  if (name == "top") return cimp(catom("p0"), catom("p0"));  // rarely used; kept total
  if (name == "bot") return cand(catom("p0"), cneg(catom("p0")));
  return catom(std::move(name));
}

inline CF parse_cunary(Cursor& c) {
  if (c.eat("-") ) return cneg(parse_cunary(c));
  Mod m;
  if (peek_modal(c, true, &m)) {
    c.eat(std::string(1, mod_letter(m)));
    Coalition coal = parse_coalition(c);
    return cmodal(m, std::move(coal), parse_cunary(c));
  }
  return parse_cprimary(c);
}

inline CF parse_cand(Cursor& c) {
  CF lhs = parse_cunary(c);
  if (c.eat("/\\")) return cand(std::move(lhs), parse_cand(c));
  return lhs;
}

inline CF parse_cor(Cursor& c) {
  CF lhs = parse_cand(c);
  if (c.eat("\\/")) return cor(std::move(lhs), parse_cor(c));
  return lhs;
}

inline CF parse_cformula_impl(Cursor& c) {
  CF lhs = parse_cor(c);
  if (c.eat("->")) return cimp(std::move(lhs), parse_cformula_impl(c));
  return lhs;
}

}  // namespace detail

inline F parse_formula(const std::string& text) {
  detail::Cursor c(text);
  F f = detail::parse_formula_impl(c);
  if (!c.done()) c.fail("trailing input");
  return f;
}

// "{1,2}", "{G}", "{1:1,2:1,1:0}" on its own
inline Coalition parse_coalition_text(const std::string& text) {
  detail::Cursor c(text);
  Coalition coal = detail::parse_coalition(c);
  if (!c.done()) c.fail("trailing input");
  return coal;
}

inline CF parse_classical(const std::string& text) {
  detail::Cursor c(text);
  CF f = detail::parse_cformula_impl(c);
  if (!c.done()) c.fail("trailing input");
  return f;
}

// "Gamma |- phi": returns the hypothesis multiset and goal.
struct ParsedSequent {
  std::vector<F> hyps;
  F goal;
};

inline ParsedSequent parse_sequent(const std::string& text) {
  auto bar = text.find("|-");
  if (bar == std::string::npos) throw ParseError("sequent needs '|-': " + text);
  ParsedSequent s;
  std::string lhs = text.substr(0, bar);
  detail::Cursor c(lhs);
  if (!c.done()) {
    do {
      s.hyps.push_back(detail::parse_formula_impl(c));
    } while (c.eat(","));
    if (!c.done()) c.fail("trailing input before '|-'");
  }
  s.goal = parse_formula(text.substr(bar + 2));
  return s;
}

}  // namespace colog
