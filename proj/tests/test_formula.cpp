// Formula construction, printing, parsing, coalitions, and translations.

#include <catch2/catch_amalgamated.hpp>

#include "colog/parser.hpp"
#include "colog/transform.hpp"

using namespace colog;

TEST_CASE("printer and parser round-trip") {
  for (const char* text : {
           "p",
           "p * q",
           "p & q + r",
           "p -o q -o r",
           "(p -o q) -o r",
           "~(p & q)",
           "~p + q",
           "p * (q + r)",
           "1 * top -o bot",
           "B{1}p",
           "B{1,2}(p * q)",
           "O{2,3}E{2,3}(~r)",
           "B{1:1,2:1,1:0,3:0}(p * q)",
           "B{G}(p & q)",
       }) {
    F f = parse_formula(text);
    CHECK(eq(parse_formula(f->repr), f));
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("p * q + r")->repr == parse_formula("(p * q) + r")->repr);
  CHECK(parse_formula("p -o q -o r")->repr == parse_formula("p -o (q -o r)")->repr);
  CHECK(parse_formula("~p * q")->repr == parse_formula("(~p) * q")->repr);
  CHECK_FALSE(eq(parse_formula("(p -o q) -o r"), parse_formula("p -o q -o r")));
}

TEST_CASE("additive implication is sugar") {
  CHECK(eq(parse_formula("p ~> q"), parse_formula("~p + q")));
  CHECK(eq(parse_formula("p & q ~> r"), parse_formula("~(p & q) + r")));
}

TEST_CASE("coalitions normalize") {
  CHECK(parse_coalition_text("{2,1}").str() == "{1,2}");
  CHECK(parse_coalition_text("{G}").is_corporate());
  Coalition c = Coalition::of_agents({1, 2});
  Coalition d = Coalition::of_agents({3});
  CHECK(disjoint_union(c, d).str() == "{1,2,3}");
  Coalition o = Coalition::of_agents({1, 3});
  // overlapping members keep their marginal contribution via tags
  Coalition u = disjoint_union(c, o);
  CHECK(u.agents() == std::set<int>({1, 2, 3}));
  CHECK(u.str() == parse_coalition_text("{1:1,2:1,1:0,3:0}").str());
  CHECK_FALSE(u == disjoint_union(o, c));
}

TEST_CASE("negation normal form") {
  auto nnf = [](const char* s) { return to_nnf(parse_formula(s))->repr; };
  CHECK(nnf("~~p") == "p");
  CHECK(nnf("~(p * q)") == "~p * ~q");
  CHECK(nnf("~(p & q)") == "~p + ~q");
  CHECK(nnf("~(p + q)") == "~p & ~q");
  CHECK(nnf("~(p -o q)") == "p * ~q");
  CHECK(nnf("~1") == "bot");
  CHECK(nnf("~top") == "bot");
  CHECK(nnf("~bot") == "top");
  CHECK(nnf("~B{1}p") == "~B{1}p");  // negated modalities stay literal
  CHECK(nnf("~(B{1}p & B{1}q)") == "~B{1}p + ~B{1}q");
}

TEST_CASE("additive translation") {
  auto tr = [](const char* s) { return additive_translate(parse_classical(s))->repr; };
  CHECK(tr("p") == "p");
  CHECK(tr("-p") == "~p");
  CHECK(tr("p /\\ q") == "p & q");
  CHECK(tr("p \\/ q") == "p + q");
  CHECK(tr("(p /\\ q) -> r") == "~(p & q) + r");
  CHECK(tr("B{1}(-(p /\\ q))") == "B{1}~(p & q)");
}

TEST_CASE("classical erasure") {
  auto er = [](const char* s) { return to_classical(parse_formula(s))->repr; };
  CHECK(er("p * q") == er("p & q"));
  CHECK(er("p -o q") == "p -> q");
  CHECK(er("~p + q") == "-p \\/ q");
}

TEST_CASE("coalition collapse") {
  Coalition h = Coalition::of_agents({7});
  CHECK(collapse_coalitions(parse_formula("B{1,3}p"), h)->repr == "B{7}p");
  CHECK(collapse_coalitions(parse_formula("O{1,2}E{2,3}r"), h)->repr == "O{7}E{7}r");
  CHECK(collapse_coalitions(parse_formula("p"), h)->repr == "p");
}

TEST_CASE("additive fragment recognizer") {
  CHECK(is_additive(parse_formula("~(p & q) + r")));
  CHECK(is_additive(parse_formula("B{1}(p & q)")));
  CHECK_FALSE(is_additive(parse_formula("p * q")));
  CHECK_FALSE(is_additive(parse_formula("p -o q")));
  CHECK_FALSE(is_additive(parse_formula("B{1}(p * q)")));
  CHECK_FALSE(is_additive(parse_formula("1")));
}

TEST_CASE("complement toggles one outer negation") {
  CHECK(complement(parse_formula("p"))->repr == "~p");
  CHECK(complement(parse_formula("~p"))->repr == "p");
  CHECK(complement(parse_classical("p /\\ q"))->repr == "-(p /\\ q)");
  CHECK(complement(parse_classical("-(p /\\ q)"))->repr == "p /\\ q");
}

TEST_CASE("sequent parsing") {
  auto s = parse_sequent("p, p -o q |- q");
  REQUIRE(s.hyps.size() == 2);
  CHECK(s.hyps[1]->repr == "p -o q");
  CHECK(s.goal->repr == "q");
  auto t = parse_sequent("|- p -o p");
  CHECK(t.hyps.empty());
}
