// Judgment aggregation: majority voting, coalition-indexed majorities, the
// two-step operator, and preservation of consistency.

#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "colog/aggregation.hpp"
#include "colog/json_io.hpp"
#include "colog/parser.hpp"

using namespace colog;

namespace {

CF cf(const char* s) { return to_classical(parse_formula(s)); }

std::vector<CF> cfs(std::initializer_list<const char*> xs) {
  std::vector<CF> out;
  for (auto* s : xs) out.push_back(cf(s));
  return out;
}

std::vector<std::string> reprs(const std::vector<CF>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f->repr);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> reprs(const std::vector<F>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f->repr);
  std::sort(out.begin(), out.end());
  return out;
}

// The propositional doctrinal profile: three judges, premises p and q,
// doctrine (p and q) -> r, conclusion r.
Profile doctrinal_profile() {
  Profile p;
  p.agenda = close_agenda(cfs({"p", "q", "p & q", "p & q -o r", "r"}));
  p.judgments = {
      cfs({"p", "q", "p & q", "p & q -o r", "r"}),
      cfs({"~p", "q", "~(p & q)", "p & q -o r", "~r"}),
      cfs({"p", "~q", "~(p & q)", "p & q -o r", "~r"}),
  };
  return p;
}

Profile belief_profile() {
  Profile p;
  // the belief agenda pairs B_i(body) with the inner complement B_i(~body)
  for (int i = 1; i <= 3; ++i)
    for (const char* b : {"p", "q", "p & q"}) {
      F body = parse_formula(b);
      Coalition c = Coalition::of_agents({i});
      p.agenda.issues.push_back({to_classical(modal(Mod::B, c, body)),
                                 to_classical(modal(Mod::B, c, sneg(body)))});
    }
  p.judgments = {
      cfs({"B{1}p", "B{1}q", "B{1}(p & q)"}),
      cfs({"B{2}(~p)", "B{2}q", "B{2}(~(p & q))"}),
      cfs({"B{3}p", "B{3}(~q)", "B{3}(~(p & q))"}),
  };
  return p;
}

}  // namespace

TEST_CASE("majority threshold") {
  CHECK(majority_threshold(3) == 2);
  CHECK(majority_threshold(5) == 3);
  CHECK(majority_threshold(7) == 4);
}

TEST_CASE("agenda closure pairs each formula with its outer negation") {
  Agenda a = close_agenda(cfs({"p", "~p", "p & q"}));
  REQUIRE(a.issues.size() == 2);  // ~p folds into the first issue
  CHECK(a.issues[0].accepted->repr == "p");
  CHECK(a.issues[0].rejected->repr == "-p");
  CHECK(a.issue_of(cf("~(p & q)")).has_value());
  CHECK_FALSE(a.issue_of(cf("r")).has_value());
}

TEST_CASE("doctrinal majority is the discursive dilemma") {
  Profile p = doctrinal_profile();
  p.validate();
  CHECK(supporters(p, cf("p")) == std::vector<int>{1, 3});
  CHECK(supporters(p, cf("q")) == std::vector<int>{1, 2});
  auto maj = majority(p);
  CHECK(reprs(additive_image(maj)) ==
        std::vector<std::string>({"p", "q", "~(p & q)", "~(p & q) + r", "~r"}));
  // majority output is classically inconsistent but additively consistent
  CHECK(classical_consistent(maj, ClassicalLogicId::CL) == Tri::No);
  CHECK(set_consistent_additive(additive_image(maj), ModalLogicId::ILLs).consistent
        == Tri::Yes);
}

TEST_CASE("doctrinal variant with a different second judge") {
  // same agenda, second judge accepts p and rejects q; the displayed
  // majority subset {p, q, (p /\ q) -> r, -r} must be included
  Profile p;
  p.agenda = close_agenda(cfs({"p", "q", "p & q", "p & q -o r", "r"}));
  p.judgments = {
      cfs({"p", "q", "p & q", "p & q -o r", "r"}),
      cfs({"p", "~q", "~(p & q)", "p & q -o r", "~r"}),
      cfs({"~p", "q", "~(p & q)", "p & q -o r", "~r"}),
  };
  auto maj = majority(p);
  for (const char* want : {"p", "q", "p & q -o r", "~r"}) {
    CF f = cf(want);
    CHECK(std::any_of(maj.begin(), maj.end(), [&](const CF& g) { return ceq(g, f); }));
  }
}

TEST_CASE("majority is anonymous and neutral") {
  Profile p = doctrinal_profile();
  auto base = reprs(majority(p));
  std::swap(p.judgments[0], p.judgments[2]);
  CHECK(reprs(majority(p)) == base);  // anonymity
  // neutrality: complementing every judgment complements the outcome
  Profile q = doctrinal_profile();
  for (auto& j : q.judgments)
    for (auto& f : j) {
      auto idx = q.agenda.issue_of(f);
      REQUIRE(idx);
      const Issue& is = q.agenda.issues[*idx];
      f = ceq(f, is.accepted) ? is.rejected : is.accepted;
    }
  auto flipped = majority(q);
  for (const auto& f : majority(p)) {
    auto idx = p.agenda.issue_of(f);
    const Issue& is = p.agenda.issues[*idx];
    CF comp = ceq(f, is.accepted) ? is.rejected : is.accepted;
    CHECK(std::any_of(flipped.begin(), flipped.end(),
                      [&](const CF& g) { return ceq(g, comp); }));
  }
}

TEST_CASE("coalition majorities collect the exact supporters") {
  Profile p = belief_profile();
  auto out = majority_coalitions(p);
  CHECK(reprs(additive_image(out)) ==
        std::vector<std::string>({"B{1,2}q", "B{1,3}p", "B{2,3}~(p & q)"}));
  // classically unacceptable once collapsed to one agent, additively fine
  CHECK(set_consistent_additive(additive_image(out), ModalLogicId::BILLs).consistent
        == Tri::Yes);
  std::vector<CF> collapsed;
  for (const auto& f : additive_image(out))
    collapsed.push_back(to_classical(collapse_coalitions(f, fresh_collapse_coalition())));
  CHECK(classical_consistent(collapsed, ClassicalLogicId::BCL) == Tri::No);
}

TEST_CASE("deductive closure over sub-multisets") {
  std::vector<F> accepted = {parse_formula("p"), parse_formula("q"),
                             parse_formula("p * q -o r")};
  std::vector<F> candidates = {parse_formula("p * q"), parse_formula("r"),
                               parse_formula("s")};
  auto closed = deductive_closure(accepted, candidates, ModalLogicId::ILLs);
  CHECK(reprs(closed) ==
        std::vector<std::string>({"p", "p * q", "p * q -o r", "q", "r"}));
}

TEST_CASE("two-step conclusion reading leaves the majority as is") {
  Profile p = doctrinal_profile();
  TwoStepSpec spec;
  auto r = two_step(p, spec);
  CHECK(reprs(r.outcome) ==
        std::vector<std::string>({"p", "q", "~(p & q)", "~(p & q) + r", "~r"}));
  CHECK_FALSE(r.conflict);
  CHECK(r.warnings.empty());
}

TEST_CASE("two-step premise reading derives the conclusion") {
  Profile p = doctrinal_profile();
  // restrict to the premise issues
  p.agenda.issues.resize(3);
  for (auto& j : p.judgments) j.resize(3);
  TwoStepSpec spec;
  spec.constraints = {parse_formula("p * q -o r")};
  spec.conclusions = {parse_formula("p * q"), parse_formula("r"), parse_formula("~r")};
  auto r = two_step(p, spec);
  CHECK(reprs(r.outcome) ==
        std::vector<std::string>(
            {"p", "p * q", "p * q -o r", "q", "r", "~(p & q)"}));
  CHECK(reprs(r.derived) == std::vector<std::string>({"p * q", "r"}));
  CHECK_FALSE(r.conflict);
}

TEST_CASE("constraints overlapping the agenda are rejected") {
  Profile p = doctrinal_profile();
  TwoStepSpec spec;
  spec.constraints = {parse_formula("r")};
  CHECK_THROWS_AS(two_step(p, spec), std::invalid_argument);
  TwoStepSpec spec2;
  spec2.conclusions = {parse_formula("~p")};
  CHECK_THROWS_AS(two_step(p, spec2), std::invalid_argument);
}

TEST_CASE("median-property warning") {
  // constraints can introduce a three-element minimal inconsistent subset:
  // {p, p -o q, q -o bot} is inconsistent while each pair is fine
  Profile p;
  p.agenda = close_agenda(cfs({"p"}));
  p.judgments = {cfs({"p"}), cfs({"p"}), cfs({"~p"})};
  TwoStepSpec spec;
  spec.constraints = {parse_formula("p -o q"), parse_formula("q -o bot")};
  auto r = two_step(p, spec);
  REQUIRE_FALSE(r.warnings.empty());

  // the plain doctrinal agenda keeps the median property
  Profile q = doctrinal_profile();
  auto rq = two_step(q, TwoStepSpec{});
  CHECK(rq.warnings.empty());
}

TEST_CASE("attitude conflict detection") {
  std::string w;
  CHECK(attitude_conflict(
      {parse_formula("O{1,2,3}E{1,2,3}r"), parse_formula("O{2,3}E{2,3}(~r)")}, w));
  CHECK(w.find("//") != std::string::npos);
  CHECK_FALSE(attitude_conflict(
      {parse_formula("B{G}(p * q)"), parse_formula("B{2,3}(~(p & q))")}, w));
  CHECK(attitude_conflict({parse_formula("r"), parse_formula("~r")}, w));
}

TEST_CASE("profile validation") {
  Profile p = doctrinal_profile();
  p.judgments.pop_back();
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);  // even count
  Profile q = doctrinal_profile();
  q.judgments[0].push_back(cf("s"));
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);  // outside agenda
}

TEST_CASE("rational judgment sets over the doctrinal agenda") {
  Agenda a = close_agenda(cfs({"p", "q", "p & q", "p & q -o r", "r"}));
  auto sets = rational_judgment_sets(a, ClassicalLogicId::CL);
  CHECK(sets.size() == 8);
  for (const auto& j : sets) {
    CHECK(j.size() == a.issues.size());
    CHECK(classical_consistent(j, ClassicalLogicId::CL) == Tri::Yes);
  }
}

TEST_CASE("majority preserves additive consistency on the doctrinal agenda") {
  Agenda a = close_agenda(cfs({"p", "q", "p & q"}));
  auto rep = check_majority_preservation(a, 3, ModalLogicId::ILLs, false);
  CHECK(rep.rational_sets == 4);
  CHECK(rep.profiles == 64);
  CHECK(rep.failures == 0);
}
