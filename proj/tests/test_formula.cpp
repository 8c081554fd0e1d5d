#include "doctest.h"
#include "helpers.hpp"
#include "tempknow/formula.hpp"

using namespace tempknow;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
}  // namespace

TEST_CASE("desugar rewrites the knowledge operators into the S-core") {
  CHECK(desugar(Formula::k1(p)) == Formula::since(p, p));
  CHECK(desugar(Formula::k2(p)) ==
        Formula::negation(
            Formula::since(Formula::truth(), Formula::negation(p))));
  CHECK(desugar(Formula::k_param(q, p)) == Formula::since(p, q));
  CHECK(desugar(Formula::diamond_past(p)) ==
        Formula::since(Formula::truth(), p));
  CHECK(desugar(Formula::box_past(p)) ==
        Formula::negation(
            Formula::since(Formula::truth(), Formula::negation(p))));
  // Identity on core formulas.
  CHECK(desugar(Formula::since(p, q)) == Formula::since(p, q));
}

TEST_CASE("desugar rejects KALL") {
  CHECK_THROWS_AS(desugar(Formula::k_all(p)), kall_error);
  CHECK_THROWS_AS(desugar(Formula::conjunction(p, Formula::k_all(p))),
                  kall_error);
}

TEST_CASE("desugar is idempotent on random formulas") {
  testutil::Rng rng(101);
  std::vector<std::string> names{"p", "q", "r"};
  for (int i = 0; i < 500; ++i) {
    Formula f = testutil::random_formula(rng, 4, names, testutil::Fragment::Past);
    Formula once = desugar(f);
    CHECK(desugar(once) == once);
  }
}

TEST_CASE("substitution application is simultaneous") {
  Substitution swap;
  swap.set("x", Formula::atom("y"));
  swap.set("y", Formula::atom("x"));
  Formula f = Formula::conjunction(Formula::atom("x"), Formula::atom("y"));
  CHECK(apply_substitution(swap, f) ==
        Formula::conjunction(Formula::atom("y"), Formula::atom("x")));

  Substitution top;
  top.set("x", Formula::truth());
  Formula g = Formula::since(Formula::atom("x"), Formula::atom("x"));
  CHECK(apply_substitution(top, g) ==
        Formula::since(Formula::truth(), Formula::truth()));

  CHECK(apply_substitution(Substitution{}, g) == g);
}

TEST_CASE("substitution composition law on random formulas") {
  testutil::Rng rng(102);
  std::vector<std::string> names{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    Substitution sigma, tau;
    for (const auto& name : names) {
      if (testutil::pick(rng, 2)) {
        sigma.set(name, testutil::random_formula(rng, 2, names,
                                                 testutil::Fragment::Past));
      }
      if (testutil::pick(rng, 2)) {
        tau.set(name, testutil::random_formula(rng, 2, names,
                                               testutil::Fragment::Past));
      }
    }
    Formula f = testutil::random_formula(rng, 3, names, testutil::Fragment::Past);
    CHECK(apply_substitution(sigma, apply_substitution(tau, f)) ==
          apply_substitution(compose(sigma, tau), f));
  }
}

TEST_CASE("subformula closure lists children before parents, no duplicates") {
  CHECK(subformula_closure(p) == std::vector<Formula>{p});
  CHECK(subformula_closure(Formula::since(p, q)) ==
        std::vector<Formula>{p, q, Formula::since(p, q)});
  Formula twice = Formula::conjunction(p, p);
  CHECK(subformula_closure(twice) == std::vector<Formula>{p, twice});
}

TEST_CASE("closure size is bounded by the node count") {
  testutil::Rng rng(103);
  std::vector<std::string> names{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    Formula f = testutil::random_formula(rng, 4, names, testutil::Fragment::Past);
    Formula core = desugar(f);
    auto closure = subformula_closure(core);
    CHECK(closure.size() <= core.node_count());
    // Children precede parents.
    for (std::size_t j = 0; j < closure.size(); ++j) {
      if (closure[j].is_leaf()) continue;
      std::size_t li = 0, ri = 0;
      for (std::size_t k = 0; k < j; ++k) {
        if (closure[k] == closure[j].lhs()) li = 1;
        if (is_binary(closure[j].kind()) && closure[k] == closure[j].rhs())
          ri = 1;
      }
      CHECK(li == 1);
      if (is_binary(closure[j].kind())) CHECK(ri == 1);
    }
  }
}

TEST_CASE("letters") {
  CHECK(letters(Formula::conjunction(p, q)) ==
        std::set<std::string>{"p", "q"});
  CHECK(letters(Formula::truth()).empty());
  CHECK(letters(Formula::disjunction(Formula::k1(p), p)) ==
        std::set<std::string>{"p"});
}

TEST_CASE("desugaring introduces no letters beyond the original ones") {
  testutil::Rng rng(104);
  std::vector<std::string> names{"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    Formula f = testutil::random_formula(rng, 4, names, testutil::Fragment::Past);
    auto before = letters(f);
    auto after = letters(desugar(f));
    for (const auto& name : after) CHECK(before.count(name) == 1);
  }
}

TEST_CASE("ground substitutions") {
  Substitution ground;
  ground.set("x", Formula::truth());
  ground.set("y", Formula::falsity());
  CHECK(ground.is_ground());
  ground.set("z", Formula::atom("w"));
  CHECK_FALSE(ground.is_ground());
}
