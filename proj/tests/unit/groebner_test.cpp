#include "doctest.h"

#include "oracles.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/groebner.hpp"
#include "polyaut/random.hpp"
#include "support.hpp"

using namespace polyaut;
using polyaut::testing::P;
using polyaut::testing::vars;

namespace {

GroebnerBasis gb(std::vector<Polynomial> gens, MonomialOrder::Kind kind = MonomialOrder::Kind::GradedRevLex) {
  const auto ctx = gens.front().context();
  MonomialOrder order(kind, [&] {
    std::vector<std::size_t> p(ctx->size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return p;
  }());
  return buchberger(Ideal(std::move(gens), order));
}

testing::SparsePoly sparse(const Polynomial& p) {
  testing::SparsePoly out;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
    out.push_back({e, t.coeff});
  }
  return out;
}

}  // namespace

TEST_CASE("small bases") {
  auto c = vars("x,y,z");
  auto bx = gb({P("x", c)});
  REQUIRE(bx.elements().size() == 1);
  CHECK(bx.elements()[0] == P("x", c));
  CHECK(gb({P("x", c), P("x+1", c)}).is_unit());
  CHECK(gb({P("2*x^2+4", c)}).elements()[0] == P("x^2+2", c));
}

TEST_CASE("gradient of q generates the unit ideal") {
  auto c = vars("x,y,z");
  std::vector<Polynomial> g{P("y^2", c), P("2*x*y+z^2+1", c), P("2*y*z-2*z", c)};
  for (auto kind : {MonomialOrder::Kind::Lex, MonomialOrder::Kind::GradedLex, MonomialOrder::Kind::GradedRevLex}) {
    auto b = gb(g, kind);
    CHECK(b.is_unit());
    CHECK(is_variety_empty(b));
    CHECK(ideal_dimension(b) == -1);
  }
  // Independent hand certificate: 1 lies in the ideal with these multipliers.
  // y*(2xy+z^2+1) - 2x*y^2 = y*(z^2+1); with 2yz-2z = 2z(y-1) this pins y.
  auto b = gb(g);
  CHECK(ideal_membership(P("y^3", c), b));
  CHECK(ideal_membership(P("1", c), b));
}

TEST_CASE("membership") {
  auto c = vars("x,y,z");
  auto bx = gb({P("x", c)});
  CHECK(ideal_membership(P("x^2+x", c), bx));
  CHECK_FALSE(ideal_membership(P("1", c), bx));
  CHECK(normal_form(P("x*y + y + 3", c), bx) == P("y + 3", c));
}

TEST_CASE("varieties and dimension") {
  auto c = vars("x,y,z");
  auto gp = gb({P("y^2", c), P("2*x*y", c), P("2*z", c)});
  CHECK_FALSE(is_variety_empty(gp));
  CHECK(ideal_dimension(gp) == 1);
  CHECK(ideal_dimension(gb({P("y", c), P("z", c)})) == 1);
  CHECK(ideal_dimension(gb({P("2*x", c), P("2*y", c), P("2*z", c)})) == 0);
  auto cx = vars("x");
  CHECK_FALSE(is_variety_empty(gb({P("x^2+1", cx)})));
  CHECK(ideal_dimension(gb({P("x^2+1", cx)})) == 0);
}

TEST_CASE("watchdog raises instead of answering") {
  auto c = vars("x,y,z");
  GroebnerLimits tight;
  tight.max_pairs = 1;
  std::vector<Polynomial> g{P("y^2", c), P("2*x*y+z^2+1", c), P("2*y*z-2*z", c)};
  CHECK_THROWS_AS(buchberger(Ideal(g, MonomialOrder::grevlex(3)), tight), ResourceLimitExceeded);
  GroebnerLimits low_degree;
  low_degree.max_degree = 2;
  CHECK_THROWS_AS(buchberger(Ideal(g, MonomialOrder::grevlex(3)), low_degree), ResourceLimitExceeded);
}

TEST_CASE("random ideals: criterion, order independence, membership oracle") {
  auto c = vars("x,y,z");
  RandomPolynomials rng(61);
  RandomPolySpec spec;
  spec.max_degree = 2;
  spec.max_terms = 3;
  spec.coeff_bound = 3;
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> gens;
    const int count = rng.integer(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(rng.nonconstant(c, spec));
    auto a = gb(gens, MonomialOrder::Kind::GradedRevLex);
    auto b = gb(gens, MonomialOrder::Kind::Lex);
    CHECK(satisfies_buchberger_criterion(a));
    CHECK(satisfies_buchberger_criterion(b));
    CHECK(same_ideal(a, b));
    CHECK(a.is_unit() == b.is_unit());
    CHECK(ideal_dimension(a) == ideal_dimension(b));
    for (const auto& g : gens) CHECK(ideal_membership(g, a));

    std::vector<testing::SparsePoly> sg;
    for (const auto& g : gens) sg.push_back(sparse(g));

    // Constructed members.
    Polynomial member(c);
    RandomPolySpec mult = spec;
    for (const auto& g : gens) member += rng.polynomial(c, mult) * g;
    CHECK(ideal_membership(member, a));
    CHECK(testing::combination_exists(sparse(member), sg, 3, 2));

    // Arbitrary candidates: an oracle witness forces membership, and a
    // non-member never has a witness.
    for (int t = 0; t < 3; ++t) {
      auto f = rng.polynomial(c, spec);
      const bool in = ideal_membership(f, a);
      for (unsigned d = 0; d <= 4; ++d) {
        const bool found = testing::combination_exists(sparse(f), sg, 3, d);
        if (found) CHECK(in);
        if (!in) CHECK_FALSE(found);
      }
    }
  }
}
