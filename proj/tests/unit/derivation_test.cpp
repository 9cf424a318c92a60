#include "doctest.h"

#include "polyaut/derivation.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/random.hpp"
#include "support.hpp"

using namespace polyaut;
using polyaut::testing::P;
using polyaut::testing::vars;

TEST_CASE("derive examples") {
  auto c = vars("x,z");
  Derivation dz(c, {P("0", c), P("1", c)});
  CHECK(dz(P("z^2", c)) == P("2*z", c));
  CHECK(dz(P("x", c)).is_zero());
  Derivation swap(c, {P("z", c), P("x", c)});
  CHECK(swap(P("x*z", c)) == P("x^2 + z^2", c));
  CHECK(Derivation::partial(c, 1) == dz);
}

TEST_CASE("jacobian derivations") {
  auto c = vars("x,z");
  auto d = jacobian_derivation(P("x", c), "x", "z");
  CHECK(d.image(0).is_zero());
  CHECK(d.image(1) == P("1", c));
  auto d2 = jacobian_derivation(P("x^2", c), "x", "z");
  CHECK(d2.image(1) == P("2*x", c));
  auto c3 = vars("x,y,z");
  auto d3 = jacobian_derivation(P("x", c3), "x", "z");
  CHECK(d3.image(1).is_zero());
  CHECK(d3.image(2) == P("1", c3));
  CHECK_THROWS_AS(jacobian_derivation(P("x", c3), "x", "x"), PreconditionError);
}

TEST_CASE("nilpotency") {
  auto c = vars("x,z");
  auto dz = Derivation::partial(c, 1);
  auto r = nilpotency_index(dz, P("z^3", c), 10);
  REQUIRE(r.index);
  CHECK(*r.index == 4);

  auto d = jacobian_derivation(P("x^2", c), "x", "z");
  CHECK(d(P("z^2", c)) == P("4*x*z", c));
  CHECK(d(d(P("z^2", c))) == P("8*x^2", c));
  auto r2 = nilpotency_index(d, P("z^2", c));
  REQUIRE(r2.index);
  CHECK(*r2.index == 3);
  CHECK(r2.bound == std::optional<std::uint64_t>(3));
  CHECK(r2.within_bound());
  CHECK(r2.degree_dropped_each_step);

  Derivation euler(c, {P("x", c), P("0", c)});
  auto r3 = nilpotency_index(euler, P("x", c), 10);
  CHECK(r3.exceeded_cap());
  CHECK_THROWS_AS(nilpotency_index(euler, P("x", c)), PreconditionError);

  CHECK(*nilpotency_index(d, Polynomial(c)).index == 0);
}

TEST_CASE("degree drop") {
  auto c = vars("x,z");
  auto d = jacobian_derivation(P("x", c), "x", "z");
  CHECK(degree_drop_check(d, P("z^2", c)));
  CHECK(degree_drop_check(d, P("x^3", c)));
  auto d2 = jacobian_derivation(P("x^2", c), "x", "z");
  CHECK(d2(P("x*z + z^3", c)) == P("2*x*(x + 3*z^2)", c));
  CHECK(degree_drop_check(d2, P("x*z + z^3", c)));
  CHECK_FALSE(degree_drop_check(d2, Polynomial(c)));
  auto bad = jacobian_derivation(P("x*z", c), "x", "z");
  CHECK_THROWS_AS(degree_drop_check(bad, P("z", c)), PreconditionError);
}

TEST_CASE("chain rule factorization") {
  auto c = vars("x,z");
  auto st = vars("s,t");
  CHECK(chain_rule_factor_check(P("x", c), P("z", c), P("s^2", st), P("t", st), "x", "z"));
  CHECK(chain_rule_factor_check(P("x+z", c), P("z", c), P("s*t", st), P("s", st), "x", "z"));
  CHECK(jacobian_bracket(P("(x+z)*z", c), P("x+z", c), 0, 1) == P("-x-z", c));
}

TEST_CASE("slices and kernels") {
  auto c = vars("x,z");
  auto dz = Derivation::partial(c, 1);
  CHECK(has_slice(dz, P("z", c)));
  CHECK(in_kernel(dz, P("x", c)));
  CHECK_FALSE(has_slice(dz, P("2*z", c)));
  auto e = extend_derivation(dz, "t");
  CHECK(e.context()->size() == 3);
  CHECK(in_kernel(e, P("t", e.context())));
  CHECK(has_slice(e, P("z", e.context())));
  CHECK(*nilpotency_index(e, P("t", e.context()), 5).index == 1);
  auto e2 = extend_derivation(e, "w");
  CHECK(in_kernel(e2, P("t", e2.context())));
  CHECK(in_kernel(e2, P("w", e2.context())));
  CHECK_THROWS_AS(extend_derivation(e, "z"), PreconditionError);
}

TEST_CASE("derivation properties on random inputs") {
  auto c = vars("x,y,z");
  RandomPolynomials rng(51);
  RandomPolySpec spec;
  spec.max_degree = 3;
  for (int i = 0; i < 60; ++i) {
    Derivation d(c, {rng.polynomial(c, spec), rng.polynomial(c, spec), rng.polynomial(c, spec)});
    auto a = rng.polynomial(c, spec);
    auto b = rng.polynomial(c, spec);
    CHECK(d(a * b) == d(a) * b + a * d(b));
    CHECK(d(a + b) == d(a) + d(b));

    // Kernel of a derivation is a subring.
    RandomPolySpec free_spec = spec;
    free_spec.vars = {0, 1};
    auto q = rng.polynomial(c, free_spec);
    auto j = jacobian_derivation(q, "x", "z");
    auto k1 = rng.polynomial(c, free_spec);
    auto k2 = q * q + k1 * 0;
    if (in_kernel(j, k1) && in_kernel(j, k2)) {
      CHECK(in_kernel(j, k1 * k2));
      CHECK(in_kernel(j, k1 + k2));
    }
    CHECK(in_kernel(j, q));
  }
}
