#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "polyaut/errors.hpp"
#include "polyaut/jacobian.hpp"
#include "polyaut/random.hpp"
#include "support.hpp"

using namespace polyaut;
using polyaut::testing::P;
using polyaut::testing::vars;

namespace {

PolyMatrix jac(std::vector<Polynomial> fs, std::vector<std::string> names) {
  return jacobian_matrix(fs, std::span<const std::string>(names));
}

}  // namespace

TEST_CASE("jacobian matrices") {
  auto c = vars("x,y,z");
  auto m = jac({P("x^2", c), P("y", c)}, {"x", "y"});
  CHECK(m.at(0, 0) == P("2*x", c));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(1, 0).is_zero());
  CHECK(m.at(1, 1) == P("1", c));
  CHECK_FALSE(minors_vanish(m, 2));
  CHECK(determinant(m) == P("2*x", c));

  auto zx = jac({P("z", c), P("x*z", c)}, {"x", "z"});
  CHECK(zx.at(0, 0).is_zero());
  CHECK(zx.at(0, 1) == P("1", c));
  CHECK(zx.at(1, 0) == P("z", c));
  CHECK(zx.at(1, 1) == P("x", c));

  CHECK(minors_vanish(jac({P("x", c), P("x^2", c)}, {"x", "y"}), 2));
  CHECK_THROWS_AS(minors_vanish(m, 3), PreconditionError);
  CHECK_THROWS_AS(minors_vanish(m, 0), PreconditionError);
}

TEST_CASE("specialization factor") {
  auto c = vars("x,y,z");
  auto f = specialization_factor(c, 0, 1, 4, 3);
  CHECK(f.rows() == 3);
  CHECK(f.cols() == 2);
  CHECK(f.at(0, 0) == P("1", c));
  CHECK(f.at(1, 1) == P("1", c));
  CHECK(f.at(2, 0) == P("4*x^3*y^3", c));
  CHECK(f.at(2, 1) == P("3*x^4*y^2", c));
}

TEST_CASE("minors of D(z, x z)") {
  auto c = vars("x,y,z");
  std::vector<Polynomial> fs{P("z", c), P("x*z", c)};
  auto d = jacobian_matrix(fs);
  // Hand expansion: cols (x,y) -> 0, (x,z) -> 0*x - 1*z, (y,z) -> 0.
  CHECK_FALSE(minors_vanish(d, 2));
  auto w = first_nonzero_minor(d, 2);
  REQUIRE(w);
  CHECK(w->cols == std::vector<std::size_t>{0, 2});
  CHECK(w->value == P("-z", c));
}

TEST_CASE("dependence") {
  auto c = vars("x,y,z");
  std::vector<Polynomial> a{P("x+y", c), P("(x+y)^2", c)};
  std::vector<Polynomial> b{P("x", c), P("y", c)};
  std::vector<Polynomial> d{P("z", c), P("x*z", c)};
  std::vector<Polynomial> four{P("x", c), P("y", c), P("z", c), P("x*y", c)};
  CHECK(algebraically_dependent(a));
  CHECK_FALSE(algebraically_dependent(b));
  CHECK_FALSE(algebraically_dependent(d));
  CHECK(algebraically_dependent(four));
}

TEST_CASE("good constant search") {
  auto c = vars("x,y,z");
  auto r = find_good_constant(P("z", c), P("x*z", c), 3, 3, 10);
  CHECK(r.constant == 0);
  // det of D(x^3 y^3 + c, x^4 y^3 + c x) w.r.t. (x, y) is -3 x^6 y^5 - 3 c x^3 y^2.
  CHECK(r.witness.value == P("-3*x^6*y^5", c));

  CHECK(find_good_constant(P("z", c), P("x", c), 1, 1, 10).constant == 0);

  // v specializes to c*y, so c = 0 collapses the pair.
  auto fixture = find_good_constant(P("x", c), P("y*z - x*y^2", c), 1, 1, 10);
  CHECK(fixture.constant == 1);
  CHECK(fixture.candidates_tried == 2);
  CHECK_THROWS_AS(find_good_constant(P("x", c), P("y*z - x*y^2", c), 1, 1, 0), ResourceLimitExceeded);
  CHECK_THROWS_AS(find_good_constant(P("x", c), P("x^2", c), 1, 1, 10), PreconditionError);
}

TEST_CASE("specialization factorization on random pairs") {
  auto c = vars("x,y,z");
  RandomPolynomials rng(31);
  RandomPolySpec spec;
  spec.max_degree = 3;
  for (int i = 0; i < 30; ++i) {
    auto u = rng.polynomial(c, spec);
    auto v = rng.polynomial(c, spec);
    CHECK(specialization_factorization_holds(u, v, static_cast<unsigned>(rng.integer(1, 3)),
                                             static_cast<unsigned>(rng.integer(1, 3)), rng.integer(-2, 2)));
  }
}

TEST_CASE("vanishing of minors is invariant under row and column permutations") {
  auto c = vars("x,y,z");
  RandomPolynomials rng(32);
  RandomPolySpec spec;
  spec.max_degree = 2;
  spec.max_terms = 3;
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> fs{rng.polynomial(c, spec), rng.polynomial(c, spec)};
    if (i % 4 == 0) fs[1] = fs[0] * fs[0];
    auto m = jacobian_matrix(fs);
    std::vector<std::size_t> rows{1, 0};
    std::vector<std::size_t> cols{2, 0, 1};
    auto pm = m.permuted(rows, cols);
    for (std::size_t k = 1; k <= 2; ++k) CHECK(minors_vanish(m, k) == minors_vanish(pm, k));
  }
}
