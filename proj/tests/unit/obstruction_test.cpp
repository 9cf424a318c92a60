#include "doctest.h"

#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/obstruction.hpp"
#include "polyaut/random.hpp"
#include "support.hpp"

using namespace polyaut;
using polyaut::testing::P;
using polyaut::testing::vars;

TEST_CASE("gradients") {
  auto c = vars("x,y,z");
  auto gp = gradient(P("x*y^2+z^2+1", c));
  REQUIRE(gp.size() == 3);
  CHECK(gp[0] == P("y^2", c));
  CHECK(gp[1] == P("2*x*y", c));
  CHECK(gp[2] == P("2*z", c));
  auto gq = gradient(P("x*y^2+z^2*y-z^2+y-1", c));
  CHECK(gq[0] == P("y^2", c));
  CHECK(gq[1] == P("2*x*y+z^2+1", c));
  CHECK(gq[2] == P("2*y*z-2*z", c));
  for (const auto& g : gradient(P("7", c))) CHECK(g.is_zero());
}

TEST_CASE("classification") {
  auto c = vars("x,y,z");
  CHECK(classify_gradient_zeros(P("x*y^2+z^2+1", c)).classification == ZeroSetClass::Infinite);
  CHECK(classify_gradient_zeros(P("x*y^2+z^2*y-z^2+y-1", c)).classification == ZeroSetClass::Empty);
  CHECK(classify_gradient_zeros(P("x^2+y^2+z^2", c)).classification == ZeroSetClass::Finite);
  auto constant = classify_gradient_zeros(P("3", c));
  CHECK(constant.degenerate_constant);
  CHECK(constant.classification == ZeroSetClass::Infinite);
  ObstructionOptions lex;
  lex.order = MonomialOrder::Kind::Lex;
  CHECK(classify_gradient_zeros(P("x*y^2+z^2*y-z^2+y-1", c), lex).classification == ZeroSetClass::Empty);
}

TEST_CASE("stabilization") {
  CHECK(stabilize(ZeroSetClass::Empty) == ZeroSetClass::Empty);
  CHECK(stabilize(ZeroSetClass::Finite) == ZeroSetClass::Infinite);
  CHECK(stabilize(ZeroSetClass::Infinite) == ZeroSetClass::Infinite);
}

TEST_CASE("certificates") {
  auto c = vars("x,y,z");
  auto p = P("x*y^2+z^2+1", c);
  auto q = P("x*y^2+z^2*y-z^2+y-1", c);
  auto r = inequivalence_certificate(p, q);
  REQUIRE(std::holds_alternative<Certificate>(r));
  const auto& cert = std::get<Certificate>(r);
  CHECK(cert.stable);
  CHECK(cert.deduction.find("stably inequivalent") != std::string::npos);
  CHECK(std::holds_alternative<NoCertificate>(inequivalence_certificate(p, p)));
  CHECK(std::holds_alternative<NoCertificate>(inequivalence_certificate(P("x", c), P("y", c))));

  auto finite = inequivalence_certificate(P("x^2+y^2+z^2", c), q);
  REQUIRE(std::holds_alternative<Certificate>(finite));
  CHECK(std::get<Certificate>(finite).stable);
  auto unstable = inequivalence_certificate(P("x^2+y^2+z^2", c), p);
  REQUIRE(std::holds_alternative<Certificate>(unstable));
  CHECK_FALSE(std::get<Certificate>(unstable).stable);
}

TEST_CASE("classification is invariant under tame automorphisms") {
  auto c = vars("x,y,z");
  RandomPolynomials rng(71);
  const std::vector<Polynomial> subjects{P("x*y^2+z^2+1", c), P("x*y^2+z^2*y-z^2+y-1", c)};
  for (int i = 0; i < 10; ++i) {
    auto alpha = rng.tame_automorphism(c, 2, 1);
    for (const auto& s : subjects) {
      auto image = substitute(s, alpha);
      CHECK(classify_gradient_zeros(image).classification == classify_gradient_zeros(s).classification);
      CHECK(std::holds_alternative<NoCertificate>(inequivalence_certificate(s, image)));
    }
  }
}

TEST_CASE("reports are stable text") {
  auto c = vars("x,y,z");
  auto text = classify_gradient_zeros(P("x*y^2+z^2+1", c)).to_report().to_text();
  CHECK(text.find("classification: Infinite") != std::string::npos);
  CHECK(text == classify_gradient_zeros(P("x*y^2+z^2+1", c)).to_report().to_text());
}
