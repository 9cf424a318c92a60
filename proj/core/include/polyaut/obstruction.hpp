#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyaut/groebner.hpp"
#include "polyaut/polynomial.hpp"
#include "polyaut/report.hpp"

namespace polyaut {

/// Size of a zero set over the algebraic closure.
enum class ZeroSetClass { Empty, Finite, Infinite };

std::string_view to_string(ZeroSetClass c);

/// Class of Z x A^1 given the class of Z: Empty stays Empty, any nonempty
/// set becomes Infinite.
ZeroSetClass stabilize(ZeroSetClass c) noexcept;

struct ObstructionOptions {
  MonomialOrder::Kind order = MonomialOrder::Kind::GradedRevLex;
  GroebnerLimits limits{};
};

struct ObstructionReport {
  Polynomial subject;
  std::vector<Polynomial> gradient;
  ZeroSetClass classification;
  GroebnerBasis basis;
  int dimension;
  /// Constant subject: the gradient vanishes identically.
  bool degenerate_constant;

  Report to_report() const;
};

/// Partial derivatives in context order.
std::vector<Polynomial> gradient(const Polynomial& p);

/// Classifies the common zeros of grad(p): Empty iff the reduced basis is
/// {1}, Finite iff the ideal has dimension 0, Infinite otherwise.
/// Propagates ResourceLimitExceeded from the Groebner watchdog.
ObstructionReport classify_gradient_zeros(const Polynomial& p, const ObstructionOptions& options = {});

struct Certificate {
  ObstructionReport first;
  ObstructionReport second;
  /// Also inequivalent after adding variables.
  bool stable;
  std::string deduction;
};

/// Carries no information about equivalence; only records why no
/// certificate could be issued.
struct NoCertificate {
  ObstructionReport first;
  ObstructionReport second;
  std::string reason;
};

using CertificateResult = std::variant<Certificate, NoCertificate>;

/// The class of grad's zero set is preserved by automorphisms of the ambient
/// affine space, so differing classes prove p and q inequivalent. When the
/// stabilized classes differ as well the certificate is marked stable.
CertificateResult inequivalence_certificate(const Polynomial& p, const Polynomial& q,
                                            const ObstructionOptions& options = {});

Report certificate_report(const CertificateResult& result);

}  // namespace polyaut
