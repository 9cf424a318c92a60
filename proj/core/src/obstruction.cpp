#include "polyaut/obstruction.hpp"

#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"

namespace polyaut {

std::string_view to_string(ZeroSetClass c) {
  switch (c) {
    case ZeroSetClass::Empty: return "Empty";
    case ZeroSetClass::Finite: return "Finite";
    case ZeroSetClass::Infinite: return "Infinite";
  }
  return "?";
}

ZeroSetClass stabilize(ZeroSetClass c) noexcept {
  return c == ZeroSetClass::Empty ? ZeroSetClass::Empty : ZeroSetClass::Infinite;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < p.vars().size(); ++v) out.push_back(p.partial(v));
  return out;
}

ObstructionReport classify_gradient_zeros(const Polynomial& p, const ObstructionOptions& options) {
  const auto& ctx = p.context();
  auto grad = gradient(p);
  const MonomialOrder order(options.order, MonomialOrder::grevlex(ctx->size()).priority());
  GroebnerBasis basis = buchberger(Ideal(ctx, grad, order), options.limits);
  const int dim = ideal_dimension(basis);
  ZeroSetClass cls = dim < 0 ? ZeroSetClass::Empty : dim == 0 ? ZeroSetClass::Finite : ZeroSetClass::Infinite;
  return ObstructionReport{p, std::move(grad), cls, std::move(basis), dim, p.is_constant()};
}

Report ObstructionReport::to_report() const {
  Report r;
  r.add("subject", format_polynomial(subject));
  std::vector<std::string> grad;
  for (const auto& g : gradient) grad.push_back(format_polynomial(g));
  r.add("gradient", std::move(grad));
  r.add("classification", std::string(to_string(classification)));
  std::vector<std::string> elements;
  for (const auto& e : basis.elements()) elements.push_back(format_polynomial(e));
  r.add("basis", std::move(elements));
  r.add("order", basis.order().describe(*basis.context()));
  r.add("dimension", std::to_string(dimension));
  if (degenerate_constant) r.add("note", "constant subject: gradient vanishes identically");
  return r;
}

CertificateResult inequivalence_certificate(const Polynomial& p, const Polynomial& q,
                                            const ObstructionOptions& options) {
  require_same_context(p.context(), q.context(), "inequivalence certificate");
  auto first = classify_gradient_zeros(p, options);
  auto second = classify_gradient_zeros(q, options);
  if (first.degenerate_constant || second.degenerate_constant) {
    std::string reason = "constant input: the gradient invariant does not separate constants from nonconstant polynomials";
    return NoCertificate{std::move(first), std::move(second), std::move(reason)};
  }
  if (first.classification == second.classification) {
    std::string reason = "gradient zero sets have the same class (" + std::string(to_string(first.classification)) +
                         "); this invariant cannot separate them";
    return NoCertificate{std::move(first), std::move(second), std::move(reason)};
  }
  const auto a = first.classification, b = second.classification;
  const bool stable = stabilize(a) != stabilize(b);
  std::string deduction = "grad(p) zero set is " + std::string(to_string(a)) + ", grad(q) zero set is " +
                          std::string(to_string(b)) +
                          " over the algebraic closure; an automorphism alpha carries the zeros of grad(q o alpha) "
                          "bijectively onto those of grad(q), so p and q are inequivalent";
  if (stable) {
    deduction += "; adding a variable keeps an empty zero set empty and turns a nonempty one into an infinite one, "
                 "so the classes stay different at every number of added variables: p and q are stably "
                 "inequivalent (stabilization rule: Empty -> Empty, nonempty -> Infinite)";
  } else {
    deduction += "; both zero sets are nonempty, so after adding a variable both become Infinite and this invariant "
                 "gives no stable conclusion";
  }
  return Certificate{std::move(first), std::move(second), stable, std::move(deduction)};
}

Report certificate_report(const CertificateResult& result) {
  Report r;
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    r.add("verdict", "Certificate");
    r.add("stable", cert->stable);
    r.add("deduction", cert->deduction);
    r.merge("p", cert->first.to_report());
    r.merge("q", cert->second.to_report());
  } else {
    const auto& none = std::get<NoCertificate>(result);
    r.add("verdict", "NoCertificate");
    r.add("reason", none.reason);
    r.merge("p", none.first.to_report());
    r.merge("q", none.second.to_report());
  }
  return r;
}

}  // namespace polyaut
