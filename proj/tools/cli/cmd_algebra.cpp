#include <memory>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/danielewski.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/groebner.hpp"
#include "polyaut/obstruction.hpp"

namespace polyaut::cli {

namespace {

struct GroebnerOptions {
  CommonOptions common;
  std::vector<std::string> generators;
  std::string order = "grevlex";
  std::string priority;
  std::vector<std::string> members;
  GroebnerLimits limits;
};

struct ObstructOptions {
  CommonOptions common;
  std::vector<std::string> subjects;
  std::string order = "grevlex";
  GroebnerLimits limits;
};

struct ChainOptionsCli {
  CommonOptions common;
  int m = 2;
  bool embedding = false;
  std::optional<std::size_t> corrupt_stage;
  std::string order = "grevlex";
  GroebnerLimits limits;
};

}  // namespace

void register_algebra(CLI::App& app, int& exit_code) {
  {
    auto o = std::make_shared<GroebnerOptions>();
    auto* sub = app.add_subcommand("groebner", "Reduced Groebner basis, dimension, emptiness and membership");
    add_common(sub, o->common);
    sub->add_option("generators", o->generators, "Ideal generators")->required();
    sub->add_option("--order", o->order, "lex, lexdeg or grevlex")->capture_default_str();
    sub->add_option("--priority", o->priority, "Variable priority, highest first (default: --vars order)");
    sub->add_option("--member", o->members, "Test membership of this polynomial (repeatable)")
        ->expected(1)
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_groebner_caps(sub, o->limits);
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto order = MonomialOrder::from_names(parse_order_kind(o->order), *ctx, split_list(o->priority));
      auto basis = buchberger(Ideal(ctx, parse_args(o->generators, ctx), order), o->limits);
      Report r;
      r.add("order", order.describe(*ctx));
      std::vector<std::string> elements, leading;
      for (const auto& e : basis.elements()) elements.push_back(format_polynomial(e));
      for (const auto& m : basis.leading_monomials()) leading.push_back(format_monomial(ctx, m));
      r.add("basis", elements);
      r.add("leading_monomials", leading);
      r.add("variety_empty", is_variety_empty(basis));
      r.add("dimension", std::to_string(ideal_dimension(basis)));
      r.add("pairs_reduced", std::to_string(basis.stats().pairs_reduced));
      exit_code = kOk;
      std::vector<std::string> verdicts;
      for (const auto& text : o->members) {
        auto f = parse_arg(text, ctx);
        const bool in = ideal_membership(f, basis);
        verdicts.push_back(format_polynomial(f) + " -> " + yes_no(in) + " (remainder " +
                           format_polynomial(normal_form(f, basis)) + ")");
        if (!in) exit_code = kNegative;
      }
      if (!o->members.empty()) r.add("membership", verdicts);
      emit(r, o->common);
    });
  }
  {
    auto o = std::make_shared<ObstructOptions>();
    auto* sub = app.add_subcommand("obstruct", "Classify zeros of the gradient; with two polynomials, certify inequivalence");
    add_common(sub, o->common);
    sub->add_option("polynomials", o->subjects, "One or two polynomials")->required()->expected(1, 2);
    sub->add_option("--order", o->order, "Order used for the Groebner basis")->capture_default_str();
    add_groebner_caps(sub, o->limits);
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto ps = parse_args(o->subjects, ctx);
      ObstructionOptions opts;
      opts.order = parse_order_kind(o->order);
      opts.limits = o->limits;
      if (ps.size() == 1) {
        emit(classify_gradient_zeros(ps[0], opts).to_report(), o->common);
        exit_code = kOk;
        return;
      }
      auto result = inequivalence_certificate(ps[0], ps[1], opts);
      emit(certificate_report(result), o->common);
      exit_code = std::holds_alternative<Certificate>(result) ? kOk : kNegative;
    });
  }
  {
    auto o = std::make_shared<ChainOptionsCli>();
    auto* sub = app.add_subcommand("chain", "Isomorphism chain from x*y^m + z^2 + 1 to a second embedding");
    add_common(sub, o->common, false);
    sub->add_option("--m", o->m, "Exponent m >= 2")->capture_default_str();
    sub->add_flag("--embedding", o->embedding, "Also certify that the two endpoints are inequivalent embeddings");
    sub->add_option("--corrupt-stage", o->corrupt_stage, "Fault injection: perturb the relation produced by step k");
    sub->add_option("--order", o->order, "Order used by the obstruction for --embedding")->capture_default_str();
    add_groebner_caps(sub, o->limits);
    sub->callback([o, &exit_code] {
      ChainOptions chain;
      chain.audit_limits = o->limits;
      chain.corrupt_step = o->corrupt_stage;
      if (!o->embedding) {
        auto report = run_danielewski_chain(o->m, chain);
        emit(report.to_report(), o->common);
        exit_code = report.accepted ? kOk : kNegative;
        return;
      }
      ObstructionOptions opts;
      opts.order = parse_order_kind(o->order);
      opts.limits = o->limits;
      auto pair = embedding_pair(o->m, opts, chain);
      Report r;
      r.add("standard", format_polynomial(pair.standard));
      r.add("second", format_polynomial(pair.second));
      r.merge("chain", pair.chain.to_report());
      r.merge("certificate", certificate_report(pair.certificate));
      const bool ok = pair.chain.accepted && std::holds_alternative<Certificate>(pair.certificate);
      r.add("inequivalent_embeddings_of_isomorphic_surfaces", ok);
      emit(r, o->common);
      exit_code = ok ? kOk : kNegative;
    });
  }
}

}  // namespace polyaut::cli
