#include <memory>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/obstruction.hpp"

namespace polyaut::cli {

namespace {

struct PolyOptions {
  CommonOptions common;
  std::vector<std::string> operands;
  std::string map;
  std::string target_vars;
  std::string var;
  std::string order = "lexdeg";
  std::string priority;
  std::uint64_t exponent = 0;
};

using Action = Report (*)(const PolyOptions&, const ContextPtr&);

void add_op(CLI::App* poly, int& exit_code, const char* name, const char* help, std::size_t arity, Action action,
            const std::function<void(CLI::App*, PolyOptions&)>& extra = {}) {
  auto opts = std::make_shared<PolyOptions>();
  auto* sub = poly->add_subcommand(name, help);
  add_common(sub, opts->common);
  sub->add_option("operands", opts->operands, "Polynomials (inline or @file)")->required()->expected(static_cast<int>(arity));
  if (extra) extra(sub, *opts);
  sub->callback([opts, action, &exit_code] {
    auto ctx = context_from(opts->common.vars);
    emit(action(*opts, ctx), opts->common);
    exit_code = kOk;
  });
}

Report binary(const PolyOptions& o, const ContextPtr& ctx, char op) {
  auto a = parse_arg(o.operands.at(0), ctx);
  auto b = parse_arg(o.operands.at(1), ctx);
  Polynomial r = op == '+' ? a + b : op == '-' ? a - b : a * b;
  Report rep;
  rep.add("result", format_polynomial(r));
  return rep;
}

}  // namespace

void register_poly(CLI::App& app, int& exit_code) {
  auto* poly = app.add_subcommand("poly", "Polynomial arithmetic, substitution and inspection");
  poly->require_subcommand(1);

  add_op(poly, exit_code, "format", "Canonical form of a polynomial", 1, [](const PolyOptions& o, const ContextPtr& c) {
    auto p = parse_arg(o.operands[0], c);
    Report r;
    r.add("result", format_polynomial(p));
    r.add("terms", std::to_string(p.size()));
    return r;
  });
  add_op(poly, exit_code, "add", "Sum of two polynomials", 2,
         [](const PolyOptions& o, const ContextPtr& c) { return binary(o, c, '+'); });
  add_op(poly, exit_code, "sub", "Difference of two polynomials", 2,
         [](const PolyOptions& o, const ContextPtr& c) { return binary(o, c, '-'); });
  add_op(poly, exit_code, "mul", "Product of two polynomials", 2,
         [](const PolyOptions& o, const ContextPtr& c) { return binary(o, c, '*'); });
  add_op(
      poly, exit_code, "pow", "Power of a polynomial", 1,
      [](const PolyOptions& o, const ContextPtr& c) {
        Report r;
        r.add("result", format_polynomial(parse_arg(o.operands[0], c).pow(o.exponent)));
        return r;
      },
      [](CLI::App* sub, PolyOptions& o) { sub->add_option("--exponent,-k", o.exponent, "Exponent")->required(); });
  add_op(
      poly, exit_code, "subst", "Substitute a map \"v -> expr; ...\" into a polynomial", 1,
      [](const PolyOptions& o, const ContextPtr& c) {
        auto target = o.target_vars.empty() ? c : context_from(o.target_vars);
        auto m = parse_map(load_text(o.map), c, target);
        Report r;
        r.add("map", format_map(m));
        r.add("result", format_polynomial(substitute(parse_arg(o.operands[0], c), m)));
        return r;
      },
      [](CLI::App* sub, PolyOptions& o) {
        sub->add_option("--map", o.map, "Assignments for every variable (inline or @file)")->required();
        sub->add_option("--target-vars", o.target_vars, "Variables of the images (default: --vars)");
      });
  add_op(
      poly, exit_code, "diff", "Partial derivative", 1,
      [](const PolyOptions& o, const ContextPtr& c) {
        Report r;
        r.add("result", format_polynomial(parse_arg(o.operands[0], c).partial(o.var)));
        return r;
      },
      [](CLI::App* sub, PolyOptions& o) { sub->add_option("--var", o.var, "Variable")->required(); });
  add_op(
      poly, exit_code, "degree", "Degree in one variable, or total degree", 1,
      [](const PolyOptions& o, const ContextPtr& c) {
        auto p = parse_arg(o.operands[0], c);
        Report r;
        if (o.var.empty()) {
          r.add("measure", "total");
          r.add("degree", p.total_degree().to_string());
        } else {
          r.add("measure", o.var);
          r.add("degree", p.degree(o.var).to_string());
        }
        return r;
      },
      [](CLI::App* sub, PolyOptions& o) { sub->add_option("--var", o.var, "Variable (default: total degree)"); });
  add_op(
      poly, exit_code, "leading", "Leading monomial and term under a monomial order", 1,
      [](const PolyOptions& o, const ContextPtr& c) {
        auto p = parse_arg(o.operands[0], c);
        auto order = MonomialOrder::from_names(parse_order_kind(o.order), *c, split_list(o.priority));
        auto t = p.leading_term(order);
        Report r;
        r.add("order", order.describe(*c));
        r.add("leading_monomial", format_monomial(c, t.monomial));
        r.add("leading_term", format_polynomial(Polynomial::monomial(c, t.monomial, t.coeff)));
        return r;
      },
      [](CLI::App* sub, PolyOptions& o) {
        sub->add_option("--order", o.order, "lex, lexdeg or grevlex")->capture_default_str();
        sub->add_option("--priority", o.priority, "Variable priority, highest first (default: --vars order)");
      });
  add_op(poly, exit_code, "gradient", "All partial derivatives in --vars order", 1,
         [](const PolyOptions& o, const ContextPtr& c) {
           std::vector<std::string> parts;
           for (const auto& g : gradient(parse_arg(o.operands[0], c))) parts.push_back(format_polynomial(g));
           Report r;
           r.add("gradient", parts);
           return r;
         });
}

}  // namespace polyaut::cli
