#include <memory>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/derivation.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"

namespace polyaut::cli {

namespace {

struct DerivationOptions {
  CommonOptions common;
  std::string images;
  std::string jacobian;
  std::string x = "x";
  std::string z = "z";
  std::vector<std::string> operands;
  std::optional<std::uint64_t> cap;
  std::vector<std::string> new_vars;
};

void add_derivation(CLI::App* sub, DerivationOptions& o) {
  add_common(sub, o.common);
  auto* img = sub->add_option("--images", o.images, "Values on the variables, \"x -> 0; z -> 1\" (inline or @file)");
  auto* jac = sub->add_option("--jacobian", o.jacobian, "q: use g -> J_{x,z}(q, g)");
  img->excludes(jac);
  sub->add_option("--x", o.x, "First Jacobian variable")->capture_default_str();
  sub->add_option("--z", o.z, "Second Jacobian variable")->capture_default_str();
}

Derivation derivation_of(const DerivationOptions& o, const ContextPtr& ctx) {
  if (!o.jacobian.empty()) return jacobian_derivation(parse_arg(o.jacobian, ctx), o.x, o.z);
  if (o.images.empty()) throw PreconditionError("give the derivation with --images or --jacobian");
  return Derivation(ctx, parse_assignments(load_text(o.images), ctx, ctx));
}

std::string images_text(const Derivation& d) { return format_assignments(*d.context(), d.images()); }

using Body = int (*)(const DerivationOptions&, const ContextPtr&, const Derivation&, Report&);

void add_lnd(CLI::App* lnd, int& exit_code, const char* name, const char* help, int arity, Body body,
             const std::function<void(CLI::App*, DerivationOptions&)>& extra = {}) {
  auto o = std::make_shared<DerivationOptions>();
  auto* sub = lnd->add_subcommand(name, help);
  add_derivation(sub, *o);
  if (arity > 0) sub->add_option("operands", o->operands, "Polynomials")->required()->expected(arity);
  if (extra) extra(sub, *o);
  sub->callback([o, body, &exit_code] {
    auto ctx = context_from(o->common.vars);
    auto d = derivation_of(*o, ctx);
    Report r;
    r.add("derivation", images_text(d));
    exit_code = body(*o, ctx, d, r);
    emit(r, o->common);
  });
}

struct ChainRuleOptions {
  CommonOptions common;
  std::string pvars = "s,t";
  std::string x = "x";
  std::string z = "z";
  std::vector<std::string> operands;
};

}  // namespace

void register_lnd(CLI::App& app, int& exit_code) {
  auto* lnd = app.add_subcommand("lnd", "Derivations: application, nilpotency, slices, kernels, extension");
  lnd->require_subcommand(1);

  add_lnd(lnd, exit_code, "derive", "Apply the derivation", 1,
          [](const DerivationOptions& o, const ContextPtr& c, const Derivation& d, Report& r) {
            r.add("result", format_polynomial(d(parse_arg(o.operands[0], c))));
            return int{kOk};
          });
  add_lnd(
      lnd, exit_code, "nilpotency", "Smallest i with D^i(g) = 0", 1,
      [](const DerivationOptions& o, const ContextPtr& c, const Derivation& d, Report& r) {
        auto rep = nilpotency_index(d, parse_arg(o.operands[0], c), o.cap);
        r.add("subject", format_polynomial(rep.subject));
        r.add("cap", std::to_string(rep.cap));
        if (rep.bound) r.add("bound", std::to_string(*rep.bound));
        if (rep.exceeded_cap()) {
          r.add("index", "exceeded-cap");
          return int{kResourceCap};
        }
        r.add("index", std::to_string(*rep.index));
        if (rep.bound) {
          r.add("within_bound", rep.within_bound());
          r.add("degree_dropped_each_step", rep.degree_dropped_each_step);
        }
        return rep.within_bound() ? int{kOk} : int{kNegative};
      },
      [](CLI::App* sub, DerivationOptions& o) {
        sub->add_option("--cap", o.cap, "Largest number of applications (default deg_z(g) + 2 for Jacobian derivations)");
      });
  add_lnd(lnd, exit_code, "slice", "Is D(s) = 1?", 1,
          [](const DerivationOptions& o, const ContextPtr& c, const Derivation& d, Report& r) {
            const bool s = has_slice(d, parse_arg(o.operands[0], c));
            r.add("slice", s);
            return s ? int{kOk} : int{kNegative};
          });
  add_lnd(lnd, exit_code, "kernel", "Is D(f) = 0?", 1,
          [](const DerivationOptions& o, const ContextPtr& c, const Derivation& d, Report& r) {
            const bool k = in_kernel(d, parse_arg(o.operands[0], c));
            r.add("in_kernel", k);
            return k ? int{kOk} : int{kNegative};
          });
  add_lnd(lnd, exit_code, "degree-drop", "Does deg_z D(g) < deg_z g hold?", 1,
          [](const DerivationOptions& o, const ContextPtr& c, const Derivation& d, Report& r) {
            const bool drop = degree_drop_check(d, parse_arg(o.operands[0], c));
            r.add("degree_drops", drop);
            return drop ? int{kOk} : int{kNegative};
          });
  add_lnd(
      lnd, exit_code, "extend", "Extend by new variables sent to 0", 0,
      [](const DerivationOptions& o, const ContextPtr&, const Derivation& d, Report& r) {
        Derivation e = d;
        for (const auto& v : o.new_vars) e = extend_derivation(e, v);
        r.add("variables", e.context()->to_string());
        r.add("extended", images_text(e));
        return int{kOk};
      },
      [](CLI::App* sub, DerivationOptions& o) {
        sub->add_option("--new", o.new_vars, "New variable names, comma separated or repeated")
            ->required()
            ->expected(1)
            ->delimiter(',')
            ->allow_extra_args(false)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      });

  auto o = std::make_shared<ChainRuleOptions>();
  auto* sub = lnd->add_subcommand("chainrule", "Check J(p(u,v), f(u,v)) = J(u,v) * J(p,f)(u,v)");
  add_common(sub, o->common);
  sub->add_option("operands", o->operands, "u v p f (p, f over --pvars)")->required()->expected(4);
  sub->add_option("--pvars", o->pvars, "Variables of p and f")->capture_default_str();
  sub->add_option("--x", o->x, "First Jacobian variable")->capture_default_str();
  sub->add_option("--z", o->z, "Second Jacobian variable")->capture_default_str();
  sub->callback([o, &exit_code] {
    auto ctx = context_from(o->common.vars);
    auto pctx = context_from(o->pvars);
    auto u = parse_arg(o->operands[0], ctx);
    auto v = parse_arg(o->operands[1], ctx);
    auto p = parse_arg(o->operands[2], pctx);
    auto f = parse_arg(o->operands[3], pctx);
    PolyMap uv(pctx, {u, v});
    const bool holds = chain_rule_factor_check(u, v, p, f, o->x, o->z);
    Report r;
    r.add("lhs", format_polynomial(jacobian_bracket(substitute(p, uv), substitute(f, uv), ctx->index_of(o->x),
                                                    ctx->index_of(o->z))));
    r.add("holds", holds);
    emit(r, o->common);
    exit_code = holds ? kOk : kNegative;
  });
}

}  // namespace polyaut::cli
