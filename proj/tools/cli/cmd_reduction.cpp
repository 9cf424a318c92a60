#include <memory>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/reduction.hpp"

namespace polyaut::cli {

namespace {

struct PairOptions {
  CommonOptions common;
  std::vector<std::string> pair;
  std::string z = "z";
  bool elementary = false;
};

void add_pair(CLI::App* sub, PairOptions& o) {
  add_common(sub, o.common);
  sub->add_option("pair", o.pair, "The pair u v")->required()->expected(2);
}

PolyPair pair_of(const PairOptions& o, const ContextPtr& ctx) {
  return {parse_arg(o.pair[0], ctx), parse_arg(o.pair[1], ctx)};
}

void add_pair_fields(Report& r, const PolyPair& p) {
  r.add("u", format_polynomial(p.u));
  r.add("v", format_polynomial(p.v));
}

struct MoveOptions {
  PairOptions pair;
  std::string kind;
  std::string mu = "1";
  unsigned k = 2;
  std::string matrix = "1,0,0,1";
  std::string shift = "0,0";
  bool invert = false;
};

Move move_of(const MoveOptions& o) {
  if (o.kind == "elem-i") return Move::elem_i(parse_rational(o.mu), o.k);
  if (o.kind == "elem-ii") return Move::elem_ii(parse_rational(o.mu), o.k);
  if (o.kind == "linear") {
    auto m = split_list(o.matrix);
    auto s = split_list(o.shift);
    if (m.size() != 4 || s.size() != 2) throw PreconditionError("--matrix needs a,b,c,d and --shift needs e,f");
    return Move::linear(parse_rational(m[0]), parse_rational(m[1]), parse_rational(m[2]), parse_rational(m[3]),
                        parse_rational(s[0]), parse_rational(s[1]));
  }
  throw PreconditionError("unknown move kind '" + o.kind + "' (elem-i, elem-ii, linear)");
}

struct BlowupOptions {
  PairOptions pair;
  std::string p;
  std::string pvars = "x,y";
  unsigned m = 0, n = 0;
  std::string c = "0";
  std::int64_t bound = 0;
};

}  // namespace

void register_reduction(CLI::App& app, int& exit_code) {
  {
    auto o = std::make_shared<MoveOptions>();
    auto* sub = app.add_subcommand("move", "Apply an elementary or linear move to a pair");
    add_pair(sub, o->pair);
    sub->add_option("--kind", o->kind, "elem-i: u += mu v^k, elem-ii: v += mu u^k, linear")->required();
    sub->add_option("--mu", o->mu, "Coefficient of an elementary move")->capture_default_str();
    sub->add_option("--k", o->k, "Power of an elementary move")->capture_default_str();
    sub->add_option("--matrix", o->matrix, "a,b,c,d of (a u + b v, c u + d v)")->capture_default_str();
    sub->add_option("--shift", o->shift, "Translation e,f of a linear move")->capture_default_str();
    sub->add_flag("--invert", o->invert, "Apply the inverse move instead");
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->pair.common.vars);
      Move m = move_of(*o);
      m.validate();
      if (o->invert) m = invert(m);
      Report r;
      r.add("move", m.describe());
      add_pair_fields(r, apply_move(pair_of(o->pair, ctx), m));
      emit(r, o->pair.common);
      exit_code = kOk;
    });
  }
  {
    auto o = std::make_shared<PairOptions>();
    auto* sub = app.add_subcommand("zreduced", "Decide whether a pair is z-reduced (or elementary reduced)");
    add_pair(sub, *o);
    sub->add_option("--z", o->z, "Distinguished variable")->capture_default_str();
    sub->add_flag("--elementary", o->elementary, "Use total degree (two-variable pairs)");
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto p = pair_of(*o, ctx);
      auto check = o->elementary ? is_elementary_reduced(p) : is_z_reduced(p, o->z);
      Report r;
      r.add("measure", o->elementary ? std::string("total") : o->z);
      r.add("reduced", check.reduced);
      if (check.witness) r.add("witness", check.witness->describe());
      emit(r, o->common);
      exit_code = check.reduced ? kOk : kNegative;
    });
  }
  {
    auto o = std::make_shared<PairOptions>();
    auto* sub = app.add_subcommand("reduce", "Apply lowering moves until the pair is reduced");
    add_pair(sub, *o);
    sub->add_option("--z", o->z, "Distinguished variable")->capture_default_str();
    sub->add_flag("--elementary", o->elementary, "Use total degree (two-variable pairs)");
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto [out, trace] = o->elementary ? elementary_reduce(pair_of(*o, ctx)) : z_reduce(pair_of(*o, ctx), o->z);
      Report r = trace_report(trace);
      add_pair_fields(r, out);
      emit(r, o->common);
      exit_code = kOk;
    });
  }
  {
    auto o = std::make_shared<BlowupOptions>();
    auto* sub = app.add_subcommand("blowup", "Degree of p(u, v) after z -> x^m y^n + c");
    add_pair(sub, o->pair);
    sub->add_option("--p", o->p, "Outer polynomial over --pvars")->required();
    sub->add_option("--pvars", o->pvars, "Variables of p; the first takes u, the second v")->capture_default_str();
    sub->add_option("--m", o->m, "Exponent of x")->required();
    sub->add_option("--n", o->n, "Exponent of y")->required();
    sub->add_option("--c", o->c, "Constant term of the substitution")->capture_default_str();
    sub->add_option("--bound", o->bound, "Degree N to exceed")->required();
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->pair.common.vars);
      auto pctx = context_from(o->pvars);
      auto r0 = degree_blowup_experiment(parse_arg(o->p, pctx), pair_of(o->pair, ctx), o->m, o->n,
                                         parse_rational(o->c), o->bound);
      Report r;
      r.add("w", format_polynomial(r0.w));
      r.add("u_specialized", format_polynomial(r0.u_specialized));
      r.add("v_specialized", format_polynomial(r0.v_specialized));
      r.add("composed", format_polynomial(r0.composed));
      r.add("composed_degree", std::to_string(r0.composed_degree));
      r.add("bound", std::to_string(o->bound));
      r.add("exceeds_bound", r0.exceeds_n);
      r.add("in_guaranteed_regime", r0.in_guaranteed_regime);
      r.add("specialized_independent", r0.specialized_independent);
      emit(r, o->pair.common);
      exit_code = r0.exceeds_n ? kOk : kNegative;
    });
  }
  {
    auto o = std::make_shared<BlowupOptions>();
    auto* sub = app.add_subcommand("case2", "z-dependence of p(u, v) for z-free u and z-dependent v");
    add_pair(sub, o->pair);
    sub->add_option("--p", o->p, "Outer polynomial over --pvars")->required();
    sub->add_option("--pvars", o->pvars, "Variables of p; the first takes u, the second v")->capture_default_str();
    sub->add_option("--z", o->pair.z, "Distinguished variable")->capture_default_str();
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->pair.common.vars);
      auto pctx = context_from(o->pvars);
      auto p = pair_of(o->pair, ctx);
      auto c = case2_z_dependence_check(parse_arg(o->p, pctx), p.u, p.v, o->pair.z);
      Report r;
      r.add("composed", format_polynomial(c.composed));
      r.add("depends_on_z", c.depends_on_z);
      r.add("z_degree", std::to_string(c.actual_z_degree));
      r.add("leading_monomial", format_monomial(pctx, c.leading));
      r.add("prediction_applies", c.prediction_applies);
      if (c.prediction_applies) {
        r.add("predicted_z_degree", std::to_string(c.predicted_z_degree));
        r.add("prediction_holds", c.prediction_holds);
      } else {
        r.add("note", "boundary case: the leading monomial has no y factor or u is constant");
      }
      emit(r, o->pair.common);
      exit_code = c.depends_on_z && (!c.prediction_applies || c.prediction_holds) ? kOk : kNegative;
    });
  }
}

}  // namespace polyaut::cli
