#include <memory>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/jacobian.hpp"

namespace polyaut::cli {

namespace {

std::string index_list(const std::vector<std::size_t>& idx, const VariableContext* names = nullptr) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += names ? names->name(idx[i]) : std::to_string(idx[i]);
  }
  return out + "}";
}

std::string describe_minor(const MinorWitness& w, const VariableContext& ctx, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> vars;
  for (auto c : w.cols) vars.push_back(cols.at(c));
  return "rows " + index_list(w.rows) + " cols " + index_list(vars, &ctx) + " value " + format_polynomial(w.value);
}

std::vector<unsigned> parse_degrees(const std::string& text, std::size_t expected, const char* flag) {
  auto parts = split_list(text);
  if (parts.size() != expected)
    throw PreconditionError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated values");
  std::vector<unsigned> out;
  for (const auto& p : parts) {
    auto r = parse_rational(p);
    if (r.get_den() != 1 || r < 0 || r > 64) throw PreconditionError(std::string(flag) + " needs integers in [0, 64]");
    out.push_back(static_cast<unsigned>(r.get_num().get_ui()));
  }
  return out;
}

struct JacobianOptions {
  CommonOptions common;
  std::vector<std::string> fs;
  std::string wrt;
  std::size_t minors = 0;
};

struct DepOptions {
  CommonOptions common;
  std::vector<std::string> fs;
  std::string good_constant;
  unsigned cap = 10;
  std::string factorization;
  std::string constant = "0";
};

}  // namespace

void register_dependence(CLI::App& app, int& exit_code) {
  {
    auto o = std::make_shared<JacobianOptions>();
    auto* sub = app.add_subcommand("jacobian", "Jacobian matrix and its minors");
    add_common(sub, o->common);
    sub->add_option("polynomials", o->fs, "Rows of the matrix")->required();
    sub->add_option("--wrt", o->wrt, "Differentiation variables (default: all of --vars)");
    sub->add_option("--minors", o->minors, "Also decide whether all k x k minors vanish");
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto fs = parse_args(o->fs, ctx);
      std::vector<std::size_t> cols;
      if (o->wrt.empty())
        for (std::size_t i = 0; i < ctx->size(); ++i) cols.push_back(i);
      else
        for (const auto& n : split_list(o->wrt)) cols.push_back(ctx->index_of(n));
      auto m = jacobian_matrix(fs, cols);
      Report r;
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row = "[";
        for (std::size_t j = 0; j < m.cols(); ++j) row += (j ? ", " : "") + format_polynomial(m.at(i, j));
        rows.push_back(row + "]");
      }
      r.add("matrix", rows);
      if (o->minors > 0) {
        r.add("k", std::to_string(o->minors));
        auto w = first_nonzero_minor(m, o->minors);
        r.add("minors_vanish", !w.has_value());
        if (w) r.add("first_nonzero_minor", describe_minor(*w, *ctx, cols));
      }
      emit(r, o->common);
      exit_code = kOk;
    });
  }
  {
    auto o = std::make_shared<DepOptions>();
    auto* sub = app.add_subcommand("depcheck", "Jacobian test for algebraic dependence");
    add_common(sub, o->common);
    sub->add_option("polynomials", o->fs, "Polynomials to test")->required();
    sub->add_option("--good-constant", o->good_constant,
                    "m,n: search c with (u, v) at z -> x^m y^n + c still independent (two polynomials)");
    sub->add_option("--cap", o->cap, "Largest constant tried by --good-constant")->capture_default_str();
    sub->add_option("--factorization", o->factorization,
                    "m,n: check the specialization chain-rule identity at z -> x^m y^n + c (two polynomials)");
    sub->add_option("--c", o->constant, "Constant for --factorization")->capture_default_str();
    sub->callback([o, &exit_code] {
      auto ctx = context_from(o->common.vars);
      auto fs = parse_args(o->fs, ctx);
      Report r;
      std::vector<std::string> shown;
      for (const auto& f : fs) shown.push_back(format_polynomial(f));
      r.add("polynomials", shown);
      auto verdict = dependence_test(fs);
      std::vector<std::size_t> all;
      for (std::size_t i = 0; i < ctx->size(); ++i) all.push_back(i);
      r.add("verdict", verdict.dependent ? "dependent" : "independent");
      if (verdict.witness) r.add("witness", describe_minor(*verdict.witness, *ctx, all));
      exit_code = verdict.dependent ? kNegative : kOk;

      if (!o->factorization.empty()) {
        if (fs.size() != 2) throw PreconditionError("--factorization needs exactly two polynomials");
        auto mn = parse_degrees(o->factorization, 2, "--factorization");
        const bool holds = specialization_factorization_holds(fs[0], fs[1], mn[0], mn[1], parse_rational(o->constant));
        r.add("factorization_identity", holds);
        if (!holds) exit_code = kNegative;
      }
      if (!o->good_constant.empty()) {
        if (fs.size() != 2) throw PreconditionError("--good-constant needs exactly two polynomials");
        auto mn = parse_degrees(o->good_constant, 2, "--good-constant");
        auto g = find_good_constant(fs[0], fs[1], mn[0], mn[1], o->cap);
        r.add("good_constant", format_rational(g.constant));
        r.add("candidates_tried", std::to_string(g.candidates_tried));
        r.add("u_specialized", format_polynomial(g.u_specialized));
        r.add("v_specialized", format_polynomial(g.v_specialized));
        r.add("specialized_witness", describe_minor(g.witness, *ctx, all));
      }
      emit(r, o->common);
    });
  }
}

}  // namespace polyaut::cli
