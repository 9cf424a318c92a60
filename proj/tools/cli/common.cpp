#include "common.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"

namespace polyaut::cli {

void add_common(CLI::App* sub, CommonOptions& opts, bool with_vars) {
  if (with_vars)
    sub->add_option("--vars", opts.vars, "Ordered variable names, comma separated (e.g. x,y,z)")->required();
  sub->add_flag("--json", opts.json, "Emit JSON instead of key: value lines");
}

void add_groebner_caps(CLI::App* sub, GroebnerLimits& limits) {
  sub->add_option("--max-degree", limits.max_degree, "Largest S-pair lcm degree before giving up")
      ->capture_default_str();
  sub->add_option("--max-pairs", limits.max_pairs, "Largest number of S-pairs reduced before giving up")
      ->capture_default_str();
}

void emit(const Report& report, const CommonOptions& opts) {
  if (opts.json) std::cout << report.to_json() << "\n";
  else std::cout << report.to_text();
  std::cout.flush();
}

std::string load_text(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw PreconditionError("cannot read file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

ContextPtr context_from(const std::string& names) { return make_context(split_list(names)); }

Polynomial parse_arg(const std::string& arg, const ContextPtr& ctx) { return parse_polynomial(load_text(arg), ctx); }

std::vector<Polynomial> parse_args(const std::vector<std::string>& args, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(parse_arg(a, ctx));
  return out;
}

std::string format_monomial(const ContextPtr& ctx, const Monomial& m) {
  return format_polynomial(Polynomial::monomial(ctx, m));
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

}  // namespace polyaut::cli
