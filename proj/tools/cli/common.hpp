#pragma once

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyaut/groebner.hpp"
#include "polyaut/polynomial.hpp"
#include "polyaut/report.hpp"

namespace polyaut::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kResourceCap = 3 };

struct CommonOptions {
  std::string vars;
  bool json = false;
};

/// Registers --vars (required unless `with_vars` is false) and --json.
void add_common(CLI::App* sub, CommonOptions& opts, bool with_vars = true);

void add_groebner_caps(CLI::App* sub, GroebnerLimits& limits);

void emit(const Report& report, const CommonOptions& opts);

/// An argument "@path" is replaced by the contents of the file.
std::string load_text(const std::string& arg);

std::vector<std::string> split_list(const std::string& text);

ContextPtr context_from(const std::string& names);
Polynomial parse_arg(const std::string& arg, const ContextPtr& ctx);
std::vector<Polynomial> parse_args(const std::vector<std::string>& args, const ContextPtr& ctx);

std::string format_monomial(const ContextPtr& ctx, const Monomial& m);
std::string yes_no(bool value);

}  // namespace polyaut::cli
