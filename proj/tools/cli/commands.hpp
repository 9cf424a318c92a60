#pragma once

#include <CLI11.hpp>

namespace polyaut::cli {

// Each register_* adds subcommands whose callbacks store their exit code.
void register_poly(CLI::App& app, int& exit_code);
void register_dependence(CLI::App& app, int& exit_code);
void register_reduction(CLI::App& app, int& exit_code);
void register_lnd(CLI::App& app, int& exit_code);
void register_algebra(CLI::App& app, int& exit_code);
void register_verify_paper(CLI::App& app, int& exit_code);

}  // namespace polyaut::cli
