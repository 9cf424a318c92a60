#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "common.hpp"
#include "polyaut/errors.hpp"

int main(int argc, char** argv) {
  using namespace polyaut::cli;
  CLI::App app{"polyaut: exact polynomial automorphism and embedding checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polyaut 0.1.0");

  int exit_code = kOk;
  register_poly(app, exit_code);
  register_dependence(app, exit_code);
  register_reduction(app, exit_code);
  register_lnd(app, exit_code);
  register_algebra(app, exit_code);
  register_verify_paper(app, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const polyaut::ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceCap;
  } catch (const polyaut::ArithmeticOverflow& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceCap;
  } catch (const polyaut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}
