#pragma once

#include <string_view>

#include "polyaut/context.hpp"
#include "polyaut/expr.hpp"
#include "polyaut/polynomial.hpp"

namespace polyaut::testing {

inline ContextPtr vars(std::string_view names) { return make_context(names); }
inline Polynomial P(std::string_view text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }

}  // namespace polyaut::testing
