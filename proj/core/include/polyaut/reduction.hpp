#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyaut/polynomial.hpp"
#include "polyaut/report.hpp"

namespace polyaut {

struct PolyPair {
  Polynomial u;
  Polynomial v;
  bool operator==(const PolyPair&) const = default;
};

enum class MoveKind { ElemI, ElemII, Linear };

/// A transformation of a pair:
///   ElemI:  (u, v) -> (u + mu * v^k, v)
///   ElemII: (u, v) -> (u, v + mu * u^k)
///   Linear: (u, v) -> (a u + b v + e, c u + d v + f), ad - bc != 0
struct Move {
  MoveKind kind;
  Rational mu{0};
  unsigned k{0};
  Rational a{1}, b{0}, c{0}, d{1};
  Rational e{0}, f{0};

  static Move elem_i(const Rational& mu, unsigned k);
  static Move elem_ii(const Rational& mu, unsigned k);
  static Move linear(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                     const Rational& e = 0, const Rational& f = 0);

  /// Throws PreconditionError when mu == 0 or k < 2 (elementary moves) or the
  /// linear part is degenerate.
  void validate() const;
  std::string describe() const;
  bool operator==(const Move&) const = default;
};

PolyPair apply_move(const PolyPair& p, const Move& m);
Move invert(const Move& m);

/// Which degree the reduction predicates minimize.
struct DegreeMeasure {
  enum class Kind { Variable, Total } kind;
  std::size_t var{0};
  /// Degree used in the ledger; the zero polynomial counts as 0.
  std::uint64_t of(const Polynomial& p) const;
  std::uint64_t sum(const PolyPair& p) const { return of(p.u) + of(p.v); }
};

struct TraceEntry {
  Move move;
  std::uint64_t before;
  std::uint64_t after;
};

struct ReductionTrace {
  std::string measure;  // variable name or "total"
  std::vector<TraceEntry> entries;
};

struct ReducedCheck {
  bool reduced;
  std::optional<Move> witness;  // a lowering move when !reduced
};

/// Decides whether some move strictly lowers the measured degree sum.
///
/// A move can only lower the sum by cancelling the leading form (top power
/// of z, or top homogeneous component) of the member it rewrites, so the
/// candidates are finite: ElemI needs deg u = k deg v and LF(u) = -mu LF(v)^k,
/// ElemII symmetrically, Linear needs deg u = deg v and proportional leading
/// forms. Translations never change a degree. Ties: ElemI before ElemII
/// before Linear; a linear witness always rewrites v as v - lambda u.
ReducedCheck find_lowering_move(const PolyPair& p, const DegreeMeasure& measure);

ReducedCheck is_z_reduced(const PolyPair& p, std::string_view z);
/// Pre: the context has at most two variables.
ReducedCheck is_elementary_reduced(const PolyPair& p);

/// Applies witnesses until none exists; the ledger strictly decreases.
std::pair<PolyPair, ReductionTrace> reduce_pair(const PolyPair& p, const DegreeMeasure& measure);
std::pair<PolyPair, ReductionTrace> z_reduce(const PolyPair& p, std::string_view z);
std::pair<PolyPair, ReductionTrace> elementary_reduce(const PolyPair& p);

Report trace_report(const ReductionTrace& trace);

struct BlowupReport {
  Polynomial w;
  Polynomial u_specialized;
  Polynomial v_specialized;
  Polynomial composed;
  std::int64_t composed_degree;
  bool exceeds_n;
  /// m > 2N and n > 2N, the regime in which a large degree is guaranteed.
  bool in_guaranteed_regime;
  bool specialized_independent;
};

/// Sets w = x^m y^n + c, sends every variable other than x, y, z to 0,
/// substitutes z -> w in the pair and reports the total degree of
/// p(u|_{z=w}, v|_{z=w}). p lives over a two-variable context whose first
/// variable takes u and second takes v. Rejects constant p, pairs that are
/// not z-reduced, pairs with a member free of z and dependent pairs.
BlowupReport degree_blowup_experiment(const Polynomial& p, const PolyPair& pair, unsigned m, unsigned n,
                                      const Rational& c, std::int64_t bound,
                                      std::string_view x = "x", std::string_view y = "y",
                                      std::string_view z = "z");

struct Case2Report {
  Polynomial composed;
  std::int64_t actual_z_degree;  // -1 for the zero polynomial
  std::int64_t predicted_z_degree;
  Monomial leading;              // of p, lex with the second variable first
  bool depends_on_z;
  /// The prediction needs a y-dependent leading monomial and a nonconstant u.
  bool prediction_applies;
  bool prediction_holds;
};

/// Substitutes (u, v) into p (first variable -> u, second -> v) where u is
/// free of z and v is not, and compares deg_z p(u, v) against n * deg_z v
/// for the leading monomial x^m y^n of p in lex order with y > x.
Case2Report case2_z_dependence_check(const Polynomial& p, const Polynomial& u, const Polynomial& v,
                                     std::string_view z = "z");

}  // namespace polyaut
