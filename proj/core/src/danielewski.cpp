#include "polyaut/danielewski.hpp"

#include <algorithm>

#include "polyaut/errors.hpp"
#include "polyaut/expr.hpp"

namespace polyaut {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ContextPtr with_renamed(const ContextPtr& ctx, std::size_t index, const std::string& name) {
  auto names = ctx->names();
  names[index] = name;
  return make_context(std::move(names));
}

/// Reinterprets p over `target` position by position.
Polynomial reindex(const Polynomial& p, const ContextPtr& target) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  return Polynomial::from_terms(target, std::move(terms));
}

/// If r = c*v + rest with c a nonzero constant and rest free of v, returns
/// the value of v on r = 0, i.e. -rest / c.
std::optional<Polynomial> solve_for(const Polynomial& r, std::size_t v) {
  if (r.degree(v) != Degree(1)) return std::nullopt;
  const Polynomial coeff = r.coefficient_of(v, 1);
  if (!coeff.is_constant() || coeff.is_zero()) return std::nullopt;
  const Polynomial rest = r - coeff * Polynomial::variable(r.context(), v);
  return rest * Rational(-1 / coeff.constant_term());
}

std::size_t solved_generator(const Polynomial& r, const std::string& requested) {
  const auto& ctx = r.vars();
  if (!requested.empty()) {
    auto v = ctx.index_of(requested);
    if (!solve_for(r, v)) throw PreconditionError("relation is not solved for '" + requested + "'");
    return v;
  }
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    if (!solve_for(r, v)) continue;
    if (found) throw PreconditionError("relation is solved for both '" + ctx.name(*found) + "' and '" + ctx.name(v) +
                                       "'; name the generator");
    found = v;
  }
  if (!found) throw PreconditionError("relation " + format_polynomial(r) + " is not of the form c*v - h with h free of v");
  return *found;
}

Polynomial substitute_one(const Polynomial& p, std::size_t v, const Polynomial& value) {
  const auto& ctx = p.context();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx->size(); ++i) images.push_back(i == v ? value : Polynomial::variable(ctx, i));
  return substitute(p, PolyMap(ctx, std::move(images)));
}

void check_index(const Presentation& p, std::size_t i, const char* what) {
  if (i >= p.relations.size())
    throw PreconditionError(std::string(what) + " relation index " + std::to_string(i) + " out of range");
}

Polynomial nonzero(Polynomial r, const std::string& what) {
  if (r.is_zero()) throw PreconditionError(what + " produced the zero relation");
  return r;
}

}  // namespace

Presentation::Presentation(ContextPtr gens, std::vector<Polynomial> rels)
    : generators(std::move(gens)), relations(std::move(rels)) {
  for (const auto& r : relations) {
    require_same_context(generators, r.context(), "presentation relation");
    if (r.is_zero()) throw PreconditionError("presentation relations must be nonzero");
  }
}

std::string Presentation::to_string() const {
  std::string out = "<" + generators->to_string() + " |";
  for (std::size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : " ") + format_polynomial(relations[i]) + " = 0";
  return out + ">";
}

bool Presentation::same_as(const Presentation& other) const {
  auto a = generators->names(), b = other.generators->names();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || relations.size() != other.relations.size()) return false;
  std::vector<std::string> mine, theirs;
  for (const auto& r : relations) mine.push_back(format_polynomial(r));
  for (const auto& r : other.relations) theirs.push_back(format_polynomial(r.rebase(generators)));
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  return mine == theirs;
}

std::string describe(const IsoStep& step) {
  return std::visit(
      Overloaded{
          [](const SubstituteAuto& s) { return "substitute automorphism " + format_map(s.map); },
          [](const AdjoinGenerator& s) { return "adjoin " + s.name + " = " + format_polynomial(s.defining); },
          [](const CombineRelations& s) {
            return "relation " + std::to_string(s.target) + " += (" + format_polynomial(s.multiplier) +
                   ") * relation " + std::to_string(s.source);
          },
          [](const SubstituteRelationInto& s) {
            return "substitute relation " + std::to_string(s.source) + " into relation " + std::to_string(s.target);
          },
          [](const EliminateGenerator& s) { return "eliminate " + s.name; },
          [](const RenameGenerator& s) { return "rename " + s.from + " -> " + s.to; },
      },
      step);
}

Presentation apply_step(const Presentation& p, const IsoStep& step) {
  const auto& ctx = p.generators;
  return std::visit(
      Overloaded{
          [&](const SubstituteAuto& s) {
            require_same_context(ctx, s.map.source(), "automorphism source");
            require_same_context(ctx, s.map.target(), "automorphism target");
            require_same_context(ctx, s.inverse.source(), "inverse source");
            require_same_context(ctx, s.inverse.target(), "inverse target");
            if (!s.map.then(s.inverse).is_identity() || !s.inverse.then(s.map).is_identity())
              throw PreconditionError("supplied inverse does not compose with the map to the identity");
            std::vector<Polynomial> rels;
            for (const auto& r : p.relations) rels.push_back(nonzero(substitute(r, s.map), "automorphism"));
            return Presentation(ctx, std::move(rels));
          },
          [&](const AdjoinGenerator& s) {
            if (!is_identifier(s.name)) throw PreconditionError("invalid generator name '" + s.name + "'");
            if (ctx->contains(s.name)) throw PreconditionError("generator '" + s.name + "' already exists");
            require_same_context(ctx, s.defining.context(), "defining polynomial");
            auto names = ctx->names();
            names.push_back(s.name);
            auto bigger = make_context(std::move(names));
            std::vector<Polynomial> rels;
            for (const auto& r : p.relations) rels.push_back(r.rebase(bigger));
            rels.push_back(Polynomial::variable(bigger, s.name) - s.defining.rebase(bigger));
            return Presentation(bigger, std::move(rels));
          },
          [&](const CombineRelations& s) {
            check_index(p, s.target, "target");
            check_index(p, s.source, "source");
            if (s.source == s.target) throw PreconditionError("a relation cannot be combined with itself");
            require_same_context(ctx, s.multiplier.context(), "multiplier");
            auto rels = p.relations;
            rels[s.target] = nonzero(rels[s.target] + s.multiplier * rels[s.source], "combination");
            return Presentation(ctx, std::move(rels));
          },
          [&](const SubstituteRelationInto& s) {
            check_index(p, s.target, "target");
            check_index(p, s.source, "source");
            if (s.source == s.target) throw PreconditionError("source and target relation coincide");
            const auto v = solved_generator(p.relations[s.source], {});
            auto rels = p.relations;
            rels[s.target] =
                nonzero(substitute_one(rels[s.target], v, *solve_for(p.relations[s.source], v)), "substitution");
            return Presentation(ctx, std::move(rels));
          },
          [&](const EliminateGenerator& s) {
            const auto v = ctx->index_of(s.name);
            std::optional<std::size_t> which;
            for (std::size_t i = 0; i < p.relations.size() && !which; ++i)
              if (solve_for(p.relations[i], v)) which = i;
            if (!which) throw PreconditionError("no relation of the form c*" + s.name + " - h with h free of " + s.name);
            const Polynomial value = *solve_for(p.relations[*which], v);
            auto names = ctx->names();
            names.erase(names.begin() + static_cast<std::ptrdiff_t>(v));
            auto smaller = make_context(std::move(names));
            std::vector<Polynomial> rels;
            for (std::size_t i = 0; i < p.relations.size(); ++i) {
              if (i == *which) continue;
              rels.push_back(nonzero(substitute_one(p.relations[i], v, value), "elimination").rebase(smaller));
            }
            return Presentation(smaller, std::move(rels));
          },
          [&](const RenameGenerator& s) {
            const auto v = ctx->index_of(s.from);
            if (!is_identifier(s.to)) throw PreconditionError("invalid generator name '" + s.to + "'");
            if (ctx->contains(s.to)) throw PreconditionError("generator '" + s.to + "' already exists");
            auto renamed = with_renamed(ctx, v, s.to);
            std::vector<Polynomial> rels;
            for (const auto& r : p.relations) rels.push_back(reindex(r, renamed));
            return Presentation(renamed, std::move(rels));
          },
      },
      step);
}

std::string_view to_string(AuditResult::Status s) {
  switch (s) {
    case AuditResult::Status::Passed: return "passed";
    case AuditResult::Status::NotApplicable: return "n/a";
    case AuditResult::Status::Inconclusive: return "inconclusive";
    case AuditResult::Status::Failed: return "FAILED";
  }
  return "?";
}

namespace {

AuditResult compare_ideals(const ContextPtr& ctx, std::vector<Polynomial> a, std::vector<Polynomial> b,
                           const GroebnerLimits& limits) {
  try {
    const auto order = MonomialOrder::grevlex(ctx->size());
    const auto ga = buchberger(Ideal(ctx, std::move(a), order), limits);
    const auto gb = buchberger(Ideal(ctx, std::move(b), order), limits);
    if (same_ideal(ga, gb)) return {AuditResult::Status::Passed, "relation ideals agree"};
    return {AuditResult::Status::Failed, "relation ideals differ"};
  } catch (const ResourceLimitExceeded& e) {
    return {AuditResult::Status::Inconclusive, e.what()};
  }
}

}  // namespace

AuditResult audit_step(const Presentation& before, const IsoStep& step, const Presentation& after,
                       const GroebnerLimits& limits) {
  return std::visit(
      Overloaded{
          [&](const SubstituteAuto& s) -> AuditResult {
            if (after.relations.size() != before.relations.size())
              return {AuditResult::Status::Failed, "relation count changed"};
            for (std::size_t i = 0; i < after.relations.size(); ++i)
              if (!(substitute(after.relations[i], s.inverse) == before.relations[i]))
                return {AuditResult::Status::Failed, "inverse does not recover relation " + std::to_string(i)};
            return {AuditResult::Status::Passed, "inverse recovers every relation"};
          },
          [&](const CombineRelations&) { return compare_ideals(before.generators, before.relations, after.relations, limits); },
          [&](const SubstituteRelationInto&) {
            return compare_ideals(before.generators, before.relations, after.relations, limits);
          },
          [&](const EliminateGenerator& s) -> AuditResult {
            const auto v = before.generators->index_of(s.name);
            std::vector<Polynomial> rebuilt;
            for (const auto& r : before.relations)
              if (solve_for(r, v)) {
                rebuilt.push_back(r);
                break;
              }
            try {
              for (const auto& r : after.relations) rebuilt.push_back(r.rebase(before.generators));
            } catch (const UnknownVariable& e) {
              return {AuditResult::Status::Failed, e.what()};
            }
            return compare_ideals(before.generators, before.relations, std::move(rebuilt), limits);
          },
          [&](const auto&) -> AuditResult { return {AuditResult::Status::NotApplicable, "isomorphic by definition"}; },
      },
      step);
}

namespace {

ContextPtr xyz_context() { return make_context(std::vector<std::string>{"x", "y", "z"}); }

}  // namespace

Polynomial danielewski_polynomial(int m) {
  if (m < 1) throw PreconditionError("Danielewski exponent m must be at least 1");
  auto ctx = xyz_context();
  const auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  return x * y.pow(static_cast<unsigned>(m)) + z * z + Polynomial::constant(ctx, 1);
}

std::vector<IsoStep> danielewski_chain_steps(int m) {
  if (m < 2) throw PreconditionError("the chain is defined for m >= 2");
  auto ctx = xyz_context();
  const auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  const auto one = Polynomial::constant(ctx, 1);
  const PolyMap shift_up(ctx, {x, y + one, z}), shift_down(ctx, {x, y - one, z});

  // ((y + 1)^m - 1) / y, expressed over (x, y, z, u).
  auto big = make_context(std::vector<std::string>{"x", "y", "z", "u"});
  const auto yb = Polynomial::variable(big, 1);
  Polynomial quotient(big);
  mpz_class binom = 1;
  for (int k = 1; k <= m; ++k) {
    binom = binom * (m - k + 1) / k;
    quotient += Polynomial::constant(big, Rational(binom)) * yb.pow(static_cast<unsigned>(k - 1));
  }

  auto last = make_context(std::vector<std::string>{"y", "z", "x"});
  const auto yl = Polynomial::variable(last, 0), zl = Polynomial::variable(last, 1), xl = Polynomial::variable(last, 2);
  const auto onel = Polynomial::constant(last, 1);
  const PolyMap final_down(last, {yl - onel, zl, xl}), final_up(last, {yl + onel, zl, xl});

  return {
      SubstituteAuto{shift_up, shift_down},
      AdjoinGenerator{"u", x * y},
      CombineRelations{0, 1, quotient},
      SubstituteRelationInto{0, 1},
      EliminateGenerator{"x"},
      RenameGenerator{"u", "x"},
      SubstituteAuto{final_down, final_up},
  };
}

std::vector<Presentation> reference_stages_m2() {
  auto xyz = xyz_context();
  auto xyzu = make_context(std::vector<std::string>{"x", "y", "z", "u"});
  auto yzu = make_context(std::vector<std::string>{"y", "z", "u"});
  auto p = [](const char* text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); };
  return {
      Presentation(xyz, {p("x*y^2 + z^2 + 1", xyz)}),
      Presentation(xyz, {p("x - (-x*y^2 - 2*x*y - z^2 - 1)", xyz)}),
      Presentation(xyzu, {p("x - (-x*y^2 - 2*x*y - z^2 - 1)", xyzu), p("u - x*y", xyzu)}),
      Presentation(xyzu, {p("u - x*y", xyzu), p("x - (-u*y - 2*u - z^2 - 1)", xyzu)}),
      Presentation(xyzu, {p("u - (-u*y^2 - 2*u*y - z^2*y - y)", xyzu), p("x - (-u*y - 2*u - z^2 - 1)", xyzu)}),
      Presentation(yzu, {p("u - (-u*y^2 - 2*u*y - z^2*y - y)", yzu)}),
      Presentation(xyz, {p("x - (-x*y^2 - 2*x*y - z^2*y - y)", xyz)}),
      Presentation(xyz, {p("x*y^2 + z^2*y - z^2 + y - 1", xyz)}),
  };
}

ChainReport run_danielewski_chain(int m, const ChainOptions& options) {
  const auto steps = danielewski_chain_steps(m);
  const bool check_reference = m == 2;
  const auto references = check_reference ? reference_stages_m2() : std::vector<Presentation>{};
  auto xyz = xyz_context();

  ChainReport report{m, {}, Polynomial(xyz), true, std::nullopt, check_reference};
  auto record = [&](std::string label, std::optional<IsoStep> step, Presentation result, AuditResult audit) {
    StageRecord stage{std::move(label), std::move(step), std::move(result), std::move(audit), std::nullopt,
                      std::nullopt};
    const auto index = report.stages.size();
    if (check_reference && index < references.size()) {
      stage.reference = references[index];
      stage.matches_reference = stage.result.same_as(references[index]);
      if (!*stage.matches_reference) report.accepted = false;
    }
    if (stage.audit.status == AuditResult::Status::Failed) report.accepted = false;
    report.stages.push_back(std::move(stage));
  };

  Presentation current(xyz, {danielewski_polynomial(m)});
  record("stage 0: initial", std::nullopt, current, {AuditResult::Status::NotApplicable, "initial presentation"});
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto label = "stage " + std::to_string(i + 1) + ": " + describe(steps[i]);
    try {
      Presentation next = apply_step(current, steps[i]);
      if (options.corrupt_step && *options.corrupt_step == i + 1) {
        auto rels = next.relations;
        rels[0] = rels[0] + Polynomial::constant(next.generators, 1);
        next = Presentation(next.generators, std::move(rels));
      }
      AuditResult audit = audit_step(current, steps[i], next, options.audit_limits);
      record(label, steps[i], next, std::move(audit));
      current = std::move(next);
    } catch (const Error& e) {
      report.accepted = false;
      report.failure = label + ": " + e.what();
      return report;
    }
  }
  if (current.relations.size() != 1) {
    report.accepted = false;
    report.failure = "final presentation does not have exactly one relation";
    return report;
  }
  try {
    report.endpoint = current.relations.front().rebase(xyz);
  } catch (const UnknownVariable& e) {
    report.accepted = false;
    report.failure = std::string("final presentation is not over x, y, z: ") + e.what();
  }
  return report;
}

Report ChainReport::to_report() const {
  Report r;
  r.add("m", std::to_string(m));
  std::vector<std::string> lines;
  for (const auto& s : stages) {
    std::string line = s.label + " => " + s.result.to_string() + " [audit: " + std::string(to_string(s.audit.status));
    if (s.matches_reference) line += *s.matches_reference ? ", reference: match" : ", reference: MISMATCH";
    lines.push_back(line + "]");
  }
  r.add("stages", std::move(lines));
  if (failure) r.add("failure", *failure);
  r.add("endpoint", format_polynomial(endpoint));
  r.add("endpoint_source", reference_checked ? "checked against the reference m = 2 chain"
                                             : "artifact-derived chain (no reference stages for this m)");
  r.add("accepted", accepted);
  return r;
}

EmbeddingPair embedding_pair(int m, const ObstructionOptions& options, const ChainOptions& chain_options) {
  if (m == 1)
    throw PreconditionError("m = 1 is excluded: whether D(1) has two inequivalent embeddings is an open problem");
  if (m < 2) throw PreconditionError("embedding pair needs m >= 2");
  ChainReport chain = run_danielewski_chain(m, chain_options);
  if (!chain.accepted) throw Error("isomorphism chain failed: " + chain.failure.value_or("stage verification failed"));
  Polynomial standard = danielewski_polynomial(m);
  Polynomial second = chain.endpoint;
  auto certificate = inequivalence_certificate(standard, second, options);
  return EmbeddingPair{std::move(standard), std::move(second), std::move(chain), std::move(certificate)};
}

}  // namespace polyaut
