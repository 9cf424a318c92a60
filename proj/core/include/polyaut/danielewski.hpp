#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyaut/groebner.hpp"
#include "polyaut/obstruction.hpp"
#include "polyaut/polynomial.hpp"
#include "polyaut/report.hpp"

namespace polyaut {

/// Commutative algebra <generators | relations>, relation r meaning r = 0.
struct Presentation {
  ContextPtr generators;
  std::vector<Polynomial> relations;

  Presentation(ContextPtr gens, std::vector<Polynomial> rels);

  /// "<x, y, z | x*y^2 + z^2 + 1 = 0>"
  std::string to_string() const;
  /// Same generator names (in any order) and the same relations as a
  /// multiset of canonical polynomials.
  bool same_as(const Presentation& other) const;
};

// Step catalog. Every step is an isomorphism of presented algebras by
// construction; apply_step only checks the syntactic preconditions.

/// Relations r -> r(map). The inverse must compose with map to the identity
/// on both sides.
struct SubstituteAuto {
  PolyMap map;
  PolyMap inverse;
};

/// New generator `name` with relation name - defining.
struct AdjoinGenerator {
  std::string name;
  Polynomial defining;
};

/// relations[target] += multiplier * relations[source].
struct CombineRelations {
  std::size_t target;
  std::size_t source;
  Polynomial multiplier;
};

/// relations[source] has the shape c*v - h (c a nonzero constant, h free of
/// v); v is replaced by h / c inside relations[target].
struct SubstituteRelationInto {
  std::size_t source;
  std::size_t target;
};

/// Some relation has the shape c*v - h with h free of v; v is substituted
/// out of the other relations, then v and that relation are dropped.
struct EliminateGenerator {
  std::string name;
};

struct RenameGenerator {
  std::string from;
  std::string to;
};

using IsoStep = std::variant<SubstituteAuto, AdjoinGenerator, CombineRelations, SubstituteRelationInto,
                             EliminateGenerator, RenameGenerator>;

std::string describe(const IsoStep& step);

/// Throws PreconditionError naming the violated precondition.
Presentation apply_step(const Presentation& p, const IsoStep& step);

struct AuditResult {
  enum class Status { Passed, NotApplicable, Inconclusive, Failed } status;
  std::string detail;
};

std::string_view to_string(AuditResult::Status s);

/// Independent check of a step with Groebner ideal equality in the ambient
/// ring (before a generator is removed). A watchdog hit is Inconclusive.
AuditResult audit_step(const Presentation& before, const IsoStep& step, const Presentation& after,
                       const GroebnerLimits& limits = {});

/// x*y^m + z^2 + 1 over (x, y, z); m >= 1.
Polynomial danielewski_polynomial(int m);

struct StageRecord {
  std::string label;
  std::optional<IsoStep> step;  // empty for the initial stage
  Presentation result;
  AuditResult audit;
  /// Comparison with a reference presentation, when one is known.
  std::optional<bool> matches_reference;
  std::optional<Presentation> reference;
};

struct ChainReport {
  int m;
  std::vector<StageRecord> stages;
  /// Final relation over (x, y, z).
  Polynomial endpoint;
  bool accepted;
  /// Set when a step raised; names the failing stage.
  std::optional<std::string> failure;
  /// True for m = 2, whose stages are checked against the reference stages.
  bool reference_checked;

  const Presentation& initial() const { return stages.front().result; }
  const Presentation& final() const { return stages.back().result; }
  Report to_report() const;
};

struct ChainOptions {
  GroebnerLimits audit_limits{};
  /// Fault injection: adds 1 to the first relation produced by this step
  /// (1-based step number).
  std::optional<std::size_t> corrupt_step;
};

/// The steps taking <x,y,z | x y^m + z^2 + 1> to <x,y,z | q_m>:
/// shift y -> y + 1, adjoin u = x y, rewrite the shifted relation with u,
/// substitute x into u = x y, eliminate x, rename u -> x, shift y -> y - 1.
std::vector<IsoStep> danielewski_chain_steps(int m);

/// The eight stages of the m = 2 chain in their reference form (with
/// "v = h" written as v - h).
std::vector<Presentation> reference_stages_m2();

/// Runs the chain for m >= 2 with per-step precondition checks and the
/// Groebner audit. For m = 2 each stage is compared with
/// reference_stages_m2(). Never throws for a failing step: the report
/// records the failure.
ChainReport run_danielewski_chain(int m, const ChainOptions& options = {});

struct EmbeddingPair {
  Polynomial standard;
  Polynomial second;
  ChainReport chain;
  CertificateResult certificate;
};

/// (x y^m + z^2 + 1, q_m, certificate): isomorphic hypersurfaces (by the
/// chain) that are inequivalent embeddings (by the certificate). m >= 2.
EmbeddingPair embedding_pair(int m, const ObstructionOptions& options = {}, const ChainOptions& chain_options = {});

}  // namespace polyaut
