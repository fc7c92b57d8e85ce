#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/constructions.hpp"
#include "unilat/enumerate.hpp"

namespace unilat {

/// One point of a suite population: a lattice, an anchor (a for the lower
/// family, b for the upper one), a uninorm on the anchored interval with
/// neutral element e, and optionally a closure (lower) or interior (upper).
struct Instance {
  LatticePtr lat;
  Elem anchor = 0;
  Elem e = 0;
  bool upper = false;
  std::shared_ptr<const BinOpTable> base;
  std::optional<UnaryOpTable> unary;
};

std::string describe(const Instance& inst);

enum class EFilter { Any, Bottom, Top };

struct PopulationSpec {
  bool lower = true;
  bool upper = false;
  /// Instances without a unary operator.
  bool plain = true;
  /// Each base paired with every closure (lower) or interior (upper).
  bool unary = false;
  /// Restricts e to the bottom or the top of the anchored interval.
  EFilter e_lower = EFilter::Any;
  EFilter e_upper = EFilter::Any;
  /// One instance per (lattice, anchor); the base is the join (lower) or
  /// meet (upper) of the interval.
  bool per_anchor = false;
};

struct Population {
  std::vector<Instance> instances;
  /// Some interval hit max_uninorms_per_interval.
  bool truncated = false;
};

/// Enumerated instances over every lattice of cfg.max_elements or fewer
/// elements, every anchor outside {0, 1} and every neutral element.
/// Unary operators are the identity, x v a (x ^ b), and on lattices up to
/// cfg.unary_brute_max elements every closure (interior), without repeats.
Population build_population(const PopulationSpec& spec, const EnumConfig& cfg);

/// Verdict for one instance.
struct Outcome {
  bool excluded = false;
  bool predicted = false;
  bool actual = false;
  bool error = false;
  bool truncated = false;
  std::string detail;
  /// For per-anchor claims: the base on which the disagreement shows.
  std::shared_ptr<const BinOpTable> witness_base;
};

enum class Direction { None, Sufficiency, Necessity, Property, Error };
std::string_view to_string(Direction d);

struct Counterexample {
  Instance instance;
  /// "sufficiency" (predicted, not observed), "necessity" (observed, not
  /// predicted), "property" or "error".
  std::string direction;
  std::string detail;
};

struct InjectedOutcome {
  std::string label;
  Outcome outcome;
};

struct SuiteConfig {
  EnumConfig enumeration;
  CheckOptions check;
  bool parallel = true;
  /// Stored counterexamples; the count is always complete.
  std::size_t counterexample_cap = 16;
  /// Evaluated after the population; outcomes are reported separately and
  /// also counted in the totals.
  std::vector<std::pair<std::string, Instance>> injected;
};

struct IffResult {
  std::string claim;
  std::string population;
  std::size_t tested = 0;
  std::size_t confirmations = 0;
  std::size_t excluded = 0;
  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;
  bool truncated = false;
  /// Informational claims record disagreements without failing.
  bool informational = false;
  std::vector<InjectedOutcome> injected;

  bool passed() const { return informational || counterexample_count == 0; }
  /// "holds", "refuted" or "informational".
  std::string verdict() const;
  /// "exhaustive" or "bounded".
  std::string mode() const { return truncated ? "bounded" : "exhaustive"; }
};

/// Known claim ids, in report order.
std::vector<std::string> claim_ids();
bool is_claim(std::string_view claim);

/// The population a claim is evaluated on.
PopulationSpec population_for(std::string_view claim);

/// Evaluates one instance under a claim.
Outcome evaluate(std::string_view claim, const Instance& inst, const SuiteConfig& cfg);

/// Evaluates every instance, in parallel or serially, and merges the
/// outcomes in instance order. Throws UnknownClaim.
IffResult run_claim(std::string_view claim, const Population& pop, const SuiteConfig& cfg);
IffResult run_iff_suite(std::string_view claim, const SuiteConfig& cfg);

/// Re-runs the claim on a stored counterexample; true when the
/// disagreement it records is still there.
bool reverify(std::string_view claim, const Counterexample& cx, const SuiteConfig& cfg);

/// `claim=<id> population=<n> verdict=<v> counterexamples=<k> mode=<m>`
std::string summary_record(const IffResult& r);
/// Multi-line human report.
std::string format_report(const IffResult& r, std::size_t show = 3);

/// Writes `<stem>.lat`, `<stem>.opt` and, with a unary operator,
/// `<stem>.unm` into dir. Returns the paths written.
std::vector<std::filesystem::path> dump_counterexample(const Counterexample& cx, const std::filesystem::path& dir,
                                                       const std::string& stem);
/// Reads a bundle written by dump_counterexample back into an instance.
Instance load_instance(const std::filesystem::path& dir, const std::string& stem);

struct SampleReport {
  std::size_t samples = 0;
  std::size_t agreements = 0;
  /// Among the samples, how many were positive (dual-applicable or
  /// associative), to show both sides were exercised.
  std::size_t positives = 0;
  std::vector<std::string> failures;
};

/// Random instances on lattices up to max_elements: construct U2 (U4)
/// directly and as the dual transport of U1 (U3) on the dual lattice, and
/// compare every cell. Half the samples use the closure family.
SampleReport duality_samples(std::size_t samples, std::uint64_t seed, std::size_t max_elements);

/// Random commutative tables (half of them uninorms, some perturbed) with
/// random covers of the carrier: assoc_by_partition versus the naive
/// all-triples check.
SampleReport partition_samples(std::size_t samples, std::uint64_t seed, std::size_t max_elements);

}  // namespace unilat
