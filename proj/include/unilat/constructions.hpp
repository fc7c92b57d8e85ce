#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/axioms.hpp"
#include "unilat/unary_op.hpp"

namespace unilat {

enum class ConstructionId {
  U1, U2, S1, T1, S1star, T1star, U3, U31, U32, U4, U41, U42,
  Ut1, Us1, Ucl, Uint, Ut2, Us2, Ut3, Us3, S2star, T2star,
};

std::string_view to_string(ConstructionId id);
/// Accepts the CLI ids (`u1`, `s1star`, `u_t1`, `s2star`, ...); throws
/// UnknownConstruction.
ConstructionId parse_construction(std::string_view id);
std::vector<ConstructionId> all_constructions();

/// Lower constructions extend from [0, anchor], upper ones from [anchor, 1].
bool is_upper(ConstructionId id);
/// U3/U4 and the closure/interior specials need a unary operator.
bool needs_unary(ConstructionId id);

struct ConstructionRequest {
  ConstructionId id;
  /// a for the lower family, b for the upper one. For the specials built
  /// around the neutral element (U_t1, U_cl, U_s1, ...) the anchor is e.
  Elem anchor;
  /// U* (or S, T, V, W, T_e, S_e) on the anchored interval.
  BinOpTable base;
  std::optional<UnaryOpTable> unary;
  /// Override for the neutral element of `base`; otherwise the declared one,
  /// else the unique neutral element of the table.
  std::optional<Elem> neutral;
  /// Allows a = 1 (lower) or b = 0 (upper); the result is `base` itself.
  bool allow_degenerate = false;

  const Lattice& lattice() const { return base.lattice(); }
};

/// Validated request data shared by the builders and checkers.
struct Resolved {
  LatticePtr lat;
  Elem anchor;
  Elem e;
  Interval carrier;
  bool degenerate = false;
};

/// Checks every request hypothesis; throws InvalidRequest naming each
/// violated one, or NotATconorm / NotATnorm / NotAClosure / NotAnInterior
/// for the operator-specific ones.
Resolved resolve(const ConstructionRequest& req);

/// Closure (or interior) used by the construction: the given one for
/// U3/U4/U_cl/U_int, the identity for U31/U41, x v a or x ^ b for U32/U42.
std::optional<UnaryOpTable> effective_unary(const ConstructionRequest& req);

/// Builds the table on the whole lattice.
BinOpTable construct(const ConstructionRequest& req);

enum class Cond4Reading { Z, A };
enum class ClosureCase { C1i, C1ii, C2i, C2ii };
enum class ParallelVariant { IeA, IaE };
/// The "below top" hypothesis of case (2)(ii): strictly below 1 on its own,
/// or inside the open interval above the anchor. Dually "above bottom".
enum class TopReading { Lt1, A1 };

std::string_view to_string(ClosureCase c);
ClosureCase parse_case(std::string_view s);

struct CheckOptions {
  std::size_t witness_cap = 32;
  Cond4Reading cond4 = Cond4Reading::Z;
  ClosureCase closure_case = ClosureCase::C1i;
  ParallelVariant parallel = ParallelVariant::IeA;
  TopReading top = TopReading::A1;
};

struct ConditionResult {
  std::string id;
  bool holds = true;
  /// At most witness_cap of them, in iteration order.
  std::vector<Witness> witnesses;
  std::size_t violations = 0;
};

struct ConditionReport {
  ConstructionId construction;
  std::vector<ConditionResult> hypotheses;
  std::vector<ConditionResult> conditions;

  /// The theorem's case applies.
  bool applicable() const;
  /// Conjunction of the conditions.
  bool holds() const;
  const ConditionResult& at(std::string_view id) const;
};

// Each quantified condition is evaluated literally and reports all
// violations up to the witness cap. Witness bindings use the variable
// names of the statement (z, x, y).
ConditionReport check_thm31(const ConstructionRequest& req, const CheckOptions& opt = {});
/// Mirror of check_thm31. The lower part of the test set is [b, e): with e
/// included, condition (2) fails on every instance having I_{e,b} nonempty.
ConditionReport check_thm32(const ConstructionRequest& req, const CheckOptions& opt = {});
ConditionReport check_prop31(const ConstructionRequest& req, const CheckOptions& opt = {});
ConditionReport check_prop32(const ConstructionRequest& req, const CheckOptions& opt = {});
/// x || y for x in I_a, y in (0, a] (S1*), or x in I_b, y in [b, 1) (T1*).
ConditionReport check_thm21(const ConstructionRequest& req, const CheckOptions& opt = {});
ConditionReport check_thm41(const ConstructionRequest& req, const CheckOptions& opt = {});
ConditionReport check_thm42(const ConstructionRequest& req, const CheckOptions& opt = {});

/// The checker belonging to req.id. Specials have no side conditions.
ConditionReport check_conditions(const ConstructionRequest& req, const CheckOptions& opt = {});

}  // namespace unilat
