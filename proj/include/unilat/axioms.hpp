#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unilat/op_table.hpp"

namespace unilat {

struct Binding {
  std::string var;
  Elem value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// A concrete tuple at which a quantified property fails. `relation` names
/// the relation that should have held between `lhs` and `rhs`.
struct Witness {
  std::string relation;
  std::vector<Binding> bindings;
  std::optional<Elem> lhs;
  std::optional<Elem> rhs;

  /// Value bound to `var`; throws if absent.
  Elem get(std::string_view var) const;
};

std::string describe(const Witness& w, const Lattice& lat);

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

struct AxiomReport {
  Verdict commutative;
  Verdict associative;
  Verdict monotone;
  Verdict neutral;
  Elem neutral_checked = 0;

  bool all() const { return commutative.holds && associative.holds && monotone.holds && neutral.holds; }
};

// Single-axiom checks. Each returns the lexicographically first violation
// in declaration order.
Verdict check_commutative(const BinOpTable& op);
/// Witness bindings (x, y, z); lhs = op(x, op(y, z)), rhs = op(op(x, y), z).
Verdict check_associative(const BinOpTable& op);
/// x <= y must give op(x, z) <= op(y, z) and op(z, x) <= op(z, y).
Verdict check_monotone(const BinOpTable& op);
Verdict check_neutral(const BinOpTable& op, Elem e);

/// All four uninorm axioms with `neutral_candidate` as the neutral element.
/// Associativity and monotonicity are only meaningful for closed tables;
/// an unclosed value is evaluated through the table only where it lies in
/// the carrier, and reported as an associativity failure otherwise.
AxiomReport check_axioms(const BinOpTable& op, Elem neutral_candidate);

/// Carrier as an interval of the lattice; throws CarrierNotInterval.
Interval carrier_interval(const BinOpTable& op);

bool is_uninorm(const BinOpTable& op, Elem e);
bool is_tnorm(const BinOpTable& op);
bool is_tconorm(const BinOpTable& op);

/// All left-neutral elements of the carrier.
ElemSet neutral_elements(const BinOpTable& op);

/// Sub-table on `iv`; throws NotClosed with the first offending pair.
BinOpTable restrict(const BinOpTable& op, const Interval& iv);

struct ClassificationProfile {
  bool is_tnorm = false;
  bool is_tconorm = false;
  bool is_uninorm = false;
  ElemSet neutral_elements;
  bool idempotent = false;
  bool conjunctive = false;
  bool disjunctive = false;
  bool in_Umin_star = false;
  bool in_Umax_star = false;
  bool in_Ubot_star = false;
  bool in_Utop_star = false;
};

/// Structural profile of a uninorm. The carrier's own bounds play the roles
/// of 0 and 1. Throws NotAUninorm when `op` fails any axiom with neutral e.
ClassificationProfile classify(const BinOpTable& op, Elem e);

struct PartitionReport {
  Verdict associative;
  /// Which case family produced the witness: "three-part", "two-part" or
  /// "one-part".
  std::string family;
  std::size_t triples_checked = 0;
};

/// Associativity of a commutative operation decided family by family over
/// a cover of its carrier by `parts`. Elements in several parts are
/// assigned to the first. The two textually identical two-part families
/// of the source statement are one family here.
PartitionReport assoc_by_partition(const BinOpTable& op, const std::vector<ElemSet>& parts);

}  // namespace unilat
