#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unilat/io.hpp"

namespace unilat {

/// Which formula produced the full table. `Base` has no full table: the
/// lattice is the base carrier plus a fresh top.
enum class ReconstructMode { U1, U3, U31, U32, S1, Base };

ReconstructMode parse_reconstruct_mode(std::string_view s);

struct ReconstructInput {
  ReconstructMode mode = ReconstructMode::U1;
  RawTable base;
  /// Absent only in Base mode.
  std::optional<RawTable> full;
  /// U3 only; identity when absent.
  std::optional<RawUnary> unary;
  std::string anchor = "a";
  std::string bottom = "0";
  std::string top = "1";
  std::size_t max_solutions = 16;
  /// Further facts a solution must satisfy, checked on complete orders.
  std::function<bool(const BinOpTable& base)> accept;
};

struct ReconstructResult {
  /// Inclusion-minimal orders consistent with the input, fewest order
  /// pairs first (ties in search order).
  std::vector<Lattice> solutions;
  std::size_t nodes = 0;
  /// The search stopped at max_solutions.
  bool capped = false;
};

/// Searches the order relation over the full table's elements (in its
/// column order) such that the result is a bounded lattice, the base table
/// is a uninorm on [bottom, anchor], and the construction reproduces the
/// full table exactly.
ReconstructResult reconstruct_all(const ReconstructInput& in);

/// The unique minimal solution; throws NoConsistentLattice or
/// AmbiguousLattice (the message lists every solution's covers).
Lattice reconstruct_fixture(const ReconstructInput& in);

}  // namespace unilat
