#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "unilat/op_table.hpp"

namespace unilat {

struct EnumConfig {
  std::size_t max_elements = 6;
  std::size_t max_uninorms_per_interval = 5000;
  std::uint64_t seed = 0x5eed;
  bool dedupe_isomorphic = true;
  /// Lattices up to this size get every closure/interior operator, larger
  /// ones only the canonical families.
  std::size_t unary_brute_max = 4;
};

/// Order matrix under the lexicographically smallest relabelling that
/// fixes bottom and top. Equal for isomorphic lattices only.
std::vector<std::uint64_t> canonical_form(const Lattice& lat);

/// Every bounded lattice with 2..max_elements elements, by size and then
/// in generation order. Middle elements are labelled a, b, c, ...; with
/// dedupe on, each lattice is emitted once in its canonical labelling.
void for_each_lattice(const EnumConfig& cfg, const std::function<void(const LatticePtr&)>& visit);
std::vector<LatticePtr> enumerate_lattices(const EnumConfig& cfg);

struct UninormSet {
  std::vector<BinOpTable> tables;
  bool truncated = false;
};

/// All uninorms on `iv` with neutral element e, in the order of a fixed
/// cell-by-cell search, stopping after cfg.max_uninorms_per_interval.
UninormSet enumerate_uninorms(const LatticePtr& lat, const Interval& iv, Elem e, const EnumConfig& cfg);

}  // namespace unilat
