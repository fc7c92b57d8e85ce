#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unilat/lattice.hpp"

namespace unilat {

/// A binary operation on a subset of a lattice, stored as a dense table
/// indexed by carrier position. Values may leave the carrier; whether they
/// do is a query (`is_closed`), not an invariant.
class BinOpTable {
 public:
  BinOpTable(std::string name, LatticePtr lat, std::vector<Elem> carrier,
             std::vector<Elem> values, std::optional<Elem> declared_neutral = std::nullopt);

  /// Tabulates f over carrier x carrier.
  static BinOpTable tabulate(std::string name, LatticePtr lat, std::vector<Elem> carrier,
                             const std::function<Elem(Elem, Elem)>& f,
                             std::optional<Elem> declared_neutral = std::nullopt);

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  std::span<const Elem> carrier() const { return carrier_; }
  ElemSet carrier_set() const { return carrier_set_; }
  std::size_t size() const { return carrier_.size(); }
  std::optional<Elem> declared_neutral() const { return neutral_; }
  bool contains(Elem x) const { return x < pos_.size() && pos_[x] >= 0; }

  /// Unchecked lookup; both arguments must be in the carrier.
  Elem operator()(Elem x, Elem y) const {
    return values_[static_cast<std::size_t>(pos_[x]) * carrier_.size() +
                   static_cast<std::size_t>(pos_[y])];
  }
  /// Checked lookup; throws UnknownElement outside the carrier.
  Elem at(Elem x, Elem y) const;

  /// First (x, y) in carrier order whose value leaves the carrier.
  std::optional<std::pair<Elem, Elem>> first_unclosed() const;
  bool is_closed() const { return !first_unclosed().has_value(); }

  BinOpTable renamed(std::string name) const;
  BinOpTable with_neutral(std::optional<Elem> e) const;
  /// Same operation with the carrier listed in lattice declaration order.
  BinOpTable canonical_order() const;
  /// Rebinds the table to another lattice with the same element indices
  /// (used to move tables across dual()).
  BinOpTable on_lattice(LatticePtr lat) const;

 private:
  std::string name_;
  LatticePtr lat_;
  std::vector<Elem> carrier_;
  ElemSet carrier_set_;
  std::vector<int> pos_;
  std::vector<Elem> values_;
  std::optional<Elem> neutral_;
};

/// Same carrier set and the same value at every cell.
bool table_equal(const BinOpTable& a, const BinOpTable& b);
/// Number of cells (over a's carrier) on which a and b agree; b must
/// contain a's carrier.
std::size_t count_agreements(const BinOpTable& a, const BinOpTable& b);

}  // namespace unilat
