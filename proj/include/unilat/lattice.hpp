#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unilat/elem_set.hpp"

namespace unilat {

struct Interval {
  Elem lo = 0;
  Elem hi = 0;
  ElemSet members;

  std::vector<Elem> list() const { return members.to_vector(); }
  bool contains(Elem x) const { return members.contains(x); }
  std::size_t size() const { return members.size(); }
};

using Cover = std::pair<std::string, std::string>;

/// A finite bounded lattice. Elements are addressed by their index in
/// declaration order; every iteration and every reported witness follows
/// that order. Instances are validated on construction and immutable
/// afterwards.
class Lattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (each pair reads "first < second").
  static Lattice build(std::string name, std::vector<std::string> labels,
                       std::span<const Cover> covers, std::size_t max_elements = kMaxElements);

  /// Same, with covers given by index.
  static Lattice from_covers(std::string name, std::vector<std::string> labels,
                             std::span<const std::pair<Elem, Elem>> covers,
                             std::size_t max_elements = kMaxElements);

  /// Builds from a full order: `up[x]` is the set of y with x <= y. The
  /// relation is checked to be a bounded lattice order.
  static Lattice from_order(std::string name, std::vector<std::string> labels,
                            std::vector<ElemSet> up);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const;
  std::optional<Elem> find(std::string_view label) const;
  /// Like find, but throws UnknownElement.
  Elem at(std::string_view label) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  ElemSet all() const { return ElemSet::all(size()); }

  bool leq(Elem x, Elem y) const { return up_[check(x)].contains(check(y)); }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(Elem x, Elem y) const { return !comparable(x, y); }

  Elem join(Elem x, Elem y) const { return join_[check(x) * size() + check(y)]; }
  Elem meet(Elem x, Elem y) const { return meet_[check(x) * size() + check(y)]; }
  Elem join(ElemSet xs) const;
  Elem meet(ElemSet xs) const;

  /// {y : x <= y}
  ElemSet up_set(Elem x) const { return up_[check(x)]; }
  /// {y : y <= x}
  ElemSet down_set(Elem x) const { return down_[check(x)]; }
  ElemSet comparable_set(Elem x) const { return up_set(x) | down_set(x); }

  /// I_a: elements incomparable with a.
  ElemSet inc_set(Elem a) const { return all() - comparable_set(a); }
  /// I_a^b: incomparable with a, comparable with b.
  ElemSet inc_comp_set(Elem a, Elem b) const { return inc_set(a) & comparable_set(b); }
  /// I_{a,b}: incomparable with both.
  ElemSet inc_both_set(Elem a, Elem b) const { return inc_set(a) & inc_set(b); }

  /// [a, b]; throws NotComparable unless a <= b.
  Interval interval(Elem a, Elem b) const;
  /// Any of the four interval shapes, without the a <= b requirement.
  ElemSet range(Elem a, Elem b, bool closed_lo, bool closed_hi) const;

  /// Hasse edges (x, y) with y covering x, in lexicographic declaration order.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// The order dual: same labels and indices, order reversed, join and meet
  /// swapped.
  Lattice dual() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  Lattice() = default;
  Elem check(Elem x) const;
  void finish();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr share(Lattice lat) { return std::make_shared<const Lattice>(std::move(lat)); }

/// Comma-separated labels of the members of `s`, in declaration order.
std::string format_set(const Lattice& lat, ElemSet s);

}  // namespace unilat
