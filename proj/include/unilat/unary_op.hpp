#pragma once

#include <string>
#include <vector>

#include "unilat/axioms.hpp"
#include "unilat/lattice.hpp"

namespace unilat {

/// A total map L -> L given extensionally.
class UnaryOpTable {
 public:
  UnaryOpTable(std::string name, LatticePtr lat, std::vector<Elem> image);

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  Elem operator()(Elem x) const { return image_[x]; }
  const std::vector<Elem>& image() const { return image_; }
  /// Elements whose image differs from themselves.
  ElemSet moved() const;

  UnaryOpTable on_lattice(LatticePtr lat) const { return {name_, std::move(lat), image_}; }

  friend bool operator==(const UnaryOpTable& a, const UnaryOpTable& b) { return a.image_ == b.image_; }

 private:
  std::string name_;
  LatticePtr lat_;
  std::vector<Elem> image_;
};

/// x <= cl(x), cl(x v y) = cl(x) v cl(y), cl(cl(x)) = cl(x).
Verdict is_closure(const UnaryOpTable& u);
/// int(x) <= x, int(x ^ y) = int(x) ^ int(y), int(int(x)) = int(x).
Verdict is_interior(const UnaryOpTable& u);

UnaryOpTable identity_op(const LatticePtr& lat);
/// x -> x v a
UnaryOpTable canonical_closure(const LatticePtr& lat, Elem a);
/// x -> x ^ b
UnaryOpTable canonical_interior(const LatticePtr& lat, Elem b);

/// Every closure operator on `lat`, in lexicographic order of image vectors.
std::vector<UnaryOpTable> all_closures(const LatticePtr& lat);
std::vector<UnaryOpTable> all_interiors(const LatticePtr& lat);

}  // namespace unilat
