#include "unilat/unary_op.hpp"

#include "unilat/error.hpp"

namespace unilat {

UnaryOpTable::UnaryOpTable(std::string name, LatticePtr lat, std::vector<Elem> image)
    : name_(std::move(name)), lat_(std::move(lat)), image_(std::move(image)) {
  if (image_.size() != lat_->size())
    throw Error(ErrorCode::InvalidRequest, "unary map " + name_ + " is not total on " + lat_->name());
  for (Elem y : image_)
    if (y >= lat_->size()) throw Error(ErrorCode::UnknownElement, "unary map image out of range");
}

ElemSet UnaryOpTable::moved() const {
  ElemSet s;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) s.insert(static_cast<Elem>(x));
  return s;
}

namespace {

// Closure axioms; with `dual` set the order is read upside down, which
// turns them into the interior axioms.
Verdict check_hull(const UnaryOpTable& u, bool dual) {
  const Lattice& lat = u.lattice();
  auto below = [&](Elem x, Elem y) { return dual ? lat.leq(y, x) : lat.leq(x, y); };
  auto sup = [&](Elem x, Elem y) { return dual ? lat.meet(x, y) : lat.join(x, y); };
  const std::string op = dual ? "int" : "cl";
  const std::string j = dual ? " ^ " : " v ";
  for (Elem x : lat.all())
    if (!below(x, u(x)))
      return Verdict::fail({dual ? "int(x) <= x" : "x <= cl(x)", {{"x", x}}, dual ? u(x) : x, dual ? x : u(x)});
  for (Elem x : lat.all())
    for (Elem y : lat.all()) {
      const Elem l = u(sup(x, y)), r = sup(u(x), u(y));
      if (l != r)
        return Verdict::fail({op + "(x" + j + "y) = " + op + "(x)" + j + op + "(y)", {{"x", x}, {"y", y}}, l, r});
    }
  for (Elem x : lat.all())
    if (u(u(x)) != u(x)) return Verdict::fail({op + "(" + op + "(x)) = " + op + "(x)", {{"x", x}}, u(u(x)), u(x)});
  return Verdict::pass();
}

std::vector<UnaryOpTable> all_hulls(const LatticePtr& lat, bool dual) {
  const std::size_t n = lat->size();
  std::vector<UnaryOpTable> out;
  std::vector<Elem> img(n, 0);
  // Candidates for each x are restricted to the up-set (down-set for interiors).
  std::vector<std::vector<Elem>> cand(n);
  for (Elem x : lat->all()) cand[x] = (dual ? lat->down_set(x) : lat->up_set(x)).to_vector();
  std::vector<std::size_t> idx(n, 0);
  const std::string base = dual ? "int" : "cl";
  while (true) {
    for (std::size_t x = 0; x < n; ++x) img[x] = cand[x][idx[x]];
    UnaryOpTable u(base + std::to_string(out.size()), lat, img);
    if (check_hull(u, dual).holds) out.push_back(std::move(u));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < cand[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace

Verdict is_closure(const UnaryOpTable& u) { return check_hull(u, false); }
Verdict is_interior(const UnaryOpTable& u) { return check_hull(u, true); }

UnaryOpTable identity_op(const LatticePtr& lat) {
  return {"id", lat, lat->all().to_vector()};
}

UnaryOpTable canonical_closure(const LatticePtr& lat, Elem a) {
  std::vector<Elem> img;
  for (Elem x : lat->all()) img.push_back(lat->join(x, a));
  return {"cl_" + lat->label(a), lat, img};
}

UnaryOpTable canonical_interior(const LatticePtr& lat, Elem b) {
  std::vector<Elem> img;
  for (Elem x : lat->all()) img.push_back(lat->meet(x, b));
  return {"int_" + lat->label(b), lat, img};
}

std::vector<UnaryOpTable> all_closures(const LatticePtr& lat) { return all_hulls(lat, false); }
std::vector<UnaryOpTable> all_interiors(const LatticePtr& lat) { return all_hulls(lat, true); }

}  // namespace unilat
