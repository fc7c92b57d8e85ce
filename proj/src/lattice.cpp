#include "unilat/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "unilat/error.hpp"

namespace unilat {
namespace {

void check_token(const std::string& label) {
  if (label.empty()) throw Error(ErrorCode::InvalidCover, "empty element label");
  for (char c : label) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
      throw Error(ErrorCode::InvalidCover, "element label '" + label + "' is not a token");
  }
}

// Minimal members of s under the order given by `up`.
ElemSet minimal(const std::vector<ElemSet>& up, ElemSet s) {
  ElemSet out;
  for (Elem u : s) {
    bool is_min = true;
    for (Elem v : s) {
      if (v != u && up[v].contains(u)) {
        is_min = false;
        break;
      }
    }
    if (is_min) out.insert(u);
  }
  return out;
}

}  // namespace

Lattice Lattice::build(std::string name, std::vector<std::string> labels,
                       std::span<const Cover> covers, std::size_t max_elements) {
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    check_token(labels[i]);
    if (!index.emplace(labels[i], static_cast<Elem>(i)).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + labels[i] + "' declared twice");
  }
  std::vector<std::pair<Elem, Elem>> edges;
  edges.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw Error(ErrorCode::UnknownElementInCover,
                  "cover " + lo + " < " + hi + " names an undeclared element");
    edges.emplace_back(a->second, b->second);
  }
  return from_covers(std::move(name), std::move(labels), edges, max_elements);
}

Lattice Lattice::from_covers(std::string name, std::vector<std::string> labels,
                             std::span<const std::pair<Elem, Elem>> covers,
                             std::size_t max_elements) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NotBounded, "empty carrier");
  if (n > std::min(max_elements, kMaxElements))
    throw Error(ErrorCode::TooManyElements,
                std::to_string(n) + " elements exceeds the limit of " +
                    std::to_string(std::min(max_elements, kMaxElements)));
  std::vector<ElemSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = ElemSet::single(static_cast<Elem>(i));
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::UnknownElementInCover, "cover index out of range");
    if (lo == hi) throw Error(ErrorCode::InvalidCover, "element '" + labels[lo] + "' covers itself");
    up[lo].insert(hi);
  }
  // Warshall over bitsets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(static_cast<Elem>(k))) up[i] |= up[k];
  return from_order(std::move(name), std::move(labels), std::move(up));
}

Lattice Lattice::from_order(std::string name, std::vector<std::string> labels,
                            std::vector<ElemSet> up) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NotBounded, "empty carrier");
  if (n > kMaxElements) throw Error(ErrorCode::TooManyElements, std::to_string(n) + " elements");
  if (up.size() != n) throw Error(ErrorCode::InvalidCover, "order matrix size mismatch");
  for (const auto& l : labels) check_token(l);

  Lattice lat;
  lat.name_ = std::move(name);
  lat.labels_ = std::move(labels);
  lat.up_ = std::move(up);
  const ElemSet everything = ElemSet::all(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = static_cast<Elem>(i);
    if (!lat.up_[x].contains(x) || !lat.up_[x].subset_of(everything))
      throw Error(ErrorCode::InvalidCover, "order is not reflexive at '" + lat.labels_[x] + "'");
    for (Elem y : lat.up_[x]) {
      if (y != x && lat.up_[y].contains(x))
        throw Error(ErrorCode::NotALattice, "(" + lat.labels_[x] + ", " + lat.labels_[y] +
                                                "): cycle in the order");
      if (!lat.up_[y].subset_of(lat.up_[x]))
        throw Error(ErrorCode::InvalidCover, "order is not transitive at '" + lat.labels_[x] + "'");
    }
  }
  lat.finish();
  return lat;
}

void Lattice::finish() {
  const std::size_t n = labels_.size();
  const ElemSet everything = ElemSet::all(n);
  down_.assign(n, ElemSet());
  for (std::size_t i = 0; i < n; ++i)
    for (Elem y : up_[i]) down_[y].insert(static_cast<Elem>(i));

  std::optional<Elem> bot, tp;
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i] == everything) bot = static_cast<Elem>(i);
    if (down_[i] == everything) tp = static_cast<Elem>(i);
  }
  if (!bot) throw Error(ErrorCode::NotBounded, "no element lies below every other");
  if (!tp) throw Error(ErrorCode::NotBounded, "no element lies above every other");
  bottom_ = *bot;
  top_ = *tp;

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Elem x = static_cast<Elem>(i), y = static_cast<Elem>(j);
      const ElemSet ub = minimal(up_, up_[x] & up_[y]);
      if (ub.size() != 1) {
        throw Error(ErrorCode::NotALattice,
                    "(" + labels_[x] + ", " + labels_[y] + "): " + std::to_string(ub.size()) +
                        " minimal upper bounds " + format_set(*this, ub));
      }
      const ElemSet lb = minimal(down_, down_[x] & down_[y]);
      if (lb.size() != 1)
        throw Error(ErrorCode::NotALattice,
                    "(" + labels_[x] + ", " + labels_[y] + "): " + std::to_string(lb.size()) +
                        " maximal lower bounds " + format_set(*this, lb));
      join_[i * n + j] = join_[j * n + i] = ub.first();
      meet_[i * n + j] = meet_[j * n + i] = lb.first();
    }
  }
}

Elem Lattice::check(Elem x) const {
  if (x >= labels_.size())
    throw Error(ErrorCode::UnknownElement, "element index " + std::to_string(x) + " out of range");
  return x;
}

const std::string& Lattice::label(Elem x) const { return labels_[check(x)]; }

std::optional<Elem> Lattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem Lattice::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::UnknownElement,
              "'" + std::string(label) + "' is not an element of " + name_);
}

Elem Lattice::join(ElemSet xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet(ElemSet xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Interval Lattice::interval(Elem a, Elem b) const {
  if (!leq(a, b))
    throw Error(ErrorCode::NotComparable, label(a) + " is not below " + label(b));
  return Interval{a, b, up_[a] & down_[b]};
}

ElemSet Lattice::range(Elem a, Elem b, bool closed_lo, bool closed_hi) const {
  ElemSet s = up_set(a) & down_set(b);
  if (!closed_lo) s.erase(a);
  if (!closed_hi) s.erase(b);
  return s;
}

std::vector<std::pair<Elem, Elem>> Lattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = static_cast<Elem>(i);
    const ElemSet above = up_[x] - ElemSet::single(x);
    for (Elem y : above) {
      // y covers x iff nothing strictly between them
      if ((above & down_[y]) == ElemSet::single(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

Lattice Lattice::dual() const {
  Lattice d;
  d.name_ = name_;
  d.labels_ = labels_;
  d.up_ = down_;
  d.down_ = up_;
  d.join_ = meet_;
  d.meet_ = join_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  return d;
}

std::string format_set(const Lattice& lat, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    if (!first) out += ",";
    out += lat.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace unilat
