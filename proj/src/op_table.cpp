#include "unilat/op_table.hpp"

#include "unilat/error.hpp"

namespace unilat {

BinOpTable::BinOpTable(std::string name, LatticePtr lat, std::vector<Elem> carrier,
                       std::vector<Elem> values, std::optional<Elem> declared_neutral)
    : name_(std::move(name)),
      lat_(std::move(lat)),
      carrier_(std::move(carrier)),
      values_(std::move(values)),
      neutral_(declared_neutral) {
  if (!lat_) throw Error(ErrorCode::InvalidRequest, "operation table without a lattice");
  const std::size_t n = lat_->size();
  pos_.assign(n, -1);
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    const Elem x = carrier_[i];
    if (x >= n) throw Error(ErrorCode::UnknownElement, "carrier element out of range");
    if (pos_[x] >= 0)
      throw Error(ErrorCode::DuplicateElement,
                  "'" + lat_->label(x) + "' listed twice in the carrier of " + name_);
    pos_[x] = static_cast<int>(i);
    carrier_set_.insert(x);
  }
  if (values_.size() != carrier_.size() * carrier_.size())
    throw Error(ErrorCode::InvalidRequest, "table of " + name_ + " is not square over its carrier");
  for (Elem v : values_)
    if (v >= n) throw Error(ErrorCode::UnknownElement, "table value out of range");
  if (neutral_ && !carrier_set_.contains(*neutral_))
    throw Error(ErrorCode::UnknownElement,
                "declared neutral '" + lat_->label(*neutral_) + "' is not in the carrier");
}

BinOpTable BinOpTable::tabulate(std::string name, LatticePtr lat, std::vector<Elem> carrier,
                                const std::function<Elem(Elem, Elem)>& f,
                                std::optional<Elem> declared_neutral) {
  std::vector<Elem> values;
  values.reserve(carrier.size() * carrier.size());
  for (Elem x : carrier)
    for (Elem y : carrier) values.push_back(f(x, y));
  return BinOpTable(std::move(name), std::move(lat), std::move(carrier), std::move(values),
                    declared_neutral);
}

Elem BinOpTable::at(Elem x, Elem y) const {
  if (!contains(x) || !contains(y))
    throw Error(ErrorCode::UnknownElement, "argument outside the carrier of " + name_);
  return (*this)(x, y);
}

std::optional<std::pair<Elem, Elem>> BinOpTable::first_unclosed() const {
  for (Elem x : carrier_)
    for (Elem y : carrier_)
      if (!carrier_set_.contains((*this)(x, y))) return std::pair{x, y};
  return std::nullopt;
}

BinOpTable BinOpTable::renamed(std::string name) const {
  BinOpTable t = *this;
  t.name_ = std::move(name);
  return t;
}

BinOpTable BinOpTable::with_neutral(std::optional<Elem> e) const {
  return BinOpTable(name_, lat_, carrier_, values_, e);
}

BinOpTable BinOpTable::canonical_order() const {
  return tabulate(name_, lat_, carrier_set_.to_vector(),
                  [this](Elem x, Elem y) { return (*this)(x, y); }, neutral_);
}

BinOpTable BinOpTable::on_lattice(LatticePtr lat) const {
  if (!lat || lat->size() != lat_->size())
    throw Error(ErrorCode::CarrierMismatch, "target lattice has a different carrier");
  return BinOpTable(name_, std::move(lat), carrier_, values_, neutral_);
}

bool table_equal(const BinOpTable& a, const BinOpTable& b) {
  if (a.carrier_set() != b.carrier_set()) return false;
  for (Elem x : a.carrier())
    for (Elem y : a.carrier())
      if (a(x, y) != b(x, y)) return false;
  return true;
}

std::size_t count_agreements(const BinOpTable& a, const BinOpTable& b) {
  if (!a.carrier_set().subset_of(b.carrier_set()))
    throw Error(ErrorCode::CarrierMismatch, "carrier of " + a.name() + " not inside " + b.name());
  std::size_t n = 0;
  for (Elem x : a.carrier())
    for (Elem y : a.carrier())
      if (a(x, y) == b(x, y)) ++n;
  return n;
}

}  // namespace unilat
