#include "unilat/axioms.hpp"

#include <sstream>

#include "unilat/error.hpp"

namespace unilat {

Elem Witness::get(std::string_view var) const {
  for (const auto& b : bindings)
    if (b.var == var) return b.value;
  throw Error(ErrorCode::InvalidRequest, "witness has no variable " + std::string(var));
}

std::string describe(const Witness& w, const Lattice& lat) {
  std::ostringstream out;
  out << w.relation << " fails at (";
  for (std::size_t i = 0; i < w.bindings.size(); ++i) {
    if (i) out << ", ";
    out << w.bindings[i].var << "=" << lat.label(w.bindings[i].value);
  }
  out << ")";
  if (w.lhs && w.rhs) out << ": lhs=" << lat.label(*w.lhs) << " rhs=" << lat.label(*w.rhs);
  return out.str();
}

Verdict check_commutative(const BinOpTable& op) {
  const ElemSet c = op.carrier_set();
  for (Elem x : c)
    for (Elem y : c) {
      if (y <= x) continue;
      if (op(x, y) != op(y, x))
        return Verdict::fail({"op(x,y) = op(y,x)", {{"x", x}, {"y", y}}, op(x, y), op(y, x)});
    }
  return Verdict::pass();
}

Verdict check_associative(const BinOpTable& op) {
  const ElemSet c = op.carrier_set();
  for (Elem x : c)
    for (Elem y : c)
      for (Elem z : c) {
        const Elem yz = op(y, z), xy = op(x, y);
        if (!c.contains(yz) || !c.contains(xy)) {
          const bool left = !c.contains(yz);
          return Verdict::fail({left ? "op(y,z) in carrier" : "op(x,y) in carrier",
                                {{"x", x}, {"y", y}, {"z", z}}, left ? yz : xy, std::nullopt});
        }
        const Elem lhs = op(x, yz), rhs = op(xy, z);
        if (lhs != rhs)
          return Verdict::fail({"op(x,op(y,z)) = op(op(x,y),z)", {{"x", x}, {"y", y}, {"z", z}}, lhs, rhs});
      }
  return Verdict::pass();
}

Verdict check_monotone(const BinOpTable& op) {
  const Lattice& lat = op.lattice();
  const ElemSet c = op.carrier_set();
  for (Elem x : c)
    for (Elem y : c) {
      if (x == y || !lat.leq(x, y)) continue;
      for (Elem z : c) {
        if (!lat.leq(op(x, z), op(y, z)))
          return Verdict::fail({"op(x,z) <= op(y,z)", {{"x", x}, {"y", y}, {"z", z}}, op(x, z), op(y, z)});
        if (!lat.leq(op(z, x), op(z, y)))
          return Verdict::fail({"op(z,x) <= op(z,y)", {{"x", x}, {"y", y}, {"z", z}}, op(z, x), op(z, y)});
      }
    }
  return Verdict::pass();
}

Verdict check_neutral(const BinOpTable& op, Elem e) {
  if (!op.contains(e))
    throw Error(ErrorCode::UnknownElement, "neutral candidate is not in the carrier of " + op.name());
  for (Elem x : op.carrier_set()) {
    if (op(e, x) != x) return Verdict::fail({"op(e,x) = x", {{"e", e}, {"x", x}}, op(e, x), x});
    if (op(x, e) != x) return Verdict::fail({"op(x,e) = x", {{"e", e}, {"x", x}}, op(x, e), x});
  }
  return Verdict::pass();
}

AxiomReport check_axioms(const BinOpTable& op, Elem neutral_candidate) {
  AxiomReport r;
  r.neutral_checked = neutral_candidate;
  r.neutral = check_neutral(op, neutral_candidate);
  r.commutative = check_commutative(op);
  r.associative = check_associative(op);
  r.monotone = check_monotone(op);
  return r;
}

Interval carrier_interval(const BinOpTable& op) {
  const Lattice& lat = op.lattice();
  const ElemSet c = op.carrier_set();
  if (c.empty()) throw Error(ErrorCode::CarrierNotInterval, "empty carrier");
  const Elem lo = lat.meet(c), hi = lat.join(c);
  if (!c.contains(lo) || !c.contains(hi) || lat.interval(lo, hi).members != c)
    throw Error(ErrorCode::CarrierNotInterval,
                "carrier " + format_set(lat, c) + " of " + op.name() + " is not an interval");
  return lat.interval(lo, hi);
}

namespace {

void require_closed(const BinOpTable& op) {
  if (auto p = op.first_unclosed())
    throw Error(ErrorCode::NotClosed, op.name() + "(" + op.lattice().label(p->first) + ", " +
                                          op.lattice().label(p->second) + ") leaves the carrier");
}

}  // namespace

bool is_uninorm(const BinOpTable& op, Elem e) {
  carrier_interval(op);
  require_closed(op);
  if (!op.contains(e)) throw Error(ErrorCode::UnknownElement, "neutral candidate outside the carrier");
  return check_neutral(op, e).holds && check_commutative(op).holds &&
         check_monotone(op).holds && check_associative(op).holds;
}

bool is_tnorm(const BinOpTable& op) { return is_uninorm(op, carrier_interval(op).hi); }
bool is_tconorm(const BinOpTable& op) { return is_uninorm(op, carrier_interval(op).lo); }

ElemSet neutral_elements(const BinOpTable& op) {
  ElemSet out;
  const ElemSet c = op.carrier_set();
  for (Elem e : c) {
    bool ok = true;
    for (Elem y : c)
      if (op(e, y) != y) {
        ok = false;
        break;
      }
    if (ok) out.insert(e);
  }
  return out;
}

BinOpTable restrict(const BinOpTable& op, const Interval& iv) {
  const Lattice& lat = op.lattice();
  if (!iv.members.subset_of(op.carrier_set()))
    throw Error(ErrorCode::CarrierMismatch, "interval " + format_set(lat, iv.members) +
                                                " is not inside the carrier of " + op.name());
  for (Elem x : iv.members)
    for (Elem y : iv.members)
      if (!iv.members.contains(op(x, y)))
        throw Error(ErrorCode::NotClosed, op.name() + "(" + lat.label(x) + ", " + lat.label(y) +
                                              ") = " + lat.label(op(x, y)) + " leaves [" +
                                              lat.label(iv.lo) + ", " + lat.label(iv.hi) + "]");
  std::optional<Elem> e;
  if (op.declared_neutral() && iv.contains(*op.declared_neutral())) e = op.declared_neutral();
  return BinOpTable::tabulate(op.name() + "|[" + lat.label(iv.lo) + "," + lat.label(iv.hi) + "]",
                              op.lattice_ptr(), iv.list(),
                              [&op](Elem x, Elem y) { return op(x, y); }, e);
}

ClassificationProfile classify(const BinOpTable& op, Elem e) {
  if (!is_uninorm(op, e))
    throw Error(ErrorCode::NotAUninorm, op.name() + " is not a uninorm with neutral element " +
                                            op.lattice().label(e));
  const Lattice& lat = op.lattice();
  const Interval iv = carrier_interval(op);
  const ElemSet c = iv.members;
  const ElemSet low = lat.range(iv.lo, e, true, true);    // [0, e]
  const ElemSet high = lat.range(e, iv.hi, true, true);   // [e, 1]
  const ElemSet low_open = low - ElemSet::single(e);      // [0, e)
  const ElemSet high_open = high - ElemSet::single(e);    // (e, 1]

  ClassificationProfile p;
  p.is_uninorm = true;
  p.neutral_elements = neutral_elements(op);
  p.is_tnorm = e == iv.hi;
  p.is_tconorm = e == iv.lo;
  p.conjunctive = op(iv.lo, iv.hi) == iv.lo;
  p.disjunctive = op(iv.lo, iv.hi) == iv.hi;

  p.idempotent = true;
  for (Elem x : c)
    if (op(x, x) != x) p.idempotent = false;

  p.in_Umax_star = true;
  for (Elem x : low_open)
    for (Elem y : high_open)
      if (op(x, y) != y) p.in_Umax_star = false;
  p.in_Umin_star = true;
  for (Elem x : high_open)
    for (Elem y : low_open)
      if (op(x, y) != y) p.in_Umin_star = false;

  p.in_Ubot_star = true;
  p.in_Utop_star = true;
  for (Elem x : c)
    for (Elem y : c) {
      const Elem v = op(x, y);
      if (low.contains(v) != (low.contains(x) && low.contains(y))) p.in_Ubot_star = false;
      if (high.contains(v) != (high.contains(x) && high.contains(y))) p.in_Utop_star = false;
    }
  return p;
}

PartitionReport assoc_by_partition(const BinOpTable& op, const std::vector<ElemSet>& parts) {
  const ElemSet c = op.carrier_set();
  ElemSet covered;
  for (const auto& p : parts) {
    if (!p.subset_of(c))
      throw Error(ErrorCode::PartsDoNotCover, "a part leaves the carrier of " + op.name());
    covered |= p;
  }
  if (covered != c) throw Error(ErrorCode::PartsDoNotCover, "parts miss " + format_set(op.lattice(), c - covered));
  if (auto v = check_commutative(op); !v.holds)
    throw Error(ErrorCode::NotCommutative, op.name() + " is not commutative; " +
                                               describe(*v.witness, op.lattice()));

  // Disjoint refinement: each element belongs to the first part naming it.
  std::vector<ElemSet> blocks;
  ElemSet seen;
  for (const auto& p : parts) {
    const ElemSet b = p - seen;
    seen |= p;
    if (!b.empty()) blocks.push_back(b);
  }

  PartitionReport rep;
  auto self_check = [&](Elem x, Elem y, Elem z) -> std::optional<Witness> {
    ++rep.triples_checked;
    const Elem yz = op(y, z), xy = op(x, y);
    if (!c.contains(yz) || !c.contains(xy))
      return Witness{"op(y,z) in carrier", {{"x", x}, {"y", y}, {"z", z}}, yz, std::nullopt};
    const Elem lhs = op(x, yz), rhs = op(xy, z);
    if (lhs != rhs) return Witness{"op(x,op(y,z)) = op(op(x,y),z)", {{"x", x}, {"y", y}, {"z", z}}, lhs, rhs};
    return std::nullopt;
  };

  // Three distinct parts: x(yz) = (xy)z = y(xz). The second equation is the
  // associativity instance at (y, x, z).
  const std::size_t k = blocks.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        for (Elem x : blocks[i])
          for (Elem y : blocks[j])
            for (Elem z : blocks[l]) {
              if (auto w = self_check(x, y, z)) return {Verdict::fail(*w), "three-part", rep.triples_checked};
              if (auto w = self_check(y, x, z)) return {Verdict::fail(*w), "three-part", rep.triples_checked};
            }
  // Two parts, x alone, y and z sharing a part.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (Elem x : blocks[i])
        for (Elem y : blocks[j])
          for (Elem z : blocks[j])
            if (auto w = self_check(x, y, z)) return {Verdict::fail(*w), "two-part", rep.triples_checked};
    }
  for (std::size_t i = 0; i < k; ++i)
    for (Elem x : blocks[i])
      for (Elem y : blocks[i])
        for (Elem z : blocks[i])
          if (auto w = self_check(x, y, z)) return {Verdict::fail(*w), "one-part", rep.triples_checked};
  rep.associative = Verdict::pass();
  return rep;
}

}  // namespace unilat
