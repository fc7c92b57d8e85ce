#include <stdexcept>

#include "unilat/constructions.hpp"
#include "unilat/error.hpp"

namespace unilat {
namespace {

class Collector {
 public:
  Collector(std::string id, std::size_t cap) : cap_(cap) { r_.id = std::move(id); }
  void fail(Witness w) {
    r_.holds = false;
    ++r_.violations;
    if (r_.witnesses.size() < cap_) r_.witnesses.push_back(std::move(w));
  }
  ConditionResult done() { return std::move(r_); }

 private:
  ConditionResult r_;
  std::size_t cap_;
};

ConditionResult flag(std::string id, bool holds) {
  ConditionResult r;
  r.id = std::move(id);
  r.holds = holds;
  r.violations = holds ? 0 : 1;
  return r;
}

// "U*(x,y) comparable with z" over the square of P ∩ comp(z), z ∈ zs.
ConditionResult comparable_square(std::string id, const Lattice& L, const BinOpTable& U, ElemSet zs, ElemSet P,
                                  std::size_t cap) {
  Collector c(std::move(id), cap);
  for (Elem z : zs) {
    const ElemSet s = P & L.comparable_set(z);
    for (Elem x : s)
      for (Elem y : s) {
        const Elem v = U(x, y);
        if (!L.comparable(v, z)) c.fail({"U*(x,y) comparable with z", {{"z", z}, {"x", x}, {"y", y}}, v, z});
      }
  }
  return c.done();
}

// "U*(x,y) incomparable with z" over box × S ∪ S' × box, with
// S = P ∩ inc(first_ref(z)) and S' = P ∩ inc(z).
ConditionResult incomparable_cross(std::string id, const Lattice& L, const BinOpTable& U, ElemSet zs, ElemSet P,
                                   ElemSet box, std::optional<Elem> first_ref, std::size_t cap) {
  Collector c(std::move(id), cap);
  for (Elem z : zs) {
    const ElemSet second = P & L.inc_set(z);
    const ElemSet first = first_ref ? P & L.inc_set(*first_ref) : second;
    for (Elem x : box)
      for (Elem y : box) {
        if (!first.contains(y) && !second.contains(x)) continue;
        const Elem v = U(x, y);
        if (!L.incomparable(v, z)) c.fail({"U*(x,y) incomparable with z", {{"z", z}, {"x", x}, {"y", y}}, v, z});
      }
  }
  return c.done();
}

ConditionReport thm3_family(const ConstructionRequest& req, const CheckOptions& opt, bool upper) {
  const Resolved r = resolve(req);
  const Lattice& L = *r.lat;
  const Elem e = r.e, a = r.anchor;
  const ElemSet box = r.carrier.members;
  // Lower: P = I_e^a ∪ (e, a].  Upper: P = I_e^b ∪ [b, e).
  const ElemSet P = L.inc_comp_set(e, a) | (upper ? L.range(a, e, true, false) : L.range(e, a, false, true));
  const ElemSet z1 = L.inc_both_set(e, a);
  const ElemSet z3 = L.inc_comp_set(a, e);
  const std::optional<Elem> ref4 = opt.cond4 == Cond4Reading::A ? std::optional<Elem>(a) : std::nullopt;

  ConditionReport rep{req.id, {}, {}};
  rep.conditions.push_back(comparable_square("1", L, req.base, z1, P, opt.witness_cap));
  rep.conditions.push_back(incomparable_cross("2", L, req.base, z1, P, box, std::nullopt, opt.witness_cap));
  rep.conditions.push_back(comparable_square("3", L, req.base, z3, P, opt.witness_cap));
  rep.conditions.push_back(incomparable_cross("4", L, req.base, z3, P, box, ref4, opt.witness_cap));
  return rep;
}

ConditionReport prop3_family(const ConstructionRequest& req, const CheckOptions& opt, bool upper) {
  const Resolved r = resolve(req);
  const Lattice& L = *r.lat;
  const Elem a = r.anchor;
  const ElemSet P = upper ? r.carrier.members : L.range(L.bottom(), a, false, true);
  ConditionReport rep{req.id, {}, {}};
  rep.conditions.push_back(comparable_square("1", L, req.base, L.inc_set(a), P, opt.witness_cap));
  return rep;
}

// Shared shape of the closure and interior theorems. `hull` is cl(x) v cl(y)
// (resp. int(x) ^ int(y)); the dual case swaps the roles of 0/1 and the
// interval sides.
ConditionReport thm4_family(const ConstructionRequest& req, const CheckOptions& opt, bool upper) {
  const Resolved r = resolve(req);
  const Lattice& L = *r.lat;
  const BinOpTable& U = req.base;
  const Elem e = r.e, a = r.anchor;
  const UnaryOpTable u = *effective_unary(req);
  const Elem far = upper ? L.bottom() : L.top();
  auto hull = [&](Elem x, Elem y) { return upper ? L.meet(u(x), u(y)) : L.join(u(x), u(y)); };
  const std::string h = upper ? "int(x) ^ int(y)" : "cl(x) v cl(y)";
  const std::string I = upper ? "I_{e,b}" : "I_{e,a}";

  const ElemSet I_ea = L.inc_both_set(e, a);
  const ElemSet I_e_a = L.inc_comp_set(e, a);  // I_e^a: incomparable with e, comparable with a
  const ElemSet I_a_e = L.inc_comp_set(a, e);  // I_a^e
  const ElemSet beyond = upper ? L.range(L.bottom(), a, true, false) : L.range(a, L.top(), false, true);
  const ElemSet open = upper ? L.range(L.bottom(), a, false, false) : L.range(a, L.top(), false, false);

  auto range_cond = [&](std::string id, std::string rel, auto ok) {
    Collector c(std::move(id), opt.witness_cap);
    for (Elem x : I_ea)
      for (Elem y : I_ea) {
        const Elem v = hull(x, y);
        if (!ok(v)) c.fail({h + " " + rel, {{"x", x}, {"y", y}}, v, std::nullopt});
      }
    return c.done();
  };
  const std::string range_id = upper ? "range_in_Ieb" : "range_in_Iea";
  const std::string beyond_id = upper ? "range_below_b" : "range_above_a";
  const std::string extreme_id = upper ? "above_bottom" : "below_top";
  const std::string class_id = upper ? "U_top" : "U_bot";

  auto in_range = [&] { return range_cond(range_id, "in " + I, [&](Elem v) { return I_ea.contains(v); }); };
  auto in_beyond = [&] {
    return range_cond(beyond_id, upper ? "in [0,b)" : "in (a,1]", [&](Elem v) { return beyond.contains(v); });
  };
  auto in_extreme = [&] {
    if (opt.top == TopReading::A1)
      return range_cond(extreme_id, upper ? "in (0,b)" : "in (a,1)", [&](Elem v) { return open.contains(v); });
    return range_cond(extreme_id, upper ? "> 0" : "< 1", [&](Elem v) { return v != far; });
  };
  auto nonempty = [&] { return flag("nonempty", !(I_ea | I_a_e | open).empty()); };
  auto parallel = [&] {
    const ElemSet ys = opt.parallel == ParallelVariant::IeA ? I_e_a : I_a_e;
    Collector c("parallel", opt.witness_cap);
    for (Elem x : I_ea)
      for (Elem y : ys)
        if (L.comparable(x, y)) c.fail({"x || y", {{"x", x}, {"y", y}}, std::nullopt, std::nullopt});
    return c.done();
  };
  auto in_class = [&] {
    // U_bot: U*(x,y) in [0,e] iff (x,y) in [0,e]^2.  U_top dually.
    const ElemSet side = upper ? L.up_set(e) : L.down_set(e);
    Collector c(class_id, opt.witness_cap);
    for (Elem x : r.carrier.members)
      for (Elem y : r.carrier.members) {
        const Elem v = U(x, y);
        if (side.contains(v) != (side.contains(x) && side.contains(y)))
          c.fail({upper ? "U*(x,y) in [e,1] iff (x,y) in [e,1]^2" : "U*(x,y) in [0,e] iff (x,y) in [0,e]^2",
                  {{"x", x}, {"y", y}}, v, std::nullopt});
      }
    return c.done();
  };

  ConditionReport rep{req.id, {}, {}};
  switch (opt.closure_case) {
    case ClosureCase::C1i:
      rep.hypotheses = {in_range(), in_class()};
      rep.conditions = {parallel()};
      break;
    case ClosureCase::C1ii:
      rep.hypotheses = {in_range(), nonempty()};
      rep.conditions = {in_class(), parallel()};
      break;
    case ClosureCase::C2i:
      rep.hypotheses = {in_beyond()};
      rep.conditions = {parallel(), in_class()};
      break;
    case ClosureCase::C2ii:
      if (opt.top == TopReading::A1)
        rep.hypotheses = {in_beyond(), in_extreme(), nonempty()};
      else
        rep.hypotheses = {in_extreme(), nonempty()};
      rep.conditions = {parallel(), in_class()};
      break;
  }
  return rep;
}

}  // namespace

std::string_view to_string(ClosureCase c) {
  switch (c) {
    case ClosureCase::C1i: return "1i";
    case ClosureCase::C1ii: return "1ii";
    case ClosureCase::C2i: return "2i";
    case ClosureCase::C2ii: return "2ii";
  }
  return "?";
}

ClosureCase parse_case(std::string_view s) {
  for (ClosureCase c : {ClosureCase::C1i, ClosureCase::C1ii, ClosureCase::C2i, ClosureCase::C2ii})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::InvalidRequest, "unknown case '" + std::string(s) + "' (expected 1i, 1ii, 2i or 2ii)");
}

bool ConditionReport::applicable() const {
  for (const auto& h : hypotheses)
    if (!h.holds) return false;
  return true;
}

bool ConditionReport::holds() const {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

const ConditionResult& ConditionReport::at(std::string_view id) const {
  for (const auto& c : hypotheses)
    if (c.id == id) return c;
  for (const auto& c : conditions)
    if (c.id == id) return c;
  throw Error(ErrorCode::InvalidRequest, "report has no entry '" + std::string(id) + "'");
}

namespace {

void expect(const ConstructionRequest& req, std::initializer_list<ConstructionId> ids, const char* checker) {
  for (ConstructionId id : ids)
    if (req.id == id) return;
  throw Error(ErrorCode::InvalidRequest,
              std::string(checker) + " does not apply to construction " + std::string(to_string(req.id)));
}

}  // namespace

ConditionReport check_thm31(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::U1, ConstructionId::Ut1}, "check_thm31");
  return thm3_family(req, opt, false);
}

ConditionReport check_thm32(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::U2, ConstructionId::Us1}, "check_thm32");
  return thm3_family(req, opt, true);
}

ConditionReport check_prop31(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::S1, ConstructionId::S1star}, "check_prop31");
  return prop3_family(req, opt, false);
}

ConditionReport check_prop32(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::T1, ConstructionId::T1star}, "check_prop32");
  return prop3_family(req, opt, true);
}

ConditionReport check_thm21(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::S1star, ConstructionId::T1star, ConstructionId::S1, ConstructionId::T1}, "check_thm21");
  const bool upper = is_upper(req.id);
  const Resolved r = resolve(req);
  const Lattice& L = *r.lat;
  const Elem a = r.anchor;
  const ElemSet ys = upper ? L.range(a, L.top(), true, false) : L.range(L.bottom(), a, false, true);
  Collector c("parallel", opt.witness_cap);
  for (Elem x : L.inc_set(a))
    for (Elem y : ys)
      if (L.comparable(x, y)) c.fail({"x || y", {{"x", x}, {"y", y}}, std::nullopt, std::nullopt});
  return {req.id, {}, {c.done()}};
}

ConditionReport check_thm41(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::U3, ConstructionId::U31, ConstructionId::U32}, "check_thm41");
  return thm4_family(req, opt, false);
}

ConditionReport check_thm42(const ConstructionRequest& req, const CheckOptions& opt) {
  expect(req, {ConstructionId::U4, ConstructionId::U41, ConstructionId::U42}, "check_thm42");
  return thm4_family(req, opt, true);
}

ConditionReport check_conditions(const ConstructionRequest& req, const CheckOptions& opt) {
  switch (req.id) {
    case ConstructionId::U1: return check_thm31(req, opt);
    case ConstructionId::U2: return check_thm32(req, opt);
    case ConstructionId::S1: return check_prop31(req, opt);
    case ConstructionId::T1: return check_prop32(req, opt);
    case ConstructionId::S1star:
    case ConstructionId::T1star: return check_thm21(req, opt);
    case ConstructionId::U3:
    case ConstructionId::U31:
    case ConstructionId::U32: return check_thm41(req, opt);
    case ConstructionId::U4:
    case ConstructionId::U41:
    case ConstructionId::U42: return check_thm42(req, opt);
    default:
      resolve(req);
      return {req.id, {}, {}};
  }
}

}  // namespace unilat
