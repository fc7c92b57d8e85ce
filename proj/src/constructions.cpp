#include "unilat/constructions.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "unilat/error.hpp"

namespace unilat {
namespace {

struct IdName {
  ConstructionId id;
  std::string_view name;
};

constexpr std::array<IdName, 22> kIds{{
    {ConstructionId::U1, "u1"},      {ConstructionId::U2, "u2"},       {ConstructionId::S1, "s1"},
    {ConstructionId::T1, "t1"},      {ConstructionId::S1star, "s1star"}, {ConstructionId::T1star, "t1star"},
    {ConstructionId::U3, "u3"},      {ConstructionId::U31, "u31"},     {ConstructionId::U32, "u32"},
    {ConstructionId::U4, "u4"},      {ConstructionId::U41, "u41"},     {ConstructionId::U42, "u42"},
    {ConstructionId::Ut1, "u_t1"},   {ConstructionId::Us1, "u_s1"},    {ConstructionId::Ucl, "u_cl"},
    {ConstructionId::Uint, "u_int"}, {ConstructionId::Ut2, "u_t2"},    {ConstructionId::Us2, "u_s2"},
    {ConstructionId::Ut3, "u_t3"},   {ConstructionId::Us3, "u_s3"},    {ConstructionId::S2star, "s2star"},
    {ConstructionId::T2star, "t2star"},
}};

bool is_tconorm_id(ConstructionId id) {
  return id == ConstructionId::S1 || id == ConstructionId::S1star || id == ConstructionId::S2star;
}
bool is_tnorm_id(ConstructionId id) {
  return id == ConstructionId::T1 || id == ConstructionId::T1star || id == ConstructionId::T2star;
}
// Specials whose anchor is the neutral element itself.
bool anchored_at_neutral(ConstructionId id) {
  switch (id) {
    case ConstructionId::Ut1: case ConstructionId::Us1: case ConstructionId::Ucl: case ConstructionId::Uint:
    case ConstructionId::Ut2: case ConstructionId::Us2: case ConstructionId::Ut3: case ConstructionId::Us3:
      return true;
    default:
      return false;
  }
}

// A region is a union of rectangles xs × ys.
struct Rect {
  ElemSet xs, ys;
};
using Region = std::vector<Rect>;
using CellFn = std::function<Elem(Elem, Elem)>;

struct Branch {
  std::string name;
  Region region;
  CellFn value;
};

bool in_region(const Region& r, Elem x, Elem y) {
  for (const auto& rect : r)
    if (rect.xs.contains(x) && rect.ys.contains(y)) return true;
  return false;
}

// Later branches never shadow earlier ones: overlapping regions are a bug
// in the region algebra and abort the build.
BinOpTable piecewise(std::string name, const Resolved& r, const std::vector<Branch>& branches,
                     const CellFn& otherwise) {
  const Lattice& lat = *r.lat;
  return BinOpTable::tabulate(
      std::move(name), r.lat, lat.all().to_vector(),
      [&](Elem x, Elem y) {
        const Branch* hit = nullptr;
        for (const auto& b : branches) {
          if (!in_region(b.region, x, y)) continue;
          if (hit)
            throw std::logic_error("regions '" + hit->name + "' and '" + b.name + "' overlap at (" +
                                   lat.label(x) + ", " + lat.label(y) + ")");
          hit = &b;
        }
        return hit ? hit->value(x, y) : otherwise(x, y);
      },
      r.e);
}

Elem first_arg(Elem x, Elem) { return x; }
Elem second_arg(Elem, Elem y) { return y; }

}  // namespace

std::string_view to_string(ConstructionId id) {
  for (const auto& [k, n] : kIds)
    if (k == id) return n;
  return "?";
}

ConstructionId parse_construction(std::string_view id) {
  for (const auto& [k, n] : kIds)
    if (n == id) return k;
  throw Error(ErrorCode::UnknownConstruction, "unknown construction '" + std::string(id) + "'");
}

std::vector<ConstructionId> all_constructions() {
  std::vector<ConstructionId> out;
  for (const auto& kn : kIds) out.push_back(kn.id);
  return out;
}

bool is_upper(ConstructionId id) {
  switch (id) {
    case ConstructionId::U2: case ConstructionId::T1: case ConstructionId::T1star: case ConstructionId::U4:
    case ConstructionId::U41: case ConstructionId::U42: case ConstructionId::Us1: case ConstructionId::Uint:
    case ConstructionId::Us2: case ConstructionId::Us3: case ConstructionId::T2star:
      return true;
    default:
      return false;
  }
}

bool needs_unary(ConstructionId id) {
  return id == ConstructionId::U3 || id == ConstructionId::U4 || id == ConstructionId::Ucl ||
         id == ConstructionId::Uint;
}

Resolved resolve(const ConstructionRequest& req) {
  const BinOpTable& base = req.base;
  const LatticePtr& lat = base.lattice_ptr();
  const Lattice& L = *lat;
  const std::string id(to_string(req.id));
  L.label(req.anchor);
  const bool upper = is_upper(req.id);
  const Elem anchor = req.anchor;

  std::vector<std::string> problems;
  Resolved r;
  r.lat = lat;
  r.anchor = anchor;
  r.carrier = upper ? L.interval(anchor, L.top()) : L.interval(L.bottom(), anchor);

  const Elem far = upper ? L.top() : L.bottom();    // anchor here leaves a one-point interval
  const Elem whole = upper ? L.bottom() : L.top();  // anchor here makes the interval all of L
  const std::string aname = upper ? "b" : "a";
  if (anchor == far && anchor != whole) problems.push_back(aname + " = " + L.label(far) + " leaves no room to extend");
  if (anchor == whole) {
    if (req.allow_degenerate)
      r.degenerate = true;
    else
      problems.push_back(aname + " = " + L.label(whole) + " is only allowed with the degenerate flag");
  }
  if (base.carrier_set() != r.carrier.members)
    problems.push_back("base carrier " + format_set(L, base.carrier_set()) + " is not " +
                       format_set(L, r.carrier.members));

  std::optional<Elem> e = req.neutral ? req.neutral : base.declared_neutral();
  if (!e) {
    const ElemSet ns = neutral_elements(base);
    if (ns.size() == 1)
      e = ns.first();
    else
      problems.push_back("base has no unique neutral element");
  }
  if (e && !base.contains(*e)) problems.push_back("neutral element " + L.label(*e) + " is outside the base carrier");
  if (needs_unary(req.id) && !req.unary) problems.push_back(id + " needs a " + (upper ? "interior" : "closure") + " operator");
  if (req.unary && req.unary->lattice().size() != L.size())
    problems.push_back("unary operator is defined on another lattice");
  if (!problems.empty()) {
    std::string msg = id + ":";
    for (const auto& p : problems) msg += " " + p + ";";
    msg.pop_back();
    throw Error(ErrorCode::InvalidRequest, msg);
  }
  r.e = *e;

  bool uninorm = false;
  std::string why;
  try {
    uninorm = is_uninorm(base, r.e);
  } catch (const Error& err) {
    why = std::string(" (") + err.what() + ")";
  }
  if (is_tconorm_id(req.id) && (!uninorm || r.e != L.bottom()))
    throw Error(ErrorCode::NotATconorm, id + ": base " + base.name() + " is not a t-conorm on [0, a]" + why);
  if (is_tnorm_id(req.id) && (!uninorm || r.e != L.top()))
    throw Error(ErrorCode::NotATnorm, id + ": base " + base.name() + " is not a t-norm on [b, 1]" + why);
  if (!uninorm)
    throw Error(ErrorCode::InvalidRequest,
                id + ": base " + base.name() + " is not a uninorm with neutral element " + L.label(r.e) + why);
  if (anchored_at_neutral(req.id) && r.e != anchor)
    throw Error(ErrorCode::InvalidRequest, id + ": the anchor must be the neutral element");

  if (needs_unary(req.id)) {
    const Verdict v = upper ? is_interior(*req.unary) : is_closure(*req.unary);
    if (!v.holds)
      throw Error(upper ? ErrorCode::NotAnInterior : ErrorCode::NotAClosure,
                  req.unary->name() + ": " + describe(*v.witness, L));
  }
  return r;
}

std::optional<UnaryOpTable> effective_unary(const ConstructionRequest& req) {
  const LatticePtr& lat = req.base.lattice_ptr();
  switch (req.id) {
    case ConstructionId::U3: case ConstructionId::U4: case ConstructionId::Ucl: case ConstructionId::Uint:
      return req.unary;
    case ConstructionId::U31: case ConstructionId::U41: case ConstructionId::Ut2: case ConstructionId::Us2:
      return identity_op(lat);
    case ConstructionId::U32: case ConstructionId::Ut3:
      return canonical_closure(lat, req.anchor);
    case ConstructionId::U42: case ConstructionId::Us3:
      return canonical_interior(lat, req.anchor);
    default:
      return std::nullopt;
  }
}

BinOpTable construct(const ConstructionRequest& req) {
  const Resolved r = resolve(req);
  const std::string name(to_string(req.id));
  if (r.degenerate) return req.base.renamed(name).with_neutral(r.e);

  const Lattice& L = *r.lat;
  const BinOpTable& base = req.base;
  const Elem e = r.e, anchor = r.anchor;
  const ElemSet all = L.all();
  const ElemSet box = r.carrier.members;
  const CellFn star = [&base](Elem x, Elem y) { return base(x, y); };
  const CellFn join = [&L](Elem x, Elem y) { return L.join(x, y); };
  const CellFn meet = [&L](Elem x, Elem y) { return L.meet(x, y); };
  const CellFn top = [&L](Elem, Elem) { return L.top(); };
  const CellFn bottom = [&L](Elem, Elem) { return L.bottom(); };
  const std::optional<UnaryOpTable> u = effective_unary(req);
  const CellFn hull_join = [&](Elem x, Elem y) { return L.join((*u)(x), (*u)(y)); };
  const CellFn hull_meet = [&](Elem x, Elem y) { return L.meet((*u)(x), (*u)(y)); };
  auto sym = [](ElemSet xs, ElemSet ys) { return std::pair{Region{{xs, ys}}, Region{{ys, xs}}}; };

  const ElemSet down_e = L.down_set(e), up_e = L.up_set(e);
  const ElemSet I_e = L.inc_set(e);
  const ElemSet I_ea = L.inc_both_set(e, anchor);

  switch (req.id) {
    case ConstructionId::U1: {
      auto [xr, yr] = sym(I_ea, down_e);
      return piecewise(name, r, {{"U*", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}}, join);
    }
    case ConstructionId::U2: {
      auto [xr, yr] = sym(I_ea, up_e);
      return piecewise(name, r, {{"U*", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}}, meet);
    }
    case ConstructionId::S1:
    case ConstructionId::S1star:
      return piecewise(name, r, {{"S", {{box, box}}, star}}, join);
    case ConstructionId::T1:
    case ConstructionId::T1star:
      return piecewise(name, r, {{"T", {{box, box}}, star}}, meet);
    case ConstructionId::U3:
    case ConstructionId::U31:
    case ConstructionId::U32: {
      auto [xr, yr] = sym(all - box, down_e);
      return piecewise(name, r,
                       {{"U*", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg},
                        {"hull", {{I_ea, I_ea}}, hull_join}},
                       top);
    }
    case ConstructionId::U4:
    case ConstructionId::U41:
    case ConstructionId::U42: {
      auto [xr, yr] = sym(all - box, up_e);
      return piecewise(name, r,
                       {{"U*", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg},
                        {"hull", {{I_ea, I_ea}}, hull_meet}},
                       bottom);
    }
    case ConstructionId::Ut1: {
      auto [xr, yr] = sym(I_e, down_e);
      return piecewise(name, r, {{"T_e", {{down_e, down_e}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}},
                       join);
    }
    case ConstructionId::Us1: {
      auto [xr, yr] = sym(I_e, up_e);
      return piecewise(name, r, {{"S_e", {{up_e, up_e}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}},
                       meet);
    }
    case ConstructionId::S2star: {
      const ElemSet outside = L.inc_set(anchor) | L.range(anchor, L.top(), false, true);
      auto [xr, yr] = sym(outside, ElemSet::single(L.bottom()));
      return piecewise(name, r, {{"S", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}}, top);
    }
    case ConstructionId::T2star: {
      const ElemSet outside = L.inc_set(anchor) | L.range(L.bottom(), anchor, true, false);
      auto [xr, yr] = sym(outside, ElemSet::single(L.top()));
      return piecewise(name, r, {{"T", {{box, box}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg}}, bottom);
    }
    case ConstructionId::Ucl:
    case ConstructionId::Ut2:
    case ConstructionId::Ut3: {
      const ElemSet movers = req.id == ConstructionId::Ut3
                                 ? all - down_e
                                 : I_e | L.range(e, L.top(), false, true);
      auto [xr, yr] = sym(movers, down_e);
      const CellFn hull = req.id == ConstructionId::Ut3
                              ? CellFn([&](Elem x, Elem y) { return L.join(L.join(x, y), e); })
                              : hull_join;
      return piecewise(name, r,
                       {{"T_e", {{down_e, down_e}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg},
                        {"hull", {{I_e, I_e}}, hull}},
                       top);
    }
    case ConstructionId::Uint:
    case ConstructionId::Us2:
    case ConstructionId::Us3: {
      const ElemSet movers = req.id == ConstructionId::Us3
                                 ? all - up_e
                                 : I_e | L.range(L.bottom(), e, true, false);
      auto [xr, yr] = sym(movers, up_e);
      const CellFn hull = req.id == ConstructionId::Us3
                              ? CellFn([&](Elem x, Elem y) { return L.meet(L.meet(x, y), e); })
                              : hull_meet;
      return piecewise(name, r,
                       {{"S_e", {{up_e, up_e}}, star}, {"x", xr, first_arg}, {"y", yr, second_arg},
                        {"hull", {{I_e, I_e}}, hull}},
                       bottom);
    }
  }
  throw Error(ErrorCode::UnknownConstruction, name);
}

}  // namespace unilat
