#include "unilat/iff_suite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "unilat/error.hpp"
#include "unilat/io.hpp"

namespace unilat {
namespace {

enum class Kind { Iff, Sufficiency, Property, PerAnchor, Informational };

struct Claim {
  std::string id;
  Kind kind = Kind::Iff;
  PopulationSpec pop;
  std::string population;
  ConstructionId lower_id = ConstructionId::U1;
  ConstructionId upper_id = ConstructionId::U2;
  std::optional<ClosureCase> closure_case;
  bool cond4a = false;
};

PopulationSpec spec(bool lower, bool upper, bool plain, bool unary, EFilter el = EFilter::Any,
                    EFilter eu = EFilter::Any) {
  PopulationSpec s;
  s.lower = lower;
  s.upper = upper;
  s.plain = plain;
  s.unary = unary;
  s.e_lower = el;
  s.e_upper = eu;
  return s;
}

Claim claim(std::string id, Kind kind, PopulationSpec pop, std::string population,
            ConstructionId lower = ConstructionId::U1, ConstructionId upper = ConstructionId::U2) {
  Claim c;
  c.id = std::move(id);
  c.kind = kind;
  c.pop = pop;
  c.population = std::move(population);
  c.lower_id = lower;
  c.upper_id = upper;
  return c;
}

std::vector<Claim> make_claims() {
  using C = ConstructionId;
  std::vector<Claim> out;
  const PopulationSpec lower = spec(true, false, true, false);
  out.push_back(claim("thm31", Kind::Iff, lower, "lower uninorms"));
  out.push_back(claim("thm31-cond4a", Kind::Iff, lower, "lower uninorms"));
  out.back().cond4a = true;
  out.push_back(claim("thm32", Kind::Iff, spec(false, true, true, false), "upper uninorms"));
  out.push_back(claim("prop31", Kind::Iff, spec(true, false, true, false, EFilter::Bottom), "t-conorms on [0,a]", C::S1));
  out.push_back(claim("prop32", Kind::Iff, spec(false, true, true, false, EFilter::Any, EFilter::Top),
                      "t-norms on [b,1]", C::S1, C::T1));
  PopulationSpec anchors = spec(true, true, true, false);
  anchors.per_anchor = true;
  out.push_back(claim("thm21", Kind::PerAnchor, anchors, "(lattice, anchor) pairs", C::S1star, C::T1star));
  out.push_back(claim("thm21-pointwise", Kind::Informational,
                      spec(true, true, true, false, EFilter::Bottom, EFilter::Top),
                      "t-conorms on [0,a], t-norms on [b,1]", C::S1star, C::T1star));
  out.push_back(claim("lemma31", Kind::Property, spec(true, false, true, false, EFilter::Bottom),
                      "lower uninorms with e = 0"));
  for (bool upper : {false, true})
    for (ClosureCase c : {ClosureCase::C1i, ClosureCase::C1ii, ClosureCase::C2i, ClosureCase::C2ii}) {
      const Kind k = c == ClosureCase::C2i ? Kind::Sufficiency : Kind::Iff;
      out.push_back(claim((upper ? "thm42-" : "thm41-") + std::string(to_string(c)), k,
                          spec(!upper, upper, false, true),
                          upper ? "upper uninorms with interiors" : "lower uninorms with closures", C::U3, C::U4));
      out.back().closure_case = c;
    }
  out.push_back(claim("transfer", Kind::Property, spec(true, true, true, true), "all uninorm instances"));
  out.push_back(claim("specials", Kind::Property, spec(true, true, true, true), "all uninorm instances"));
  return out;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> c = make_claims();
  return c;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claims())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownClaim, "no claim '" + std::string(id) + "'");
}

Interval anchored(const Lattice& L, Elem anchor, bool upper) {
  return upper ? L.interval(anchor, L.top()) : L.interval(L.bottom(), anchor);
}

std::vector<UnaryOpTable> unary_family(const LatticePtr& lat, Elem anchor, bool upper, const EnumConfig& cfg) {
  std::vector<UnaryOpTable> out{identity_op(lat), upper ? canonical_interior(lat, anchor) : canonical_closure(lat, anchor)};
  if (lat->size() <= cfg.unary_brute_max)
    for (auto& u : upper ? all_interiors(lat) : all_closures(lat)) out.push_back(std::move(u));
  std::vector<UnaryOpTable> uniq;
  for (auto& u : out)
    if (std::find(uniq.begin(), uniq.end(), u) == uniq.end()) uniq.push_back(std::move(u));
  return uniq;
}

ConstructionRequest request(ConstructionId id, const Instance& in) {
  ConstructionRequest r{id, in.anchor, *in.base, std::nullopt, in.e, false};
  if (needs_unary(id)) r.unary = in.unary;
  return r;
}

std::string failed_ids(const std::vector<ConditionResult>& rs) {
  std::string s;
  for (const auto& r : rs)
    if (!r.holds) s += (s.empty() ? "" : ",") + r.id;
  return s;
}

std::string first_axiom_failure(const BinOpTable& t, Elem e) {
  const AxiomReport r = check_axioms(t, e);
  const std::pair<const char*, const Verdict*> vs[] = {
      {"commutativity", &r.commutative}, {"associativity", &r.associative},
      {"monotonicity", &r.monotone}, {"neutrality", &r.neutral}};
  for (auto [name, v] : vs)
    if (!v->holds) return std::string(name) + (v->witness ? " at " + describe(*v->witness, t.lattice()) : "");
  return "";
}

enum class Target { Uninorm, Tconorm, Tnorm };

bool meets(const BinOpTable& t, Target target, Elem e) {
  switch (target) {
    case Target::Tconorm: return is_tconorm(t);
    case Target::Tnorm: return is_tnorm(t);
    case Target::Uninorm: break;
  }
  return is_uninorm(t, e);
}

Target target_of(ConstructionId id) {
  switch (id) {
    case ConstructionId::S1:
    case ConstructionId::S1star: return Target::Tconorm;
    case ConstructionId::T1:
    case ConstructionId::T1star: return Target::Tnorm;
    default: return Target::Uninorm;
  }
}

CheckOptions options_for(const Claim& c, const SuiteConfig& cfg) {
  CheckOptions o = cfg.check;
  if (c.cond4a) o.cond4 = Cond4Reading::A;
  if (c.closure_case) o.closure_case = *c.closure_case;
  return o;
}

Outcome checked(ConstructionId id, const Instance& in, const CheckOptions& opt) {
  Outcome o;
  const ConstructionRequest req = request(id, in);
  const ConditionReport rep = check_conditions(req, opt);
  if (!rep.applicable()) {
    o.excluded = true;
    o.detail = "hypotheses fail: " + failed_ids(rep.hypotheses);
    return o;
  }
  o.predicted = rep.holds();
  const BinOpTable t = construct(req);
  o.actual = meets(t, target_of(id), in.e);
  if (!o.predicted) o.detail = "conditions fail: " + failed_ids(rep.conditions);
  if (!o.actual) o.detail += (o.detail.empty() ? "" : "; ") + std::string("result fails ") + first_axiom_failure(t, in.e);
  return o;
}

Outcome per_anchor(const Claim& c, const Instance& in, const SuiteConfig& cfg) {
  Outcome o;
  const ConstructionId id = in.upper ? c.upper_id : c.lower_id;
  const Lattice& L = *in.lat;
  const Interval iv = anchored(L, in.anchor, in.upper);
  const Elem unit = in.upper ? L.top() : L.bottom();
  const ConditionReport rep = check_conditions(request(id, in), cfg.check);
  o.predicted = rep.holds();
  o.actual = true;
  const UninormSet bases = enumerate_uninorms(in.lat, iv, unit, cfg.enumeration);
  o.truncated = bases.truncated;
  for (const auto& b : bases.tables) {
    Instance one = in;
    one.base = std::make_shared<const BinOpTable>(b.with_neutral(unit));
    one.e = unit;
    const BinOpTable t = construct(request(id, one));
    if (!meets(t, target_of(id), unit)) {
      o.actual = false;
      o.witness_base = one.base;
      o.detail = b.name() + " gives a result failing " + first_axiom_failure(t, unit);
      break;
    }
  }
  if (!o.predicted) o.detail += (o.detail.empty() ? "" : "; ") + std::string("x || y fails");
  return o;
}

Outcome lemma31(const Instance& in, const SuiteConfig& cfg) {
  Outcome o;
  o.predicted = true;
  const ConditionReport rep = check_thm31(request(ConstructionId::U1, in), cfg.check);
  o.actual = rep.at("4").holds;
  if (!o.actual) o.detail = "condition 4 fails";
  return o;
}

Outcome transfer(const Instance& in) {
  Outcome o;
  const Lattice& L = *in.lat;
  ConstructionId id = in.upper ? ConstructionId::U2 : ConstructionId::U1;
  if (in.unary) id = in.upper ? ConstructionId::U4 : ConstructionId::U3;
  const BinOpTable t = construct(request(id, in));
  if (!is_uninorm(t, in.e)) {
    o.excluded = true;
    o.detail = std::string(to_string(id)) + " is not a uninorm";
    return o;
  }
  const ClassificationProfile big = classify(t, in.e);
  const ClassificationProfile small = classify(*in.base, in.e);
  std::vector<std::string> bad;
  if (!in.upper && !big.disjunctive) bad.push_back("disjunctive");
  if (in.upper && !big.conjunctive) bad.push_back("conjunctive");
  if (!in.upper && big.in_Umax_star != small.in_Umax_star) bad.push_back("U_max* transfer");
  if (in.upper && big.in_Umin_star != small.in_Umin_star) bad.push_back("U_min* transfer");
  if (!in.unary && big.idempotent != small.idempotent) bad.push_back("idempotence transfer");
  if (in.unary) {
    const ElemSet gap = in.upper ? L.range(L.bottom(), in.anchor, false, false) : L.range(in.anchor, L.top(), false, false);
    if (!gap.empty() && big.idempotent) bad.push_back("idempotent despite a nonempty gap");
  }
  o.predicted = true;
  o.actual = bad.empty();
  for (const auto& b : bad) o.detail += (o.detail.empty() ? "" : ", ") + b;
  return o;
}

Outcome specials(const Instance& in) {
  Outcome o;
  const Lattice& L = *in.lat;
  using C = ConstructionId;
  std::vector<std::pair<C, C>> eqs;
  const bool at_anchor = in.e == in.anchor;
  if (!in.upper && !in.unary) {
    if (at_anchor) eqs.insert(eqs.end(), {{C::Ut1, C::U1}, {C::Ut2, C::U31}, {C::Ut3, C::U32}});
    if (in.e == L.bottom()) eqs.push_back({C::S1, C::U1});
  } else if (in.upper && !in.unary) {
    if (at_anchor) eqs.insert(eqs.end(), {{C::Us1, C::U2}, {C::Us2, C::U41}, {C::Us3, C::U42}});
    if (in.e == L.top()) eqs.push_back({C::T1, C::U2});
  } else if (!in.upper) {
    if (at_anchor) eqs.push_back({C::Ucl, C::U3});
    if (in.e == L.bottom()) eqs.push_back({C::S2star, C::U3});
  } else {
    if (at_anchor) eqs.push_back({C::Uint, C::U4});
    if (in.e == L.top()) eqs.push_back({C::T2star, C::U4});
  }
  if (eqs.empty()) {
    o.excluded = true;
    return o;
  }
  o.predicted = true;
  o.actual = true;
  for (auto [special, general] : eqs) {
    ConstructionRequest rs = request(special, in);
    if (special == C::Ut1 || special == C::Us1 || special == C::Ucl || special == C::Uint || special == C::Ut2 ||
        special == C::Us2 || special == C::Ut3 || special == C::Us3)
      rs.anchor = in.e;
    const BinOpTable a = construct(rs), b = construct(request(general, in));
    if (count_agreements(a, b) != L.size() * L.size()) {
      o.actual = false;
      o.detail += (o.detail.empty() ? "" : ", ") + std::string(to_string(special)) + " != " + std::string(to_string(general));
    }
  }
  return o;
}

Direction direction(Kind k, const Outcome& o) {
  if (o.error) return Direction::Error;
  if (o.excluded) return Direction::None;
  if (k == Kind::Property) return o.actual ? Direction::None : Direction::Property;
  if (o.predicted && !o.actual) return Direction::Sufficiency;
  if (!o.predicted && o.actual && k != Kind::Sufficiency) return Direction::Necessity;
  return Direction::None;
}

}  // namespace

std::string describe(const Instance& inst) {
  const Lattice& L = *inst.lat;
  std::string s = L.name() + (inst.upper ? " b=" : " a=") + L.label(inst.anchor) + " e=" + L.label(inst.e);
  if (inst.base) s += " base=" + inst.base->name();
  if (inst.unary) {
    const ElemSet m = inst.unary->moved();
    s += " unary=";
    if (m.empty()) s += "id";
    bool first = true;
    for (Elem x : m) {
      s += (first ? "" : ",") + L.label(x) + "->" + L.label((*inst.unary)(x));
      first = false;
    }
  }
  return s;
}

Population build_population(const PopulationSpec& spec, const EnumConfig& cfg) {
  Population pop;
  for (const LatticePtr& lat : enumerate_lattices(cfg)) {
    const Lattice& L = *lat;
    for (Elem anchor = 0; anchor < L.size(); ++anchor) {
      if (anchor == L.bottom() || anchor == L.top()) continue;
      for (bool upper : {false, true}) {
        if (upper ? !spec.upper : !spec.lower) continue;
        const Interval iv = anchored(L, anchor, upper);
        if (spec.per_anchor) {
          const Elem unit = upper ? L.top() : L.bottom();
          auto base = std::make_shared<const BinOpTable>(BinOpTable::tabulate(
              upper ? "meet" : "join", lat, iv.members.to_vector(),
              [&](Elem x, Elem y) { return upper ? L.meet(x, y) : L.join(x, y); }, unit));
          pop.instances.push_back({lat, anchor, unit, upper, base, std::nullopt});
          continue;
        }
        const EFilter f = upper ? spec.e_upper : spec.e_lower;
        std::vector<UnaryOpTable> unaries;
        if (spec.unary) unaries = unary_family(lat, anchor, upper, cfg);
        for (Elem e : iv.members) {
          if (f == EFilter::Bottom && e != iv.lo) continue;
          if (f == EFilter::Top && e != iv.hi) continue;
          UninormSet set = enumerate_uninorms(lat, iv, e, cfg);
          pop.truncated = pop.truncated || set.truncated;
          for (auto& t : set.tables) {
            auto base = std::make_shared<const BinOpTable>(t.with_neutral(e));
            if (spec.plain) pop.instances.push_back({lat, anchor, e, upper, base, std::nullopt});
            for (const auto& u : unaries) pop.instances.push_back({lat, anchor, e, upper, base, u});
          }
        }
      }
    }
  }
  return pop;
}

std::string IffResult::verdict() const {
  if (informational) return "informational";
  return counterexample_count == 0 ? "holds" : "refuted";
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : claims()) ids.push_back(c.id);
  return ids;
}

bool is_claim(std::string_view claim) {
  return std::any_of(claims().begin(), claims().end(), [&](const Claim& c) { return c.id == claim; });
}

PopulationSpec population_for(std::string_view claim) { return find_claim(claim).pop; }

Outcome evaluate(std::string_view claim, const Instance& inst, const SuiteConfig& cfg) {
  const Claim& c = find_claim(claim);
  try {
    if (c.id == "lemma31") return lemma31(inst, cfg);
    if (c.id == "transfer") return transfer(inst);
    if (c.id == "specials") return specials(inst);
    if (c.kind == Kind::PerAnchor) return per_anchor(c, inst, cfg);
    return checked(inst.upper ? c.upper_id : c.lower_id, inst, options_for(c, cfg));
  } catch (const std::exception& ex) {
    Outcome o;
    o.error = true;
    o.detail = ex.what();
    return o;
  }
}

IffResult run_claim(std::string_view claim, const Population& pop, const SuiteConfig& cfg) {
  const Claim& c = find_claim(claim);
  std::vector<const Instance*> all;
  for (const auto& i : pop.instances) all.push_back(&i);
  for (const auto& [label, i] : cfg.injected) all.push_back(&i);
  std::vector<Outcome> outcomes(all.size());
  const long n = static_cast<long>(all.size());
  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = evaluate(claim, *all[static_cast<std::size_t>(i)], cfg);
  } else {
    for (long i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = evaluate(claim, *all[static_cast<std::size_t>(i)], cfg);
  }

  IffResult r;
  r.claim = c.id;
  r.population = c.population;
  r.informational = c.kind == Kind::Informational;
  r.truncated = pop.truncated;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    ++r.tested;
    r.truncated = r.truncated || o.truncated;
    if (i >= pop.instances.size()) r.injected.push_back({cfg.injected[i - pop.instances.size()].first, o});
    const Direction d = direction(c.kind, o);
    if (o.excluded && !o.error) {
      ++r.excluded;
      continue;
    }
    if (d == Direction::None) {
      ++r.confirmations;
      continue;
    }
    ++r.counterexample_count;
    if (r.counterexamples.size() < cfg.counterexample_cap) {
      Instance inst = *all[i];
      if (o.witness_base) inst.base = o.witness_base;
      r.counterexamples.push_back({std::move(inst), std::string(to_string(d)), o.detail});
    }
  }
  return r;
}

IffResult run_iff_suite(std::string_view claim, const SuiteConfig& cfg) {
  const Population pop = build_population(find_claim(claim).pop, cfg.enumeration);
  return run_claim(claim, pop, cfg);
}

bool reverify(std::string_view claim, const Counterexample& cx, const SuiteConfig& cfg) {
  const Claim& c = find_claim(claim);
  const Outcome o = evaluate(claim, cx.instance, cfg);
  return std::string(to_string(direction(c.kind, o))) == cx.direction;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::None: return "none";
    case Direction::Sufficiency: return "sufficiency";
    case Direction::Necessity: return "necessity";
    case Direction::Property: return "property";
    case Direction::Error: return "error";
  }
  return "none";
}

std::string summary_record(const IffResult& r) {
  std::ostringstream s;
  s << "claim=" << r.claim << " population=" << r.tested << " verdict=" << r.verdict()
    << " counterexamples=" << r.counterexample_count << " mode=" << r.mode();
  return s.str();
}

std::string format_report(const IffResult& r, std::size_t show) {
  std::ostringstream s;
  s << r.claim << ": " << r.tested << " instances (" << r.population << "), " << r.confirmations << " confirm, "
    << r.excluded << " excluded, " << r.counterexample_count << " counterexamples, " << r.mode() << " -> "
    << r.verdict() << "\n";
  for (std::size_t i = 0; i < r.counterexamples.size() && i < show; ++i) {
    const auto& cx = r.counterexamples[i];
    s << "  [" << cx.direction << "] " << describe(cx.instance) << ": " << cx.detail << "\n";
  }
  for (const auto& inj : r.injected) {
    s << "  injected " << inj.label << ": ";
    if (inj.outcome.error) s << "error " << inj.outcome.detail;
    else if (inj.outcome.excluded) s << "excluded (" << inj.outcome.detail << ")";
    else s << "predicted=" << inj.outcome.predicted << " observed=" << inj.outcome.actual;
    s << "\n";
  }
  return s.str();
}

std::vector<std::filesystem::path> dump_counterexample(const Counterexample& cx, const std::filesystem::path& dir,
                                                       const std::string& stem) {
  std::filesystem::create_directories(dir);
  const Instance& in = cx.instance;
  std::vector<std::filesystem::path> out{dir / (stem + ".lat"), dir / (stem + ".opt")};
  write_file(out[0], "# " + cx.direction + ": " + cx.detail + "\n" + print_lattice(*in.lat));
  write_file(out[1], print_table(in.base->with_neutral(in.e)));
  if (in.unary) {
    out.push_back(dir / (stem + ".unm"));
    write_file(out[2], print_unary(*in.unary));
  }
  return out;
}

Instance load_instance(const std::filesystem::path& dir, const std::string& stem) {
  Instance in;
  in.lat = share(parse_lattice(read_file(dir / (stem + ".lat"))));
  const BinOpTable base = parse_table(read_file(dir / (stem + ".opt")), in.lat);
  const Interval iv = carrier_interval(base);
  const Lattice& L = *in.lat;
  in.upper = iv.lo != L.bottom();
  in.anchor = in.upper ? iv.lo : iv.hi;
  if (!base.declared_neutral()) throw Error(ErrorCode::InvalidRequest, stem + ".opt declares no neutral element");
  in.e = *base.declared_neutral();
  in.base = std::make_shared<const BinOpTable>(base);
  const auto unm = dir / (stem + ".unm");
  if (std::filesystem::exists(unm)) in.unary = parse_unary(read_file(unm), in.lat);
  return in;
}

namespace {

std::vector<LatticePtr> sample_lattices(std::size_t max_elements) {
  EnumConfig cfg;
  cfg.max_elements = max_elements;
  std::vector<LatticePtr> out;
  for (auto& l : enumerate_lattices(cfg))
    if (l->size() >= 3) out.push_back(l);
  return out;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

}  // namespace

SampleReport duality_samples(std::size_t samples, std::uint64_t seed, std::size_t max_elements) {
  SampleReport rep;
  std::mt19937_64 rng(seed);
  const auto lats = sample_lattices(max_elements);
  EnumConfig cfg;
  std::map<std::tuple<const Lattice*, Elem, Elem>, UninormSet> cache;
  for (std::size_t i = 0; i < samples; ++i) {
    const LatticePtr& lat = pick(lats, rng);
    const Lattice& L = *lat;
    std::vector<Elem> mids;
    for (Elem x = 0; x < L.size(); ++x)
      if (x != L.bottom() && x != L.top()) mids.push_back(x);
    const Elem b = pick(mids, rng);
    const Interval iv = L.interval(b, L.top());
    const auto es = iv.members.to_vector();
    const Elem e = pick(es, rng);
    auto key = std::make_tuple(lat.get(), b, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_uninorms(lat, iv, e, cfg)).first;
    const BinOpTable& base = pick(it->second.tables, rng);
    const bool with_unary = i % 2 == 1;

    const LatticePtr dual = share(L.dual());
    ConstructionRequest direct{with_unary ? ConstructionId::U4 : ConstructionId::U2, b, base.with_neutral(e),
                               std::nullopt, e, false};
    ConstructionRequest mirrored{with_unary ? ConstructionId::U3 : ConstructionId::U1, b,
                                 base.with_neutral(e).on_lattice(dual), std::nullopt, e, false};
    if (with_unary) {
      std::vector<UnaryOpTable> fam{identity_op(lat), canonical_interior(lat, b)};
      if (L.size() <= 4)
        for (auto& u : all_interiors(lat)) fam.push_back(std::move(u));
      const UnaryOpTable& u = pick(fam, rng);
      direct.unary = u;
      mirrored.unary = u.on_lattice(dual);
    }
    ++rep.samples;
    try {
      const BinOpTable x = construct(direct);
      const BinOpTable y = construct(mirrored).on_lattice(lat);
      if (is_uninorm(x, e)) ++rep.positives;
      if (count_agreements(x, y) == L.size() * L.size()) ++rep.agreements;
      else rep.failures.push_back(L.name() + " b=" + L.label(b) + " e=" + L.label(e) + " base=" + base.name());
    } catch (const std::exception& ex) {
      rep.failures.push_back(L.name() + ": " + ex.what());
    }
  }
  return rep;
}

SampleReport partition_samples(std::size_t samples, std::uint64_t seed, std::size_t max_elements) {
  SampleReport rep;
  std::mt19937_64 rng(seed);
  const auto lats = sample_lattices(max_elements);
  EnumConfig cfg;
  std::map<std::pair<const Lattice*, Elem>, UninormSet> cache;
  for (std::size_t i = 0; i < samples; ++i) {
    const LatticePtr& lat = pick(lats, rng);
    const Lattice& L = *lat;
    const std::size_t n = L.size();
    std::vector<Elem> v(n * n);
    if (i % 2 == 0) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) v[r * n + c] = v[c * n + r] = static_cast<Elem>(rng() % n);
    } else {
      const Elem e = static_cast<Elem>(rng() % n);
      auto key = std::make_pair(lat.get(), e);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, enumerate_uninorms(lat, L.interval(L.bottom(), L.top()), e, cfg)).first;
      const BinOpTable& u = pick(it->second.tables, rng);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) v[x * n + y] = u(x, y);
      if (rng() % 2) {
        const std::size_t r = rng() % n, c = rng() % n;
        v[r * n + c] = v[c * n + r] = static_cast<Elem>(rng() % n);
      }
    }
    const BinOpTable op("r" + std::to_string(i), lat, L.all().to_vector(), v);
    std::vector<ElemSet> parts(1 + rng() % 3);
    for (Elem x : L.all()) parts[rng() % parts.size()].insert(x);
    parts.erase(std::remove_if(parts.begin(), parts.end(), [](ElemSet s) { return s.empty(); }), parts.end());
    ++rep.samples;
    const bool naive = check_associative(op).holds;
    if (naive) ++rep.positives;
    const PartitionReport pr = assoc_by_partition(op, parts);
    if (pr.associative.holds == naive) ++rep.agreements;
    else rep.failures.push_back(op.name() + " on " + L.name() + ": naive " + (naive ? "holds" : "fails"));
  }
  return rep;
}

}  // namespace unilat
