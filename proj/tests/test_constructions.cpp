#include <string>

#include "doctest.h"
#include "support.hpp"
#include "unilat/constructions.hpp"
#include "unilat/error.hpp"
#include "unilat/iff_suite.hpp"

using namespace unilat;
using namespace unilat::test;

namespace {

ConstructionRequest req(ConstructionId id, Elem anchor, BinOpTable base, std::optional<UnaryOpTable> u = {}) {
  return {id, anchor, std::move(base), std::move(u), std::nullopt, false};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

std::size_t cells(const BinOpTable& t) { return t.size() * t.size(); }

}  // namespace

TEST_CASE("construction ids round-trip") {
  for (ConstructionId id : all_constructions()) CHECK(parse_construction(to_string(id)) == id);
  CHECK(code_of([] { parse_construction("u9"); }) == ErrorCode::UnknownConstruction);
  CHECK(is_upper(ConstructionId::U2));
  CHECK_FALSE(is_upper(ConstructionId::U3));
  CHECK(needs_unary(ConstructionId::Uint));
  CHECK_FALSE(needs_unary(ConstructionId::U31));
}

TEST_CASE("U1 on L1 reproduces T2") {
  auto L1 = fixture_lattice("L1");
  const auto r = req(ConstructionId::U1, L1->at("a"), fixture_table("T1", L1));
  const BinOpTable u1 = construct(r);
  const BinOpTable t2 = fixture_table("T2", L1);
  CHECK(count_agreements(u1, t2) == 169);
  CHECK(table_equal(u1, t2));
  CHECK(check_axioms(u1, L1->at("e")).all());
  CHECK(check_thm31(r).holds());
  CHECK(classify(u1, L1->at("e")).disjunctive);
}

TEST_CASE("U3 on L3 with the identity closure reproduces T5") {
  auto L3 = fixture_lattice("L3");
  const BinOpTable base = fixture_table("T4", L3);
  const BinOpTable u3 = construct(req(ConstructionId::U3, L3->at("a"), base, identity_op(L3)));
  const BinOpTable t5 = fixture_table("T5", L3);
  CHECK(count_agreements(u3, t5) == cells(t5));
  CHECK(is_uninorm(u3, L3->at("e")));
  CHECK(table_equal(construct(req(ConstructionId::U31, L3->at("a"), base)), t5));
  CheckOptions o;
  o.closure_case = ClosureCase::C1i;
  const auto rep = check_thm41(req(ConstructionId::U3, L3->at("a"), base, identity_op(L3)), o);
  CHECK(rep.applicable());
  CHECK(rep.holds());
}

TEST_CASE("U3 on L4 with cl(m) = b reproduces T7 and is not associative") {
  auto L4 = fixture_lattice("L4");
  const auto r = req(ConstructionId::U3, L4->at("a"), fixture_table("T6", L4), fixture_unary("cl4", L4));
  const BinOpTable u3 = construct(r);
  CHECK(table_equal(u3, fixture_table("T7", L4)));
  const Verdict v = check_associative(u3);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness->get("x") == L4->at("k"));
  CHECK(v.witness->get("y") == L4->at("k"));
  CHECK(v.witness->get("z") == L4->at("m"));
  CHECK(*v.witness->lhs == L4->top());
  CHECK(*v.witness->rhs == L4->at("b"));

  const auto rep = check_thm41(r);
  CHECK_FALSE(rep.applicable());
  const auto& range = rep.at("range_in_Iea");
  REQUIRE_FALSE(range.holds);
  const auto& w = range.witnesses.front();
  CHECK(labels(*L4, {"k", "m"}) == (ElemSet::single(w.get("x")) | ElemSet::single(w.get("y"))));
}

TEST_CASE("request validation") {
  auto d = diamond();
  const Elem x = d->at("x");
  const BinOpTable meet_x = meet_table(d, d->interval(d->bottom(), x));
  const BinOpTable join_x = join_table(d, d->interval(d->bottom(), x));
  const BinOpTable whole = join_table(d);

  CHECK(code_of([&] { construct(req(ConstructionId::U1, d->top(), whole)); }) == ErrorCode::InvalidRequest);
  auto deg = req(ConstructionId::U1, d->top(), whole);
  deg.allow_degenerate = true;
  CHECK(resolve(deg).degenerate);
  CHECK(table_equal(construct(deg), whole));

  CHECK(code_of([&] { construct(req(ConstructionId::U1, x, join_table(d, d->interval(x, d->top())))); }) ==
        ErrorCode::InvalidRequest);
  CHECK(code_of([&] { construct(req(ConstructionId::U3, x, join_x)); }) == ErrorCode::InvalidRequest);
  CHECK(code_of([&] { construct(req(ConstructionId::S1, x, meet_x)); }) == ErrorCode::NotATconorm);
  CHECK(code_of([&] { construct(req(ConstructionId::T1star, x, join_table(d, d->interval(x, d->top())))); }) ==
        ErrorCode::NotATnorm);
  const UnaryOpTable zero("z", d, std::vector<Elem>(d->size(), d->bottom()));
  CHECK(code_of([&] { construct(req(ConstructionId::Ucl, x, meet_x, zero)); }) == ErrorCode::NotAClosure);
  const UnaryOpTable one("one", d, std::vector<Elem>(d->size(), d->top()));
  CHECK(code_of([&] { construct(req(ConstructionId::U4, x, meet_table(d, d->interval(x, d->top())), one)); }) ==
        ErrorCode::NotAnInterior);
  CHECK(code_of([&] { construct(req(ConstructionId::Ut1, x, join_x)); }) == ErrorCode::InvalidRequest);
}

TEST_CASE("named specializations agree with the general constructions") {
  auto d = diamond();
  const Elem x = d->at("x");
  const BinOpTable t = meet_table(d, d->interval(d->bottom(), x));
  const BinOpTable s = join_table(d, d->interval(x, d->top()));
  CHECK(count_agreements(construct(req(ConstructionId::Ut1, x, t)), construct(req(ConstructionId::U1, x, t))) == 16);
  CHECK(count_agreements(construct(req(ConstructionId::Us1, x, s)), construct(req(ConstructionId::U2, x, s))) == 16);
  CHECK(count_agreements(construct(req(ConstructionId::Ucl, x, t, identity_op(d))),
                         construct(req(ConstructionId::U3, x, t, identity_op(d)))) == 16);
  CHECK(count_agreements(construct(req(ConstructionId::Uint, x, s, identity_op(d))),
                         construct(req(ConstructionId::U4, x, s, identity_op(d)))) == 16);
}

TEST_CASE("upper constructions are dual transports of the lower ones") {
  const SampleReport r = duality_samples(120, 11, 5);
  CHECK(r.samples == 120);
  CHECK(r.agreements == r.samples);
  CHECK(r.positives > 0);
  CHECK(r.positives < r.samples);
}

TEST_CASE("U2 and U4 are conjunctive when they are uninorms") {
  auto d = diamond();
  const Elem x = d->at("x");
  const BinOpTable s = join_table(d, d->interval(x, d->top()));
  const BinOpTable u2 = construct(req(ConstructionId::U2, x, s));
  REQUIRE(is_uninorm(u2, x));
  CHECK(classify(u2, x).conjunctive);
  const BinOpTable u4 = construct(req(ConstructionId::U4, x, s, identity_op(d)));
  if (is_uninorm(u4, x)) CHECK(classify(u4, x).conjunctive);
}
