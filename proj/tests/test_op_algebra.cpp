#include <random>

#include "doctest.h"
#include "support.hpp"
#include "unilat/error.hpp"

using namespace unilat;
using namespace unilat::test;

TEST_CASE("join is a t-conorm, meet a t-norm") {
  for (auto lat : {chain({"0", "x", "1"}), diamond()}) {
    auto j = join_table(lat);
    auto m = meet_table(lat);
    CHECK(check_axioms(j, lat->bottom()).all());
    CHECK(is_tconorm(j));
    CHECK(is_tnorm(m));
    CHECK(neutral_elements(m) == ElemSet::single(lat->top()));
    CHECK(assoc_by_partition(j, {lat->all()}).associative.holds);
    const auto p = classify(j, lat->bottom());
    CHECK(p.idempotent);
    CHECK(p.disjunctive);
    CHECK_FALSE(p.conjunctive);
    CHECK(p.is_tconorm);
    CHECK(p.neutral_elements.contains(lat->bottom()));
  }
}

TEST_CASE("constant table has no neutral element") {
  auto d = diamond();
  auto c = BinOpTable::tabulate("zero", d, d->all().to_vector(), [&](Elem, Elem) { return d->bottom(); });
  CHECK(neutral_elements(c).empty());
  CHECK_THROWS_AS(classify(c, d->top()), Error);
}

TEST_CASE("witnesses are first in declaration order") {
  auto c = chain({"0", "x", "1"});
  std::vector<Elem> v = {0, 0, 1, 0, 1, 1, 0, 1, 2};
  BinOpTable op("t", c, {0, 1, 2}, v);
  const auto r = check_axioms(op, 2);
  CHECK_FALSE(r.neutral.holds);
  CHECK(r.neutral.witness->get("x") == 0);
  CHECK_FALSE(r.commutative.holds);
  CHECK(r.commutative.witness->get("x") == 0);
  CHECK(r.commutative.witness->get("y") == 2);
}

TEST_CASE("monotonicity failure is reported with both sides") {
  auto c = chain({"0", "x", "1"});
  std::vector<Elem> v = {0, 1, 0, 1, 1, 1, 0, 1, 2};
  BinOpTable op("t", c, {0, 1, 2}, v);
  const auto m = check_monotone(op);
  REQUIRE_FALSE(m.holds);
  const auto& w = *m.witness;
  CHECK_FALSE(c->leq(*w.lhs, *w.rhs));
  CHECK(c->leq(w.get("x"), w.get("y")));
}

TEST_CASE("restrict") {
  auto d = diamond();
  auto j = join_table(d);
  const Elem x = d->at("x");
  auto r = restrict(j, d->interval(d->bottom(), x));
  CHECK(r.size() == 2);
  CHECK(is_tconorm(r));
  auto one = restrict(j, d->interval(x, x));
  CHECK(one.size() == 1);
  CHECK(one(x, x) == x);
  auto once = restrict(j, d->interval(x, d->top()));
  auto twice = restrict(restrict(j, d->interval(d->bottom(), d->top())), d->interval(x, d->top()));
  CHECK(table_equal(once, twice));
  auto c = chain({"0", "x", "1"});
  BinOpTable sq("sq", c, {0, 1, 2}, {0, 1, 2, 1, 2, 2, 2, 2, 2});
  try {
    restrict(sq, c->interval(0, 1));
    FAIL("op(x,x) = 1 leaves [0,x]");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
}

TEST_CASE("carrier checks") {
  auto d = diamond();
  const Elem x = d->at("x"), y = d->at("y");
  BinOpTable pair("p", d, {x, y}, {x, d->top(), d->top(), y});
  CHECK_THROWS_AS(carrier_interval(pair), Error);
  CHECK_THROWS_AS(is_uninorm(pair, x), Error);
  BinOpTable open("o", d, {d->bottom(), x}, {0, x, x, d->top()});
  try {
    is_tconorm(open);
    FAIL("unclosed table accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
}

TEST_CASE("partition checker agrees with the naive check on random commutative tables") {
  std::mt19937_64 rng(7);
  std::vector<LatticePtr> lats = {chain({"0", "x", "1"}), diamond(), chain({"0", "p", "q", "1"})};
  int failures = 0;
  for (int i = 0; i < 300; ++i) {
    auto lat = lats[i % lats.size()];
    const std::size_t n = lat->size();
    std::vector<Elem> v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) v[r * n + c] = v[c * n + r] = static_cast<Elem>(rng() % n);
    BinOpTable op("r", lat, lat->all().to_vector(), v);
    std::vector<ElemSet> parts(1 + rng() % 3);
    for (Elem x : lat->all()) parts[rng() % parts.size()].insert(x);
    const bool naive = check_associative(op).holds;
    const auto rep = assoc_by_partition(op, parts);
    if (naive != rep.associative.holds) ++failures;
    if (!rep.associative.holds) CHECK(assoc_witness_holds(op, *rep.associative.witness));
  }
  CHECK(failures == 0);
}

TEST_CASE("partition checker rejects bad input") {
  auto d = diamond();
  auto j = join_table(d);
  try {
    assoc_by_partition(j, {ElemSet::single(0)});
    FAIL("missing elements accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PartsDoNotCover);
  }
  std::vector<Elem> v = {0, 1, 2, 3, 0, 1, 3, 3, 0, 3, 2, 3, 3, 3, 3, 3};
  BinOpTable nc("nc", d, d->all().to_vector(), v);
  try {
    assoc_by_partition(nc, {d->all()});
    FAIL("non-commutative table accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommutative);
  }
}
