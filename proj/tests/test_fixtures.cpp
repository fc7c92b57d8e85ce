// Facts about the committed fixtures, each recomputed from the cover
// relation or by scanning a table rather than read off the library.
#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "unilat/constructions.hpp"

using namespace unilat;
using namespace unilat::test;

namespace {

// Reflexive-transitive closure of the printed cover list, by DFS.
bool reaches(const Lattice& lat, Elem x, Elem y) {
  std::map<Elem, std::vector<Elem>> succ;
  for (auto [lo, hi] : lat.covers()) succ[lo].push_back(hi);
  std::vector<Elem> stack{x};
  std::vector<bool> seen(lat.size());
  while (!stack.empty()) {
    const Elem u = stack.back();
    stack.pop_back();
    if (u == y) return true;
    if (seen[u]) continue;
    seen[u] = true;
    for (Elem v : succ[u]) stack.push_back(v);
  }
  return false;
}

}  // namespace

TEST_CASE("fixture orders match the closure of their covers") {
  for (const char* name : {"L1", "L2", "L3", "L4", "chain3"}) {
    auto lat = fixture_lattice(name);
    for (Elem x = 0; x < lat->size(); ++x)
      for (Elem y = 0; y < lat->size(); ++y) CHECK(lat->leq(x, y) == reaches(*lat, x, y));
  }
}

TEST_CASE("L1 order facts") {
  auto L1 = fixture_lattice("L1");
  CHECK(L1->leq(L1->at("0"), L1->at("a")));
  CHECK_FALSE(L1->leq(L1->at("c"), L1->at("m")));
  CHECK(L1->interval(L1->bottom(), L1->at("a")).members == labels(*L1, {"0", "b", "e", "c", "m", "n", "k", "d", "a"}));
  const Elem e = L1->at("e"), a = L1->at("a");
  CHECK(L1->inc_comp_set(e, a) == (L1->inc_set(e) - L1->inc_set(a)));
  for (Elem x = 0; x < L1->size(); ++x) {
    CHECK(L1->inc_comp_set(x, x).empty());
    CHECK(L1->inc_both_set(x, x) == L1->inc_set(x));
  }
}

TEST_CASE("L3 and L4 incomparability facts") {
  auto L3 = fixture_lattice("L3");
  CHECK(L3->inc_set(L3->at("a")) == labels(*L3, {"m", "t", "n", "l", "s", "d"}));
  // the same set read off the table: row a of T5 maps to 1 exactly there (and at 1)
  const BinOpTable t5 = fixture_table("T5", L3);
  ElemSet to_top;
  for (Elem y : t5.carrier())
    if (t5(L3->at("a"), y) == L3->top() && y != L3->top()) to_top.insert(y);
  CHECK(to_top == L3->inc_set(L3->at("a")));

  auto L4 = fixture_lattice("L4");
  CHECK(L4->incomparable(L4->at("k"), L4->at("e")));
  CHECK(labels(*L4, {"k", "m"}).subset_of(L4->inc_both_set(L4->at("e"), L4->at("a"))));
  CHECK(L4->join(L4->at("b"), L4->at("k")) == L4->at("b"));
}

TEST_CASE("base tables are uninorms on their intervals") {
  auto L1 = fixture_lattice("L1");
  auto L3 = fixture_lattice("L3");
  auto L4 = fixture_lattice("L4");
  CHECK(is_uninorm(fixture_table("T1", L1), L1->at("e")));
  CHECK(is_uninorm(fixture_table("T4", L3), L3->at("e")));
  CHECK(is_uninorm(fixture_table("T6", L4), L4->at("e")));
  CHECK(carrier_interval(fixture_table("T1", L1)).hi == L1->at("a"));
}

TEST_CASE("T2 is a disjunctive uninorm restricting to a t-norm below e") {
  auto L1 = fixture_lattice("L1");
  const BinOpTable t2 = fixture_table("T2", L1);
  const Elem e = L1->at("e");
  CHECK(check_axioms(t2, e).all());
  const BinOpTable below = restrict(t2, L1->interval(L1->bottom(), e));
  CHECK(is_tnorm(below));
  CHECK(is_tconorm(restrict(t2, L1->interval(e, L1->top()))));
  const auto p = classify(t2, e);
  CHECK(p.disjunctive);
  CHECK_FALSE(p.conjunctive);
  // scan: U(0, 1) = 1
  CHECK(t2(L1->bottom(), L1->top()) == L1->top());
}

TEST_CASE("T3 on L2 is outside U_max* yet extends") {
  auto L2 = fixture_lattice("L2");
  const BinOpTable t3 = fixture_table("T3", L2);
  const Elem e = L2->at("e"), a = L2->at("a");
  REQUIRE(is_uninorm(t3, e));
  CHECK_FALSE(classify(t3, e).in_Umax_star);
  const ConstructionRequest r{ConstructionId::U1, a, t3, std::nullopt, std::nullopt, false};
  CHECK(check_thm31(r).holds());
  CHECK(is_uninorm(construct(r), e));
}

TEST_CASE("T4 lies in U_bot*") {
  auto L3 = fixture_lattice("L3");
  const BinOpTable t4 = fixture_table("T4", L3);
  const Elem e = L3->at("e");
  const ElemSet low = L3->interval(L3->bottom(), e).members;
  bool only_in_square = true;
  for (Elem x : t4.carrier())
    for (Elem y : t4.carrier())
      if (low.contains(t4(x, y)) && !(low.contains(x) && low.contains(y))) only_in_square = false;
  CHECK(only_in_square);
  CHECK(classify(t4, e).in_Ubot_star);
}

TEST_CASE("T7 fails associativity in the partition check too") {
  auto L4 = fixture_lattice("L4");
  const BinOpTable t7 = fixture_table("T7", L4);
  const ElemSet lower = L4->interval(L4->bottom(), L4->at("a")).members;
  const PartitionReport rep = assoc_by_partition(t7, {lower, L4->all() - lower});
  REQUIRE_FALSE(rep.associative.holds);
  CHECK(assoc_witness_holds(t7, *rep.associative.witness));
}
