#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "unilat/error.hpp"

using namespace unilat;
using unilat::test::chain;
using unilat::test::diamond;
using unilat::test::make;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

LatticePtr pentagon() {
  return make("N5", {"0", "p", "q", "r", "1"}, {{"0", "p"}, {"p", "q"}, {"q", "1"}, {"0", "r"}, {"r", "1"}});
}

LatticePtr m3() {
  return make("M3", {"0", "u", "v", "w", "1"},
              {{"0", "u"}, {"0", "v"}, {"0", "w"}, {"u", "1"}, {"v", "1"}, {"w", "1"}});
}

std::vector<LatticePtr> samples() { return {chain({"0", "x", "1"}), diamond(), pentagon(), m3()}; }

}  // namespace

TEST_CASE("two-chain and diamond") {
  auto c = chain({"0", "1"});
  CHECK(c->join(0, 1) == 1);
  CHECK(c->meet(0, 1) == 0);
  auto d = diamond();
  const Elem x = d->at("x"), y = d->at("y");
  CHECK(d->join(x, y) == d->top());
  CHECK(d->meet(x, y) == d->bottom());
  CHECK(d->incomparable(x, y));
  CHECK(d->inc_set(x) == ElemSet::single(y));
  CHECK(d->inc_comp_set(x, d->top()) == ElemSet::single(y));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] {
          make("bad", {"0", "x", "y", "u", "v"},
               {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"x", "v"}, {"y", "u"}, {"y", "v"}});
        }) == ErrorCode::NotBounded);
  // Bounded version of the same poset: x and y have two minimal upper bounds.
  try {
    make("bad", {"0", "x", "y", "u", "v", "1"},
         {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"x", "v"}, {"y", "u"}, {"y", "v"}, {"u", "1"}, {"v", "1"}});
    FAIL("accepted a non-lattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
    CHECK(std::string(e.what()).find("(x, y)") != std::string::npos);
  }
  CHECK(code_of([] { make("dup", {"0", "0"}, {}); }) == ErrorCode::DuplicateElement);
  CHECK(code_of([] { make("unk", {"0", "1"}, {{"0", "z"}}); }) == ErrorCode::UnknownElementInCover);
  CHECK(code_of([] { make("self", {"0", "1"}, {{"0", "0"}}); }) == ErrorCode::InvalidCover);
  CHECK(code_of([] { make("cyc", {"0", "x", "y", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "x"}, {"y", "1"}}); }) ==
        ErrorCode::NotALattice);
  CHECK(code_of([] { diamond()->leq(0, 9); }) == ErrorCode::UnknownElement);
  CHECK(code_of([] { diamond()->at("q"); }) == ErrorCode::UnknownElement);
  CHECK(code_of([] {
          auto d = diamond();
          d->interval(d->at("x"), d->at("y"));
        }) == ErrorCode::NotComparable);
  std::vector<std::string> many;
  for (int i = 0; i < 8; ++i) many.push_back("e" + std::to_string(i));
  std::vector<Cover> cv;
  for (int i = 0; i + 1 < 8; ++i) cv.emplace_back(many[i], many[i + 1]);
  CHECK(code_of([&] { Lattice::build("big", many, cv, 6); }) == ErrorCode::TooManyElements);
}

TEST_CASE("set identities") {
  for (const auto& lat : samples()) {
    for (Elem a : lat->all()) {
      CHECK(lat->inc_comp_set(a, a).empty());
      CHECK(lat->inc_both_set(a, a) == lat->inc_set(a));
      CHECK(lat->leq(a, a));
      CHECK(lat->comparable(lat->bottom(), a));
      for (Elem b : lat->all()) {
        const ElemSet ic = lat->inc_comp_set(a, b), ib = lat->inc_both_set(a, b);
        CHECK((ic | ib) == lat->inc_set(a));
        CHECK(!ic.intersects(ib));
      }
    }
  }
  auto c = chain({"0", "p", "q", "1"});
  for (Elem a : c->all()) CHECK(c->inc_set(a).empty());
}

TEST_CASE("join and meet agree with brute-force bounds") {
  for (const auto& lat : samples()) {
    for (Elem x : lat->all())
      for (Elem y : lat->all()) {
        const Elem j = lat->join(x, y), m = lat->meet(x, y);
        CHECK(lat->leq(x, j));
        CHECK(lat->leq(y, j));
        CHECK(lat->leq(m, x));
        CHECK(lat->leq(m, y));
        for (Elem u : lat->all()) {
          if (lat->leq(x, u) && lat->leq(y, u)) CHECK(lat->leq(j, u));
          if (lat->leq(u, x) && lat->leq(u, y)) CHECK(lat->leq(u, m));
        }
        CHECK(lat->join(x, y) == lat->join(y, x));
        CHECK(lat->meet(x, lat->join(x, y)) == x);
        CHECK(lat->join(x, lat->meet(x, y)) == x);
        for (Elem z : lat->all()) {
          CHECK(lat->join(x, lat->join(y, z)) == lat->join(lat->join(x, y), z));
          CHECK(lat->meet(x, lat->meet(y, z)) == lat->meet(lat->meet(x, y), z));
        }
      }
  }
}

TEST_CASE("intervals") {
  for (const auto& lat : samples()) {
    CHECK(lat->interval(lat->bottom(), lat->top()).members == lat->all());
    for (Elem a : lat->all()) {
      CHECK(lat->interval(a, a).members == ElemSet::single(a));
      for (Elem b : lat->up_set(a)) {
        const Interval iv = lat->interval(a, b);
        for (Elem x : iv.members)
          for (Elem y : iv.members) {
            CHECK(iv.contains(lat->join(x, y)));
            CHECK(iv.contains(lat->meet(x, y)));
          }
      }
    }
  }
  auto p = pentagon();
  CHECK(p->range(p->bottom(), p->at("q"), false, true) == (ElemSet::single(p->at("p")) | ElemSet::single(p->at("q"))));
}

TEST_CASE("dual") {
  for (const auto& lat : samples()) {
    const Lattice d = lat->dual();
    CHECK(d.dual() == *lat);
    CHECK(d.bottom() == lat->top());
    for (Elem x : lat->all())
      for (Elem y : lat->all()) {
        CHECK(d.leq(x, y) == lat->leq(y, x));
        CHECK(d.join(x, y) == lat->meet(x, y));
      }
  }
}

TEST_CASE("covers reproduce the input") {
  auto p = pentagon();
  CHECK(p->covers().size() == 5);
  auto rebuilt = Lattice::from_covers("N5", p->labels(), p->covers());
  CHECK(rebuilt == *p);
  CHECK(format_set(*p, p->all()) == "{0,p,q,r,1}");
}
