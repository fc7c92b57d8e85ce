#include <string>

#include "doctest.h"
#include "support.hpp"
#include "unilat/constructions.hpp"
#include "unilat/error.hpp"
#include "unilat/reconstruct.hpp"

using namespace unilat;
using namespace unilat::test;

namespace {

RawTable raw(const std::string& name) { return parse_table_raw(fixture_text(name + ".opt")); }

ReconstructInput input(ReconstructMode mode, const std::string& base, const std::string& full) {
  ReconstructInput in;
  in.mode = mode;
  in.base = raw(base);
  if (!full.empty()) in.full = raw(full);
  return in;
}

}  // namespace

TEST_CASE("L3 is the unique lattice behind T4 and T5") {
  const Lattice l = reconstruct_fixture(input(ReconstructMode::U3, "T4", "T5"));
  CHECK(l == *fixture_lattice("L3"));
  CHECK(reconstruct_fixture(input(ReconstructMode::U31, "T4", "T5")) == l);
}

TEST_CASE("L4 is the unique lattice behind T6, T7 and cl4") {
  auto in = input(ReconstructMode::U3, "T6", "T7");
  in.unary = parse_unary_raw(fixture_text("cl4.unm"));
  const Lattice l = reconstruct_fixture(in);
  CHECK(l == *fixture_lattice("L4"));
  // without cl4 the identity closure cannot produce T7
  in.unary.reset();
  CHECK_THROWS_AS(reconstruct_fixture(in), Error);
}

TEST_CASE("T1 and T2 leave two minimal lattices; the fixture is the first") {
  const auto in = input(ReconstructMode::U1, "T1", "T2");
  const ReconstructResult r = reconstruct_all(in);
  REQUIRE(r.solutions.size() == 2);
  CHECK_FALSE(r.capped);
  CHECK(r.solutions.front() == *fixture_lattice("L1"));
  for (const auto& s : r.solutions) {
    auto lat = share(s);
    const BinOpTable t1 = bind_table(in.base, lat);
    const ConstructionRequest req{ConstructionId::U1, lat->at("a"), t1, std::nullopt, std::nullopt, false};
    CHECK(table_equal(construct(req), bind_table(*in.full, lat)));
  }
  try {
    reconstruct_fixture(in);
    FAIL("expected AmbiguousLattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousLattice);
  }
}

TEST_CASE("L2 needs the fact that T3 is outside U_max*") {
  auto in = input(ReconstructMode::Base, "T3", "");
  in.accept = [](const BinOpTable& b) { return !classify(b, *b.declared_neutral()).in_Umax_star; };
  const Lattice l = reconstruct_fixture(in);
  CHECK(l == *fixture_lattice("L2"));
  in.accept = nullptr;
  const ReconstructResult plain = reconstruct_all(in);
  REQUIRE_FALSE(plain.solutions.empty());
  CHECK(plain.solutions.front() != l);
}

TEST_CASE("an inconsistent full table has no lattice") {
  auto in = input(ReconstructMode::U1, "T1", "T2");
  // U1(0, 1) must be 1; claiming 0 contradicts every order
  in.full->rows.front().back() = "0";
  CHECK(reconstruct_all(in).solutions.empty());
  try {
    reconstruct_fixture(in);
    FAIL("expected NoConsistentLattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConsistentLattice);
  }
}

TEST_CASE("mode names") {
  CHECK(parse_reconstruct_mode("u3") == ReconstructMode::U3);
  CHECK(parse_reconstruct_mode("base") == ReconstructMode::Base);
  CHECK_THROWS_AS(parse_reconstruct_mode("u7"), Error);
}
