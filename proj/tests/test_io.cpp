#include <filesystem>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "unilat/error.hpp"

using namespace unilat;
using namespace unilat::test;

namespace {

std::string message(auto&& fn, ErrorCode want) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.code() == want);
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

const char* kTables[][2] = {{"T1", "L1"}, {"T2", "L1"}, {"T3", "L2"}, {"T4", "L3"},
                            {"T5", "L3"}, {"T6", "L4"}, {"T7", "L4"}, {"join_0m", "chain3"}};

}  // namespace

TEST_CASE("every fixture survives print and parse") {
  for (const char* name : {"L1", "L2", "L3", "L4", "chain3"}) {
    CAPTURE(name);
    auto lat = fixture_lattice(name);
    const Lattice again = parse_lattice(print_lattice(*lat));
    CHECK(again == *lat);
    CHECK(sniff(fixture_text(std::string(name) + ".lat")) == FileKind::Lattice);
  }
  for (const auto& [t, l] : kTables) {
    CAPTURE(t);
    auto lat = fixture_lattice(l);
    const BinOpTable op = fixture_table(t, lat);
    const BinOpTable again = parse_table(print_table(op), lat);
    CHECK(table_equal(op, again));
    CHECK(again.declared_neutral() == op.declared_neutral());
    CHECK(sniff(fixture_text(std::string(t) + ".opt")) == FileKind::Table);
  }
  auto L4 = fixture_lattice("L4");
  const UnaryOpTable cl = fixture_unary("cl4", L4);
  CHECK(parse_unary(print_unary(cl), L4) == cl);
  CHECK(sniff(fixture_text("cl4.unm")) == FileKind::Unary);
}

TEST_CASE("lattice syntax errors carry the line number") {
  const std::string bad_cover = "lattice c\nelements: 0 1\nbottom: 0\ntop: 1\ncovers:\n0 1\n";
  CHECK(message([&] { parse_lattice(bad_cover); }, ErrorCode::Parse).find("line 6") != std::string::npos);

  const std::string comments = "# header\n\nlattice c   # trailing\nelements: 0 1\nbottom: 0\ntop: 1\ncovers:\n0 < 1\n";
  CHECK(parse_lattice(comments).size() == 2);

  const std::string wrong_top = "lattice c\nelements: 0 m 1\nbottom: 0\ntop: m\ncovers:\n0 < m\nm < 1\n";
  CHECK(message([&] { parse_lattice(wrong_top); }, ErrorCode::Parse).find("line 4") != std::string::npos);

  message([&] { parse_lattice("lattice c\nelements:\n"); }, ErrorCode::Parse);
}

TEST_CASE("lattice semantic errors keep their codes") {
  const std::string dup = "lattice c\nelements: 0 a a 1\nbottom: 0\ntop: 1\ncovers:\n0 < a\na < 1\n";
  CHECK(message([&] { parse_lattice(dup); }, ErrorCode::DuplicateElement).find("'a'") != std::string::npos);
  const std::string unknown = "lattice c\nelements: 0 1\nbottom: 0\ntop: 1\ncovers:\n0 < z\n";
  message([&] { parse_lattice(unknown); }, ErrorCode::UnknownElementInCover);
  const std::string two_tops = "lattice v\nelements: 0 x y\nbottom: 0\ntop: x\ncovers:\n0 < x\n0 < y\n";
  message([&] { parse_lattice(two_tops); }, ErrorCode::NotBounded);
  const std::string m3_broken =
      "lattice w\nelements: 0 p q r s 1\nbottom: 0\ntop: 1\ncovers:\n0 < p\n0 < q\np < r\np < s\nq < r\nq < s\nr < 1\ns < 1\n";
  CHECK(message([&] { parse_lattice(m3_broken); }, ErrorCode::NotALattice).find("minimal upper bounds") !=
        std::string::npos);
  message([&] { parse_lattice(fixture_text("L1.lat"), 8); }, ErrorCode::TooManyElements);
}

TEST_CASE("table errors") {
  auto c3 = fixture_lattice("chain3");
  const std::string short_row = "op t on chain3\ncarrier: 0 m\n0 m\nm\n";
  CHECK(message([&] { parse_table_raw(short_row); }, ErrorCode::Parse).find("line 4") != std::string::npos);
  const std::string missing_row = "op t on chain3\ncarrier: 0 m\n0 m\n";
  message([&] { parse_table_raw(missing_row); }, ErrorCode::Parse);
  const std::string other = "op t on L4\ncarrier: 0 m\n0 m\nm m\n";
  message([&] { parse_table(other, c3); }, ErrorCode::CarrierMismatch);
  const std::string bad_value = "op t on chain3\ncarrier: 0 m\n0 m\nm q\n";
  message([&] { parse_table(bad_value, c3); }, ErrorCode::UnknownElement);
  message([&] { fixture_table("T2", fixture_lattice("L3")); }, ErrorCode::CarrierMismatch);
}

TEST_CASE("unary errors") {
  auto L4 = fixture_lattice("L4");
  CHECK(message([&] { parse_unary_raw("unary u on L4\nm -> b\nk -> b\nm -> 1\n"); }, ErrorCode::Parse)
            .find("line 4") != std::string::npos);
  message([&] { parse_unary_raw("unary u on L4\nm b\n"); }, ErrorCode::Parse);
  message([&] { parse_unary("unary u on L1\nm -> b\n", L4); }, ErrorCode::CarrierMismatch);
  message([&] { parse_unary("unary u on L4\nm -> z\n", L4); }, ErrorCode::UnknownElement);
}

TEST_CASE("sniff and files") {
  CHECK(sniff("# c\nop t on x\n") == FileKind::Table);
  message([] { sniff("widget w\n"); }, ErrorCode::Parse);
  message([] { sniff("\n# only a comment\n"); }, ErrorCode::Parse);
  const auto dir = std::filesystem::temp_directory_path() / "unilat_io_test";
  std::filesystem::create_directories(dir);
  write_file(dir / "c.lat", print_lattice(*fixture_lattice("chain3")));
  CHECK(parse_lattice(read_file(dir / "c.lat")) == *fixture_lattice("chain3"));
  std::filesystem::remove_all(dir);
  message([&] { read_file(dir / "missing.lat"); }, ErrorCode::Parse);
}
