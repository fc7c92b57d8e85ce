#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unilat/op_table.hpp"
#include "unilat/unary_op.hpp"

namespace unilat {

// Line-oriented text formats. `#` starts a comment; tokens are separated by
// whitespace. Syntax errors throw Parse with the 1-based line number;
// semantic errors keep their own codes.

/// `.lat`: lattice <name> / elements: ... / bottom: x / top: x / covers: /
/// one `x < y` per line.
Lattice parse_lattice(std::string_view text, std::size_t max_elements = kMaxElements);
std::string print_lattice(const Lattice& lat);

/// `.opt` before binding to a lattice.
struct RawTable {
  std::string name;
  std::string lattice_name;
  std::vector<std::string> carrier;
  std::optional<std::string> neutral;
  std::vector<std::vector<std::string>> rows;
};

RawTable parse_table_raw(std::string_view text);
/// Resolves labels against `lat`; the lattice name must match.
BinOpTable bind_table(const RawTable& raw, LatticePtr lat);
BinOpTable parse_table(std::string_view text, LatticePtr lat);
std::string print_table(const BinOpTable& op);

/// `.unm`: unary <name> on <lattice> / one `x -> y` per line; unlisted
/// elements map to themselves.
struct RawUnary {
  std::string name;
  std::string lattice_name;
  std::vector<std::pair<std::string, std::string>> maps;
};

RawUnary parse_unary_raw(std::string_view text);
UnaryOpTable bind_unary(const RawUnary& raw, LatticePtr lat);
UnaryOpTable parse_unary(std::string_view text, LatticePtr lat);
std::string print_unary(const UnaryOpTable& u);

enum class FileKind { Lattice, Table, Unary };
/// Kind by the first directive of the file.
FileKind sniff(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace unilat
