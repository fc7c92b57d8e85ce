#include "unilat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unilat/error.hpp"

namespace unilat {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}
  bool done() const { return i_ >= lines_.size(); }
  const Line& peek() const { return lines_[i_]; }
  const Line& next(const char* what) {
    if (done()) fail(lines_.empty() ? 1 : lines_.back().number, std::string("unexpected end of file, expected ") + what);
    return lines_[i_++];
  }
  // `key: values...`
  std::vector<std::string> directive(const std::string& key, bool allow_empty = false) {
    const Line& l = next(key.c_str());
    if (l.tokens[0] != key + ":") fail(l.number, "expected '" + key + ":', found '" + l.tokens[0] + "'");
    std::vector<std::string> v(l.tokens.begin() + 1, l.tokens.end());
    if (v.empty() && !allow_empty) fail(l.number, "'" + key + ":' needs a value");
    return v;
  }
  bool at(const std::string& key) const { return !done() && peek().tokens[0] == key + ":"; }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
};

std::string single(const std::vector<std::string>& v, std::size_t line, const char* key) {
  if (v.size() != 1) fail(line, std::string("'") + key + ":' takes exactly one element");
  return v[0];
}

// `kind <name> on <lattice>`
std::pair<std::string, std::string> header_on(Cursor& c, const char* kind) {
  const Line& l = c.next(kind);
  if (l.tokens[0] != kind) fail(l.number, std::string("expected '") + kind + " <name> on <lattice>'");
  if (l.tokens.size() != 4 || l.tokens[2] != "on")
    fail(l.number, std::string("header must read '") + kind + " <name> on <lattice>'");
  return {l.tokens[1], l.tokens[3]};
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

}  // namespace

Lattice parse_lattice(std::string_view text, std::size_t max_elements) {
  Cursor c(text);
  const Line& head = c.next("lattice header");
  if (head.tokens[0] != "lattice" || head.tokens.size() != 2) fail(head.number, "header must read 'lattice <name>'");
  const std::string name = head.tokens[1];
  const auto elements = c.directive("elements");
  const std::size_t bline = c.done() ? 0 : c.peek().number;
  const std::string bottom = single(c.directive("bottom"), bline, "bottom");
  const std::size_t tline = c.done() ? 0 : c.peek().number;
  const std::string top = single(c.directive("top"), tline, "top");
  c.directive("covers", true);
  std::vector<Cover> covers;
  while (!c.done()) {
    const Line& l = c.next("cover");
    if (l.tokens.size() != 3 || l.tokens[1] != "<") fail(l.number, "expected 'x < y'");
    covers.emplace_back(l.tokens[0], l.tokens[2]);
  }
  Lattice lat = Lattice::build(name, elements, covers, max_elements);
  if (lat.label(lat.bottom()) != bottom)
    fail(bline, "declared bottom '" + bottom + "' but the bottom is '" + lat.label(lat.bottom()) + "'");
  if (lat.label(lat.top()) != top)
    fail(tline, "declared top '" + top + "' but the top is '" + lat.label(lat.top()) + "'");
  return lat;
}

std::string print_lattice(const Lattice& lat) {
  std::ostringstream out;
  out << "lattice " << lat.name() << "\nelements:";
  for (const auto& l : lat.labels()) out << ' ' << l;
  out << "\nbottom: " << lat.label(lat.bottom()) << "\ntop: " << lat.label(lat.top()) << "\ncovers:\n";
  for (auto [x, y] : lat.covers()) out << lat.label(x) << " < " << lat.label(y) << '\n';
  return out.str();
}

RawTable parse_table_raw(std::string_view text) {
  Cursor c(text);
  RawTable t;
  std::tie(t.name, t.lattice_name) = header_on(c, "op");
  t.carrier = c.directive("carrier");
  if (c.at("neutral")) {
    const std::size_t line = c.peek().number;
    t.neutral = single(c.directive("neutral"), line, "neutral");
  }
  while (!c.done()) {
    const Line& l = c.next("row");
    if (l.tokens.size() != t.carrier.size())
      fail(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                         std::to_string(t.carrier.size()));
    if (t.rows.size() == t.carrier.size()) fail(l.number, "more rows than carrier elements");
    t.rows.push_back(l.tokens);
  }
  if (t.rows.size() != t.carrier.size())
    throw Error(ErrorCode::Parse, "table " + t.name + " has " + std::to_string(t.rows.size()) + " rows, expected " +
                                      std::to_string(t.carrier.size()));
  return t;
}

BinOpTable bind_table(const RawTable& raw, LatticePtr lat) {
  if (raw.lattice_name != lat->name())
    throw Error(ErrorCode::CarrierMismatch,
                "table " + raw.name + " is declared on " + raw.lattice_name + ", not on " + lat->name());
  std::vector<Elem> carrier;
  for (const auto& l : raw.carrier) carrier.push_back(lat->at(l));
  std::vector<Elem> values;
  for (const auto& row : raw.rows)
    for (const auto& v : row) values.push_back(lat->at(v));
  std::optional<Elem> e;
  if (raw.neutral) e = lat->at(*raw.neutral);
  return BinOpTable(raw.name, std::move(lat), std::move(carrier), std::move(values), e);
}

BinOpTable parse_table(std::string_view text, LatticePtr lat) { return bind_table(parse_table_raw(text), std::move(lat)); }

std::string print_table(const BinOpTable& op) {
  const Lattice& L = op.lattice();
  std::size_t w = 1;
  for (Elem x : op.carrier()) w = std::max(w, L.label(x).size());
  for (Elem x : op.carrier())
    for (Elem y : op.carrier()) w = std::max(w, L.label(op(x, y)).size());
  std::ostringstream out;
  out << "op " << op.name() << " on " << L.name() << "\ncarrier:";
  for (Elem x : op.carrier()) out << ' ' << L.label(x);
  out << '\n';
  if (op.declared_neutral()) out << "neutral: " << L.label(*op.declared_neutral()) << '\n';
  for (Elem x : op.carrier()) {
    std::string row;
    for (Elem y : op.carrier()) row += pad(L.label(op(x, y)), w) + ' ';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  return out.str();
}

RawUnary parse_unary_raw(std::string_view text) {
  Cursor c(text);
  RawUnary u;
  std::tie(u.name, u.lattice_name) = header_on(c, "unary");
  std::vector<std::string> seen;
  while (!c.done()) {
    const Line& l = c.next("mapping");
    if (l.tokens.size() != 3 || l.tokens[1] != "->") fail(l.number, "expected 'x -> y'");
    if (std::find(seen.begin(), seen.end(), l.tokens[0]) != seen.end())
      fail(l.number, "'" + l.tokens[0] + "' is mapped twice");
    seen.push_back(l.tokens[0]);
    u.maps.emplace_back(l.tokens[0], l.tokens[2]);
  }
  return u;
}

UnaryOpTable bind_unary(const RawUnary& raw, LatticePtr lat) {
  if (raw.lattice_name != lat->name())
    throw Error(ErrorCode::CarrierMismatch,
                "map " + raw.name + " is declared on " + raw.lattice_name + ", not on " + lat->name());
  std::vector<Elem> img = lat->all().to_vector();
  for (const auto& [x, y] : raw.maps) img[lat->at(x)] = lat->at(y);
  return UnaryOpTable(raw.name, std::move(lat), std::move(img));
}

UnaryOpTable parse_unary(std::string_view text, LatticePtr lat) { return bind_unary(parse_unary_raw(text), std::move(lat)); }

std::string print_unary(const UnaryOpTable& u) {
  const Lattice& L = u.lattice();
  std::ostringstream out;
  out << "unary " << u.name() << " on " << L.name() << '\n';
  for (Elem x : u.moved()) out << L.label(x) << " -> " << L.label(u(x)) << '\n';
  return out.str();
}

FileKind sniff(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "line 1: empty file");
  const std::string& d = lines[0].tokens[0];
  if (d == "lattice") return FileKind::Lattice;
  if (d == "op") return FileKind::Table;
  if (d == "unary") return FileKind::Unary;
  fail(lines[0].number, "unknown directive '" + d + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
  out << text;
}

}  // namespace unilat
