#pragma once

#include <string>
#include <vector>

#include "unilat/axioms.hpp"
#include "unilat/io.hpp"
#include "unilat/lattice.hpp"
#include "unilat/unary_op.hpp"

namespace unilat::test {

inline LatticePtr make(std::string name, std::vector<std::string> labels, std::vector<Cover> covers) {
  return share(Lattice::build(std::move(name), std::move(labels), covers));
}

inline LatticePtr chain(std::vector<std::string> labels) {
  std::vector<Cover> cv;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) cv.emplace_back(labels[i], labels[i + 1]);
  return make("chain", labels, cv);
}

inline LatticePtr diamond() {
  return make("diamond", {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

inline BinOpTable join_table(const LatticePtr& lat, const Interval& iv) {
  return BinOpTable::tabulate("join", lat, iv.list(), [&](Elem x, Elem y) { return lat->join(x, y); },
                              iv.lo);
}

inline BinOpTable meet_table(const LatticePtr& lat, const Interval& iv) {
  return BinOpTable::tabulate("meet", lat, iv.list(), [&](Elem x, Elem y) { return lat->meet(x, y); },
                              iv.hi);
}

inline BinOpTable join_table(const LatticePtr& lat) { return join_table(lat, lat->interval(lat->bottom(), lat->top())); }
inline BinOpTable meet_table(const LatticePtr& lat) { return meet_table(lat, lat->interval(lat->bottom(), lat->top())); }

/// Re-evaluates a witness from check_associative through the table.
inline bool assoc_witness_holds(const BinOpTable& op, const Witness& w) {
  const Elem x = w.get("x"), y = w.get("y"), z = w.get("z");
  if (!op.contains(op(y, z)) || !op.contains(op(x, y))) return true;
  return op(x, op(y, z)) != op(op(x, y), z) && w.lhs == op(x, op(y, z)) && w.rhs == op(op(x, y), z);
}

inline std::string fixture_path(const std::string& file) { return std::string(UNILAT_FIXTURE_DIR) + "/" + file; }
inline std::string fixture_text(const std::string& file) { return read_file(fixture_path(file)); }
inline LatticePtr fixture_lattice(const std::string& name) { return share(parse_lattice(fixture_text(name + ".lat"))); }
inline BinOpTable fixture_table(const std::string& name, const LatticePtr& lat) {
  return parse_table(fixture_text(name + ".opt"), lat);
}
inline UnaryOpTable fixture_unary(const std::string& name, const LatticePtr& lat) {
  return parse_unary(fixture_text(name + ".unm"), lat);
}

inline ElemSet labels(const Lattice& lat, std::initializer_list<const char*> ls) {
  ElemSet s;
  for (const char* l : ls) s.insert(lat.at(l));
  return s;
}

}  // namespace unilat::test
