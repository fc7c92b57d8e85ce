#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "unilat/enumerate.hpp"

using namespace unilat;
using namespace unilat::test;

namespace {

using Matrix = std::vector<std::vector<bool>>;

// Smallest row-major bitstring of the order over every relabelling.
std::vector<bool> naive_canonical(const Matrix& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> cur;
    cur.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur.push_back(leq[p[i]][p[j]]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Matrix matrix_of(const Lattice& lat) {
  Matrix m(lat.size(), std::vector<bool>(lat.size()));
  for (Elem x = 0; x < lat.size(); ++x)
    for (Elem y = 0; y < lat.size(); ++y) m[x][y] = lat.leq(x, y);
  return m;
}

bool is_lattice(const Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // a least upper bound must exist
      bool found = false;
      for (std::size_t u = 0; u < n && !found; ++u) {
        if (!leq[x][u] || !leq[y][u]) continue;
        bool least = true;
        for (std::size_t v = 0; v < n; ++v)
          if (leq[x][v] && leq[y][v] && !leq[u][v]) least = false;
        found = least;
      }
      if (!found) return false;
    }
  return true;
}

// Isomorphism classes of n-element lattices: naturally labelled strict
// orders on the n - 2 middle elements, closed under bottom and top.
std::set<std::vector<bool>> naive_lattices(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = true;
      m[0][i] = true;
      m[i][n - 1] = true;
    }
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) m[pairs[b].first + 1][pairs[b].second + 1] = true;
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y = 0; y < n && transitive; ++y)
        for (std::size_t z = 0; z < n && transitive; ++z)
          if (m[x][y] && m[y][z] && !m[x][z]) transitive = false;
    if (transitive && is_lattice(m)) out.insert(naive_canonical(m));
  }
  return out;
}

// Uninorms on `iv` with neutral e by exhausting the cells off the e row.
std::size_t naive_uninorm_count(const LatticePtr& lat, const Interval& iv, Elem e) {
  const std::vector<Elem> c = iv.list();
  std::vector<std::pair<Elem, Elem>> cells;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j)
      if (c[i] != e && c[j] != e) cells.emplace_back(c[i], c[j]);
  std::vector<std::size_t> digit(cells.size(), 0);
  std::size_t count = 0;
  for (;;) {
    const auto f = [&](Elem x, Elem y) -> Elem {
      if (x == e) return y;
      if (y == e) return x;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if ((cells[i].first == x && cells[i].second == y) || (cells[i].first == y && cells[i].second == x))
          return c[digit[i]];
      return x;
    };
    bool ok = true;
    for (Elem x : c)
      for (Elem y : c)
        for (Elem z : c) {
          if (!ok) break;
          if (f(x, f(y, z)) != f(f(x, y), z)) ok = false;
          if (lat->leq(x, y) && !lat->leq(f(x, z), f(y, z))) ok = false;
        }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == c.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("lattice enumeration agrees with a naive isomorphism-class count") {
  EnumConfig cfg;
  cfg.max_elements = 7;
  const auto lats = enumerate_lattices(cfg);
  std::map<std::size_t, std::set<std::vector<bool>>> by_size;
  for (const auto& l : lats) {
    CHECK(by_size[l->size()].insert(naive_canonical(matrix_of(*l))).second);
  }
  const std::size_t frozen[] = {0, 0, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 2; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(by_size[n] == naive_lattices(n));
    CHECK(by_size[n].size() == frozen[n]);
  }
  for (std::size_t i = 1; i < lats.size(); ++i) CHECK(lats[i - 1]->size() <= lats[i]->size());
}

TEST_CASE("dedupe off yields the same classes") {
  EnumConfig on, off;
  on.max_elements = off.max_elements = 5;
  off.dedupe_isomorphic = false;
  std::set<std::vector<std::uint64_t>> a, b;
  for (const auto& l : enumerate_lattices(on)) a.insert(canonical_form(*l));
  std::size_t raw = 0;
  for (const auto& l : enumerate_lattices(off)) {
    b.insert(canonical_form(*l));
    ++raw;
  }
  CHECK(a == b);
  CHECK(raw > a.size());
}

TEST_CASE("canonical form is invariant under relabelling") {
  auto L4 = fixture_lattice("L4");
  auto shuffled = make("L4", {"1", "m", "b", "0", "k", "a", "e"},
                       {{"0", "e"}, {"0", "k"}, {"0", "m"}, {"e", "a"}, {"e", "b"}, {"a", "1"}, {"k", "b"}, {"m", "b"}, {"b", "1"}});
  CHECK(canonical_form(*L4) == canonical_form(*shuffled));
  CHECK(canonical_form(*L4) != canonical_form(L4->dual()));
}

TEST_CASE("uninorm counts agree with a naive filter") {
  EnumConfig cfg;
  auto c2 = chain({"0", "1"});
  auto c3 = fixture_lattice("chain3");
  auto d = diamond();
  for (const auto& lat : {c2, c3, d}) {
    const Interval all = lat->interval(lat->bottom(), lat->top());
    for (Elem e : all.members) {
      CAPTURE(lat->name());
      CAPTURE(lat->label(e));
      const UninormSet s = enumerate_uninorms(lat, all, e, cfg);
      CHECK_FALSE(s.truncated);
      CHECK(s.tables.size() == naive_uninorm_count(lat, all, e));
      for (const auto& t : s.tables) CHECK(is_uninorm(t, e));
    }
  }
  auto L4 = fixture_lattice("L4");
  const Interval low = L4->interval(L4->bottom(), L4->at("a"));
  CHECK(enumerate_uninorms(L4, low, L4->at("e"), cfg).tables.size() == naive_uninorm_count(L4, low, L4->at("e")));
}

TEST_CASE("truncation and determinism") {
  EnumConfig cfg;
  cfg.max_uninorms_per_interval = 2;
  auto d = diamond();
  const Interval all = d->interval(d->bottom(), d->top());
  const UninormSet s = enumerate_uninorms(d, all, d->top(), cfg);
  CHECK(s.truncated);
  CHECK(s.tables.size() == 2);
  cfg.max_uninorms_per_interval = 5000;
  const UninormSet a = enumerate_uninorms(d, all, d->bottom(), cfg);
  const UninormSet b = enumerate_uninorms(d, all, d->bottom(), cfg);
  REQUIRE(a.tables.size() == b.tables.size());
  for (std::size_t i = 0; i < a.tables.size(); ++i) CHECK(table_equal(a.tables[i], b.tables[i]));
  EnumConfig six;
  const auto x = enumerate_lattices(six), y = enumerate_lattices(six);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(*x[i] == *y[i]);
}
