#include "unilat/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "unilat/error.hpp"

namespace unilat {
namespace {

std::vector<std::string> labels_for(std::size_t n) {
  std::vector<std::string> out{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  out.push_back("1");
  return out;
}

// Order matrix of `lat` with element order[i] moved to position i.
std::vector<std::uint64_t> relabelled(const Lattice& lat, const std::vector<Elem>& order) {
  const std::size_t n = order.size();
  std::vector<Elem> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<Elem>(i);
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t bits = 0;
    for (Elem y : lat.up_set(order[i])) bits |= std::uint64_t{1} << pos[y];
    rows[i] = bits;
  }
  return rows;
}

// Positions grouped by an isomorphism invariant; the canonical form only
// permutes within a group.
std::vector<Elem> invariant_sorted_middle(const Lattice& lat) {
  std::vector<Elem> mid;
  for (Elem x : lat.all())
    if (x != lat.bottom() && x != lat.top()) mid.push_back(x);
  auto key = [&](Elem x) { return std::pair(lat.down_set(x).size(), lat.up_set(x).size()); };
  std::stable_sort(mid.begin(), mid.end(), [&](Elem x, Elem y) { return key(x) < key(y); });
  return mid;
}

std::vector<Elem> canonical_order(const Lattice& lat) {
  std::vector<Elem> mid = invariant_sorted_middle(lat);
  auto key = [&](Elem x) { return std::pair(lat.down_set(x).size(), lat.up_set(x).size()); };
  // Group boundaries.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < mid.size(); ++i)
    if (i == 0 || key(mid[i]) != key(mid[i - 1])) starts.push_back(i);
  starts.push_back(mid.size());
  for (std::size_t g = 0; g + 1 < starts.size(); ++g) std::sort(mid.begin() + starts[g], mid.begin() + starts[g + 1]);

  std::vector<Elem> best;
  std::vector<std::uint64_t> best_rows;
  // Odometer over the permutations of each group.
  while (true) {
    std::vector<Elem> order{lat.bottom()};
    order.insert(order.end(), mid.begin(), mid.end());
    order.push_back(lat.top());
    auto rows = relabelled(lat, order);
    if (best.empty() || rows < best_rows) {
      best = order;
      best_rows = std::move(rows);
    }
    std::size_t g = 0;
    for (; g + 1 < starts.size(); ++g)
      if (std::next_permutation(mid.begin() + starts[g], mid.begin() + starts[g + 1])) break;
    if (g + 1 == starts.size()) break;
  }
  return best;
}

LatticePtr canonical_copy(const Lattice& lat, const std::string& name) {
  const auto order = canonical_order(lat);
  const auto rows = relabelled(lat, order);
  std::vector<ElemSet> up;
  for (auto r : rows) up.emplace_back(r);
  return share(Lattice::from_order(name, labels_for(lat.size()), std::move(up)));
}

// Naturally labelled posets on m middle elements: element k's strict
// down-set is an order ideal of elements 0..k-1.
void for_each_middle_order(std::size_t m, const std::function<void(const std::vector<ElemSet>&)>& visit) {
  std::vector<ElemSet> down(m);  // strict down-sets
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      visit(down);
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const ElemSet s(bits);
      bool ideal = true;
      for (Elem y : s)
        if (!down[y].subset_of(s)) {
          ideal = false;
          break;
        }
      if (!ideal) continue;
      down[k] = s;
      rec(k + 1);
    }
  };
  rec(0);
}

std::optional<Lattice> try_lattice(const std::vector<std::string>& labels, const std::vector<ElemSet>& up) {
  try {
    return Lattice::from_order("tmp", labels, up);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const Lattice& lat) { return relabelled(lat, canonical_order(lat)); }

void for_each_lattice(const EnumConfig& cfg, const std::function<void(const LatticePtr&)>& visit) {
  if (cfg.max_elements < 2) throw Error(ErrorCode::InvalidRequest, "max_elements must be at least 2");
  if (cfg.max_elements > 10) throw Error(ErrorCode::TooManyElements, "lattice enumeration is limited to 10 elements");
  for (std::size_t n = 2; n <= cfg.max_elements; ++n) {
    const std::size_t m = n - 2;
    std::set<std::vector<std::uint64_t>> seen;
    std::size_t count = 0;
    const auto labels = labels_for(n);
    for_each_middle_order(m, [&](const std::vector<ElemSet>& down) {
      // Element 0 is bottom, 1..m the middle, m+1 the top.
      std::vector<ElemSet> up(n);
      up[0] = ElemSet::all(n);
      up[n - 1] = ElemSet::single(static_cast<Elem>(n - 1));
      for (std::size_t k = 0; k < m; ++k)
        up[k + 1] = ElemSet::single(static_cast<Elem>(k + 1)) | ElemSet::single(static_cast<Elem>(n - 1));
      for (std::size_t k = 0; k < m; ++k)
        for (Elem j : down[k]) up[j + 1].insert(static_cast<Elem>(k + 1));
      std::optional<Lattice> parsed = try_lattice(labels, up);
      if (!parsed) return;
      const Lattice& lat = *parsed;
      const std::string name = "n" + std::to_string(n) + "_" + std::to_string(count);
      if (cfg.dedupe_isomorphic) {
        if (!seen.insert(canonical_form(lat)).second) return;
        ++count;
        visit(canonical_copy(lat, name));
      } else {
        ++count;
        visit(share(Lattice::from_order(name, labels, up)));
      }
    });
  }
}

std::vector<LatticePtr> enumerate_lattices(const EnumConfig& cfg) {
  std::vector<LatticePtr> out;
  for_each_lattice(cfg, [&](const LatticePtr& l) { out.push_back(l); });
  return out;
}

UninormSet enumerate_uninorms(const LatticePtr& lat, const Interval& iv, Elem e, const EnumConfig& cfg) {
  const Lattice& L = *lat;
  if (!iv.contains(e)) throw Error(ErrorCode::InvalidRequest, "neutral element outside the interval");
  const std::vector<Elem> el = iv.list();
  const std::size_t k = el.size();
  const std::size_t pe = static_cast<std::size_t>(std::find(el.begin(), el.end(), e) - el.begin());
  constexpr int kUnset = -1;
  std::vector<int> t(k * k, kUnset);  // positions into el
  for (std::size_t i = 0; i < k; ++i) t[pe * k + i] = t[i * k + pe] = static_cast<int>(i);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (i != pe && j != pe) cells.emplace_back(i, j);

  std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) le[i][j] = L.leq(el[i], el[j]);

  // Monotonicity of the new cell against every assigned cell in its row.
  auto monotone_at = [&](std::size_t i, std::size_t j) {
    const int v = t[i * k + j];
    for (std::size_t r = 0; r < k; ++r) {
      const int w = t[r * k + j];
      if (w == kUnset || r == i) continue;
      if (le[r][i] && !le[w][v]) return false;
      if (le[i][r] && !le[v][w]) return false;
    }
    for (std::size_t c = 0; c < k; ++c) {
      const int w = t[i * k + c];
      if (w == kUnset || c == j) continue;
      if (le[c][j] && !le[w][v]) return false;
      if (le[j][c] && !le[v][w]) return false;
    }
    return true;
  };
  auto associative_so_far = [&]() {
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        const int xy = t[x * k + y];
        if (xy == kUnset) continue;
        for (std::size_t z = 0; z < k; ++z) {
          const int yz = t[y * k + z];
          if (yz == kUnset) continue;
          const int l = t[x * k + yz], r = t[xy * k + z];
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    return true;
  };

  UninormSet out;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (out.truncated) return;
    if (c == cells.size()) {
      if (out.tables.size() >= cfg.max_uninorms_per_interval) {
        out.truncated = true;
        return;
      }
      std::vector<Elem> values(k * k);
      for (std::size_t i = 0; i < k * k; ++i) values[i] = el[static_cast<std::size_t>(t[i])];
      out.tables.emplace_back("U" + std::to_string(out.tables.size()), lat, el, std::move(values), e);
      return;
    }
    const auto [i, j] = cells[c];
    for (std::size_t v = 0; v < k; ++v) {
      t[i * k + j] = t[j * k + i] = static_cast<int>(v);
      if (monotone_at(i, j) && monotone_at(j, i) && associative_so_far()) rec(c + 1);
      if (out.truncated) break;
    }
    t[i * k + j] = t[j * k + i] = kUnset;
  };
  rec(0);
  return out;
}

}  // namespace unilat
