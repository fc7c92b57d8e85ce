#include "unilat/reconstruct.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "unilat/constructions.hpp"
#include "unilat/error.hpp"

namespace unilat {
namespace {

// Kleene truth values.
enum Tri : std::int8_t { F = 0, T = 1, U = 2 };

Tri tnot(Tri a) { return a == U ? U : (a == T ? F : T); }
Tri tand(Tri a, Tri b) { return (a == F || b == F) ? F : (a == T && b == T ? T : U); }
Tri tor(Tri a, Tri b) { return (a == T || b == T) ? T : (a == F && b == F ? F : U); }
Tri tri(bool b) { return b ? T : F; }

struct Branch {
  Tri region;
  Tri match;
  // Members whose join must equal the cell value; empty for exact branches.
  std::vector<int> lub;
};

class Search {
 public:
  Search(const ReconstructInput& in) : in_(in) { setup(); }

  ReconstructResult run() {
    if (seed()) dfs();
    std::stable_sort(result_.solutions.begin(), result_.solutions.end(),
                     [](const Lattice& x, const Lattice& y) { return relation_count(x) < relation_count(y); });
    return std::move(result_);
  }

  static std::size_t relation_count(const Lattice& lat) {
    std::size_t c = 0;
    for (Elem x = 0; x < lat.size(); ++x) c += lat.up_set(x).size();
    return c;
  }

 private:
  const ReconstructInput& in_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  int bot_ = 0, top_ = 0, a_ = 0, e_ = 0;
  std::vector<bool> in_box_;
  std::vector<int> base_;  // n*n, -1 outside the box
  std::vector<int> full_;  // n*n
  std::vector<int> cl_;    // closure for U3
  std::vector<std::vector<std::pair<int, int>>> mono_pre_;  // (p,q) -> pairs (x,y)

  std::vector<Tri> v_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  bool conflict_ = false;
  std::vector<std::pair<int, int>> order_;
  std::vector<std::vector<std::uint64_t>> found_;
  ReconstructResult result_;

  Tri& at(int x, int y) { return v_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)]; }
  Tri get(int x, int y) const { return v_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)]; }

  int index(const std::unordered_map<std::string, int>& idx, const std::string& l, const char* what) const {
    auto it = idx.find(l);
    if (it == idx.end())
      throw Error(ErrorCode::UnknownElement, std::string(what) + " '" + l + "' is not among the elements");
    return it->second;
  }

  void setup() {
    const bool base_mode = in_.mode == ReconstructMode::Base;
    if (!base_mode && !in_.full) throw Error(ErrorCode::InvalidRequest, "reconstruction needs the full table");
    if (base_mode) {
      labels_ = in_.base.carrier;
      if (std::find(labels_.begin(), labels_.end(), in_.top) != labels_.end())
        throw Error(ErrorCode::InvalidRequest, "top '" + in_.top + "' already belongs to the base carrier");
      labels_.push_back(in_.top);
    } else {
      labels_ = in_.full->carrier;
    }
    n_ = labels_.size();
    if (n_ > kMaxElements) throw Error(ErrorCode::TooManyElements, std::to_string(n_) + " elements");
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < n_; ++i)
      if (!idx.emplace(labels_[i], static_cast<int>(i)).second)
        throw Error(ErrorCode::DuplicateElement, "element '" + labels_[i] + "' repeated");
    bot_ = index(idx, in_.bottom, "bottom");
    top_ = index(idx, in_.top, "top");
    a_ = index(idx, in_.anchor, "anchor");
    if (!in_.base.neutral) throw Error(ErrorCode::InvalidRequest, "base table must declare its neutral element");
    e_ = index(idx, *in_.base.neutral, "neutral element");

    in_box_.assign(n_, false);
    std::vector<int> bc;
    for (const auto& l : in_.base.carrier) {
      bc.push_back(index(idx, l, "base carrier element"));
      in_box_[static_cast<std::size_t>(bc.back())] = true;
    }
    base_.assign(n_ * n_, -1);
    for (std::size_t i = 0; i < bc.size(); ++i)
      for (std::size_t j = 0; j < bc.size(); ++j)
        base_[static_cast<std::size_t>(bc[i]) * n_ + static_cast<std::size_t>(bc[j])] =
            index(idx, in_.base.rows[i][j], "base table value");
    if (!base_mode) {
      full_.assign(n_ * n_, -1);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) full_[i * n_ + j] = index(idx, in_.full->rows[i][j], "table value");
    }
    cl_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) cl_[i] = static_cast<int>(i);
    if (in_.unary)
      for (const auto& [x, y] : in_.unary->maps) cl_[index(idx, x, "mapped element")] = index(idx, y, "image");

    mono_pre_.assign(n_ * n_, {});
    for (int x : bc)
      for (int y : bc) {
        if (x == y) continue;
        for (int z : bc) {
          const int p = base_[static_cast<std::size_t>(x) * n_ + z], q = base_[static_cast<std::size_t>(y) * n_ + z];
          if (p != q) mono_pre_[static_cast<std::size_t>(p) * n_ + q].emplace_back(x, y);
        }
      }

    // Decisions: pairs touching e or a first, then the rest row-major.
    for (int pass = 0; pass < 2; ++pass)
      for (int x = 0; x < static_cast<int>(n_); ++x)
        for (int y = 0; y < static_cast<int>(n_); ++y) {
          if (x == y) continue;
          const bool key = x == e_ || y == e_ || x == a_ || y == a_;
          if ((pass == 0) == key) order_.emplace_back(x, y);
        }
  }

  void assign(int x, int y, Tri t) {
    Tri& c = at(x, y);
    if (c == t) return;
    if (c != U) {
      conflict_ = true;
      return;
    }
    c = t;
    const int id = x * static_cast<int>(n_) + y;
    trail_.push_back(id);
    queue_.push_back(id);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      v_[static_cast<std::size_t>(trail_.back())] = U;
      trail_.pop_back();
    }
    queue_.clear();
    conflict_ = false;
  }

  bool seed() {
    v_.assign(n_ * n_, U);
    for (int x = 0; x < static_cast<int>(n_); ++x) {
      assign(x, x, T);
      assign(bot_, x, T);
      assign(x, top_, T);
      assign(x, a_, tri(in_box_[static_cast<std::size_t>(x)]));
    }
    return propagate();
  }

  void propagate_order(int x, int y) {
    const int n = static_cast<int>(n_);
    if (get(x, y) == T) {
      if (x != y) assign(y, x, F);
      for (int u = 0; u < n && !conflict_; ++u) {
        if (get(u, x) == T) assign(u, y, T);
        if (get(y, u) == T) assign(x, u, T);
        if (get(u, y) == F) assign(u, x, F);
        if (get(x, u) == F) assign(y, u, F);
      }
      if (in_box_[static_cast<std::size_t>(x)] && in_box_[static_cast<std::size_t>(y)])
        for (int z = 0; z < n && !conflict_; ++z) {
          if (!in_box_[static_cast<std::size_t>(z)]) continue;
          const int p = base_[static_cast<std::size_t>(x) * n_ + z], q = base_[static_cast<std::size_t>(y) * n_ + z];
          assign(p, q, T);
        }
    } else {
      for (int u = 0; u < n && !conflict_; ++u) {
        if (get(x, u) == T) assign(u, y, F);
        if (get(u, y) == T) assign(x, u, F);
      }
      for (auto [p, q] : mono_pre_[static_cast<std::size_t>(x) * n_ + y]) {
        if (conflict_) break;
        assign(p, q, F);
      }
    }
  }

  Tri match_lub(const std::vector<int>& s, int v) const {
    bool all_below = true;
    for (int m : s) {
      if (get(m, v) == F) return F;
      if (get(m, v) != T) all_below = false;
    }
    bool least = true;
    for (int u = 0; u < static_cast<int>(n_); ++u) {
      bool all_t = true, some_f = false;
      for (int m : s) {
        if (get(m, u) == F) some_f = true;
        if (get(m, u) != T) all_t = false;
      }
      if (all_t && get(v, u) == F) return F;
      if (!some_f && get(v, u) != T) least = false;
    }
    return all_below && least ? T : U;
  }

  void force_lub(const std::vector<int>& s, int v) {
    for (int m : s) assign(m, v, T);
    for (int u = 0; u < static_cast<int>(n_) && !conflict_; ++u) {
      int t_count = 0, open = -1, opens = 0;
      for (int m : s) {
        const Tri t = get(m, u);
        if (t == T) ++t_count;
        else if (t == U) { open = m; ++opens; }
      }
      if (t_count == static_cast<int>(s.size())) assign(v, u, T);
      else if (get(v, u) == F && opens == 1 && t_count + 1 == static_cast<int>(s.size())) assign(open, u, F);
    }
  }

  Tri le(int x, int y) const { return get(x, y); }
  Tri box(int x) const { return tri(in_box_[static_cast<std::size_t>(x)]); }
  Tri iea(int x) const {
    return tand(tand(tnot(le(x, e_)), tnot(le(e_, x))), tand(tnot(box(x)), tnot(le(a_, x))));
  }

  std::vector<Branch> branches(int x, int y) const {
    const int val = full_[static_cast<std::size_t>(x) * n_ + y];
    const Tri in_box = tand(box(x), box(y));
    const Tri box_match = in_box == T ? tri(base_[static_cast<std::size_t>(x) * n_ + y] == val) : F;
    std::vector<Branch> out{{in_box, box_match, {}}};
    switch (in_.mode) {
      case ReconstructMode::U1: {
        const Tri bx = tand(iea(x), le(y, e_)), by = tand(le(x, e_), iea(y));
        out.push_back({bx, tri(val == x), {}});
        out.push_back({by, tri(val == y), {}});
        out.push_back({tnot(tor(in_box, tor(bx, by))), U, {x, y}});
        break;
      }
      case ReconstructMode::S1:
        out.push_back({tnot(in_box), U, {x, y}});
        break;
      case ReconstructMode::U3:
      case ReconstructMode::U31:
      case ReconstructMode::U32: {
        const Tri bx = tand(tnot(box(x)), le(y, e_)), by = tand(le(x, e_), tnot(box(y)));
        const Tri hull = tand(iea(x), iea(y));
        std::vector<int> s;
        if (in_.mode == ReconstructMode::U3) s = {cl_[static_cast<std::size_t>(x)], cl_[static_cast<std::size_t>(y)]};
        else if (in_.mode == ReconstructMode::U31) s = {x, y};
        else s = {x, y, a_};
        out.push_back({bx, tri(val == x), {}});
        out.push_back({by, tri(val == y), {}});
        out.push_back({hull, U, s});
        out.push_back({tnot(tor(tor(in_box, hull), tor(bx, by))), tri(val == top_), {}});
        break;
      }
      case ReconstructMode::Base:
        break;
    }
    for (auto& b : out)
      if (!b.lub.empty()) b.match = match_lub(b.lub, val);
    return out;
  }

  // One pass over all cells; returns false on conflict.
  bool cell_pass() {
    if (in_.mode == ReconstructMode::Base) return true;
    for (int x = 0; x < static_cast<int>(n_); ++x)
      for (int y = 0; y < static_cast<int>(n_); ++y) {
        const auto bs = branches(x, y);
        const Branch* sure = nullptr;
        const Branch* only = nullptr;
        int alive = 0;
        for (const auto& b : bs) {
          if (b.region == T) sure = &b;
          if (b.region != F && b.match != F) {
            ++alive;
            only = &b;
          }
        }
        if (alive == 0) return false;
        if (sure && sure->match == F) return false;
        const Branch* pick = sure ? sure : (alive == 1 ? only : nullptr);
        if (pick && !pick->lub.empty()) {
          force_lub(pick->lub, full_[static_cast<std::size_t>(x) * n_ + y]);
          if (conflict_) return false;
        }
      }
    return true;
  }

  bool propagate() {
    while (true) {
      while (!queue_.empty() && !conflict_) {
        const int id = queue_.back();
        queue_.pop_back();
        propagate_order(id / static_cast<int>(n_), id % static_cast<int>(n_));
      }
      if (conflict_) return false;
      const std::size_t before = trail_.size();
      if (!cell_pass()) return false;
      if (trail_.size() == before) return true;
    }
  }

  std::vector<std::uint64_t> t_rows() const {
    std::vector<std::uint64_t> rows(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (v_[x * n_ + y] == T) rows[x] |= std::uint64_t{1} << y;
    return rows;
  }

  bool contains_solution() const {
    const auto rows = t_rows();
    for (const auto& s : found_) {
      bool sup = true;
      for (std::size_t i = 0; i < n_ && sup; ++i)
        if (s[i] & ~rows[i]) sup = false;
      if (sup) return true;
    }
    return false;
  }

  void leaf() {
    std::vector<ElemSet> up;
    for (auto r : t_rows()) up.emplace_back(r);
    const std::string name = in_.full ? in_.full->lattice_name : in_.base.lattice_name;
    LatticePtr lat;
    try {
      lat = share(Lattice::from_order(name, labels_, up));
    } catch (const Error&) {
      return;
    }
    if (lat->bottom() != bot_ || lat->top() != top_) return;
    try {
      BinOpTable base = bind_table(in_.base, lat);
      if (!is_uninorm(base, static_cast<Elem>(e_))) return;
      if (in_.accept && !in_.accept(base)) return;
      if (in_.mode != ReconstructMode::Base) {
        static const std::unordered_map<int, ConstructionId> ids = {
            {static_cast<int>(ReconstructMode::U1), ConstructionId::U1},
            {static_cast<int>(ReconstructMode::U3), ConstructionId::U3},
            {static_cast<int>(ReconstructMode::U31), ConstructionId::U31},
            {static_cast<int>(ReconstructMode::U32), ConstructionId::U32},
            {static_cast<int>(ReconstructMode::S1), ConstructionId::S1}};
        std::vector<Elem> img(n_);
        for (std::size_t i = 0; i < n_; ++i) img[i] = static_cast<Elem>(cl_[i]);
        ConstructionRequest req{ids.at(static_cast<int>(in_.mode)), static_cast<Elem>(a_), base, std::nullopt,
                                std::nullopt, false};
        if (in_.mode == ReconstructMode::U3) req.unary = UnaryOpTable("cl", lat, img);
        const BinOpTable built = construct(req);
        const BinOpTable full = bind_table(*in_.full, lat);
        if (!table_equal(built, full)) return;
      }
    } catch (const Error&) {
      return;
    }
    found_.push_back(t_rows());
    result_.solutions.push_back(*lat);
    if (result_.solutions.size() >= in_.max_solutions) result_.capped = true;
  }

  void dfs() {
    ++result_.nodes;
    if (result_.capped || contains_solution()) return;
    auto it = std::find_if(order_.begin(), order_.end(), [&](auto p) { return get(p.first, p.second) == U; });
    if (it == order_.end()) {
      leaf();
      return;
    }
    for (Tri t : {F, T}) {
      const std::size_t mark = trail_.size();
      assign(it->first, it->second, t);
      if (propagate()) dfs();
      undo(mark);
      if (result_.capped) return;
    }
  }
};

std::string describe_covers(const Lattice& lat) {
  std::string s;
  for (auto [x, y] : lat.covers()) s += " " + lat.label(x) + "<" + lat.label(y);
  return s;
}

}  // namespace

ReconstructMode parse_reconstruct_mode(std::string_view s) {
  if (s == "u1") return ReconstructMode::U1;
  if (s == "u3") return ReconstructMode::U3;
  if (s == "u31") return ReconstructMode::U31;
  if (s == "u32") return ReconstructMode::U32;
  if (s == "s1") return ReconstructMode::S1;
  if (s == "base") return ReconstructMode::Base;
  throw Error(ErrorCode::UnknownConstruction,
              "reconstruction supports u1, u3, u31, u32, s1 and base, not '" + std::string(s) + "'");
}

ReconstructResult reconstruct_all(const ReconstructInput& in) { return Search(in).run(); }

Lattice reconstruct_fixture(const ReconstructInput& in) {
  ReconstructResult r = reconstruct_all(in);
  if (r.solutions.empty()) throw Error(ErrorCode::NoConsistentLattice, "no order reproduces the tables");
  if (r.solutions.size() > 1) {
    std::string msg = std::to_string(r.solutions.size()) + (r.capped ? "+" : "") + " minimal orders:";
    for (std::size_t i = 0; i < r.solutions.size(); ++i)
      msg += " [" + std::to_string(i) + "]" + describe_covers(r.solutions[i]);
    throw Error(ErrorCode::AmbiguousLattice, msg);
  }
  return std::move(r.solutions.front());
}

}  // namespace unilat
