#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycflat/errors.hpp"
#include "cycflat/smallset.hpp"

// Finite bounded lattices with explicit order matrix and meet/join
// tables.  Elements are positional indices 0..n-1; labels are
// presentation-only.  Values are immutable after construction and all
// operations are pure, so Lattice objects can be shared freely across
// threads.

namespace cycflat {

class Lattice {
 public:
  // Builds from an arbitrary generating set of strict relations
  // (pairs of element indices (x, y) meaning x < y).  The
  // reflexive-transitive closure is computed; the result must be a
  // bounded lattice.
  static Lattice build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    check_labels(labels);
    std::vector<Mask> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [x, y] : relations) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("relation references unknown element");
      if (x == y)
        throw NotAPartialOrder("relation " + labels[x] + "<" + labels[x] +
                               " is not irreflexive");
      up[x] |= bit(y);
    }
    // transitive closure; n <= 64 keeps this a few thousand word ops
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        Mask acc = up[x];
        for_each_bit(up[x], [&](int y) { acc |= up[y]; });
        if (acc != up[x]) {
          up[x] = acc;
          changed = true;
        }
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (has_bit(up[x], y) && has_bit(up[y], x))
          throw NotAPartialOrder("cycle through " + labels[x] + " and " +
                                 labels[y]);
    return from_leq(std::move(labels), std::move(up));
  }

  // Builds from a full order relation given as up-sets (up[x] = mask of
  // all y with x <= y, including x itself).  Validates the partial
  // order and the existence of all meets and joins.
  static Lattice from_leq(std::vector<std::string> labels,
                          std::vector<Mask> up) {
    Lattice L;
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw NotALattice("a lattice must have at least one element");
    if (n > kMaxElements)
      throw SizeLimitExceeded("lattice has " + std::to_string(n) +
                              " elements; cap is 64");
    check_labels(labels);
    const Mask all = full_mask(n);
    for (int x = 0; x < n; ++x) {
      if (!has_bit(up[x], x)) throw NotAPartialOrder("order not reflexive");
      if (!subset_of(up[x], all))
        throw std::invalid_argument("up-set mask out of range");
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && has_bit(up[x], y) && has_bit(up[y], x))
          throw NotAPartialOrder("cycle through " + labels[x] + " and " +
                                 labels[y]);
    for (int x = 0; x < n; ++x) {
      Mask acc = up[x];
      for_each_bit(up[x], [&](int y) { acc |= up[y]; });
      if (acc != up[x]) throw NotAPartialOrder("order not transitive");
    }

    L.labels_ = std::move(labels);
    L.up_ = std::move(up);
    L.down_.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for_each_bit(L.up_[x], [&](int y) { L.down_[y] |= bit(x); });

    L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    L.join_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        const int m = bound_of(L.down_, x, y);
        if (m < 0) L.fail_lattice(x, y, /*is_meet=*/true);
        const int j = bound_of(L.up_, x, y);
        if (j < 0) L.fail_lattice(x, y, /*is_meet=*/false);
        L.meet_[idx(n, x, y)] = L.meet_[idx(n, y, x)] = m;
        L.join_[idx(n, x, y)] = L.join_[idx(n, y, x)] = j;
      }
    }
    L.bottom_ = L.top_ = 0;
    for (int x = 1; x < n; ++x) {
      L.bottom_ = L.meet(L.bottom_, x);
      L.top_ = L.join(L.top_, x);
    }
    return L;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const {
    return labels_[static_cast<std::size_t>(x)];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label, or -1.
  int index_of(const std::string& lbl) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<std::size_t>(i)] == lbl) return i;
    return -1;
  }

  bool leq(int x, int y) const { return has_bit(up_[static_cast<std::size_t>(x)], y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }

  int meet(int x, int y) const { return meet_[idx(size(), x, y)]; }
  int join(int x, int y) const { return join_[idx(size(), x, y)]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Principal filter {u : u >= y} as a mask (includes y).
  Mask up_set(int y) const { return up_[static_cast<std::size_t>(y)]; }
  // Principal ideal {u : u <= y} as a mask (includes y).
  Mask down_set(int y) const { return down_[static_cast<std::size_t>(y)]; }

  Mask incomparables(int x) const {
    return full_mask(size()) & ~(up_[static_cast<std::size_t>(x)] |
                                 down_[static_cast<std::size_t>(x)]);
  }

  // Mask of elements covering x.
  Mask upper_covers(int x) const {
    Mask covers = 0;
    for_each_bit(up_set(x) & ~bit(x), [&](int y) {
      if ((up_set(x) & down_set(y)) == (bit(x) | bit(y))) covers |= bit(y);
    });
    return covers;
  }

  Mask lower_covers(int x) const {
    Mask covers = 0;
    for_each_bit(down_set(x) & ~bit(x), [&](int y) {
      if ((down_set(x) & up_set(y)) == (bit(x) | bit(y))) covers |= bit(y);
    });
    return covers;
  }

  // Longest-chain height of x above bottom (bottom has height 0).
  int height(int x) const {
    std::vector<int> h(static_cast<std::size_t>(size()), -1);
    std::function<int(int)> rec = [&](int v) {
      int& hv = h[static_cast<std::size_t>(v)];
      if (hv >= 0) return hv;
      hv = 0;
      for_each_bit(down_set(v) & ~bit(v),
                   [&](int w) { hv = std::max(hv, rec(w) + 1); });
      return hv;
    };
    return rec(x);
  }

  bool operator==(const Lattice& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

 private:
  static std::size_t idx(int n, int x, int y) {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(y);
  }

  static void check_labels(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) throw std::invalid_argument("empty label");
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j])
          throw std::invalid_argument("duplicate label: " + labels[i]);
    }
  }

  // With side = down-sets this finds the meet of (x, y): the unique
  // z in down(x) & down(y) whose down-set contains every common lower
  // bound.  With side = up-sets it finds the join.  Returns -1 when no
  // such element exists.
  static int bound_of(const std::vector<Mask>& side, int x, int y) {
    const Mask common = side[static_cast<std::size_t>(x)] &
                        side[static_cast<std::size_t>(y)];
    int found = -1;
    for_each_bit(common, [&](int z) {
      if (subset_of(common, side[static_cast<std::size_t>(z)])) found = z;
    });
    return found;
  }

  [[noreturn]] void fail_lattice(int x, int y, bool is_meet) const {
    const Mask lower = down_[static_cast<std::size_t>(x)] &
                       down_[static_cast<std::size_t>(y)];
    const Mask upper =
        up_[static_cast<std::size_t>(x)] & up_[static_cast<std::size_t>(y)];
    std::vector<int> max_lowers, min_uppers;
    for_each_bit(lower, [&](int z) {
      if ((lower & up_[static_cast<std::size_t>(z)]) == bit(z))
        max_lowers.push_back(z);
    });
    for_each_bit(upper, [&](int z) {
      if ((upper & down_[static_cast<std::size_t>(z)]) == bit(z))
        min_uppers.push_back(z);
    });
    std::string msg = std::string("no unique ") + (is_meet ? "meet" : "join") +
                      " for (" + label(x) + ", " + label(y) + "); ";
    msg += "maximal lower bounds {";
    for (std::size_t i = 0; i < max_lowers.size(); ++i)
      msg += (i ? " " : "") + label(max_lowers[i]);
    msg += "}, minimal upper bounds {";
    for (std::size_t i = 0; i < min_uppers.size(); ++i)
      msg += (i ? " " : "") + label(min_uppers[i]);
    msg += "}";
    throw NotALattice(msg, {x, y}, std::move(min_uppers),
                      std::move(max_lowers));
  }

  std::vector<std::string> labels_;
  std::vector<Mask> up_;    // up_[x] = {y : x <= y}
  std::vector<Mask> down_;  // down_[x] = {y : y <= x}
  std::vector<int> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

// ---------------------------------------------------------------------------
// Antichains

inline bool is_antichain(const Lattice& L, std::span<const int> elems) {
  if (elems.empty()) return false;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!L.incomparable(elems[i], elems[j])) return false;
  return true;
}

// Streams every antichain of size >= min_size exactly once, in
// lexicographic order of the (increasing) index sequences.  Depth-first
// extension over the fixed element order with incomparability pruning;
// the callback returns false to stop early.
template <typename F>
void for_each_antichain(const Lattice& L, int min_size, F&& f) {
  if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
  const int n = L.size();
  std::vector<int> current;
  bool stop = false;
  // candidates: elements > last chosen, incomparable to all chosen
  std::function<void(int, Mask)> rec = [&](int from, Mask allowed) {
    for (int x = from; x < n && !stop; ++x) {
      if (!has_bit(allowed, x)) continue;
      current.push_back(x);
      if (static_cast<int>(current.size()) >= min_size)
        if (!f(static_cast<const std::vector<int>&>(current))) {
          stop = true;
          current.pop_back();
          return;
        }
      rec(x + 1, allowed & L.incomparables(x));
      current.pop_back();
    }
  };
  rec(0, full_mask(n));
}

inline std::vector<std::vector<int>> antichains(const Lattice& L,
                                                int min_size) {
  std::vector<std::vector<int>> out;
  for_each_antichain(L, min_size, [&](const std::vector<int>& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

// Maximal cardinality among antichains.
inline int width(const Lattice& L) {
  int w = 0;
  for_each_antichain(L, 1, [&](const std::vector<int>& a) {
    w = std::max(w, static_cast<int>(a.size()));
    return true;
  });
  return w;
}

// ---------------------------------------------------------------------------
// Duality and substructures

// Same elements and labels, order reversed, meets and joins swapped.
// An involution: order_dual(order_dual(L)) == L.
inline Lattice order_dual(const Lattice& L) {
  const int n = L.size();
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) up[static_cast<std::size_t>(x)] = L.down_set(x);
  return Lattice::from_leq(L.labels(), std::move(up));
}

inline Mask principal_filter(const Lattice& L, int y) { return L.up_set(y); }

inline bool is_distributive(const Lattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) !=
            L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

struct GeneratedSublattice {
  Lattice lattice;
  std::vector<int> members;  // host indices, increasing; lattice index i
                             // corresponds to host element members[i]
};

// Smallest subset containing S closed under the host meet and join,
// with the induced order.  Meets and joins in the result agree with the
// host's, so the induced order suffices.
inline GeneratedSublattice sublattice_generated(const Lattice& L, Mask seed) {
  if (seed == 0) throw std::invalid_argument("seed set must be nonempty");
  Mask closed = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> elems = bits_of(closed);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i; j < elems.size(); ++j) {
        const Mask grown =
            closed | bit(L.meet(elems[i], elems[j])) | bit(L.join(elems[i], elems[j]));
        if (grown != closed) {
          closed = grown;
          changed = true;
        }
      }
  }
  std::vector<int> members = bits_of(closed);
  const int m = static_cast<int>(members.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int h : members) labels.push_back(L.label(h));
  std::vector<Mask> up(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (L.leq(members[static_cast<std::size_t>(i)],
                members[static_cast<std::size_t>(j)]))
        up[static_cast<std::size_t>(i)] |= bit(j);
  return {Lattice::from_leq(std::move(labels), std::move(up)),
          std::move(members)};
}

// ---------------------------------------------------------------------------
// Order dimension <= 2

struct Dim2Embedding {
  // coord[i] = (position of i in extension 1, position in extension 2);
  // x <= y in the lattice iff both coordinates increase.
  std::vector<int> coord1, coord2;
};

namespace detail {

// Enumerates linear extensions depth-first, least available index
// first.  f receives the extension as element indices in order and
// returns false to stop.
template <typename F>
bool for_each_linear_extension(const Lattice& L, F&& f) {
  const int n = L.size();
  std::vector<int> ext;
  ext.reserve(static_cast<std::size_t>(n));
  Mask placed = 0;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(ext.size()) == n) return f(ext);
    for (int x = 0; x < n; ++x) {
      if (has_bit(placed, x)) continue;
      if (!subset_of(L.down_set(x) & ~bit(x), placed)) continue;
      placed |= bit(x);
      ext.push_back(x);
      if (!rec()) return false;
      ext.pop_back();
      placed &= ~bit(x);
    }
    return true;
  };
  return rec();
}

}  // namespace detail

// True (with an embedding into N^2) iff two linear extensions exist
// whose intersection is the order.  Uses the standard fact that if
// leq = E1 & E2 for some pair of extensions, then reversing the
// incomparable pairs of E1 yields such an E2; so it suffices to test,
// for each extension E1, whether that reversal is transitive.  Brute
// force over linear extensions with a hard size cap.
inline std::optional<Dim2Embedding> order_dimension_at_most_2(
    const Lattice& L, int max_elements = 12) {
  const int n = L.size();
  if (n > max_elements)
    throw SizeLimitExceeded(
        "order_dimension_at_most_2: " + std::to_string(n) +
        " elements exceeds cap " + std::to_string(max_elements));
  std::optional<Dim2Embedding> result;
  detail::for_each_linear_extension(L, [&](const std::vector<int>& ext) {
    std::vector<int> pos1(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos1[static_cast<std::size_t>(ext[static_cast<std::size_t>(p)])] = p;
    // succ2[x] = {y : x before y in the candidate second extension}
    std::vector<Mask> succ2(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const bool before = L.lt(x, y) || (L.incomparable(x, y) &&
                                           pos1[static_cast<std::size_t>(y)] <
                                               pos1[static_cast<std::size_t>(x)]);
        if (before) succ2[static_cast<std::size_t>(x)] |= bit(y);
      }
    for (int x = 0; x < n; ++x) {
      Mask acc = succ2[static_cast<std::size_t>(x)];
      for_each_bit(succ2[static_cast<std::size_t>(x)],
                   [&](int y) { acc |= succ2[static_cast<std::size_t>(y)]; });
      if (acc != succ2[static_cast<std::size_t>(x)]) return true;  // not transitive
    }
    Dim2Embedding emb;
    emb.coord1 = pos1;
    emb.coord2.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      emb.coord2[static_cast<std::size_t>(x)] =
          n - 1 - popcount(succ2[static_cast<std::size_t>(x)]);
    result = std::move(emb);
    return false;
  });
  return result;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

// Order-preserving-and-reflecting bijection between two posets given as
// up-set vectors, or nullopt.  Backtracking over signature-compatible
// assignments.
inline std::optional<std::vector<int>> poset_isomorphism(
    const std::vector<Mask>& up_a, const std::vector<Mask>& up_b) {
  const int n = static_cast<int>(up_a.size());
  if (up_b.size() != up_a.size()) return std::nullopt;
  std::vector<Mask> down_a(static_cast<std::size_t>(n), 0),
      down_b(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for_each_bit(up_a[static_cast<std::size_t>(x)],
                 [&](int y) { down_a[static_cast<std::size_t>(y)] |= bit(x); });
    for_each_bit(up_b[static_cast<std::size_t>(x)],
                 [&](int y) { down_b[static_cast<std::size_t>(y)] |= bit(x); });
  }
  auto sig = [](const std::vector<Mask>& up, const std::vector<Mask>& down,
                int x) {
    return std::pair<int, int>{popcount(up[static_cast<std::size_t>(x)]),
                               popcount(down[static_cast<std::size_t>(x)])};
  };
  {
    std::vector<std::pair<int, int>> sa, sb;
    for (int x = 0; x < n; ++x) {
      sa.push_back(sig(up_a, down_a, x));
      sb.push_back(sig(up_b, down_b, x));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  Mask used = 0;
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (has_bit(used, y)) continue;
      if (sig(up_a, down_a, x) != sig(up_b, down_b, y)) continue;
      bool ok = true;
      for (int x2 = 0; x2 < x && ok; ++x2) {
        const int y2 = map[static_cast<std::size_t>(x2)];
        if (has_bit(up_a[static_cast<std::size_t>(x)], x2) !=
                has_bit(up_b[static_cast<std::size_t>(y)], y2) ||
            has_bit(up_a[static_cast<std::size_t>(x2)], x) !=
                has_bit(up_b[static_cast<std::size_t>(y2)], y))
          ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = y;
      used |= bit(y);
      if (rec(x + 1)) return true;
      used &= ~bit(y);
      map[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

}  // namespace detail

// Lattice isomorphism L1 -> L2 as an index map, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Lattice& a,
                                                        const Lattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Mask> up_a, up_b;
  for (int x = 0; x < a.size(); ++x) up_a.push_back(a.up_set(x));
  for (int x = 0; x < b.size(); ++x) up_b.push_back(b.up_set(x));
  return detail::poset_isomorphism(up_a, up_b);
}

inline bool isomorphic(const Lattice& a, const Lattice& b) {
  return find_isomorphism(a, b).has_value();
}

// All cover pairs (x, y) with y a cover of x, sorted.
inline std::vector<std::pair<int, int>> covers(const Lattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < L.size(); ++x)
    for_each_bit(L.upper_covers(x), [&](int y) { out.emplace_back(x, y); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cycflat
