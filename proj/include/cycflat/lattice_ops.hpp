#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycflat/lattice.hpp"

// Constructors that build new lattices from given ones: linear and
// identified sums, the star product, lexicographic sums, ideal-plus-top
// sublattices, direct products, and the coatom-chain family.  Every
// output goes through Lattice::from_leq, so lattice-ness is always
// validated rather than assumed.

namespace cycflat {

namespace detail {

// Appends primes until every label is unique.
inline std::vector<std::string> dedup_labels(std::vector<std::string> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool clash = true;
    while (clash) {
      clash = false;
      for (std::size_t j = 0; j < i; ++j)
        if (labels[j] == labels[i]) clash = true;
      if (clash) labels[i] += '\'';
    }
  }
  return labels;
}

}  // namespace detail

// Ordinal sum: order within P and Q unchanged, every element of P below
// every element of Q.
inline Lattice linear_sum(const Lattice& p, const Lattice& q) {
  const int np = p.size(), nq = q.size(), n = np + nq;
  std::vector<std::string> labels;
  for (int i = 0; i < np; ++i) labels.push_back(p.label(i));
  for (int i = 0; i < nq; ++i) labels.push_back(q.label(i));
  labels = detail::dedup_labels(std::move(labels));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  const Mask q_all = full_mask(n) & ~full_mask(np);
  for (int i = 0; i < np; ++i) up[static_cast<std::size_t>(i)] = p.up_set(i) | q_all;
  for (int i = 0; i < nq; ++i)
    up[static_cast<std::size_t>(np + i)] = q.up_set(i) << np;
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// Hasse-diagram gluing: the top of P is identified with the bottom of
// Q.  |P| + |Q| - 1 elements; the shared element keeps P's label.
inline Lattice identify_sum(const Lattice& p, const Lattice& q) {
  const int np = p.size(), nq = q.size();
  const int n = np + nq - 1;
  // q elements other than q.bottom() are appended after all of p;
  // map q index -> combined index
  std::vector<int> qmap(static_cast<std::size_t>(nq), -1);
  qmap[static_cast<std::size_t>(q.bottom())] = p.top();
  int next = np;
  for (int i = 0; i < nq; ++i)
    if (i != q.bottom()) qmap[static_cast<std::size_t>(i)] = next++;
  std::vector<std::string> labels;
  for (int i = 0; i < np; ++i) labels.push_back(p.label(i));
  for (int i = 0; i < nq; ++i)
    if (i != q.bottom()) labels.push_back(q.label(i));
  labels = detail::dedup_labels(std::move(labels));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  Mask strictly_above = 0;  // images of q elements other than its bottom
  for (int i = 0; i < nq; ++i)
    if (i != q.bottom()) strictly_above |= bit(qmap[static_cast<std::size_t>(i)]);
  for (int i = 0; i < np; ++i)
    up[static_cast<std::size_t>(i)] = p.up_set(i) | strictly_above;
  for (int i = 0; i < nq; ++i) {
    Mask m = 0;
    for_each_bit(q.up_set(i), [&](int j) { m |= bit(qmap[static_cast<std::size_t>(j)]); });
    up[static_cast<std::size_t>(qmap[static_cast<std::size_t>(i)])] |= m;
  }
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// Star product: drop the tops of both arguments, then hang the two
// remnants side by side between a fresh bottom and a fresh top.  No
// cross-order between the remnants except through the new bounds.
inline Lattice star(const Lattice& l1, const Lattice& l2) {
  if (l1.size() < 2 || l2.size() < 2)
    throw std::invalid_argument(
        "star requires lattices with at least 2 elements (their tops are "
        "removed)");
  const int n1 = l1.size() - 1, n2 = l2.size() - 1;
  const int n = n1 + n2 + 2;  // fresh bottom at 0, fresh top at n-1
  std::vector<int> map1(static_cast<std::size_t>(l1.size()), -1),
      map2(static_cast<std::size_t>(l2.size()), -1);
  int next = 1;
  for (int i = 0; i < l1.size(); ++i)
    if (i != l1.top()) map1[static_cast<std::size_t>(i)] = next++;
  for (int i = 0; i < l2.size(); ++i)
    if (i != l2.top()) map2[static_cast<std::size_t>(i)] = next++;
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int i = 0; i < l1.size(); ++i)
    if (i != l1.top()) labels.push_back(l1.label(i));
  for (int i = 0; i < l2.size(); ++i)
    if (i != l2.top()) labels.push_back(l2.label(i));
  labels.push_back("1");
  labels = detail::dedup_labels(std::move(labels));
  const int top = n - 1;
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  up[0] = full_mask(n);
  up[static_cast<std::size_t>(top)] = bit(top);
  auto add_component = [&](const Lattice& l, const std::vector<int>& map) {
    for (int i = 0; i < l.size(); ++i) {
      if (i == l.top()) continue;
      Mask m = bit(top);
      for_each_bit(l.up_set(i), [&](int j) {
        if (j != l.top()) m |= bit(map[static_cast<std::size_t>(j)]);
      });
      up[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = m;
    }
  };
  add_component(l1, map1);
  add_component(l2, map2);
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// Lexicographic sum: substitutes the fiber lattice fibers[x] for each
// element x of the index lattice; (x,a) <= (y,b) iff x < y, or x = y
// and a <= b in the fiber.  Defined for any index lattice; the result
// is validated and NotALattice is thrown when meets or joins fail to be
// unique.
inline Lattice lex_sum(const Lattice& index,
                       const std::vector<Lattice>& fibers) {
  if (static_cast<int>(fibers.size()) != index.size())
    throw std::invalid_argument("lex_sum needs one fiber lattice per element");
  int n = 0;
  std::vector<int> offset(static_cast<std::size_t>(index.size()), 0);
  for (int x = 0; x < index.size(); ++x) {
    offset[static_cast<std::size_t>(x)] = n;
    n += fibers[static_cast<std::size_t>(x)].size();
  }
  if (n > kMaxElements)
    throw SizeLimitExceeded("lex_sum result exceeds 64 elements");
  std::vector<std::string> labels;
  for (int x = 0; x < index.size(); ++x)
    for (int a = 0; a < fibers[static_cast<std::size_t>(x)].size(); ++a)
      labels.push_back(index.label(x) + "." +
                       fibers[static_cast<std::size_t>(x)].label(a));
  labels = detail::dedup_labels(std::move(labels));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < index.size(); ++x) {
    const Lattice& fx = fibers[static_cast<std::size_t>(x)];
    for (int a = 0; a < fx.size(); ++a) {
      Mask m = 0;
      for_each_bit(fx.up_set(a),
                   [&](int b) { m |= bit(offset[static_cast<std::size_t>(x)] + b); });
      for (int y = 0; y < index.size(); ++y)
        if (index.lt(x, y)) {
          const Lattice& fy = fibers[static_cast<std::size_t>(y)];
          for (int b = 0; b < fy.size(); ++b)
            m |= bit(offset[static_cast<std::size_t>(y)] + b);
        }
      up[static_cast<std::size_t>(offset[static_cast<std::size_t>(x)] + a)] = m;
    }
  }
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// The lattice induced on I + {top of L}, where I is an ideal of L.
// Always a lattice: joins falling outside I become the adjoined top.
inline Lattice ideal_adjoin_top(const Lattice& L, Mask ideal) {
  if (!has_bit(ideal, L.bottom()))
    throw std::invalid_argument("ideal must contain the bottom element");
  for_each_bit(ideal, [&](int x) {
    if (!subset_of(L.down_set(x), ideal))
      throw std::invalid_argument("set is not an ideal: " + L.label(x) +
                                  " is in it but some element below is not");
  });
  const Mask members = ideal | bit(L.top());
  std::vector<int> elems = bits_of(members);
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  for (int h : elems) labels.push_back(L.label(h));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (L.leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))
        up[static_cast<std::size_t>(i)] |= bit(j);
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// Componentwise order, meets and joins.
inline Lattice direct_product(const Lattice& p, const Lattice& q) {
  const int np = p.size(), nq = q.size();
  if (np * nq > kMaxElements)
    throw SizeLimitExceeded("direct_product result exceeds 64 elements");
  const int n = np * nq;
  auto id = [&](int x, int y) { return x * nq + y; };
  std::vector<std::string> labels;
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < nq; ++y)
      labels.push_back("(" + p.label(x) + "," + q.label(y) + ")");
  labels = detail::dedup_labels(std::move(labels));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < nq; ++y) {
      Mask m = 0;
      for_each_bit(p.up_set(x), [&](int x2) {
        for_each_bit(q.up_set(y), [&](int y2) { m |= bit(id(x2, y2)); });
      });
      up[static_cast<std::size_t>(id(x, y))] = m;
    }
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// A chain of `length` elements above a bottom; for length 0 the single
// bottom element.
inline Lattice chain(int length) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i <= length; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) rels.emplace_back(i - 1, i);
  }
  return Lattice::build(std::move(labels), rels);
}

// Boolean lattice on k atoms (2^k elements, subsets of {0..k-1} by
// inclusion).
inline Lattice boolean_lattice(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("boolean_lattice: bad k");
  const int n = 1 << k;
  std::vector<std::string> labels;
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    labels.push_back(set_to_string(static_cast<Mask>(s)));
    for (int t = 0; t < n; ++t)
      if ((s & ~t) == 0) up[static_cast<std::size_t>(s)] |= bit(t);
  }
  return Lattice::from_leq(std::move(labels), std::move(up));
}

// Member of the coatom-chain family: a spine chain of segment_lengths[0]
// elements above the bottom, plus one auxiliary chain per further entry
// of segment_lengths, branching off the spine at the matching entry of
// intersection_depths (0 = at the bottom), all chain ends being coatoms
// below a common top.  The defining property — the interval from the
// bottom to any coatom is a chain, and the auxiliary chains meet the
// spine chain in pairwise distinct initial segments — is asserted on
// the result.
inline Lattice coatom_chain_lattice(const std::vector<int>& segment_lengths,
                                    const std::vector<int>& intersection_depths) {
  if (segment_lengths.empty())
    throw InvalidFamily("need at least the spine segment length");
  if (intersection_depths.size() + 1 != segment_lengths.size())
    throw InvalidFamily("need exactly one depth per auxiliary chain");
  const int spine = segment_lengths[0];
  if (spine < 1) throw InvalidFamily("spine length must be >= 1");
  for (std::size_t i = 0; i < intersection_depths.size(); ++i) {
    if (segment_lengths[i + 1] < 1)
      throw InvalidFamily("auxiliary chain lengths must be >= 1");
    if (intersection_depths[i] < 0 || intersection_depths[i] >= spine)
      throw InvalidFamily("branch depth " +
                          std::to_string(intersection_depths[i]) +
                          " outside [0, spine)");
    for (std::size_t j = i + 1; j < intersection_depths.size(); ++j)
      if (intersection_depths[i] == intersection_depths[j])
        throw InvalidFamily(
            "branch depths must be pairwise distinct (chains must intersect "
            "the spine in different initial segments)");
  }

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rels;
  labels.push_back("0");
  std::vector<int> spine_idx(static_cast<std::size_t>(spine + 1), 0);
  for (int i = 1; i <= spine; ++i) {
    labels.push_back("s" + std::to_string(i));
    spine_idx[static_cast<std::size_t>(i)] = static_cast<int>(labels.size()) - 1;
    rels.emplace_back(spine_idx[static_cast<std::size_t>(i - 1)],
                      spine_idx[static_cast<std::size_t>(i)]);
  }
  std::vector<int> coatoms{spine_idx[static_cast<std::size_t>(spine)]};
  for (std::size_t b = 0; b < intersection_depths.size(); ++b) {
    int prev = spine_idx[static_cast<std::size_t>(intersection_depths[b])];
    for (int i = 1; i <= segment_lengths[b + 1]; ++i) {
      labels.push_back("b" + std::to_string(b + 1) + "_" + std::to_string(i));
      const int cur = static_cast<int>(labels.size()) - 1;
      rels.emplace_back(prev, cur);
      prev = cur;
    }
    coatoms.push_back(prev);
  }
  labels.push_back("1");
  const int top = static_cast<int>(labels.size()) - 1;
  for (int c : coatoms) rels.emplace_back(c, top);

  Lattice L = Lattice::build(std::move(labels), rels);

  // defining property of the family
  Mask coatom_mask = L.lower_covers(L.top());
  std::vector<Mask> chains;
  for_each_bit(coatom_mask, [&](int c) {
    const Mask down = L.down_set(c);
    for_each_bit(down, [&](int x) {
      for_each_bit(down, [&](int y) {
        if (x != y && L.incomparable(x, y))
          throw std::logic_error(
              "coatom_chain_lattice: interval below a coatom is not a chain");
      });
    });
    chains.push_back(down);
  });
  const Mask spine_chain = L.down_set(spine_idx[static_cast<std::size_t>(spine)]);
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j)
      if ((chains[i] & spine_chain) == (chains[j] & spine_chain))
        throw std::logic_error(
            "coatom_chain_lattice: two chains share their intersection with "
            "the spine");
  return L;
}

}  // namespace cycflat
