#pragma once

// Link invariants with exact integer arithmetic: the determinant from a
// Goeritz matrix, the Alexander polynomial from the Wirtinger presentation,
// and the Jones polynomial from the Kauffman bracket.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lensurg/diagram.hpp"
#include "lensurg/laurent.hpp"

namespace lensurg {

namespace detail {

/// Determinant of a square integer matrix by fraction-free elimination.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked::sub(checked::mul(m[k][k], m[i][j]), checked::mul(m[i][k], m[k][j]));
        m[i][j] = num / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return checked::mul(sign, m[n - 1][n - 1]);
}

inline LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return LaurentPoly(1);
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace detail

/// |det| of the Goeritz matrix of a checkerboard colouring. Split diagrams
/// and crossingless unlinks with more than one circle give 0.
inline Int determinant(const PlanarDiagram &d) {
  if (d.crossing_count() == 0)
    return d.free_loops() == 1 ? 1 : 0;
  if (d.free_loops() > 0 || d.connected_pieces() > 1)
    return 0;
  if (!d.is_planar())
    throw std::invalid_argument("determinant: diagram is not planar");

  const auto faces = d.faces();
  std::vector<int> face_of_slot(static_cast<std::size_t>(d.slot_count()), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int s : faces[f])
      face_of_slot[static_cast<std::size_t>(s)] = static_cast<int>(f);

  // Two-colour the faces: the faces on the two sides of an edge differ.
  std::vector<int> colour(faces.size(), -1);
  std::vector<int> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int s : faces[static_cast<std::size_t>(f)]) {
      // Across the edge leaving s lies the face left of the reverse edge.
      const int g = face_of_slot[static_cast<std::size_t>(d.partner(s))];
      if (colour[static_cast<std::size_t>(g)] == -1) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        stack.push_back(g);
      } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
        throw std::invalid_argument("determinant: faces are not two-colourable");
      }
    }
  }

  std::vector<int> shaded_index(faces.size(), -1);
  int m = 0;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (colour[f] == 1)
      shaded_index[f] = m++;
  std::vector<std::vector<Int>> g(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));

  for (int c = 0; c < d.crossing_count(); ++c) {
    const int o = d.is_over(PlanarDiagram::slot(c, 0)) ? 0 : 1;
    // The face left of leave-slot k holds the corner between k and k+1.
    const int corner_o = face_of_slot[static_cast<std::size_t>(PlanarDiagram::slot(c, o))];
    const int eta = colour[static_cast<std::size_t>(corner_o)] == 1 ? 1 : -1;
    const int first = eta == 1 ? o : o + 1;
    const int fi = shaded_index[static_cast<std::size_t>(face_of_slot[static_cast<std::size_t>(PlanarDiagram::slot(c, first))])];
    const int fj = shaded_index[static_cast<std::size_t>(face_of_slot[static_cast<std::size_t>(PlanarDiagram::slot(c, first + 2))])];
    if (fi == fj)
      continue;
    auto &gi = g[static_cast<std::size_t>(fi)];
    auto &gj = g[static_cast<std::size_t>(fj)];
    gi[static_cast<std::size_t>(fj)] -= eta;
    gj[static_cast<std::size_t>(fi)] -= eta;
    gi[static_cast<std::size_t>(fi)] += eta;
    gj[static_cast<std::size_t>(fj)] += eta;
  }
  if (m <= 1)
    return 1;
  g.pop_back();
  for (auto &row : g)
    row.pop_back();
  const Int det = detail::bareiss_determinant(std::move(g));
  return det < 0 ? -det : det;
}

/// Alexander polynomial of a knot, normalized with unit_normalized().
inline LaurentPoly alexander(const PlanarDiagram &d) {
  if (d.component_count() != 1)
    throw std::invalid_argument("alexander requires a single-component diagram");
  const int n = d.crossing_count();
  if (n == 0)
    return LaurentPoly(1);

  // Arcs: edges joined through over-passes. An edge is named by its
  // outgoing slot.
  std::vector<int> parent(static_cast<std::size_t>(d.slot_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto edge = [&](int s) { return d.is_outgoing(s) ? s : d.partner(s); };
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 2; ++k) {
      const int s = PlanarDiagram::slot(c, k);
      if (d.is_over(s))
        parent[static_cast<std::size_t>(find(edge(s)))] = find(edge(PlanarDiagram::opposite(s)));
    }
  std::map<int, int> arc_index;
  for (int s = 0; s < d.slot_count(); ++s)
    if (d.is_outgoing(s))
      arc_index.emplace(find(s), 0);
  int next = 0;
  for (auto &[root, idx] : arc_index)
    idx = next++;
  if (next != n)
    throw std::logic_error("alexander: arc count differs from crossing count");

  const LaurentPoly t = LaurentPoly::monomial(1);
  const LaurentPoly one(1);
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    int under_in = -1, under_out = -1, over_slot = -1;
    for (int k = 0; k < 4; ++k) {
      const int s = PlanarDiagram::slot(c, k);
      if (d.is_over(s))
        over_slot = s;
      else if (d.is_outgoing(s))
        under_out = s;
      else
        under_in = s;
    }
    const int a = arc_index.at(find(edge(under_in)));
    const int b = arc_index.at(find(edge(under_out)));
    const int k = arc_index.at(find(edge(over_slot)));
    auto &row = m[static_cast<std::size_t>(c)];
    const bool positive = d.crossing_sign(c) > 0;
    row[static_cast<std::size_t>(a)] += positive ? t : -one;
    row[static_cast<std::size_t>(b)] += positive ? -one : t;
    row[static_cast<std::size_t>(k)] += one - t;
  }
  m.pop_back();
  for (auto &row : m)
    row.pop_back();
  return detail::bareiss_determinant(std::move(m)).unit_normalized();
}

struct JonesOptions {
  int crossing_cap = 48;
};

/// Kauffman bracket <D> in the variable A, with <O> = 1.
inline LaurentPoly kauffman_bracket(const PlanarDiagram &d) {
  const int n = d.crossing_count();
  const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  LaurentPoly loops_factor(1);
  for (int i = 1; i < d.free_loops() + (n == 0 ? 0 : 1); ++i)
    loops_factor *= delta;
  if (n == 0)
    return d.free_loops() == 0 ? LaurentPoly(1) : loops_factor;

  // Crossings are absorbed one at a time; a state is the matching that the
  // absorbed region induces on its open slots (sorted), mate[i] = partner
  // position, and the value counts closed loops with powers of delta.
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> touching(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int c = 0; c < n; ++c)
      if (!done[static_cast<std::size_t>(c)] && (best < 0 || touching[static_cast<std::size_t>(c)] > touching[static_cast<std::size_t>(best)]))
        best = c;
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int k = 0; k < 4; ++k)
      ++touching[static_cast<std::size_t>(PlanarDiagram::crossing_of(d.partner(PlanarDiagram::slot(best, k))))];
  }

  std::fill(done.begin(), done.end(), 0);
  std::map<std::vector<int>, LaurentPoly> states;
  std::vector<int> open; // sorted open slots
  states.emplace(std::vector<int>{}, LaurentPoly(1));

  for (int c : order) {
    done[static_cast<std::size_t>(c)] = 1;
    const int o = d.is_over(PlanarDiagram::slot(c, 0)) ? 0 : 1;
    // A-smoothing joins {o+1,o+2},{o+3,o}; B-smoothing joins {o,o+1},{o+2,o+3}.
    const std::array<std::array<int, 4>, 2> smoothings{{
        {PlanarDiagram::slot(c, o + 1), PlanarDiagram::slot(c, o + 2), PlanarDiagram::slot(c, o + 3), PlanarDiagram::slot(c, o)},
        {PlanarDiagram::slot(c, o), PlanarDiagram::slot(c, o + 1), PlanarDiagram::slot(c, o + 2), PlanarDiagram::slot(c, o + 3)},
    }};
    const std::array<LaurentPoly, 2> weights{LaurentPoly::monomial(1), LaurentPoly::monomial(-1)};

    std::vector<int> next_open;
    for (int s : open)
      if (PlanarDiagram::crossing_of(d.partner(s)) != c)
        next_open.push_back(s);
    for (int k = 0; k < 4; ++k) {
      const int s = PlanarDiagram::slot(c, k);
      const int t = d.partner(s);
      if (!done[static_cast<std::size_t>(PlanarDiagram::crossing_of(t))])
        next_open.push_back(s);
    }
    std::sort(next_open.begin(), next_open.end());

    std::map<int, int> old_pos;
    for (std::size_t i = 0; i < open.size(); ++i)
      old_pos[open[i]] = static_cast<int>(i);

    std::map<std::vector<int>, LaurentPoly> next_states;
    for (const auto &[mate, value] : states) {
      for (int which = 0; which < 2; ++which) {
        const auto &sm = smoothings[static_cast<std::size_t>(which)];
        // Local adjacency: old matching, smoothing pairs, and edges between
        // this crossing's slots and open slots (or among its own slots).
        std::map<int, std::vector<int>> adj;
        auto connect = [&](int x, int y) {
          adj[x].push_back(y);
          adj[y].push_back(x);
        };
        for (std::size_t i = 0; i < open.size(); ++i)
          if (static_cast<int>(i) < mate[i])
            connect(open[i], open[static_cast<std::size_t>(mate[i])]);
        connect(sm[0], sm[1]);
        connect(sm[2], sm[3]);
        for (int k = 0; k < 4; ++k) {
          const int s = PlanarDiagram::slot(c, k);
          const int t = d.partner(s);
          if (PlanarDiagram::crossing_of(t) == c) {
            if (s < t)
              connect(s, t);
          } else if (old_pos.count(t)) {
            connect(s, t);
          }
        }
        // Endpoints of paths are the next open slots; the rest close up.
        std::vector<int> next_mate(next_open.size(), -1);
        std::map<int, int> next_pos;
        for (std::size_t i = 0; i < next_open.size(); ++i)
          next_pos[next_open[i]] = static_cast<int>(i);
        std::map<int, char> visited;
        for (std::size_t i = 0; i < next_open.size(); ++i) {
          if (next_mate[i] >= 0)
            continue;
          int prev = -1;
          int cur = next_open[i];
          visited[cur] = 1;
          for (;;) {
            const auto &nb = adj[cur];
            int nxt = -1;
            for (int x : nb)
              if (x != prev && !visited[x]) {
                nxt = x;
                break;
              }
            if (nxt < 0)
              break;
            prev = cur;
            cur = nxt;
            visited[cur] = 1;
          }
          const int j = next_pos.at(cur);
          next_mate[i] = j;
          next_mate[static_cast<std::size_t>(j)] = static_cast<int>(i);
        }
        int closed = 0;
        for (const auto &[node, nb] : adj) {
          if (visited[node])
            continue;
          ++closed;
          int prev = -1;
          int cur = node;
          visited[cur] = 1;
          for (;;) {
            int nxt = -1;
            for (int x : adj[cur])
              if (x != prev && !visited[x]) {
                nxt = x;
                break;
              }
            if (nxt < 0)
              break;
            prev = cur;
            cur = nxt;
            visited[cur] = 1;
          }
        }
        LaurentPoly term = value * weights[static_cast<std::size_t>(which)];
        for (int i = 0; i < closed; ++i)
          term *= delta;
        next_states[next_mate] += term;
      }
    }
    open = std::move(next_open);
    states = std::move(next_states);
  }
  // All loops are closed; the first one stands for the normalizing circle.
  LaurentPoly total = states.at(std::vector<int>{});
  return total.exact_div(delta) * loops_factor;
}

/// Jones polynomial in the variable t^(1/2): exponent e stands for t^(e/2).
/// Knots only produce even exponents. The unknot maps to 1.
inline LaurentPoly jones(const PlanarDiagram &d, const JonesOptions &opts = {}) {
  if (d.crossing_count() > opts.crossing_cap)
    throw std::length_error("jones: " + std::to_string(d.crossing_count()) + " crossings exceed the cap of " +
                            std::to_string(opts.crossing_cap));
  const LaurentPoly bracket = kauffman_bracket(d);
  const int w = d.writhe();
  // (-A^3)^(-w) <D>, then A = t^(-1/4), i.e. A^k -> (t^(1/2))^(-k/2).
  LaurentPoly f = bracket.shifted(-3 * w);
  if (w % 2 != 0)
    f = -f;
  LaurentPoly out;
  for (const auto &[e, c] : f.terms()) {
    if (e % 2 != 0)
      throw std::logic_error("jones: odd power of A after writhe correction");
    out.add_term(-e / 2, c);
  }
  return out;
}

} // namespace lensurg
