#pragma once

// Schubert diagrams of two-bridge links and the wedge modification.
//
// The bridge sphere is the pillowcase R^2 / <(x,y) -> (-x,-y), Z^2>, with
// corners at the half-lattice points. The two over-bridges run along the
// horizontal edges y = 0 and y = 1/2; the two under-bridges are the images of
// the lines of direction (q, p) through the corners. Crossings are the
// interior intersections of the two families, 2(p-1) in total. Walking along
// the bottom over-bridge from the corner (0,0), the k-th crossing sits at
// x = k/(2p); the pair of intersection points of the Heegaard meridians that
// it covers is u = k apart, so it carries the dual knot K(L(p,q); k).
//
// Coordinates are scaled by 2p so every point of interest is an integer.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lensurg/diagram.hpp"
#include "lensurg/lens.hpp"
#include "lensurg/residue.hpp"

namespace lensurg {

/// Replacement applied inside the wedge.
enum class Modification {
  /// New crossing with the same handedness as the site crossing (a clasp).
  CrossingPositive,
  /// New crossing with the opposite handedness; it cancels the site crossing.
  CrossingNegative,
  /// The two strands are cut and reconnected across the wedge.
  Smoothing,
};

inline const char *to_string(Modification m) {
  switch (m) {
  case Modification::CrossingPositive: return "crossing+";
  case Modification::CrossingNegative: return "crossing-";
  case Modification::Smoothing: return "smoothing";
  }
  return "?";
}

inline Modification parse_modification(const std::string &s) {
  if (s == "crossing+" || s == "crossing-positive" || s == "positive")
    return Modification::CrossingPositive;
  if (s == "crossing-" || s == "crossing-negative" || s == "negative")
    return Modification::CrossingNegative;
  if (s == "smoothing")
    return Modification::Smoothing;
  throw std::invalid_argument("unknown modification mode: " + s);
}

inline constexpr std::array<Modification, 3> kAllModifications{
    Modification::Smoothing, Modification::CrossingNegative, Modification::CrossingPositive};

/// Frozen wedge conventions. The wedge at the u-th crossing of the bottom
/// bridge is the corner between its leftward over-slot and its downward
/// under-slot.
inline constexpr const char *kCalibrationId = "bottom-bridge:k=u:corner(-h,-s):crossing-=cancelling";

struct SchubertDiagram {
  LensParams params;
  PlanarDiagram diagram;
  /// bottom_crossings[k-1] is the k-th crossing met along the bottom bridge.
  std::vector<int> bottom_crossings;
};

namespace detail {

struct PillowPoint {
  std::pair<Int, Int> key;
  int sign; // +1 if the key is the point itself mod 2p, -1 if its negation
};

inline PillowPoint pillow_canonical(Int x, Int y, Int p) {
  const Int m = 2 * p;
  std::pair<Int, Int> a{checked::mod(x, m), checked::mod(y, m)};
  std::pair<Int, Int> b{checked::mod(-x, m), checked::mod(-y, m)};
  return a <= b ? PillowPoint{a, 1} : PillowPoint{b, -1};
}

/// Picks, per component, the orientation that keeps the lowest slot's flag.
inline PlanarDiagram reorient(std::vector<int> link, std::vector<std::uint8_t> over,
                              const std::vector<std::uint8_t> &hint, int loops) {
  const std::size_t slots = link.size();
  std::vector<std::uint8_t> out(slots, 0);
  std::vector<char> seen(slots, 0);
  for (std::size_t s0 = 0; s0 < slots; ++s0) {
    if (seen[s0])
      continue;
    int cur = static_cast<int>(s0);
    if (!hint[s0])
      cur = PlanarDiagram::opposite(cur); // leave through the other end of the strand
    const int start = cur;
    do {
      const int in = link[static_cast<std::size_t>(cur)];
      out[static_cast<std::size_t>(cur)] = 1;
      out[static_cast<std::size_t>(in)] = 0;
      seen[static_cast<std::size_t>(cur)] = seen[static_cast<std::size_t>(in)] = 1;
      cur = PlanarDiagram::opposite(in);
    } while (cur != start);
  }
  return PlanarDiagram(std::move(link), std::move(over), std::move(out), loops);
}

} // namespace detail

/// Schubert diagram of b(p, q); requires the canonical representative.
inline SchubertDiagram schubert_diagram(const LensParams &params) {
  if (canonical_form(params) != params)
    throw std::invalid_argument("schubert_diagram requires canonical (p,q) with q <= p/2");
  const Int p = params.p();
  const Int q = params.q();

  struct Passage {
    std::pair<Int, Int> key;
    int in;
    int out;
  };
  std::vector<std::vector<Passage>> comps;
  std::vector<std::pair<Int, Int>> used_corners;
  const std::array<std::pair<Int, Int>, 4> corners{{{0, 0}, {p, 0}, {0, p}, {p, p}}};
  auto corner_key = [&](std::pair<Int, Int> c) { return detail::pillow_canonical(c.first, c.second, p).key; };

  for (const auto &c0 : corners) {
    if (std::find(used_corners.begin(), used_corners.end(), corner_key(c0)) != used_corners.end())
      continue;
    std::vector<Passage> comp;
    std::pair<Int, Int> cur = c0;
    bool horizontal = true;
    for (;;) {
      used_corners.push_back(corner_key(cur));
      const Int dx = horizontal ? 1 : q;
      const Int dy = horizontal ? 0 : p;
      for (Int k = 1; k < p; ++k) {
        const auto pt = detail::pillow_canonical(cur.first + k * dx, cur.second + k * dy, p);
        int out;
        if (horizontal)
          out = pt.sign > 0 ? 0 : 2;
        else
          out = pt.sign > 0 ? 1 : 3;
        comp.push_back({pt.key, (out + 2) % 4, out});
      }
      cur = {cur.first + p * dx, cur.second + p * dy};
      horizontal = !horizontal;
      if (horizontal && corner_key(cur) == corner_key(c0))
        break;
    }
    comps.push_back(std::move(comp));
  }

  std::map<std::pair<Int, Int>, int> index;
  for (const auto &comp : comps)
    for (const auto &ps : comp)
      index.emplace(ps.key, 0);
  int next = 0;
  for (auto &[key, idx] : index)
    idx = next++;

  const int n = next;
  std::vector<int> link(static_cast<std::size_t>(4 * n), -1);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(4 * n), 0);
  std::vector<std::uint8_t> over(static_cast<std::size_t>(n), 0); // horizontal slots {0,2} pass over
  for (const auto &comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto &a = comp[i];
      const auto &b = comp[(i + 1) % comp.size()];
      const int sa = PlanarDiagram::slot(index.at(a.key), a.out);
      const int sb = PlanarDiagram::slot(index.at(b.key), b.in);
      link[static_cast<std::size_t>(sa)] = sb;
      link[static_cast<std::size_t>(sb)] = sa;
      out[static_cast<std::size_t>(sa)] = 1;
    }
  }

  std::vector<int> bottom;
  for (Int k = 1; k < p; ++k)
    bottom.push_back(index.at(detail::pillow_canonical(k, 0, p).key));
  return {params, PlanarDiagram(std::move(link), std::move(over), std::move(out), 0), std::move(bottom)};
}

/// The wedge where the dual arc of K(L(p,q); u) meets the diagram.
struct WedgeSite {
  Int u = 0;
  int crossing = -1;
  int first_slot = -1;  // the wedge lies between first_slot and its ccw successor
  int outer_first = -1; // partners of the two wedge slots when the site was taken
  int outer_second = -1;

  bool operator==(const WedgeSite &) const = default;
};

namespace detail {
inline WedgeSite make_site(const SchubertDiagram &sd, Int u) {
  WedgeSite w;
  w.u = u;
  w.crossing = sd.bottom_crossings.at(static_cast<std::size_t>(u - 1));
  w.first_slot = PlanarDiagram::slot(w.crossing, 2);
  w.outer_first = sd.diagram.partner(w.first_slot);
  w.outer_second = sd.diagram.partner(PlanarDiagram::next_ccw(w.first_slot));
  return w;
}
} // namespace detail

/// Wedge for 1 <= u <= p/2.
inline WedgeSite wedge_site(const SchubertDiagram &sd, Int u) {
  if (u < 1 || 2 * u > sd.params.p())
    throw std::out_of_range("wedge index u must lie in [1, p/2], got " + std::to_string(u));
  return detail::make_site(sd, u);
}

/// Same as wedge_site but accepts 1 <= u <= p-1, for checking the u <-> p-u
/// symmetry.
inline WedgeSite wedge_site_extended(const SchubertDiagram &sd, Int u) {
  if (u < 1 || u > sd.params.p() - 1)
    throw std::out_of_range("wedge index u must lie in [1, p-1], got " + std::to_string(u));
  return detail::make_site(sd, u);
}

inline PlanarDiagram modify(const PlanarDiagram &d, const WedgeSite &site, Modification mode) {
  if (site.crossing < 0 || site.crossing >= d.crossing_count() ||
      PlanarDiagram::crossing_of(site.first_slot) != site.crossing)
    throw std::invalid_argument("wedge site does not belong to this diagram");
  const int a = site.first_slot;
  const int b = PlanarDiagram::next_ccw(a);
  const int ea = d.partner(a);
  const int eb = d.partner(b);
  if (ea != site.outer_first || eb != site.outer_second || ea == b)
    throw std::invalid_argument("wedge site does not belong to this diagram");

  std::vector<int> link = d.links();
  std::vector<std::uint8_t> over = d.over_flags();
  auto join = [&](int x, int y) {
    link[static_cast<std::size_t>(x)] = y;
    link[static_cast<std::size_t>(y)] = x;
  };
  std::vector<std::uint8_t> hint = d.orientation();

  if (mode == Modification::Smoothing) {
    join(a, b);
    join(ea, eb);
    return detail::reorient(std::move(link), std::move(over), hint, d.free_loops());
  }

  // Insert crossing y just outside the wedge: the strand leaving through `a`
  // enters y at slot 3 and leaves at slot 1 towards eb; the strand leaving
  // through `b` enters at slot 2 and leaves at slot 0 towards ea.
  const int y = d.crossing_count();
  link.resize(link.size() + 4, -1);
  hint.resize(hint.size() + 4, 0);
  hint[static_cast<std::size_t>(PlanarDiagram::slot(y, 1))] = 1;
  const bool a_over_at_site = d.is_over(a);
  // Same strand over at both crossings makes a cancelling bigon.
  const bool a_over_at_new = (mode == Modification::CrossingNegative) ? a_over_at_site : !a_over_at_site;
  over.push_back(a_over_at_new ? 1 : 0);
  join(PlanarDiagram::slot(y, 3), a);
  join(PlanarDiagram::slot(y, 2), b);
  join(PlanarDiagram::slot(y, 0), ea);
  join(PlanarDiagram::slot(y, 1), eb);
  return detail::reorient(std::move(link), std::move(over), hint, d.free_loops());
}

} // namespace lensurg
