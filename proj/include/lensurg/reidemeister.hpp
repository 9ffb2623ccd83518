#pragma once

// Reidemeister moves on PlanarDiagram. Every move names its location by slot
// indices of the diagram it is applied to; application is deterministic, so
// a recorded sequence of moves replays exactly.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lensurg/diagram.hpp"

namespace lensurg {

enum class MoveKind : std::uint8_t { R1Remove, R2Remove, R3, R1Add, R2Add };

inline const char *to_string(MoveKind k) {
  switch (k) {
  case MoveKind::R1Remove: return "R1-";
  case MoveKind::R2Remove: return "R2-";
  case MoveKind::R3: return "R3";
  case MoveKind::R1Add: return "R1+";
  case MoveKind::R2Add: return "R2+";
  }
  return "?";
}

struct Move {
  MoveKind kind = MoveKind::R1Remove;
  int a = -1;      // primary slot
  int b = -1;      // second slot (R2Add only)
  int variant = 0; // R1Add: bit0 over, bit1 side; R2Add: 1 = first edge passes under

  bool operator==(const Move &) const = default;

  [[nodiscard]] std::string to_string() const {
    std::string s = lensurg::to_string(kind);
    s += '(' + std::to_string(a);
    if (b >= 0)
      s += ',' + std::to_string(b);
    if (kind == MoveKind::R1Add || kind == MoveKind::R2Add)
      s += ";v" + std::to_string(variant);
    return s + ')';
  }
};

namespace detail {

/// Deletes the crossings flagged in `drop`, joining each strand straight
/// through them. Closed strands that lived entirely on dropped crossings
/// become crossingless circles.
inline PlanarDiagram remove_passing_through(const PlanarDiagram &d, const std::vector<char> &drop) {
  const int n = d.crossing_count();
  std::vector<int> renum(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (int c = 0; c < n; ++c)
    if (!drop[static_cast<std::size_t>(c)])
      renum[static_cast<std::size_t>(c)] = kept++;

  auto dropped = [&](int s) { return drop[static_cast<std::size_t>(PlanarDiagram::crossing_of(s))] != 0; };
  auto newslot = [&](int s) {
    return 4 * renum[static_cast<std::size_t>(PlanarDiagram::crossing_of(s))] + PlanarDiagram::position(s);
  };

  std::vector<int> link(static_cast<std::size_t>(4 * kept), -1);
  std::vector<std::uint8_t> over(static_cast<std::size_t>(kept));
  std::vector<std::uint8_t> out(static_cast<std::size_t>(4 * kept));
  std::vector<char> visited(static_cast<std::size_t>(d.slot_count()), 0);
  for (int c = 0; c < n; ++c)
    if (!drop[static_cast<std::size_t>(c)])
      over[static_cast<std::size_t>(renum[static_cast<std::size_t>(c)])] = d.over_is_odd(c) ? 1 : 0;

  for (int s = 0; s < d.slot_count(); ++s) {
    if (dropped(s))
      continue;
    out[static_cast<std::size_t>(newslot(s))] = d.is_outgoing(s) ? 1 : 0;
    int t = d.partner(s);
    while (dropped(t)) {
      visited[static_cast<std::size_t>(t)] = 1;
      const int through = PlanarDiagram::opposite(t);
      visited[static_cast<std::size_t>(through)] = 1;
      t = d.partner(through);
    }
    link[static_cast<std::size_t>(newslot(s))] = newslot(t);
  }

  int loops = d.free_loops();
  for (int s = 0; s < d.slot_count(); ++s) {
    if (!dropped(s) || visited[static_cast<std::size_t>(s)])
      continue;
    int cur = s;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      const int t = d.partner(cur);
      visited[static_cast<std::size_t>(t)] = 1;
      cur = PlanarDiagram::opposite(t);
    } while (cur != s);
    ++loops;
  }
  return PlanarDiagram(std::move(link), std::move(over), std::move(out), loops);
}

struct Builder {
  std::vector<int> link;
  std::vector<std::uint8_t> over;
  std::vector<std::uint8_t> out;

  explicit Builder(const PlanarDiagram &d) : link(d.links()), over(d.over_flags()), out(d.orientation()) {}

  int add_crossing(bool over_odd) {
    const int c = static_cast<int>(over.size());
    over.push_back(over_odd ? 1 : 0);
    link.resize(link.size() + 4, -1);
    out.resize(out.size() + 4, 0);
    return c;
  }
  void join(int s, int t) {
    link[static_cast<std::size_t>(s)] = t;
    link[static_cast<std::size_t>(t)] = s;
  }
  void orient(int s, bool outgoing) { out[static_cast<std::size_t>(s)] = outgoing ? 1 : 0; }
  PlanarDiagram build(int loops) { return PlanarDiagram(std::move(link), std::move(over), std::move(out), loops); }
};

inline void require(bool ok, const Move &m, const char *why) {
  if (!ok)
    throw std::invalid_argument("invalid move " + m.to_string() + ": " + why);
}

inline bool valid_slot(const PlanarDiagram &d, int s) { return s >= 0 && s < d.slot_count(); }

/// Face containing leave-slot s, in order starting from s.
inline std::vector<int> face_of(const PlanarDiagram &d, int s) {
  std::vector<int> face;
  int cur = s;
  do {
    face.push_back(cur);
    cur = PlanarDiagram::prev_ccw(d.partner(cur));
  } while (cur != s);
  return face;
}

} // namespace detail

// Applicability tests. These are cheap and used both by the search and by
// certificate replay.

inline bool r1_removable(const PlanarDiagram &d, int s) {
  return detail::valid_slot(d, s) && d.partner(s) == PlanarDiagram::next_ccw(s);
}

inline bool r2_removable(const PlanarDiagram &d, int s) {
  if (!detail::valid_slot(d, s))
    return false;
  const int t = d.partner(s);
  const int s2 = PlanarDiagram::prev_ccw(t);
  if (PlanarDiagram::crossing_of(s) == PlanarDiagram::crossing_of(t))
    return false;
  if (PlanarDiagram::prev_ccw(d.partner(s2)) != s)
    return false;
  return d.is_over(s) == d.is_over(t);
}

inline bool r3_applicable(const PlanarDiagram &d, int s) {
  if (!detail::valid_slot(d, s))
    return false;
  const auto face = detail::face_of(d, s);
  if (face.size() != 3)
    return false;
  const int c0 = PlanarDiagram::crossing_of(face[0]);
  const int c1 = PlanarDiagram::crossing_of(face[1]);
  const int c2 = PlanarDiagram::crossing_of(face[2]);
  if (c0 == c1 || c1 == c2 || c0 == c2)
    return false;
  for (int f : face)
    if (d.is_over(f) == d.is_over(d.partner(f)))
      return true;
  return false;
}

inline PlanarDiagram apply_move(const PlanarDiagram &d, const Move &m) {
  using PD = PlanarDiagram;
  switch (m.kind) {
  case MoveKind::R1Remove: {
    detail::require(r1_removable(d, m.a), m, "slot is not a kink");
    std::vector<char> drop(static_cast<std::size_t>(d.crossing_count()), 0);
    drop[static_cast<std::size_t>(PD::crossing_of(m.a))] = 1;
    return detail::remove_passing_through(d, drop);
  }
  case MoveKind::R2Remove: {
    detail::require(r2_removable(d, m.a), m, "slot does not bound a removable bigon");
    std::vector<char> drop(static_cast<std::size_t>(d.crossing_count()), 0);
    drop[static_cast<std::size_t>(PD::crossing_of(m.a))] = 1;
    drop[static_cast<std::size_t>(PD::crossing_of(d.partner(m.a)))] = 1;
    return detail::remove_passing_through(d, drop);
  }
  case MoveKind::R3: {
    detail::require(r3_applicable(d, m.a), m, "slot does not bound a movable triangle");
    const auto f = detail::face_of(d, m.a);
    std::array<int, 3> g{};
    for (int i = 0; i < 3; ++i)
      g[static_cast<std::size_t>(i)] = d.partner(f[static_cast<std::size_t>(i)]);
    auto transfer = [&](int s) {
      for (int i = 0; i < 3; ++i) {
        if (s == PD::opposite(f[static_cast<std::size_t>(i)]))
          return g[static_cast<std::size_t>(i)];
        if (s == PD::opposite(g[static_cast<std::size_t>(i)]))
          return f[static_cast<std::size_t>(i)];
      }
      return s;
    };
    detail::Builder b(d);
    std::vector<std::pair<int, int>> joins;
    for (int i = 0; i < 3; ++i) {
      const int of = PD::opposite(f[static_cast<std::size_t>(i)]);
      const int og = PD::opposite(g[static_cast<std::size_t>(i)]);
      joins.emplace_back(of, og);
      joins.emplace_back(transfer(of), transfer(d.partner(of)));
      joins.emplace_back(transfer(og), transfer(d.partner(og)));
    }
    for (auto [x, y] : joins)
      b.join(x, y);
    return b.build(d.free_loops());
  }
  case MoveKind::R1Add: {
    detail::require(detail::valid_slot(d, m.a), m, "slot out of range");
    detail::require(m.variant >= 0 && m.variant < 4, m, "variant out of range");
    const int s = m.a;
    const int t = d.partner(s);
    const bool forward = d.is_outgoing(s); // strand runs s -> t
    detail::Builder b(d);
    const int k = b.add_crossing((m.variant & 1) != 0);
    const int k0 = PD::slot(k, 0), k1 = PD::slot(k, 1), k2 = PD::slot(k, 2), k3 = PD::slot(k, 3);
    // Path s -> k0 -> k2 -> loop -> kx -> ky -> t.
    const int loop_end = (m.variant & 2) ? k3 : k1;
    const int exit = (m.variant & 2) ? k1 : k3;
    b.join(s, k0);
    b.join(k2, loop_end);
    b.join(exit, t);
    b.orient(k0, !forward);
    b.orient(k2, forward);
    b.orient(loop_end, !forward);
    b.orient(exit, forward);
    return b.build(d.free_loops());
  }
  case MoveKind::R2Add: {
    detail::require(detail::valid_slot(d, m.a) && detail::valid_slot(d, m.b), m, "slot out of range");
    detail::require(m.a != m.b && m.b != d.partner(m.a), m, "edges must be distinct");
    const auto face = detail::face_of(d, m.a);
    detail::require(std::find(face.begin(), face.end(), m.b) != face.end(), m, "edges do not share a face");
    const int s1 = m.a, t1 = d.partner(s1), s2 = m.b, t2 = d.partner(s2);
    const bool fwd1 = d.is_outgoing(s1);
    const bool fwd2 = d.is_outgoing(s2);
    const bool first_over = (m.variant & 1) == 0;
    detail::Builder b(d);
    // The first edge uses slots {1,3} at both new crossings.
    const int x = b.add_crossing(first_over);
    const int y = b.add_crossing(first_over);
    const int x0 = PD::slot(x, 0), x1 = PD::slot(x, 1), x2 = PD::slot(x, 2), x3 = PD::slot(x, 3);
    const int y0 = PD::slot(y, 0), y1 = PD::slot(y, 1), y2 = PD::slot(y, 2), y3 = PD::slot(y, 3);
    b.join(s1, x3);
    b.join(x1, y1);
    b.join(y3, t1);
    b.join(s2, y0);
    b.join(y2, x0);
    b.join(x2, t2);
    b.orient(x3, !fwd1);
    b.orient(x1, fwd1);
    b.orient(y1, !fwd1);
    b.orient(y3, fwd1);
    b.orient(y0, !fwd2);
    b.orient(y2, fwd2);
    b.orient(x0, !fwd2);
    b.orient(x2, fwd2);
    return b.build(d.free_loops());
  }
  }
  throw std::invalid_argument("unknown move kind");
}

/// Replays a move sequence, validating every step.
inline PlanarDiagram replay(PlanarDiagram d, const std::vector<Move> &moves) {
  for (const auto &m : moves)
    d = apply_move(d, m);
  return d;
}

/// All crossing-reducing moves (R1 and R2 removals), lowest slot first.
inline std::vector<Move> reducing_moves(const PlanarDiagram &d) {
  std::vector<Move> out;
  for (int s = 0; s < d.slot_count(); ++s) {
    if (r1_removable(d, s))
      out.push_back({MoveKind::R1Remove, s, -1, 0});
    if (r2_removable(d, s))
      out.push_back({MoveKind::R2Remove, s, -1, 0});
  }
  return out;
}

/// One representative leave-slot per movable triangle.
inline std::vector<Move> r3_moves(const PlanarDiagram &d) {
  std::vector<Move> out;
  for (const auto &face : d.faces())
    if (face.size() == 3 && r3_applicable(d, face[0]))
      out.push_back({MoveKind::R3, face[0], -1, 0});
  return out;
}

/// Crossing-increasing moves: kinks on every edge and finger moves between
/// every pair of edges sharing a face.
inline std::vector<Move> increasing_moves(const PlanarDiagram &d, bool with_r1 = true) {
  std::vector<Move> out;
  if (with_r1)
    for (int s = 0; s < d.slot_count(); ++s)
      if (d.is_outgoing(s))
        for (int v = 0; v < 4; ++v)
          out.push_back({MoveKind::R1Add, s, -1, v});
  for (const auto &face : d.faces())
    for (std::size_t i = 0; i < face.size(); ++i)
      for (std::size_t j = i + 1; j < face.size(); ++j) {
        if (face[j] == d.partner(face[i]))
          continue;
        out.push_back({MoveKind::R2Add, face[i], face[j], 0});
        out.push_back({MoveKind::R2Add, face[i], face[j], 1});
      }
  return out;
}

/// Applies R1/R2 removals until none is left, appending them to `log`.
inline PlanarDiagram greedy_reduce(PlanarDiagram d, std::vector<Move> *log = nullptr) {
  for (;;) {
    bool progressed = false;
    for (int s = 0; s < d.slot_count() && !progressed; ++s) {
      Move m{};
      if (r1_removable(d, s))
        m = {MoveKind::R1Remove, s, -1, 0};
      else if (r2_removable(d, s))
        m = {MoveKind::R2Remove, s, -1, 0};
      else
        continue;
      d = apply_move(d, m);
      if (log)
        log->push_back(m);
      progressed = true;
    }
    if (!progressed)
      return d;
  }
}

} // namespace lensurg
