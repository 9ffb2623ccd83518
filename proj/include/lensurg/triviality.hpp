#pragma once

// Deciding whether a knot diagram is the unknot, one-sidedly: a Trivial
// answer carries a replayable Reidemeister certificate, a Nontrivial answer
// names an invariant that differs from the unknot's, and anything else is
// Unknown.

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "lensurg/diagram.hpp"
#include "lensurg/invariants.hpp"
#include "lensurg/reidemeister.hpp"

namespace lensurg {

struct Budget {
  std::size_t node_cap = 1'000'000; // distinct diagrams the search may visit
  int headroom = 2;                 // crossings allowed above the reduced start
  int jones_cap = 48;               // skip the Jones filter above this many crossings

  bool operator==(const Budget &) const = default;
};

enum class Triviality : std::uint8_t { Trivial, Nontrivial, Unknown };

inline const char *to_string(Triviality t) {
  switch (t) {
  case Triviality::Trivial: return "trivial";
  case Triviality::Nontrivial: return "nontrivial";
  case Triviality::Unknown: return "unknown";
  }
  return "?";
}

struct TrivialityVerdict {
  Triviality status = Triviality::Unknown;
  std::vector<Move> certificate; // Trivial: replays the input to a crossingless circle
  std::string witness;           // Nontrivial: "determinant", "alexander" or "jones"
  std::string witness_value;
  std::size_t nodes = 0;
  int reduced_crossings = 0;

  bool operator==(const TrivialityVerdict &) const = default;
};

/// True when the moves take `d` to the crossingless one-circle diagram.
inline bool check_certificate(const PlanarDiagram &d, const std::vector<Move> &moves) {
  try {
    const PlanarDiagram end = replay(d, moves);
    return end.crossing_count() == 0 && end.free_loops() == 1;
  } catch (const std::exception &) {
    return false;
  }
}

namespace detail {

inline std::uint64_t code_hash(const std::vector<int> &code) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int x : code) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

} // namespace detail

inline TrivialityVerdict is_trivial(const PlanarDiagram &d, const Budget &budget = {}) {
  if (d.component_count() != 1)
    throw std::invalid_argument("is_trivial expects a knot diagram, got " + std::to_string(d.component_count()) +
                                " components");
  TrivialityVerdict v;
  std::vector<Move> prefix;
  const PlanarDiagram start = greedy_reduce(d, &prefix);
  v.reduced_crossings = start.crossing_count();
  if (start.crossing_count() == 0) {
    v.status = Triviality::Trivial;
    v.certificate = std::move(prefix);
    return v;
  }

  if (const Int det = determinant(start); det != 1) {
    v.status = Triviality::Nontrivial;
    v.witness = "determinant";
    v.witness_value = std::to_string(det);
    return v;
  }
  if (const LaurentPoly a = alexander(start); a != LaurentPoly(1)) {
    v.status = Triviality::Nontrivial;
    v.witness = "alexander";
    v.witness_value = a.to_string();
    return v;
  }
  if (start.crossing_count() <= budget.jones_cap) {
    if (const LaurentPoly j = jones(start, {budget.jones_cap}); j != LaurentPoly(1)) {
      v.status = Triviality::Nontrivial;
      v.witness = "jones";
      v.witness_value = j.to_string();
      return v;
    }
  }

  // Best-first search on crossing count. Every node is greedily reduced, so
  // the frontier only holds diagrams without R1/R2 simplifications.
  struct Node {
    int parent;
    std::vector<Move> moves; // from the parent's diagram to this one
  };
  struct Open {
    int crossings;
    std::size_t seq;
    int node;
    PlanarDiagram diagram;
  };
  auto later = [](const Open &x, const Open &y) {
    return x.crossings != y.crossings ? x.crossings > y.crossings : x.seq > y.seq;
  };
  std::priority_queue<Open, std::vector<Open>, decltype(later)> open(later);
  std::vector<Node> nodes;
  std::unordered_set<std::uint64_t> seen;
  const int limit = start.crossing_count() + budget.headroom;

  nodes.push_back({-1, {}});
  seen.insert(detail::code_hash(start.canonical_code()));
  std::size_t seq = 0;
  open.push({start.crossing_count(), seq++, 0, start});

  auto certificate_for = [&](int node) {
    std::vector<std::vector<Move> const *> chain;
    for (int k = node; k >= 0; k = nodes[static_cast<std::size_t>(k)].parent)
      chain.push_back(&nodes[static_cast<std::size_t>(k)].moves);
    std::vector<Move> cert = prefix;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      cert.insert(cert.end(), (*it)->begin(), (*it)->end());
    return cert;
  };

  while (!open.empty()) {
    Open cur = open.top();
    open.pop();
    std::vector<Move> candidates = r3_moves(cur.diagram);
    if (cur.crossings + 1 <= limit) {
      const auto inc = increasing_moves(cur.diagram, true);
      for (const auto &m : inc)
        if (cur.crossings + (m.kind == MoveKind::R1Add ? 1 : 2) <= limit)
          candidates.push_back(m);
    }
    for (const auto &m : candidates) {
      std::vector<Move> step{m};
      PlanarDiagram next = greedy_reduce(apply_move(cur.diagram, m), &step);
      if (!seen.insert(detail::code_hash(next.canonical_code())).second)
        continue;
      nodes.push_back({cur.node, std::move(step)});
      const int id = static_cast<int>(nodes.size()) - 1;
      if (next.crossing_count() == 0) {
        v.certificate = certificate_for(id);
        if (!check_certificate(d, v.certificate))
          throw std::logic_error("is_trivial: certificate does not replay");
        v.status = Triviality::Trivial;
        v.nodes = seen.size();
        return v;
      }
      if (seen.size() >= budget.node_cap) {
        v.nodes = seen.size();
        return v;
      }
      open.push({next.crossing_count(), seq++, id, std::move(next)});
    }
  }
  v.nodes = seen.size();
  return v;
}

} // namespace lensurg
