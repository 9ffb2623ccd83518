#pragma once

// Planar knot/link diagrams on the 2-sphere.
//
// Crossing c owns slots 4c..4c+3 in counterclockwise order. Each slot is
// joined by an edge to exactly one other slot. One of the two strands through
// a crossing (slots {0,2} or {1,3}) is the over-strand, and every slot carries
// the orientation of the strand through it. Components without crossings are
// kept as a separate count so no circle is lost when crossings disappear.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lensurg {

using PdCrossing = std::array<int, 4>;

class PlanarDiagram {
public:
  PlanarDiagram() = default;

  /// Unlink of `loops` crossingless circles.
  static PlanarDiagram unlink(int loops) {
    if (loops < 0)
      throw std::invalid_argument("negative loop count");
    PlanarDiagram d;
    d.free_loops_ = loops;
    return d;
  }

  /// Raw construction. `link` has 4n entries, `over_odd[c]` says whether
  /// slots {1,3} of crossing c are the over-strand, `outgoing` has 4n flags.
  PlanarDiagram(std::vector<int> link, std::vector<std::uint8_t> over_odd,
                std::vector<std::uint8_t> outgoing, int free_loops)
      : link_(std::move(link)), over_odd_(std::move(over_odd)), out_(std::move(outgoing)),
        free_loops_(free_loops) {
    validate();
  }

  // Slot arithmetic.
  static constexpr int crossing_of(int s) noexcept { return s / 4; }
  static constexpr int position(int s) noexcept { return s % 4; }
  static constexpr int slot(int c, int pos) noexcept { return 4 * c + ((pos % 4) + 4) % 4; }
  static constexpr int opposite(int s) noexcept { return slot(s / 4, s % 4 + 2); }
  static constexpr int next_ccw(int s) noexcept { return slot(s / 4, s % 4 + 1); }
  static constexpr int prev_ccw(int s) noexcept { return slot(s / 4, s % 4 + 3); }

  [[nodiscard]] int crossing_count() const noexcept { return static_cast<int>(over_odd_.size()); }
  [[nodiscard]] int slot_count() const noexcept { return static_cast<int>(link_.size()); }
  [[nodiscard]] int free_loops() const noexcept { return free_loops_; }
  [[nodiscard]] int partner(int s) const { return link_.at(static_cast<std::size_t>(s)); }
  [[nodiscard]] bool is_over(int s) const {
    return (position(s) % 2 == 1) == static_cast<bool>(over_odd_.at(static_cast<std::size_t>(crossing_of(s))));
  }
  [[nodiscard]] bool is_outgoing(int s) const { return out_.at(static_cast<std::size_t>(s)) != 0; }
  [[nodiscard]] bool over_is_odd(int c) const { return over_odd_.at(static_cast<std::size_t>(c)) != 0; }

  [[nodiscard]] const std::vector<int> &links() const noexcept { return link_; }
  [[nodiscard]] const std::vector<std::uint8_t> &over_flags() const noexcept { return over_odd_; }
  [[nodiscard]] const std::vector<std::uint8_t> &orientation() const noexcept { return out_; }

  /// Checks the structural invariants; throws std::invalid_argument.
  void validate() const {
    const int n = static_cast<int>(over_odd_.size());
    if (static_cast<int>(link_.size()) != 4 * n || static_cast<int>(out_.size()) != 4 * n)
      throw std::invalid_argument("diagram arrays have inconsistent sizes");
    if (free_loops_ < 0)
      throw std::invalid_argument("negative free loop count");
    for (int s = 0; s < 4 * n; ++s) {
      const int t = link_[static_cast<std::size_t>(s)];
      if (t < 0 || t >= 4 * n || t == s || link_[static_cast<std::size_t>(t)] != s)
        throw std::invalid_argument("slot links do not form a perfect matching");
      if (out_[static_cast<std::size_t>(s)] == out_[static_cast<std::size_t>(t)])
        throw std::invalid_argument("edge orientation is inconsistent");
      if (out_[static_cast<std::size_t>(s)] == out_[static_cast<std::size_t>(opposite(s))])
        throw std::invalid_argument("strand orientation through a crossing is inconsistent");
    }
  }

  /// Number of closed strands, including crossingless circles.
  [[nodiscard]] int component_count() const { return static_cast<int>(components().size()) + free_loops_; }

  /// Each component with crossings as its cyclic list of outgoing slots, in
  /// traversal order, starting at its lowest outgoing slot.
  [[nodiscard]] std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(link_.size(), 0);
    for (int s = 0; s < slot_count(); ++s) {
      if (seen[static_cast<std::size_t>(s)] || !is_outgoing(s))
        continue;
      std::vector<int> comp;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        comp.push_back(cur);
        const int in = partner(cur);
        seen[static_cast<std::size_t>(cur)] = 1;
        seen[static_cast<std::size_t>(in)] = 1;
        cur = opposite(in);
      }
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  /// Faces as cyclic lists of the slots through which their boundary leaves a
  /// crossing (face on the left of each boundary edge).
  [[nodiscard]] std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(link_.size(), 0);
    for (int s = 0; s < slot_count(); ++s) {
      if (seen[static_cast<std::size_t>(s)])
        continue;
      std::vector<int> face;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        face.push_back(cur);
        cur = prev_ccw(partner(cur));
      }
      out.push_back(std::move(face));
    }
    return out;
  }

  /// Connected pieces of the crossing graph.
  [[nodiscard]] int connected_pieces() const {
    const int n = crossing_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int s = 0; s < slot_count(); ++s)
      parent[static_cast<std::size_t>(find(crossing_of(s)))] = find(crossing_of(partner(s)));
    int pieces = 0;
    for (int c = 0; c < n; ++c)
      pieces += find(c) == c;
    return pieces;
  }

  /// Euler characteristic check: every piece must be a sphere.
  [[nodiscard]] bool is_planar() const {
    const int n = crossing_count();
    if (n == 0)
      return true;
    const int f = static_cast<int>(faces().size());
    return n - 2 * n + f == 2 * connected_pieces();
  }

  /// +1 when the under-strand passes from right to left as seen along the
  /// over-strand.
  [[nodiscard]] int crossing_sign(int c) const {
    int under_in = -1;
    int over_out = -1;
    for (int k = 0; k < 4; ++k) {
      const int s = slot(c, k);
      if (!is_over(s) && !is_outgoing(s))
        under_in = s;
      if (is_over(s) && is_outgoing(s))
        over_out = s;
    }
    return over_out == next_ccw(under_in) ? 1 : -1;
  }

  [[nodiscard]] int writhe() const {
    int w = 0;
    for (int c = 0; c < crossing_count(); ++c)
      w += crossing_sign(c);
    return w;
  }

  /// PD code; edges labelled 1..2n component by component along orientation.
  [[nodiscard]] std::vector<PdCrossing> pd_code() const {
    auto under_in = [&](int c) {
      for (int k = 0; k < 4; ++k)
        if (!is_over(slot(c, k)) && !is_outgoing(slot(c, k)))
          return slot(c, k);
      return -1;
    };
    // Components are labelled in order of first appearance in the PD tuples,
    // each from the edge where it first appears, so the labels only depend on
    // what the tuples themselves show.
    std::vector<int> label(link_.size(), 0);
    int next = 1;
    for (int c = 0; c < crossing_count(); ++c)
      for (int k = 0; k < 4; ++k) {
        const int s = slot(c, position(under_in(c)) + k);
        if (label[static_cast<std::size_t>(s)] != 0)
          continue;
        const int first = is_outgoing(s) ? s : partner(s);
        int cur = first;
        do {
          label[static_cast<std::size_t>(cur)] = next;
          label[static_cast<std::size_t>(partner(cur))] = next;
          ++next;
          cur = opposite(partner(cur));
        } while (cur != first);
      }
    std::vector<PdCrossing> pd;
    pd.reserve(over_odd_.size());
    for (int c = 0; c < crossing_count(); ++c) {
      const int start = under_in(c);
      PdCrossing x{};
      for (int k = 0; k < 4; ++k)
        x[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(slot(c, position(start) + k))];
      pd.push_back(x);
    }
    return pd;
  }

  /// Builds a diagram from PD tuples (a = incoming under-edge, then
  /// counterclockwise). `components` is the declared total component count;
  /// the difference to the traced count becomes crossingless circles.
  static PlanarDiagram from_pd(const std::vector<PdCrossing> &pd, int components) {
    const int n = static_cast<int>(pd.size());
    std::vector<int> link(static_cast<std::size_t>(4 * n), -1);
    std::vector<std::vector<int>> where(static_cast<std::size_t>(2 * n + 1));
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < 4; ++k) {
        const int lab = pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        if (lab < 1 || lab > 2 * n)
          throw std::invalid_argument("PD label out of range: " + std::to_string(lab));
        where[static_cast<std::size_t>(lab)].push_back(slot(c, k));
      }
    for (int lab = 1; lab <= 2 * n; ++lab) {
      const auto &w = where[static_cast<std::size_t>(lab)];
      if (w.size() != 2)
        throw std::invalid_argument("PD label " + std::to_string(lab) + " does not appear exactly twice");
      link[static_cast<std::size_t>(w[0])] = w[1];
      link[static_cast<std::size_t>(w[1])] = w[0];
    }
    // Orientation: the under-strand runs a -> c. Propagate along strands and
    // edges; strands that never pass under fall back to label order.
    std::vector<int> out(static_cast<std::size_t>(4 * n), -1);
    std::vector<int> stack;
    auto assign = [&](int s, int v) {
      if (out[static_cast<std::size_t>(s)] == -1) {
        out[static_cast<std::size_t>(s)] = v;
        stack.push_back(s);
      } else if (out[static_cast<std::size_t>(s)] != v) {
        throw std::invalid_argument("PD orientation is inconsistent");
      }
    };
    auto drain = [&] {
      while (!stack.empty()) {
        const int s = stack.back();
        stack.pop_back();
        const int v = out[static_cast<std::size_t>(s)];
        assign(opposite(s), 1 - v);
        assign(link[static_cast<std::size_t>(s)], 1 - v);
      }
    };
    for (int c = 0; c < n; ++c) {
      assign(slot(c, 0), 0);
      assign(slot(c, 2), 1);
    }
    drain();
    for (int c = 0; c < n; ++c) {
      if (out[static_cast<std::size_t>(slot(c, 1))] != -1)
        continue;
      const int b = pd[static_cast<std::size_t>(c)][1];
      const int d = pd[static_cast<std::size_t>(c)][3];
      const bool b_out = (b - d == 1) || (d - b > 1);
      assign(slot(c, 1), b_out ? 1 : 0);
      drain();
    }
    std::vector<std::uint8_t> over(static_cast<std::size_t>(n), 1);
    std::vector<std::uint8_t> outgoing(out.begin(), out.end());
    PlanarDiagram probe(link, over, outgoing, 0);
    const int traced = static_cast<int>(probe.components().size());
    if (components < traced)
      throw std::invalid_argument("declared component count " + std::to_string(components) +
                                  " is below the traced count " + std::to_string(traced));
    probe.free_loops_ = components - traced;
    return probe;
  }

  /// `PD arcs=<n> components=<k>` header followed by one `X[a,b,c,d]` per line.
  [[nodiscard]] std::string to_pd_text() const {
    std::ostringstream os;
    os << "PD arcs=" << 2 * crossing_count() << " components=" << component_count() << '\n';
    for (const auto &x : pd_code())
      os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "]\n";
    return os.str();
  }

  static PlanarDiagram from_pd_text(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    int arcs = -1;
    int comps = -1;
    std::vector<PdCrossing> pd;
    while (std::getline(is, line)) {
      line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch) && ch != ' '; }),
                 line.end());
      if (line.empty() || line.find_first_not_of(' ') == std::string::npos)
        continue;
      if (line.rfind("PD", 0) == 0) {
        if (std::sscanf(line.c_str(), "PD arcs=%d components=%d", &arcs, &comps) != 2)
          throw std::invalid_argument("malformed PD header: " + line);
        continue;
      }
      PdCrossing x{};
      char close = 0;
      if (std::sscanf(line.c_str(), " X[%d,%d,%d,%d%c", &x[0], &x[1], &x[2], &x[3], &close) != 5 || close != ']')
        throw std::invalid_argument("malformed PD crossing line: " + line);
      pd.push_back(x);
    }
    if (arcs < 0 || comps < 0)
      throw std::invalid_argument("missing PD header");
    if (arcs != 2 * static_cast<int>(pd.size()))
      throw std::invalid_argument("PD header arc count does not match the crossing lines");
    if (comps < 1)
      throw std::invalid_argument("PD header must declare at least one component");
    return from_pd(pd, comps);
  }

  /// Signed Gauss word read from slot `start` without regard to orientation:
  /// per passage, (first-visit index, over flag, sign). Only meaningful for
  /// single-component diagrams.
  [[nodiscard]] std::vector<int> gauss_word_from(int start) const {
    std::vector<int> first(over_odd_.size(), -1);
    std::vector<int> word;
    word.reserve(link_.size() / 2);
    int next_index = 0;
    int cur = start;
    do {
      const int arrive = partner(cur);
      const int c = crossing_of(arrive);
      if (first[static_cast<std::size_t>(c)] < 0)
        first[static_cast<std::size_t>(c)] = next_index++;
      word.push_back(first[static_cast<std::size_t>(c)] * 4 + (is_over(arrive) ? 2 : 0) +
                     (crossing_sign(c) > 0 ? 1 : 0));
      cur = opposite(arrive);
    } while (cur != start);
    return word;
  }

  /// Canonical code: the lexicographically smallest signed Gauss word over
  /// all starting edges and both directions. Single-component diagrams only.
  [[nodiscard]] std::vector<int> canonical_code() const {
    if (crossing_count() == 0)
      return {-1, free_loops_};
    if (component_count() != 1)
      throw std::invalid_argument("canonical_code requires a single-component diagram");
    std::vector<int> best;
    for (int s = 0; s < slot_count(); ++s) {
      auto w = gauss_word_from(s);
      if (best.empty() || w < best)
        best = std::move(w);
    }
    return best;
  }

  bool operator==(const PlanarDiagram &) const = default;

private:
  std::vector<int> link_;
  std::vector<std::uint8_t> over_odd_;
  std::vector<std::uint8_t> out_;
  int free_loops_ = 0;
};

/// Number of closed strands in the diagram.
inline int component_count(const PlanarDiagram &d) { return d.component_count(); }

} // namespace lensurg
