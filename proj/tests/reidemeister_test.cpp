#include <gtest/gtest.h>

#include "lensurg/bridge.hpp"
#include "lensurg/invariants.hpp"
#include "lensurg/reidemeister.hpp"
#include "support/random_walk.hpp"

using namespace lensurg;

using walk::Snapshot;

TEST(Reidemeister, InvariantsSurviveRandomSequences) {
  std::mt19937 rng(20240611);
  int applied = 0;
  for (const auto &seed : walk::seeds()) {
    ASSERT_LE(seed.crossing_count(), 12);
    const Snapshot want(seed);
    for (int run = 0; run < 100; ++run) {
      const auto [d, log] = walk::walk(seed, 5, rng);
      applied += static_cast<int>(log.size());
      ASSERT_TRUE(d.is_planar());
      ASSERT_EQ(Snapshot(d), want) << "after " << log.size() << " moves";
      ASSERT_EQ(replay(seed, log), d);
    }
  }
  EXPECT_GT(applied, 1000);
}

TEST(Reidemeister, R3IsAnInvolutionOnItsTriangle) {
  const auto d = schubert_diagram(LensParams(7, 2)).diagram;
  const auto moves = r3_moves(d);
  ASSERT_FALSE(moves.empty());
  for (const auto &m : moves) {
    const auto e = apply_move(d, m);
    EXPECT_EQ(e.crossing_count(), d.crossing_count());
    // Moving the triangle back restores the diagram up to relabelling.
    bool restored = false;
    for (const auto &back : r3_moves(e))
      restored = restored || apply_move(e, back).canonical_code() == d.canonical_code();
    EXPECT_TRUE(restored) << m.to_string();
  }
}

TEST(Reidemeister, AddThenRemove) {
  const auto d = PlanarDiagram::from_pd({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, 1);
  for (const auto &m : increasing_moves(d, true)) {
    const auto e = apply_move(d, m);
    EXPECT_EQ(e.crossing_count(), d.crossing_count() + (m.kind == MoveKind::R1Add ? 1 : 2));
    EXPECT_EQ(greedy_reduce(e).canonical_code(), d.canonical_code()) << m.to_string();
  }
}

TEST(Reidemeister, IllegalMovesAreRejected) {
  const auto d = PlanarDiagram::from_pd({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, 1);
  EXPECT_THROW(apply_move(d, {MoveKind::R1Remove, 0, -1, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, {MoveKind::R2Remove, 0, -1, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, {MoveKind::R1Add, 99, -1, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, {MoveKind::R2Add, 0, 0, 0}), std::invalid_argument);
}
