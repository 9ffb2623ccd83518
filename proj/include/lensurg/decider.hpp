#pragma once

// The decision procedure: filter every u by the residue criterion, modify the
// Schubert diagram at the surviving wedges and ask the unknot detector about
// each resulting knot.

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lensurg/bridge.hpp"
#include "lensurg/lens.hpp"
#include "lensurg/residue.hpp"
#include "lensurg/triviality.hpp"

namespace lensurg {

enum class Obtainable : std::uint8_t { Yes, No, Inconclusive };

inline const char *to_string(Obtainable o) {
  switch (o) {
  case Obtainable::Yes: return "yes";
  case Obtainable::No: return "no";
  case Obtainable::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ModeOutcome {
  Modification mode = Modification::Smoothing;
  int components = 0;
  std::optional<TrivialityVerdict> verdict; // absent for links

  bool is_knot() const { return components == 1; }
  bool operator==(const ModeOutcome &) const = default;
};

struct UReport {
  Int u = 0;
  CriterionResult criterion;
  std::vector<ModeOutcome> modes;     // empty when the criterion rejects u
  std::optional<Triviality> verdict;  // absent when the criterion rejects u

  /// The first mode whose knot is certified trivial.
  const ModeOutcome *trivial_mode() const {
    for (const auto &m : modes)
      if (m.verdict && m.verdict->status == Triviality::Trivial)
        return &m;
    return nullptr;
  }

  bool operator==(const UReport &) const = default;
};

struct DecisionReport {
  LensParams input{2, 1};
  LensParams params{2, 1}; // canonical
  std::vector<UReport> per_u;
  Obtainable obtainable = Obtainable::No;
  std::vector<Int> witnesses;
  std::vector<Int> unknown;
  Budget budget;
  std::string calibration_id = kCalibrationId;

  bool operator==(const DecisionReport &) const = default;
};

inline void validate(const Budget &b) {
  if (b.node_cap == 0)
    throw std::invalid_argument("budget: node cap must be positive");
  if (b.headroom < 0 || b.headroom > 8)
    throw std::invalid_argument("budget: headroom must lie in [0, 8]");
  if (b.jones_cap < 0 || b.jones_cap > 64)
    throw std::invalid_argument("budget: jones cap must lie in [0, 64]");
}

/// Diagram stage for one u that passed the filter.
inline UReport examine_wedge(const SchubertDiagram &sd, const CriterionResult &cr, const Budget &budget) {
  UReport r;
  r.u = cr.u;
  r.criterion = cr;
  const WedgeSite site = wedge_site(sd, cr.u);
  bool any_knot = false, all_nontrivial = true, trivial = false;
  for (Modification mode : kAllModifications) {
    ModeOutcome mo;
    mo.mode = mode;
    const PlanarDiagram d = modify(sd.diagram, site, mode);
    mo.components = d.component_count();
    if (mo.is_knot()) {
      any_knot = true;
      mo.verdict = is_trivial(d, budget);
      trivial = trivial || mo.verdict->status == Triviality::Trivial;
      all_nontrivial = all_nontrivial && mo.verdict->status == Triviality::Nontrivial;
    }
    r.modes.push_back(std::move(mo));
  }
  if (trivial)
    r.verdict = Triviality::Trivial;
  else if (any_knot && all_nontrivial)
    r.verdict = Triviality::Nontrivial;
  else
    r.verdict = Triviality::Unknown;
  return r;
}

/// Recomputes obtainable, witnesses and unknown from per_u.
inline void aggregate(DecisionReport &rep) {
  std::sort(rep.per_u.begin(), rep.per_u.end(), [](const UReport &a, const UReport &b) { return a.u < b.u; });
  rep.witnesses.clear();
  rep.unknown.clear();
  for (const auto &r : rep.per_u) {
    if (!r.verdict)
      continue;
    if (*r.verdict == Triviality::Trivial)
      rep.witnesses.push_back(r.u);
    else if (*r.verdict == Triviality::Unknown)
      rep.unknown.push_back(r.u);
  }
  if (!rep.witnesses.empty())
    rep.obtainable = Obtainable::Yes;
  else if (!rep.unknown.empty())
    rep.obtainable = Obtainable::Inconclusive;
  else
    rep.obtainable = Obtainable::No;
}

inline DecisionReport decide(const LensParams &input, const Budget &budget = {}, unsigned threads = 0) {
  validate(budget);
  DecisionReport rep;
  rep.input = input;
  rep.params = canonical_form(input);
  rep.budget = budget;
  const Int p = rep.params.p();
  const ResidueProfile profile = residue_sequence(rep.params);

  std::vector<CriterionResult> survivors;
  for (Int u = 1; 2 * u <= p; ++u) {
    const CriterionResult cr = saito_criterion(profile, u);
    if (cr.passes) {
      survivors.push_back(cr);
    } else {
      UReport r;
      r.u = u;
      r.criterion = cr;
      rep.per_u.push_back(std::move(r));
    }
  }

  if (!survivors.empty()) {
    const SchubertDiagram sd = schubert_diagram(rep.params);
    std::vector<UReport> results(survivors.size());
    if (threads == 0)
      threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(survivors.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned id) {
      try {
        for (std::size_t i = next++; i < survivors.size(); i = next++)
          results[i] = examine_wedge(sd, survivors[i], budget);
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    if (threads <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work, t);
      for (auto &t : pool)
        t.join();
    }
    for (const auto &e : errors)
      if (e)
        std::rethrow_exception(e);
    for (auto &r : results)
      rep.per_u.push_back(std::move(r));
  }
  aggregate(rep);
  return rep;
}

inline std::vector<DecisionReport> klein_scan(Int n_min, Int n_max, const Budget &budget = {}, unsigned threads = 0) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("klein_scan needs 2 <= n_min <= n_max");
  std::vector<DecisionReport> out;
  for (Int n = n_min; n <= n_max; ++n)
    out.push_back(decide(LensParams(4 * n, 2 * n - 1), budget, threads));
  return out;
}

/// The torus knots expected to produce the two Klein-bottle lens spaces.
inline std::optional<oracle::TorusKnotSurgery> expected_torus_knot(const LensParams &canonical) {
  if (canonical == LensParams(16, 7))
    return oracle::TorusKnotSurgery(5, 3, +1);
  if (canonical == LensParams(20, 9))
    return oracle::TorusKnotSurgery(7, 3, -1);
  return std::nullopt;
}

inline bool cross_check_torus(const DecisionReport &report) {
  const auto torus = expected_torus_knot(report.params);
  if (report.obtainable != Obtainable::Yes || !torus)
    throw std::invalid_argument("cross_check_torus applies to obtainable L(16,7) and L(20,9) only");
  return oracle::moser_lens_space(*torus) == report.params;
}

} // namespace lensurg
