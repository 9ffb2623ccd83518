#pragma once

// JSON and plain-text rendering of decision reports. The JSON form is
// lossless: from_json(to_json(r)) == r.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "lensurg/decider.hpp"

namespace lensurg {

using json = nlohmann::ordered_json;

namespace report_detail {

inline Triviality parse_triviality(const std::string &s) {
  if (s == "trivial")
    return Triviality::Trivial;
  if (s == "nontrivial")
    return Triviality::Nontrivial;
  if (s == "unknown")
    return Triviality::Unknown;
  throw std::invalid_argument("unknown triviality verdict: " + s);
}

inline MoveKind parse_move_kind(const std::string &s) {
  for (MoveKind k : {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3, MoveKind::R1Add, MoveKind::R2Add})
    if (s == to_string(k))
      return k;
  throw std::invalid_argument("unknown move kind: " + s);
}

inline Obtainable parse_obtainable(const std::string &s) {
  for (Obtainable o : {Obtainable::Yes, Obtainable::No, Obtainable::Inconclusive})
    if (s == to_string(o))
      return o;
  throw std::invalid_argument("unknown obtainability: " + s);
}

} // namespace report_detail

inline json to_json(const Budget &b) {
  return json{{"node_cap", b.node_cap}, {"headroom", b.headroom}, {"jones_cap", b.jones_cap}};
}

inline Budget budget_from_json(const json &j) {
  Budget b;
  b.node_cap = j.at("node_cap").get<std::size_t>();
  b.headroom = j.at("headroom").get<int>();
  b.jones_cap = j.at("jones_cap").get<int>();
  return b;
}

inline json to_json(const Move &m) { return json::array({to_string(m.kind), m.a, m.b, m.variant}); }

inline json to_json(const TrivialityVerdict &v) {
  json j{{"status", to_string(v.status)}};
  switch (v.status) {
  case Triviality::Trivial: {
    json cert = json::array();
    for (const auto &m : v.certificate)
      cert.push_back(to_json(m));
    j["certificate"] = std::move(cert);
    break;
  }
  case Triviality::Nontrivial:
    j["witness"] = {{"invariant", v.witness}, {"value", v.witness_value}};
    break;
  case Triviality::Unknown:
    break;
  }
  j["nodes"] = v.nodes;
  j["reduced_crossings"] = v.reduced_crossings;
  return j;
}

inline TrivialityVerdict verdict_from_json(const json &j) {
  TrivialityVerdict v;
  v.status = report_detail::parse_triviality(j.at("status").get<std::string>());
  if (j.contains("certificate"))
    for (const auto &m : j.at("certificate"))
      v.certificate.push_back(
          {report_detail::parse_move_kind(m.at(0).get<std::string>()), m.at(1).get<int>(), m.at(2).get<int>(), m.at(3).get<int>()});
  if (j.contains("witness")) {
    v.witness = j.at("witness").at("invariant").get<std::string>();
    v.witness_value = j.at("witness").at("value").get<std::string>();
  }
  v.nodes = j.at("nodes").get<std::size_t>();
  v.reduced_crossings = j.at("reduced_crossings").get<int>();
  return v;
}

inline json to_json(const DecisionReport &r) {
  json per_u = json::array();
  for (const auto &u : r.per_u) {
    json modes = json::array();
    for (const auto &m : u.modes) {
      json jm{{"mode", to_string(m.mode)}, {"components", m.components}};
      jm["verdict"] = m.verdict ? to_json(*m.verdict) : json(nullptr);
      modes.push_back(std::move(jm));
    }
    per_u.push_back({
        {"u", u.u},
        {"criterion",
         {{"psi", u.criterion.psi}, {"phi", u.criterion.phi}, {"value", u.criterion.value}, {"passes", u.criterion.passes}}},
        {"verdict", u.verdict ? json(to_string(*u.verdict)) : json(nullptr)},
        {"modes", std::move(modes)},
    });
  }
  return json{
      {"lens", {{"p", r.input.p()}, {"q", r.input.q()}, {"canonical_q", r.params.q()}}},
      {"per_u", std::move(per_u)},
      {"obtainable", to_string(r.obtainable)},
      {"witnesses", r.witnesses},
      {"unknown", r.unknown},
      {"budget", to_json(r.budget)},
      {"calibration_id", r.calibration_id},
  };
}

inline DecisionReport report_from_json(const json &j) {
  DecisionReport r;
  const auto &lens = j.at("lens");
  const Int p = lens.at("p").get<Int>();
  r.input = LensParams(p, lens.at("q").get<Int>());
  r.params = LensParams(p, lens.at("canonical_q").get<Int>());
  for (const auto &ju : j.at("per_u")) {
    UReport u;
    u.u = ju.at("u").get<Int>();
    const auto &c = ju.at("criterion");
    u.criterion = {u.u, c.at("psi").get<Int>(), c.at("phi").get<Int>(), c.at("value").get<Int>(), c.at("passes").get<bool>()};
    if (!ju.at("verdict").is_null())
      u.verdict = report_detail::parse_triviality(ju.at("verdict").get<std::string>());
    for (const auto &jm : ju.at("modes")) {
      ModeOutcome m;
      m.mode = parse_modification(jm.at("mode").get<std::string>());
      m.components = jm.at("components").get<int>();
      if (!jm.at("verdict").is_null())
        m.verdict = verdict_from_json(jm.at("verdict"));
      u.modes.push_back(std::move(m));
    }
    r.per_u.push_back(std::move(u));
  }
  r.obtainable = report_detail::parse_obtainable(j.at("obtainable").get<std::string>());
  r.witnesses = j.at("witnesses").get<std::vector<Int>>();
  r.unknown = j.at("unknown").get<std::vector<Int>>();
  r.budget = budget_from_json(j.at("budget"));
  r.calibration_id = j.at("calibration_id").get<std::string>();
  return r;
}

inline std::string format_list(const std::vector<Int> &xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

inline std::string to_text(const DecisionReport &r) {
  std::ostringstream os;
  os << "L(" << r.input.p() << "," << r.input.q() << ")";
  if (r.params != r.input)
    os << " = L(" << r.params.p() << "," << r.params.q() << ")";
  os << "\n";
  for (const auto &u : r.per_u) {
    os << "  u=" << u.u << "  value=" << u.criterion.value;
    if (!u.verdict) {
      os << "  rejected by criterion\n";
      continue;
    }
    os << "  " << to_string(*u.verdict);
    for (const auto &m : u.modes) {
      os << "  " << to_string(m.mode) << ":";
      if (!m.verdict) {
        os << "link(" << m.components << ")";
      } else {
        os << to_string(m.verdict->status);
        if (m.verdict->status == Triviality::Nontrivial)
          os << "[" << m.verdict->witness << "]";
        else if (m.verdict->status == Triviality::Trivial)
          os << "[" << m.verdict->certificate.size() << " moves]";
      }
    }
    os << "\n";
  }
  os << "obtainable: " << to_string(r.obtainable);
  if (r.obtainable == Obtainable::Yes)
    os << "  witnesses=" << format_list(r.witnesses);
  else if (r.obtainable == Obtainable::Inconclusive)
    os << "  unknown=" << format_list(r.unknown);
  os << "\n";
  return os.str();
}

} // namespace lensurg
