#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lensurg/lensurg.hpp"

using namespace lensurg;

namespace {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kInconclusive = 3 };

struct BudgetFlags {
  std::size_t node_cap = Budget{}.node_cap;
  int headroom = Budget{}.headroom;
  int jones_cap = Budget{}.jones_cap;
  unsigned threads = 0;

  void attach(CLI::App *cmd) {
    cmd->add_option("--node-cap", node_cap, "Reidemeister search node cap")->capture_default_str();
    cmd->add_option("--headroom", headroom, "extra crossings allowed during search")->capture_default_str();
    cmd->add_option("--jones-cap", jones_cap, "largest crossing count for the Jones filter")->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads, 0 = hardware concurrency")->capture_default_str();
  }
  Budget budget() const {
    Budget b{node_cap, headroom, jones_cap};
    validate(b);
    return b;
  }
};

void emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open output file " + path);
  f << text;
}

int exit_for(Obtainable o) {
  switch (o) {
  case Obtainable::Yes: return kYes;
  case Obtainable::No: return kNo;
  case Obtainable::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

LensParams require_canonical(Int p, Int q) {
  const LensParams lp(p, q);
  const LensParams c = canonical_form(lp);
  if (c != lp)
    throw std::invalid_argument("diagram needs the canonical pair; L(" + std::to_string(p) + "," + std::to_string(q) +
                                ") = L(" + std::to_string(c.p()) + "," + std::to_string(c.q()) + ")");
  return lp;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lens spaces from surface-slope surgery on doubly primitive knots"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1);
  int code = kYes;

  Int p = 0, q = 0, u = 0;

  auto *criterion = app.add_subcommand("criterion", "residue criterion for K(L(p,q);u)");
  criterion->add_option("p", p)->required();
  criterion->add_option("q", q)->required();
  criterion->add_option("u", u)->required();
  criterion->callback([&] {
    const CriterionResult r = saito_criterion(DualKnotSpec(LensParams(p, q), u));
    std::cout << "psi=" << r.psi << " phi=" << r.phi << " value=" << r.value << ' ' << (r.passes ? "pass" : "fail");
    if (!r.passes && checked::gcd(p, u) != 1)
      std::cout << " (gcd(p,u)=" << checked::gcd(p, u) << ")";
    std::cout << '\n';
    code = r.passes ? kYes : kNo;
  });

  BudgetFlags decide_flags;
  bool as_json = false;
  std::string out_path;
  auto *decide_cmd = app.add_subcommand("decide", "decide whether L(p,q) is obtainable");
  decide_cmd->add_option("p", p)->required();
  decide_cmd->add_option("q", q)->required();
  decide_cmd->add_flag("--json", as_json, "emit the JSON report");
  decide_cmd->add_option("-o,--output", out_path, "write the report here instead of stdout");
  decide_flags.attach(decide_cmd);
  decide_cmd->callback([&] {
    const DecisionReport r = decide(LensParams(p, q), decide_flags.budget(), decide_flags.threads);
    emit(as_json ? to_json(r).dump(2) + "\n" : to_text(r), out_path);
    code = exit_for(r.obtainable);
  });

  BudgetFlags klein_flags;
  Int n_min = 0, n_max = 0;
  bool klein_json = false;
  auto *klein = app.add_subcommand("klein", "decide every Klein-bottle lens space L(4n,2n-1)");
  klein->add_option("n_min", n_min)->required();
  klein->add_option("n_max", n_max)->required();
  klein->add_flag("--json", klein_json, "emit a JSON array of reports");
  klein->add_option("-o,--output", out_path, "write the table here instead of stdout");
  klein_flags.attach(klein);
  klein->callback([&] {
    const auto reports = klein_scan(n_min, n_max, klein_flags.budget(), klein_flags.threads);
    std::ostringstream os;
    if (klein_json) {
      json arr = json::array();
      for (const auto &r : reports)
        arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
    } else {
      std::string yes;
      for (const auto &r : reports) {
        const Int n = r.params.p() / 4;
        os << "n=" << n << "  L(" << r.params.p() << "," << r.params.q() << ")  " << to_string(r.obtainable);
        if (r.obtainable == Obtainable::Yes) {
          os << "  witnesses=" << format_list(r.witnesses);
          yes += std::string(yes.empty() ? "" : ", ") + "L(" + std::to_string(r.params.p()) + "," +
                 std::to_string(r.params.q()) + ")";
        } else if (r.obtainable == Obtainable::Inconclusive) {
          os << "  unknown=" << format_list(r.unknown);
        }
        os << '\n';
      }
      os << "Yes-set = {" << yes << "}\n";
    }
    emit(os.str(), out_path);
    for (const auto &r : reports)
      if (r.obtainable == Obtainable::Inconclusive)
        code = kInconclusive;
  });

  bool raw = false;
  std::string mode_name = "smoothing";
  auto *diagram = app.add_subcommand("diagram", "emit the Schubert diagram or its modification at wedge u");
  diagram->add_option("p", p)->required();
  diagram->add_option("q", q)->required();
  auto *u_opt = diagram->add_option("u", u, "wedge index in [1, p/2]");
  diagram->add_flag("--raw", raw, "the unmodified Schubert diagram");
  diagram->add_option("--mode", mode_name, "smoothing | crossing- | crossing+")->capture_default_str();
  diagram->add_option("-o,--output", out_path, "output path");
  diagram->callback([&] {
    const SchubertDiagram sd = schubert_diagram(require_canonical(p, q));
    if (raw || u_opt->count() == 0) {
      emit(sd.diagram.to_pd_text(), out_path);
      return;
    }
    const PlanarDiagram d = modify(sd.diagram, wedge_site(sd, u), parse_modification(mode_name));
    emit(d.to_pd_text(), out_path);
  });

  std::string pd_path;
  int jones_cap = Budget{}.jones_cap;
  auto *invariants = app.add_subcommand("invariants", "determinant, Alexander and Jones of a PD file");
  invariants->add_option("file", pd_path, "PD text file, - for stdin")->required();
  invariants->add_option("--jones-cap", jones_cap)->capture_default_str();
  invariants->callback([&] {
    std::stringstream buf;
    if (pd_path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream f(pd_path);
      if (!f)
        throw std::invalid_argument("cannot read " + pd_path);
      buf << f.rdbuf();
    }
    const PlanarDiagram d = PlanarDiagram::from_pd_text(buf.str());
    std::cout << "crossings=" << d.crossing_count() << " components=" << d.component_count() << '\n';
    std::cout << "determinant=" << determinant(d) << '\n';
    if (d.component_count() == 1)
      std::cout << "alexander=" << alexander(d).to_string() << '\n';
    if (d.crossing_count() <= jones_cap)
      std::cout << "jones=" << jones(d, {jones_cap}).to_string() << '\n';
    else
      std::cout << "jones=skipped (" << d.crossing_count() << " crossings > cap " << jones_cap << ")\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
