// orlicz-kit: command line front end. Exit codes: 0 success or passing
// report, 1 failing report or internal error, 2 usage or input error.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orlicz/classify.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/io.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/young.hpp"

namespace {

using nlohmann::json;
using namespace orlicz;

constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_q(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return kInf;
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(q > 0.0)) throw UsageError("--q expects a positive real or inf, got " + s);
  return q;
}

NormOptions tolerances() {
  NormOptions opts;
  if (const char* env = std::getenv("ORLICZ_KIT_TOL")) {
    const std::string s = env;
    std::size_t used = 0;
    double tol = 0.0;
    try {
      tol = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || !(tol > 0.0) || !(tol < 1.0)) {
      throw UsageError("ORLICZ_KIT_TOL must be a real in (0, 1), got \"" + s + "\"");
    }
    opts.bisection_tol = tol;
    opts.quad_tol = tol;
  }
  return opts;
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Step CSV if it starts with the value,measure header, grid CSV otherwise.
MeasureStepFunction load_function(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 13, "value,measure") == 0) {
    return parse_step_csv(text);
  }
  return parse_grid_csv(text).to_step();
}

YoungFunction load_phi(const std::string& desc, double theta) {
  YoungFunction phi = load_young(desc);
  if (theta > 0.0) phi = phi_theta(phi, theta);
  return phi;
}

void print_norm(const NormResult& r, const std::string& space, double q, bool csv,
                const WeakNorms* family) {
  if (csv) {
    std::cout << "space,q,value,lower,upper,method\n"
              << space << ',' << csv_number(q) << ',' << csv_number(r.value) << ','
              << csv_number(r.lower) << ',' << csv_number(r.upper) << ',' << to_string(r.method)
              << '\n';
    return;
  }
  json out = r.to_json();
  out["space"] = space;
  if (space == "lorentz" || space == "gen-lorentz") {
    out["q"] = std::isinf(q) ? json("inf") : json(q);
  }
  if (family) {
    out["WL"] = family->WL.to_json();
    out["Linf"] = family->Linf.to_json();
  }
  std::cout << out.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz and Orlicz-Lorentz norms, maximal operators and inequality checks"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string phi_desc;
  std::string f_path;
  std::string space = "luxemburg";
  std::string q_text = "1";
  double theta = 0.0;
  std::string weight_desc;
  std::string mode = "exact";
  std::vector<std::string> suites;
  std::uint64_t seed = 0;

  auto* norm = app.add_subcommand("norm", "Evaluate a norm of a step or grid function");
  norm->add_option("--phi", phi_desc, "Young function: inline JSON or file")->required();
  norm->add_option("--f", f_path, "Function CSV (value,measure cells or a 1-D grid)")->required();
  norm->add_option("--space", space, "Function space")
      ->check(CLI::IsMember({"luxemburg", "weak", "lorentz", "gen-lorentz"}));
  norm->add_option("--q", q_text, "Lorentz exponent, a positive real or inf");
  norm->add_option("--theta", theta, "Replace phi by its theta-transform")->check(CLI::PositiveNumber);
  norm->add_option("--weight", weight_desc, "Weight for gen-lorentz: inline JSON or file");

  auto* conj = app.add_subcommand("conjugate", "Complementary Young function");
  std::vector<double> at;
  bool emit_desc = false;
  conj->add_option("--phi", phi_desc, "Young function: inline JSON or file")->required();
  conj->add_option("--theta", theta, "Replace phi by its theta-transform")->check(CLI::PositiveNumber);
  conj->add_flag("--emit-desc", emit_desc, "Print only the JSON description of the conjugate");
  conj->add_option("--at", at, "Points at which to evaluate the conjugate")->check(CLI::NonNegativeNumber);

  auto* cls = app.add_subcommand("classify", "Delta_2 / nabla_2 flags, witnesses and indices");
  cls->add_option("--phi", phi_desc, "Young function: inline JSON or file")->required();
  cls->add_option("--theta", theta, "Replace phi by its theta-transform")->check(CLI::PositiveNumber);

  auto* max = app.add_subcommand("maximal", "Hardy-Littlewood maximal function of a grid");
  max->add_option("--f", f_path, "Grid CSV (1-D for exact/oracle, dim,side,cell_volume for dyadic)")
      ->required();
  max->add_option("--mode", mode, "Operator")->check(CLI::IsMember({"exact", "oracle", "dyadic"}));

  auto* fs = app.add_subcommand("fs-constant", "Empirical vector-valued maximal constant");
  std::string fs_q = "inf";
  int families = 50;
  int members = 8;
  int support = 32;
  bool negative = false;
  fs->add_option("--phi", phi_desc, "Young function: inline JSON or file")->required();
  fs->add_option("--theta", theta, "Replace phi by its theta-transform")->check(CLI::PositiveNumber);
  fs->add_option("--q", fs_q, "Aggregate exponent: inf for the sup, or 1 < q < inf");
  fs->add_option("--seed", seed, "Corpus seed");
  fs->add_option("--families", families, "Families per corpus")->check(CLI::PositiveNumber);
  fs->add_option("--members", members, "Functions per family")->check(CLI::PositiveNumber);
  fs->add_option("--support", support, "Support cells per family")->check(CLI::PositiveNumber);
  fs->add_flag("--negative-control", negative, "Skip the hypothesis check");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suites, "Suite ids, comma separated, or all")->delimiter(',')->required();
  ver->add_option("--seed", seed, "Corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool csv = format == "csv";
  try {
    const NormOptions opts = tolerances();

    if (*norm) {
      const YoungFunction phi = load_phi(phi_desc, theta);
      const MeasureStepFunction f = load_function(f_path);
      const double q = parse_q(q_text);
      if (space == "luxemburg") {
        print_norm(luxemburg_norm(phi, f, opts), space, q, csv, nullptr);
      } else if (space == "weak") {
        const WeakNorms w = weak_norm_family(phi, f, opts);
        print_norm(w.wL, space, q, csv, &w);
      } else if (space == "lorentz") {
        print_norm(lorentz_norm(phi, q, f, opts), space, q, csv, nullptr);
      } else {
        const WeightFunction w = weight_desc.empty() ? orlicz_weight(phi) : load_weight(weight_desc);
        print_norm(generalized_lorentz_norm(w, q, f, opts), space, q, csv, nullptr);
      }
      return 0;
    }

    if (*conj) {
      const YoungFunction c = conjugate(load_phi(phi_desc, theta));
      if (emit_desc) {
        std::cout << c.describe().dump() << '\n';
        return 0;
      }
      if (csv) {
        std::cout << "r,value\n";
        for (double r : at) std::cout << csv_number(r) << ',' << csv_number(c(r)) << '\n';
        return 0;
      }
      json values = json::array();
      for (double r : at) {
        const double v = c(r);
        values.push_back({{"r", r}, {"value", std::isinf(v) ? json("inf") : json(v)}});
      }
      json out = {{"desc", c.describe()}, {"a", c.a()}, {"values", values}};
      out["b"] = std::isinf(c.b()) ? json("inf") : json(c.b());
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*cls) {
      const ClassifyResult r = classify(load_phi(phi_desc, theta));
      if (csv) {
        auto opt = [](const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); };
        std::cout << "delta2,delta2_witness,nabla2,nabla2_witness,p_minus,p_plus\n"
                  << to_string(r.delta2) << ',' << opt(r.delta2_witness) << ',' << to_string(r.nabla2)
                  << ',' << opt(r.nabla2_witness) << ',' << csv_number(r.p_minus) << ','
                  << csv_number(r.p_plus) << '\n';
      } else {
        std::cout << r.to_json().dump() << '\n';
      }
      return 0;
    }

    if (*max) {
      const std::string text = read_file(f_path);
      if (mode == "dyadic") {
        const GridFieldND m = dyadic_maximal(parse_field_csv(text));
        if (csv) {
          std::cout << "index,value\n";
          for (std::size_t i = 0; i < m.size(); ++i) std::cout << i << ',' << csv_number(m.samples[i]) << '\n';
        } else {
          std::cout << json{{"mode", mode},
                            {"dim", m.dim},
                            {"side", m.side},
                            {"cell_volume", m.cell_volume},
                            {"samples", m.samples}}
                           .dump()
                    << '\n';
        }
        return 0;
      }
      const GridFunction1D f = parse_grid_csv(text);
      const GridFunction1D m = maximal_1d(f, mode == "oracle" ? MaximalMode::oracle : MaximalMode::exact);
      if (csv) {
        std::cout << "x,value\n";
        for (std::size_t i = 0; i < m.size(); ++i) {
          std::cout << csv_number(m.midpoint(i)) << ',' << csv_number(m.samples[i]) << '\n';
        }
      } else {
        std::cout << json{{"mode", mode},
                          {"origin", m.origin},
                          {"cell_width", m.cell_width},
                          {"samples", m.samples}}
                         .dump()
                  << '\n';
      }
      return 0;
    }

    if (*fs) {
      const YoungFunction phi = load_phi(phi_desc, theta);
      CorpusSpec corpus_spec;
      corpus_spec.seed = seed;
      corpus_spec.families = families;
      corpus_spec.members = members;
      corpus_spec.support_cells = support;
      if (negative) corpus_spec.min_reach = 1.0;
      const ConstantEstimate c = estimate_constant(phi, parse_q(fs_q), corpus_spec, negative, opts);
      if (csv) {
        std::cout << "constant,stability,first,second\n"
                  << csv_number(c.constant) << ',' << csv_number(c.stability) << ','
                  << csv_number(c.first) << ',' << csv_number(c.second) << '\n';
      } else {
        std::cout << json{{"constant", c.constant},
                          {"stability", c.stability},
                          {"first", c.first},
                          {"second", c.second}}
                         .dump()
                  << '\n';
      }
      return 0;
    }

    SuiteConfig config;
    config.seed = seed;
    config.suites = suites;
    config.norms = opts;
    const Report rep = run_suite(config);
    if (csv) {
      std::cout << rep.constants_csv();
    } else {
      std::cout << rep.to_json().dump(2) << '\n';
    }
    return rep.passed() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "orlicz-kit: input error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "orlicz-kit: " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "orlicz-kit: refused: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "orlicz-kit: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "orlicz-kit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "orlicz-kit: internal error: " << e.what() << '\n';
    return 1;
  }
}
