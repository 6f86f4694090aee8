// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/classify.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/young_json.hpp"

using namespace orlicz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body,
               double budget_s = 0.0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && secs >= budget_s) {
    o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome suite(const std::string& id, std::uint64_t seed = 0) {
  SuiteConfig c;
  c.seed = seed;
  c.suites = {id};
  const Report r = run_suite(c);
  Outcome o;
  int cases = 0;
  for (const auto& rec : r.records) {
    cases += rec.cases;
    if (!rec.passed()) {
      o.fail(rec.suite + "/" + rec.check + ": " + std::to_string(rec.failures) + " failures" +
             (rec.notes.empty() ? "" : " (" + rec.notes.front() + ")"));
    }
  }
  if (o.ok) o.detail = std::to_string(r.records.size()) + " records, " + std::to_string(cases) + " cases";
  return o;
}

std::string str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, i / (n - 1.0)));
  return v;
}

// Closed-form inverses where the catalog has one.
std::function<double(double)> closed_inverse(const std::string& name) {
  if (name == "power2") return [](double u) { return std::sqrt(u); };
  if (name == "exp_minus_one") return [](double u) { return std::log1p(u); };
  if (name == "deadzone") return [](double u) { return u + 1.0; };
  if (name == "capped1") return [](double u) { return std::min(u, 1.0); };
  return nullptr;
}

GridFunction1D chi_unit() {
  GridFunction1D f{-4.0, 1.0 / 16.0, std::vector<double>(144, 0.0)};
  for (std::size_t i = 64; i < 80; ++i) f.samples[i] = 1.0;
  return f;
}

}  // namespace

int main() {
  const auto catalog = default_catalog();

  criterion(1, "inverse sandwiches, 7 functions x 200 points, slack 1e-6", [&] {
    Outcome o;
    const double s = 1e-6;
    for (const auto& e : catalog) {
      const auto c = conjugate(e.phi);
      for (double t : log_points(1e-6, 1e6, 200)) {
        const double inv = gen_inverse(e.phi, t);
        if (e.phi(inv) > t * (1 + s)) o.fail(e.name + ": phi(inv(t)) > t at t=" + str(t));
        const double back = gen_inverse(e.phi, e.phi(t));
        if (t > back * (1 + s)) o.fail(e.name + ": t > inv(phi(t)) at t=" + str(t));
        const double prod = inv * gen_inverse(c, t);
        if (t > prod * (1 + s) || prod > 2 * t * (1 + s)) {
          o.fail(e.name + ": product " + str(prod) + " outside [t, 2t] at t=" + str(t));
        }
      }
    }
    return o;
  }, 5.0);

  criterion(2, "doubling table rows and power indices", [&] {
    Outcome o;
    struct Row {
      std::string label;
      YoungFunction phi;
      int delta2;  // -1: not asserted
      int nabla2;
    };
    const std::vector<Row> rows = {
        {"t^2", power_law(2), 1, -1},      {"t^2", power_law(2), -1, 1},
        {"t", power_law(1), -1, 0},        {"t log(3+t)", power_log(), 1, 0},
        {"e^t-1", exp_minus_one(), 0, 1},
    };
    for (const auto& row : rows) {
      const auto r = classify(row.phi);
      if (row.delta2 >= 0 && (r.delta2 == Verdict::yes) != (row.delta2 == 1)) {
        o.fail(row.label + ": delta2 reported " + to_string(r.delta2));
      }
      if (row.nabla2 >= 0 && (r.nabla2 == Verdict::yes) != (row.nabla2 == 1)) {
        o.fail(row.label + ": nabla2 reported " + to_string(r.nabla2) + " (p_-=" + str(r.p_minus) + ")");
      }
    }
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      const auto r = classify(power_law(p));
      if (std::abs(r.p_plus - p) > 1e-3 || std::abs(r.p_minus - p) > 1e-3) {
        o.fail("indices of t^" + str(p) + ": " + str(r.p_minus) + ", " + str(r.p_plus));
      }
    }
    return o;
  });

  criterion(3, "doubling witnesses at 200 points per function", [&] {
    Outcome o = suite("inverse-witnesses");
    int witnessed = 0;
    for (const auto& e : catalog) {
      const auto r = classify(e.phi);
      for (double t : log_points(1e-4, 1e4, 200)) {
        if (r.delta2_witness) {
          const double k = *r.delta2_witness;
          if (e.phi(2 * t) > k * e.phi(t) * (1 + 1e-9)) o.fail(e.name + ": delta2 witness at " + str(t));
        }
        if (r.nabla2_witness) {
          const double k = *r.nabla2_witness;
          if (e.phi(t) > e.phi(k * t) / (2 * k) * (1 + 1e-9)) {
            o.fail(e.name + ": nabla2 witness at " + str(t));
          }
        }
      }
      witnessed += r.delta2_witness.has_value() + r.nabla2_witness.has_value();
    }
    if (witnessed == 0) o.fail("no witnesses reported");
    return o;
  });

  criterion(4, "theta transform invariants and index sandwich", [&] {
    Outcome o = suite("phi-theta");
    const auto phi = power_law(2);
    const auto one = phi_theta(phi, 1.0);
    for (double r : log_points(1e-3, 1e3, 100)) {
      // Phi_1(r) = r^2/2 for t^2.
      if (std::abs(one(r) - 0.5 * r * r) > 1e-8 * r * r) o.fail("Phi_1(r) != r^2/2 at " + str(r));
      if (!(one(r) <= phi(r) * (1 + 1e-9) && phi(r) <= one(2 * r) * (1 + 1e-9))) {
        o.fail("Phi_1 <= Phi <= Phi_1(2.) at " + str(r));
      }
    }
    return o;
  });

  criterion(5, "indicator closed forms", [&] {
    Outcome o;
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      const double m = rng.log_uniform(1e-3, 1e3);
      MeasureStepFunction chi;
      chi.cells = {{1.0, m}};
      for (const auto& e : catalog) {
        const auto inv = closed_inverse(e.name);
        const double want = 1.0 / (inv ? inv(1.0 / m) : gen_inverse(e.phi, 1.0 / m));
        const double got = orlicz_lorentz_inf(e.phi, chi).value;
        if (std::abs(got - want) > 1e-10 * want) o.fail(e.name + ": L^{Phi,inf} " + str(got) + " vs " + str(want));
        for (double q : {0.5, 1.0, 2.0, 4.0}) {
          const auto b = char_norm_bounds(e.phi, q, m);
          if (b.computed.upper < std::pow(q, -1.0 / q) * want * (1 - 1e-12)) {
            o.fail(e.name + ": lower bound violated, q=" + str(q) + " |E|=" + str(m));
          }
        }
      }
      const double dz = lorentz_norm(deadzone(), 1.0, chi).value;
      if (std::abs(dz - std::log1p(m)) > 1e-6) o.fail("deadzone " + str(dz) + " vs log(1+|E|)=" + str(std::log1p(m)));
      if (!is_inf(lorentz_norm(exp_minus_one(), 1.0, chi).value)) o.fail("e^t-1 L^{Phi,1} finite");
    }
    return o;
  });

  criterion(6, "weak norm evaluators agree to 1e-8", [&] { return suite("weak-norms"); }, 30.0);

  criterion(7, "pairing chain on 100 grid pairs", [&] { return suite("pairing"); });

  criterion(8, "maximal exact vs oracle and indicator closed form", [&] {
    Outcome o;
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_grid(rng, 63);
      const auto a = maximal_1d(f);
      const auto b = maximal_1d(f, MaximalMode::oracle);
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (std::abs(a.samples[k] - b.samples[k]) > 1e-12 * std::max(1.0, b.samples[k])) {
          o.fail("grid " + std::to_string(i) + " cell " + std::to_string(k));
        }
      }
    }
    const auto chi = chi_unit();
    const auto m = maximal_1d(chi);
    for (std::size_t k = 0; k < chi.size(); ++k) {
      const double x = chi.midpoint(k);
      const double want = x < 0 ? 1 / (1 - x) : (x <= 1 ? 1.0 : 1 / x);
      if (std::abs(m.samples[k] - want) > 1e-12) o.fail("chi_[0,1] at " + str(x));
    }
    if (o.ok) o = suite("maximal");
    return o;
  });

  criterion(9, "weight criteria", [&] {
    Outcome o;
    const auto grid = log_points(1e-3, 1e3, 13);
    const double s = weight_criterion_q(power_weight(0.5), 2.0, grid).sup_ratio;
    if (std::abs(s - 1.0) > 1e-4) o.fail("t^(1/2), q=2: " + str(s));
    if (!is_inf(weight_criterion_q(power_weight(1.0), 2.0, grid).sup_ratio)) o.fail("phi=t finite");
    int members = 0;
    for (const auto& e : catalog) {
      if (classify(e.phi).nabla2 != Verdict::yes) continue;
      ++members;
      const auto w = orlicz_weight(e.phi);
      if (!std::isfinite(weight_criterion_q(w, 2.0, grid).sup_ratio)) o.fail(e.name + ": criterion q=2 infinite");
      if (!std::isfinite(weight_criterion_inf(w, grid))) o.fail(e.name + ": sup criterion infinite");
    }
    if (members == 0) o.fail("no nabla2 members");
    return o;
  });

  criterion(10, "Herz ratios inside the frozen band", [&] {
    Outcome o;
    const auto band = frozen_herz_band();
    std::ifstream in(std::string(ORLICZ_DATA_DIR) + "/herz_band.json");
    const auto j = nlohmann::json::parse(in);
    if (j.at("c1").get<double>() != band.c1 || j.at("c2").get<double>() != band.c2) {
      o.fail("band file and frozen band differ");
    }
    const auto fresh = calibrate_herz(1, 200);
    if (fresh.min_ratio < band.c1 || fresh.max_ratio > band.c2) {
      o.fail("fresh corpus range [" + str(fresh.min_ratio) + ", " + str(fresh.max_ratio) + "]");
    }
    const auto chi = chi_unit();
    const double r = herz_ratio(chi, {1.0}).front().second;
    if (std::abs(r - 1.0) > 2 * chi.cell_width) o.fail("chi_[0,1] ratio at 1: " + str(r));
    o.detail = o.ok ? "band [" + str(band.c1) + ", " + str(band.c2) + "], fresh [" + str(fresh.min_ratio) +
                          ", " + str(fresh.max_ratio) + "]"
                    : o.detail;
    return o;
  });

  criterion(11, "vector maximal constants finite, stable, control grows", [&] {
    return suite("fefferman-stein");
  }, 300.0);

  return failures == 0 ? 0 : 1;
}
