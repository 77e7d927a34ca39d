#include "monopole_lab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "monopole_lab/bps.hpp"
#include "monopole_lab/dirac_radial.hpp"
#include "monopole_lab/errors.hpp"
#include "monopole_lab/gauge.hpp"
#include "monopole_lab/geometry.hpp"
#include "monopole_lab/parallel.hpp"
#include "monopole_lab/symmetry.hpp"
#include "monopole_lab/version.hpp"
#include "monopole_lab/wigner.hpp"

namespace monopole_lab::cli {

using json = nlohmann::ordered_json;

// --- Formatting ------------------------------------------------------------------------

std::string format17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_into(v, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      // JSON has no non-finite numbers: emit them as strings.
      out += std::isfinite(x) ? format17(x) : "\"" + format17(x) + "\"";
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump17(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

namespace {

// --- Report -----------------------------------------------------------------------------

struct Report {
  json header;
  std::vector<json> records;
  bool csv = false;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> failed;
  std::vector<std::string> notes;

  /// Records a named defect; it passes iff value <= tol (NaN fails).
  bool check(const std::string& name, double value, double tol, json extra = json::object()) {
    const bool pass = value <= tol;
    json r;
    r["record"] = "check";
    r["name"] = name;
    r["value"] = value;
    r["tolerance"] = tol;
    r["pass"] = pass;
    for (auto it = extra.begin(); it != extra.end(); ++it) r[it.key()] = it.value();
    records.push_back(std::move(r));
    if (!pass) failed.push_back(name);
    return pass;
  }

  void write(std::ostream& os) const {
    json summary;
    summary["record"] = "summary";
    summary["status"] = failed.empty() ? "ok" : "tolerance_breach";
    summary["failed"] = failed;
    if (!notes.empty()) summary["notes"] = notes;
    if (csv) {
      os << "# " << dump17(header) << '\n';
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
      }
      os << "# " << dump17(summary) << '\n';
    } else {
      os << dump17(header) << '\n';
      for (const auto& r : records) os << dump17(r) << '\n';
      os << dump17(summary) << '\n';
    }
  }

  int exit_code() const { return failed.empty() ? kExitOk : kExitToleranceBreach; }
};

json make_header(const std::string& command, const json& config, std::optional<std::uint64_t> seed) {
  json h;
  h["record"] = "header";
  h["tool"] = "monopole-lab";
  h["version"] = kVersion;
  h["command"] = command;
  h["config"] = config;
  h["rng"] = kRngName;
  h["seed"] = seed ? json(*seed) : json(nullptr);
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits (portable across standard libraries).
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return 1;
  if (text == "-1" || text == "-") return -1;
  throw ArgumentError("expected a sign (+1 or -1), got '" + text + "'");
}

std::pair<HalfInt, HalfInt> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw ArgumentError("expected a range lo..hi, got '" + text + "'");
  const HalfInt lo = parse_halfint(text.substr(0, pos)), hi = parse_halfint(text.substr(pos + 2));
  if (hi < lo) throw ArgumentError("empty range '" + text + "'");
  return {lo, hi};
}

// --- Shared options ----------------------------------------------------------------------------

struct ModelOptions {
  std::string model = "euclid";
  double rho = 1.0;
  void add(CLI::App* app) {
    app->add_option("--model", model, "geometry: euclid | riemann | lobachevsky")->capture_default_str();
    app->add_option("--rho", rho, "curvature radius")->capture_default_str();
  }
  CurvatureModel build() const { return make_model(parse_geometry(model), rho); }
  void echo(json& c) const {
    c["model"] = model;
    c["rho"] = rho;
  }
};

struct SolutionOptions {
  ModelOptions model;
  std::string kind = "typeI";
  std::string family = "hyperbolic";
  double a1 = 1.0, C = 0.0, A = 1.0, B = 0.0, b1 = 0.0, b2 = 1.0, e = 1.0;
  std::string sign = "+1";
  void add(CLI::App* app) {
    model.add(app);
    app->add_option("--kind", kind, "solution type: typeI | trivial")->capture_default_str();
    app->add_option("--family", family, "seed family: rational | hyperbolic | trigonometric")->capture_default_str();
    app->add_option("--a1", a1, "Type I scale a1")->capture_default_str();
    app->add_option("--C", C, "Type I shift C")->capture_default_str();
    app->add_option("--A", A, "seed parameter A")->capture_default_str();
    app->add_option("--B", B, "seed parameter B")->capture_default_str();
    app->add_option("--sign", sign, "seed branch sign")->capture_default_str();
    app->add_option("--b1", b1, "trivial solution b1")->capture_default_str();
    app->add_option("--b2", b2, "trivial solution b2")->capture_default_str();
    app->add_option("--e", e, "gauge coupling")->capture_default_str();
  }
  MonopoleSolution build() const {
    MonopoleSolution s;
    s.model = model.build();
    s.e = e;
    if (kind == "typeI" || kind == "typei" || kind == "type1") {
      TypeI t;
      t.a1 = a1;
      t.C = C;
      t.seed = SeedFamily{parse_seed_kind(family), A, B, parse_sign(sign)};
      s.kind = t;
    } else if (kind == "trivial") {
      s.kind = Trivial{b1, b2};
    } else {
      throw ArgumentError("unknown solution kind '" + kind + "'");
    }
    return s;
  }
};

struct RadialRange {
  int grid = 50;
  std::optional<double> r_min, r_max;
  void add(CLI::App* app) {
    app->add_option("--grid", grid, "number of radial points")->capture_default_str();
    app->add_option("--r-min", r_min, "smallest radius (default 0.1)");
    app->add_option("--r-max", r_max, "largest radius (default 3 rho, 1.9 rho on lobachevsky)");
  }
  std::vector<double> points(const CurvatureModel& m) const {
    if (grid < 2) throw ArgumentError("--grid must be >= 2");
    const double lo = r_min.value_or(0.1);
    const double hi = r_max.value_or(m.kind == Geometry::Lobachevsky ? 1.9 * m.rho : 3.0 * m.rho);
    if (!(hi > lo) || !(lo > 0.0)) throw ArgumentError("radial range must satisfy 0 < r-min < r-max");
    std::vector<double> r(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) r[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (grid - 1);
    return r;
  }
};

// --- bps -----------------------------------------------------------------------------------------

struct BpsVerify {
  SolutionOptions sol;
  RadialRange range;
  std::string method = "jet";
  double tol = 1e-7;
  std::optional<double> dyon_c;
  void add(CLI::App* app) {
    sol.add(app);
    range.add(app);
    app->add_option("--method", method, "derivatives: jet | fd5")->capture_default_str();
    app->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    app->add_option("--dyon-c", dyon_c, "verify the dyon built from the monopole with this c (euclid only)");
  }
  Report run() const {
    const MonopoleSolution s = sol.build();
    DerivativeMethod dm = DerivativeMethod::Jet;
    if (method == "fd5") dm = DerivativeMethod::FiniteDifference5;
    else if (method != "jet") throw ArgumentError("unknown --method '" + method + "'");
    json cfg;
    sol.model.echo(cfg);
    cfg["solution"] = to_json(s);
    cfg["grid"] = range.grid;
    cfg["method"] = method;
    cfg["tol"] = tol;
    if (dyon_c) cfg["dyon_c"] = *dyon_c;
    Report rep;
    rep.header = make_header("bps verify", cfg, std::nullopt);
    std::optional<DyonSolution> dyon;
    if (dyon_c) dyon = dyon_from_monopole(s, *dyon_c);
    int evaluated = 0, skipped = 0;
    double max_phi = 0.0, max_k = 0.0, max_f = 0.0;
    for (double r : range.points(s.model)) {
      try {
        if (dyon) {
          const auto res = residual_dyon_equations(*dyon, r, dm);
          max_phi = std::max(max_phi, std::abs(res.resPhi));
          max_k = std::max(max_k, std::abs(res.resK));
          max_f = std::max(max_f, std::abs(res.resF));
        } else {
          const auto res = residual_field_equations(s, r, dm);
          max_phi = std::max(max_phi, std::abs(res.resPhi));
          max_k = std::max(max_k, std::abs(res.resK));
        }
        ++evaluated;
      } catch (const DomainError&) {
        ++skipped;  // singular point of the seed or outside the chart
      } catch (const ParameterError&) {
        ++skipped;
      }
    }
    json r;
    r["record"] = "bps_verify";
    r["points"] = evaluated;
    r["skipped"] = skipped;
    r["max_resPhi"] = max_phi;
    r["max_resK"] = max_k;
    if (dyon) r["max_resF"] = max_f;
    rep.records.push_back(r);
    if (evaluated == 0) {
      rep.notes.push_back("no evaluable grid points");
      rep.check("max_residual", std::numeric_limits<double>::quiet_NaN(), tol);
    } else {
      rep.check("max_residual", std::max({max_phi, max_k, max_f}), tol);
    }
    return rep;
  }
};

struct BpsTable {
  SolutionOptions sol;
  RadialRange range;
  std::string format = "csv";
  void add(CLI::App* app) {
    sol.add(app);
    range.add(app);
    app->add_option("--format", format, "csv | json")->capture_default_str();
  }
  Report run() const {
    const MonopoleSolution s = sol.build();
    json cfg;
    sol.model.echo(cfg);
    cfg["solution"] = to_json(s);
    cfg["grid"] = range.grid;
    Report rep;
    rep.header = make_header("bps table", cfg, std::nullopt);
    rep.csv = format == "csv";
    if (format != "csv" && format != "json") throw ArgumentError("unknown --format '" + format + "'");
    rep.columns = {"r", "chi", "K", "Phi", "W"};
    for (double r : range.points(s.model)) {
      double chi = std::numeric_limits<double>::quiet_NaN(), K = chi, Phi = chi, W = chi;
      try {
        chi = chi_from_r(s.model, r);
        const KPhi kp = eval_K_Phi(s, r);
        K = kp.K;
        Phi = kp.Phi;
        W = 0.5 * (s.e * r * r * K + 1.0);
      } catch (const DomainError&) {
      } catch (const ParameterError&) {
      }
      if (rep.csv) {
        rep.rows.push_back({format17(r), format17(chi), format17(K), format17(Phi), format17(W)});
      } else {
        json row;
        row["record"] = "row";
        row["r"] = r;
        row["chi"] = chi;
        row["K"] = K;
        row["Phi"] = Phi;
        row["W"] = W;
        rep.records.push_back(row);
      }
    }
    return rep;
  }
};

// --- wigner ---------------------------------------------------------------------------------------

struct WignerEval {
  std::string j = "1", mp = "0", m = "0";
  double theta = 0.5, phi = 0.0;
  void add(CLI::App* app) {
    app->add_option("--j", j, "angular momentum (e.g. 3/2)")->capture_default_str();
    app->add_option("--mp", mp, "row projection m'")->capture_default_str();
    app->add_option("--m", m, "column projection m")->capture_default_str();
    app->add_option("--theta", theta, "polar angle")->capture_default_str();
    app->add_option("--phi", phi, "azimuth")->capture_default_str();
  }
  Report run() const {
    const HalfInt J = parse_halfint(j), MP = parse_halfint(mp), M = parse_halfint(m);
    json cfg;
    cfg["j"] = J.str();
    cfg["mp"] = MP.str();
    cfg["m"] = M.str();
    cfg["theta"] = theta;
    cfg["phi"] = phi;
    Report rep;
    rep.header = make_header("wigner eval", cfg, std::nullopt);
    json r;
    r["record"] = "wigner_eval";
    r["d"] = d_small(J, MP, M, theta);
    r["d_sum"] = d_small_sum(J, MP, M, theta);
    r["d_recurrence"] = d_small_recurrence(J, MP, M, theta);
    r["d_dtheta"] = d_small_dtheta(J, MP, M, theta);
    const cplx D = D_function(J, MP, M, phi, theta);
    r["D_re"] = D.real();
    r["D_im"] = D.imag();
    rep.records.push_back(r);
    return rep;
  }
};

struct WignerCheck {
  std::string jmax = "5";
  std::uint64_t seed = 7;
  int samples = 20;
  double tol = 1e-12;
  double recursion_tol = 1e-10;
  void add(CLI::App* app) {
    app->add_option("--jmax", jmax, "largest j checked")->capture_default_str();
    app->add_option("--seed", seed, "seed of the random angle sweep")->capture_default_str();
    app->add_option("--samples", samples, "random angles per check")->capture_default_str();
    app->add_option("--tol", tol, "value tolerance")->capture_default_str();
    app->add_option("--recursion-tol", recursion_tol, "recursion identity tolerance")->capture_default_str();
  }
  Report run() const {
    const HalfInt J = parse_halfint(jmax);
    if (J < HalfInt(0) || J > HalfInt(20)) throw ArgumentError("--jmax must lie in [0, 20]");
    if (samples < 1) throw ArgumentError("--samples must be positive");
    json cfg;
    cfg["jmax"] = J.str();
    cfg["samples"] = samples;
    cfg["tol"] = tol;
    cfg["recursion_tol"] = recursion_tol;
    Report rep;
    rep.header = make_header("wigner check", cfg, seed);
    std::mt19937_64 rng(seed);
    std::vector<double> thetas(static_cast<std::size_t>(samples)), phis(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      thetas[i] = std::numbers::pi * (0.02 + 0.96 * unit_uniform(rng));
      phis[i] = 2.0 * std::numbers::pi * unit_uniform(rng);
    }
    double spectral = 0.0, sum_rec = 0.0, parity = 0.0;
    RecursionReport ladder, abelian, doublet;
    for (int dj = 0; dj <= J.doubled(); ++dj) {
      const HalfInt j = HalfInt::from_doubled(dj);
      for (double th : thetas) {
        const Eigen::MatrixXd dm = wigner_d_matrix_spectral(j, th);
        for (int a = 0; a <= dj; ++a)
          for (int b = 0; b <= dj; ++b) {
            const HalfInt mp = HalfInt::from_doubled(dj - 2 * a), m = HalfInt::from_doubled(dj - 2 * b);
            const double d = d_small(j, mp, m, th);
            spectral = std::max(spectral, std::abs(d - dm(a, b)));
            sum_rec = std::max(sum_rec, std::abs(d_small_sum(j, mp, m, th) - d_small_recurrence(j, mp, m, th)));
          }
      }
      for (std::size_t s = 0; s < thetas.size(); ++s) {
        const double th = thetas[s];
        for (int b = 0; b <= dj; ++b) {
          const HalfInt m = HalfInt::from_doubled(dj - 2 * b);
          for (int ds = -dj; ds <= dj; ds += 2) {
            const HalfInt sg = HalfInt::from_doubled(ds);
            parity = std::max(parity, parity_identity_defect(j, m, sg, th, phis[s]));
            if (ds >= -2 && ds <= 2) {
              const auto r = recursion_check_ladder(j, m, sg, th);
              if (r.identities_checked > 0) ladder.add(r.max_defect);
            }
          }
          for (int dk : {-2, -1, 1, 2}) {
            try {
              const auto r = recursion_check_abelian(j, m, HalfInt::from_doubled(dk), th);
              if (r.identities_checked > 0) abelian.add(r.max_defect);
            } catch (const ArgumentError&) {
            } catch (const ParameterError&) {
            }
          }
          if (j.is_integer()) {
            const auto r = recursion_check_doublet(j, m, th);
            if (r.identities_checked > 0) doublet.add(r.max_defect);
          }
        }
      }
    }
    int disagreements = 0, pairs = 0;
    for (int dj = 0; dj <= J.doubled(); ++dj)
      for (int dl = -J.doubled(); dl <= J.doubled(); ++dl) {
        const HalfInt j = HalfInt::from_doubled(dj), l = HalfInt::from_doubled(dl);
        ++pairs;
        if (pauli_derivative_check(j, l) != pauli_closed_form(j, l)) ++disagreements;
      }
    rep.check("d_vs_spectral_matrix", spectral, tol);
    rep.check("sum_vs_recurrence", sum_rec, tol);
    rep.check("parity_identity", parity, tol);
    rep.check("recursion_ladder", ladder.max_defect, recursion_tol, json{{"identities", ladder.identities_checked}});
    rep.check("recursion_abelian", abelian.max_defect, recursion_tol,
              json{{"identities", abelian.identities_checked}});
    rep.check("recursion_doublet", doublet.max_defect, recursion_tol,
              json{{"identities", doublet.identities_checked}});
    rep.check("pauli_disagreements", disagreements, 0.0, json{{"pairs", pairs}});
    return rep;
  }
};

// --- gauge ------------------------------------------------------------------------------------------

struct GaugeOptions {
  std::string from = "cartesian", to = "schwinger";
  double r = 1.0, K = -0.3, Phi = 0.7, f = 0.0, e = 1.0;
  void add(CLI::App* app) {
    app->add_option("--from", from, "source frame: cartesian | dirac | schwinger")->capture_default_str();
    app->add_option("--to", to, "target frame")->capture_default_str();
    app->add_option("--r", r, "radius of the sample sphere")->capture_default_str();
    app->add_option("--K", K, "radial profile K(r)")->capture_default_str();
    app->add_option("--Phi", Phi, "radial profile Phi(r)")->capture_default_str();
    app->add_option("--f", f, "time-component profile f(r)")->capture_default_str();
    app->add_option("--e", e, "gauge coupling")->capture_default_str();
  }
  void echo(json& c) const {
    c["frame_from"] = from;
    c["frame_to"] = to;
    c["r"] = r;
    c["K"] = K;
    c["Phi"] = Phi;
    c["f"] = f;
    c["e"] = e;
  }
  RadialValues values() const { return {K, Phi, f}; }
};

json vec_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

double sample_defect(const GaugeFieldSample& a, const GaugeFieldSample& b, bool phi_only) {
  if (phi_only) return (a.Phi - b.Phi).cwiseAbs().maxCoeff();
  double d = 0.0;
  for (int mu = 0; mu < 4; ++mu) d = std::max(d, (a.W[mu] - b.W[mu]).cwiseAbs().maxCoeff());
  return d;
}

GradientMethod parse_gradient(const std::string& s) {
  if (s == "auto") return GradientMethod::Auto;
  if (s == "analytic") return GradientMethod::Analytic;
  if (s == "fd") return GradientMethod::FiniteDifference;
  throw ArgumentError("unknown --gradient '" + s + "'");
}

struct GaugeRotate {
  GaugeOptions g;
  double theta = 0.7, phi = 1.1;
  std::string gradient = "auto";
  double tol = 1e-12;
  void add(CLI::App* app) {
    g.add(app);
    app->add_option("--theta", theta, "polar angle")->capture_default_str();
    app->add_option("--phi", phi, "azimuth")->capture_default_str();
    app->add_option("--gradient", gradient, "auto | analytic | fd")->capture_default_str();
    app->add_option("--tol", tol, "defect tolerance")->capture_default_str();
  }
  Report run() const {
    const IsoGaugeFrame from = parse_frame(g.from), to = parse_frame(g.to);
    json cfg;
    g.echo(cfg);
    cfg["theta"] = theta;
    cfg["phi"] = phi;
    cfg["gradient"] = gradient;
    Report rep;
    rep.header = make_header("gauge rotate", cfg, std::nullopt);
    const GibbsField field = transition_field(from, to);
    const Point4 x{0.0, g.r, theta, phi};
    const Vec3 c = field.c(x);
    const Mat3 O = rotation_from_gibbs(c);
    const GaugeFieldSample in = expected_form(from, g.values(), g.r, theta, phi, g.e);
    const GaugeFieldSample out = gauge_transform(in, field, x, g.e, parse_gradient(gradient));
    const GaugeFieldSample want = expected_form(to, g.values(), g.r, theta, phi, g.e);
    json r;
    r["record"] = "gauge_rotate";
    r["gibbs"] = vec_json(c);
    r["rotation"] = json::array({vec_json(O.row(0)), vec_json(O.row(1)), vec_json(O.row(2))});
    r["Phi"] = vec_json(out.Phi);
    json W = json::array();
    for (const auto& w : out.W) W.push_back(vec_json(w));
    r["W"] = W;
    rep.records.push_back(r);
    const double tl = gradient == "fd" ? std::max(tol, 1e-6) : tol;
    rep.check("defect_Phi", sample_defect(out, want, true), tl);
    rep.check("defect_W", sample_defect(out, want, false), tl);
    return rep;
  }
};

struct GaugeVerify {
  GaugeOptions g;
  int grid = 20;
  std::string gradient = "auto";
  double tol = 1e-12;
  void add(CLI::App* app) {
    g.add(app);
    app->add_option("--grid", grid, "points per angle of the (theta, phi) grid")->capture_default_str();
    app->add_option("--gradient", gradient, "auto | analytic | fd")->capture_default_str();
    app->add_option("--tol", tol, "defect tolerance (at least 1e-6 with --gradient fd)")->capture_default_str();
  }
  Report run() const {
    const IsoGaugeFrame from = parse_frame(g.from), to = parse_frame(g.to);
    json cfg;
    g.echo(cfg);
    cfg["grid"] = grid;
    cfg["gradient"] = gradient;
    cfg["tol"] = tol;
    Report rep;
    rep.header = make_header("gauge verify", cfg, std::nullopt);
    const auto v = verify_gauge_transition(from, to, g.values(), g.r, g.e, grid, parse_gradient(gradient),
                                           thread_cap());
    json r;
    r["record"] = "gauge_verify";
    r["frame_from"] = frame_name(v.from);
    r["frame_to"] = frame_name(v.to);
    r["grid"] = v.grid;
    r["max_defect_Phi"] = v.max_defect_Phi;
    r["max_defect_W"] = v.max_defect_W;
    rep.records.push_back(r);
    const double tl = gradient == "fd" ? std::max(tol, 1e-6) : tol;
    rep.check("max_defect_Phi", v.max_defect_Phi, tl);
    rep.check("max_defect_W", v.max_defect_W, tl);
    return rep;
  }
};

// --- spectrum -------------------------------------------------------------------------------------

struct Spectrum {
  std::string model = "riemann";
  double rho = 1.0;
  std::string j = "1";
  double mass = 1.0;
  std::string w_profile = "zero";
  int grid = 4000;
  int count = 5;
  std::string mu = "+1", delta = "+1";
  double a1 = 1.0, C = 0.0;
  std::optional<double> e_min, e_max;
  double scan_step = 0.05;
  double drift_tol = 1e-6;
  void add(CLI::App* app) {
    app->add_option("--model", model, "geometry (discrete spectra need riemann)")->capture_default_str();
    app->add_option("--rho", rho, "curvature radius (must be 1)")->capture_default_str();
    app->add_option("--j", j, "total angular momentum (integer)")->capture_default_str();
    app->add_option("--mass", mass, "fermion mass")->capture_default_str();
    app->add_option("--w-profile", w_profile, "zero | trivial | typeI")->capture_default_str();
    app->add_option("--grid", grid, "integration steps")->capture_default_str();
    app->add_option("--count", count, "number of eigenvalues")->capture_default_str();
    app->add_option("--mu", mu, "K-eigenvalue sign (W = 0)")->capture_default_str();
    app->add_option("--delta", delta, "N_A-eigenvalue sign (W != 0)")->capture_default_str();
    app->add_option("--a1", a1, "Type I scale for --w-profile typeI")->capture_default_str();
    app->add_option("--C", C, "Type I shift for --w-profile typeI")->capture_default_str();
    app->add_option("--e-min", e_min, "lower end of the energy window (default 1e-6)");
    app->add_option("--e-max", e_max, "upper end of the energy window (default mass + 20)");
    app->add_option("--scan-step", scan_step, "energy scan step")->capture_default_str();
    app->add_option("--drift-tol", drift_tol, "relative n vs 2n drift tolerance")->capture_default_str();
  }
  Report run() const {
    const CurvatureModel cm = make_model(parse_geometry(model), rho);
    const HalfInt J = parse_halfint(j);
    DoubletRadialSystem sys;
    sys.model = cm;
    sys.epsilon = 0.0;
    sys.m = mass;
    sys.j = J;
    sys.mu = parse_sign(mu);
    sys.delta = parse_sign(delta);
    ScalarProfile w;
    if (w_profile == "trivial") {
      MonopoleSolution s;
      s.model = cm;
      s.kind = Trivial{};
      w = w_over_s_profile(s);
    } else if (w_profile == "typeI" || w_profile == "typei") {
      MonopoleSolution s;
      s.model = cm;
      s.kind = TypeI{a1, C, SeedFamily{SeedKind::Trigonometric, 1.0, 0.0, 1}};
      w = w_over_s_profile(s);
    } else if (w_profile != "zero") {
      throw ArgumentError("unknown --w-profile '" + w_profile + "'");
    }
    if (J == HalfInt(0)) sys.form = DoubletForm::J0;
    else sys.form = w ? DoubletForm::WReduced : DoubletForm::MuReduced;
    sys.w_over_s = w;
    SpectralProblem p = make_spectral_problem(sys, grid);
    if (e_min) p.e_min = *e_min;
    if (e_max) p.e_max = *e_max;
    p.scan_step = scan_step;
    p.threads = thread_cap();
    json cfg;
    cfg["model"] = model;
    cfg["rho"] = rho;
    cfg["j"] = J.str();
    cfg["mass"] = mass;
    cfg["w_profile"] = w_profile;
    cfg["form"] = sys.form == DoubletForm::J0 ? "j0" : (w ? "w_reduced" : "mu_reduced");
    cfg["mu"] = sys.mu;
    cfg["delta"] = sys.delta;
    if (w_profile == "typeI" || w_profile == "typei") {
      cfg["a1"] = a1;
      cfg["C"] = C;
    }
    cfg["grid"] = grid;
    cfg["count"] = count;
    cfg["e_min"] = p.e_min;
    cfg["e_max"] = p.e_max;
    cfg["scan_step"] = p.scan_step;
    cfg["drift_tol"] = drift_tol;
    Report rep;
    rep.header = make_header("spectrum", cfg, std::nullopt);
    const SpectrumResult res = spectrum_s3(p, count);
    json r;
    r["record"] = "spectrum";
    r["eigenvalues"] = res.eigenvalues;
    r["eigenvalues_refined"] = res.eigenvalues_refined;
    r["drift"] = res.drift;
    r["grid"] = res.grid;
    r["regular_left"] = res.regular_left;
    r["regular_right"] = res.regular_right;
    r["complex_residual"] = res.complex_residual;
    r["diagnostic"] = res.diagnostic;
    rep.records.push_back(r);
    if (!res.diagnostic.empty()) rep.notes.push_back(res.diagnostic);
    double worst = res.eigenvalues.empty() ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    for (double d : res.drift) worst = std::isnan(d) ? d : std::max(worst, d);
    rep.check("max_drift", worst, drift_tol);
    return rep;
  }
};

// --- selection rules -------------------------------------------------------------------------------

struct SelectionRules {
  std::string omega = "+1";
  std::string jrange = "0..3";
  std::string step = "1";
  std::string format = "csv";
  void add(CLI::App* app) {
    app->add_option("--omega", omega, "Omega sign")->capture_default_str();
    app->add_option("--jrange", jrange, "J range lo..hi")->capture_default_str();
    app->add_option("--step", step, "J step (1 or 1/2)")->capture_default_str();
    app->add_option("--format", format, "csv | json")->capture_default_str();
  }
  Report run() const {
    const int om = parse_sign(omega);
    const auto [lo, hi] = parse_range(jrange);
    const HalfInt st = parse_halfint(step);
    if (st <= HalfInt(0)) throw ArgumentError("--step must be positive");
    if (format != "csv" && format != "json") throw ArgumentError("unknown --format '" + format + "'");
    json cfg;
    cfg["omega"] = om;
    cfg["jrange"] = lo.str() + ".." + hi.str();
    cfg["step"] = st.str();
    Report rep;
    rep.header = make_header("selection-rules", cfg, std::nullopt);
    rep.csv = format == "csv";
    rep.columns = {"omega", "delta", "delta_prime", "J", "J_prime", "factor", "outcome"};
    for (int d : {1, -1})
      for (int dp : {1, -1})
        for (HalfInt a = lo; a <= hi; a = a + st)
          for (HalfInt b = lo; b <= hi; b = b + st) {
            if (!(a + b).is_integer()) continue;
            const int f = selection_factor(om, d, dp, a, b);
            const std::string outcome = selection_outcome_name(selection_rule(om, d, dp, a, b));
            if (rep.csv) {
              rep.rows.push_back({std::to_string(om), std::to_string(d), std::to_string(dp), a.str(), b.str(),
                                  std::to_string(f), outcome});
            } else {
              json row;
              row["record"] = "row";
              row["omega"] = om;
              row["delta"] = d;
              row["delta_prime"] = dp;
              row["J"] = a.str();
              row["J_prime"] = b.str();
              row["factor"] = f;
              row["outcome"] = outcome;
              rep.records.push_back(row);
            }
          }
    return rep;
  }
};

// --- symmetry ----------------------------------------------------------------------------------------

struct SymmetryCheck {
  std::string jmax = "4";
  double A = 0.7;
  std::uint64_t seed = 7;
  double tol = 1e-12;
  int scan = 720;
  double consistency_tol = 1e-10;
  void add(CLI::App* app) {
    app->add_option("--jmax", jmax, "largest j of the truncated bases (<= 6)")->capture_default_str();
    app->add_option("--A", A, "angle of the N_A family")->capture_default_str();
    app->add_option("--seed", seed, "seed for random state coefficients")->capture_default_str();
    app->add_option("--tol", tol, "operator defect tolerance")->capture_default_str();
    app->add_option("--scan", scan, "number of sampled A in [0, 2 pi)")->capture_default_str();
    app->add_option("--consistency-tol", consistency_tol, "radial consistency tolerance")->capture_default_str();
  }
  Report run() const {
    const HalfInt J = parse_halfint(jmax);
    if (J < HalfInt(1) || J > HalfInt(6)) throw ArgumentError("--jmax must lie in [1, 6]");
    if (scan < 4) throw ArgumentError("--scan must be >= 4");
    json cfg;
    cfg["jmax"] = J.str();
    cfg["A"] = A;
    cfg["tol"] = tol;
    cfg["scan"] = scan;
    cfg["consistency_tol"] = consistency_tol;
    Report rep;
    rep.header = make_header("symmetry check", cfg, seed);
    std::mt19937_64 rng(seed);
    auto rc = [&]() { return cplx(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0); };

    const std::vector<Realization> reals = {
        {RealizationKind::PauliLambda, kHalf, 1},     {RealizationKind::AbelianK, kHalf, 1},
        {RealizationKind::DoubletSchwinger, 0, 1},    {RealizationKind::DiracGauge, kHalf, 1},
        {RealizationKind::WuYang, kHalf, 1},          {RealizationKind::WuYang, kHalf, -1}};
    for (const auto& re : reals) {
      const Su2Report s = su2_algebra_defect(re, J);
      json ex{{"realization", s.realization},
              {"basis_size", s.basis_size},
              {"casimir_defect", s.casimir_defect},
              {"j3_defect", s.j3_defect},
              {"closure", s.closure}};
      rep.check("su2_" + s.realization,
                std::max({s.commutator_defect, s.casimir_defect, s.j3_defect}), 10.0 * tol * (1 + J.value()), ex);
    }
    rep.check("j3_spectrum_transport", j3_spectrum_transport_defect(kHalf, J), 1e-12);

    // K-hat eigenvalues on Abelian delta states and j_min states.
    double k_err = 0.0, k_def = 0.0;
    for (int dk : {1, -1, 2, -2, 3}) {
      const HalfInt k = HalfInt::from_doubled(dk);
      const HalfInt jmin = k.abs() - kHalf;
      for (HalfInt jj = jmin + HalfInt(1); jj <= std::min(J, jmin + HalfInt(2)); jj = jj + HalfInt(1))
        for (int d : {1, -1}) {
          const auto st = abelian_delta_state(k, jj, jj, d, rc(), rc());
          const EigenFit fit = apply_K_hat(st);
          const double jh = jj.value() + 0.5, kv = k.value();
          const double expect = -d * std::sqrt(jh * jh - kv * kv);
          k_err = std::max(k_err, std::abs(fit.eigenvalue - cplx(expect)));
          k_def = std::max(k_def, fit.defect);
        }
    }
    rep.check("k_hat_abelian_eigenvalue", k_err, tol);
    rep.check("k_hat_abelian_defect", k_def, 10.0 * tol);
    double jmin_err = 0.0;
    for (int dk : {1, -1, 2, -2}) {
      const HalfInt k = HalfInt::from_doubled(dk);
      const EigenFit fit = apply_K_hat(abelian_jmin_state(k, k.abs() - kHalf, rc(), rc()));
      jmin_err = std::max({jmin_err, std::abs(fit.eigenvalue), fit.defect});
    }
    rep.check("k_hat_jmin_zero", jmin_err, tol);
    double kd_err = 0.0;
    for (HalfInt jj = 1; jj <= std::min(J, HalfInt(3)); jj = jj + HalfInt(1))
      for (int mu : {1, -1}) {
        const EigenFit fit = apply_K_hat(doublet_mu_state(jj, 0, A, 1, mu, rc(), rc()));
        const double expect = -mu * std::sqrt(jj.value() * (jj.value() + 1.0));
        kd_err = std::max({kd_err, std::abs(fit.eigenvalue - cplx(expect)), fit.defect});
      }
    rep.check("k_hat_doublet", kd_err, 10.0 * tol);

    // N_A eigenstates and the square identity.
    double na = 0.0;
    int wrong_delta = 0;
    for (HalfInt jj = 0; jj <= std::min(J, HalfInt(3)); jj = jj + HalfInt(1))
      for (int d : {1, -1}) {
        const auto st = constrained_doublet_state(jj, 0, A, d, {rc(), rc(), rc(), rc()});
        const NAResult r = apply_N_A(A, st);
        na = std::max(na, r.defect);
        if (r.delta != d) ++wrong_delta;
      }
    rep.check("n_a_eigenstates", na, 10.0 * tol);
    rep.check("n_a_delta_mismatches", wrong_delta, 0.0);
    rep.check("n_a_square", n_a_square_defect(A, J), 100.0 * tol);
    rep.check("n_a_conjugation", n_a_conjugation_defect(A), tol);

    const CommutatorReport cr = hamiltonian_commutators(A, std::min(J, HalfInt(3)));
    json cx{{"t3_NA", cr.t3_NA}, {"mixing_NA", cr.mixing_NA}, {"H_t3", cr.H_t3}};
    rep.check("hamiltonian_NA_commutator", cr.H_NA, 1e3 * tol, cx);

    // Consistency of the N_A-constrained radial system: W != 0 vs W = 0.
    const double eps = 1.3, m = 0.8, nu_s = std::sqrt(2.0) / 0.9, w_s = 0.4;
    const auto with_w = n_a_consistent_angles(scan, consistency_tol, 1, eps, m, nu_s, w_s, 0.0, 0.0);
    const auto without_w = n_a_consistent_angles(scan, consistency_tol, 1, eps, m, nu_s, 0.0, 0.0, 0.0);
    bool only_0_pi = !with_w.empty();
    for (double a : with_w)
      if (std::abs(a) > 1e-12 && std::abs(a - std::numbers::pi) > 1e-12) only_0_pi = false;
    json ew{{"angles", with_w}};
    rep.check("consistency_w_nonzero_only_0_pi", only_0_pi ? 0.0 : 1.0, 0.0, ew);
    rep.check("consistency_w_zero_missing", static_cast<double>(scan - static_cast<int>(without_w.size())), 0.0);
    return rep;
  }
};

void write_report(const Report& rep, const std::optional<std::string>& path, std::ostream& out) {
  if (path) {
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open output file '" + *path + "'");
    rep.write(f);
  } else {
    rep.write(out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"monopole-lab: BPS monopoles, Wigner D-functions, gauge frames, radial Dirac spectra", "monopole-lab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::optional<std::string> output;
  app.add_option("-o,--output", output, "write the report to this file instead of stdout");

  BpsVerify bps_verify;
  BpsTable bps_table;
  WignerEval wigner_eval;
  WignerCheck wigner_check;
  GaugeRotate gauge_rotate;
  GaugeVerify gauge_verify;
  Spectrum spectrum;
  SelectionRules selection;
  SymmetryCheck symmetry_check;

  std::function<Report()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto& handler) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    handler.add(sub);
    sub->callback([&action, &handler]() { action = [&handler]() { return handler.run(); }; });
    return sub;
  };
  CLI::App* bps = app.add_subcommand("bps", "closed-form BPS monopole profiles");
  bps->require_subcommand(1);
  bps->fallthrough();
  leaf(bps, "verify", "field-equation residuals on a radial grid", bps_verify);
  leaf(bps, "table", "tabulate K, Phi and W", bps_table);
  CLI::App* wig = app.add_subcommand("wigner", "Wigner D-functions");
  wig->require_subcommand(1);
  wig->fallthrough();
  leaf(wig, "eval", "evaluate one d / D value", wigner_eval);
  leaf(wig, "check", "randomized conformance sweep", wigner_check);
  CLI::App* gauge = app.add_subcommand("gauge", "isotopic gauge transformations");
  gauge->require_subcommand(1);
  gauge->fallthrough();
  leaf(gauge, "rotate", "transform the hedgehog sample at one point", gauge_rotate);
  leaf(gauge, "verify", "frame transition defects on an angular grid", gauge_verify);
  leaf(&app, "spectrum", "discrete Dirac spectrum on the unit 3-sphere", spectrum);
  leaf(&app, "selection-rules", "truth table of the N_A selection rule", selection);
  CLI::App* sym = app.add_subcommand("symmetry", "operator algebra and discrete symmetries");
  sym->require_subcommand(1);
  sym->fallthrough();
  leaf(sym, "check", "defect report of the symmetry operators", symmetry_check);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (!action) {
    err << "monopole-lab: no command given\n";
    return kExitUsage;
  }
  try {
    const Report rep = action();
    write_report(rep, output, out);
    if (!rep.failed.empty()) {
      err << "monopole-lab: tolerance breach:";
      for (const auto& f : rep.failed) err << ' ' << f;
      err << '\n';
    }
    return rep.exit_code();
  } catch (const ArgumentError& e) {
    err << "monopole-lab: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "monopole-lab: invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "monopole-lab: unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "monopole-lab: error: " << e.what() << '\n';
    return kExitToleranceBreach;
  }
}

}  // namespace monopole_lab::cli
