// Batch verification front end. Every command runs a named check suite,
// writes a machine-readable report (JSON or CSV), and exits 0 exactly when
// all checks pass their tolerances. Exit codes: 0 pass, 1 check failure,
// 2 usage error, 3 I/O failure. Randomized suites draw from mt19937_64 with
// the --seed flag recorded in the report; WE_KIT_THREADS caps worker threads.

#include "CLI11.hpp"
#include "wekit/conditions.hpp"
#include "wekit/euler_ode.hpp"
#include "wekit/family.hpp"
#include "wekit/level_map.hpp"
#include "wekit/model_spaces.hpp"
#include "wekit/parallel.hpp"
#include "wekit/report.hpp"
#include "wekit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace wekit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

CheckRow info(const std::string& name, double value) {
  return CheckRow{name, value, std::nullopt, std::nullopt, true};
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  f << text;
  if (!f.good()) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return kExitIo;
  }
  return kExitPass;
}

std::string results_csv(const RunReport& rep) {
  std::string out = csv_line({"name", "value", "expected", "tol", "pass"});
  for (const CheckRow& r : rep.results)
    out += csv_line({r.name, format_g17(r.value),
                     r.expected ? format_g17(*r.expected) : "",
                     r.tol ? format_g17(*r.tol) : "", r.pass ? "true" : "false"});
  return out;
}

int finish(RunReport& rep, const std::string& format, const std::string& out_path) {
  rep.pass = std::all_of(rep.results.begin(), rep.results.end(),
                         [](const CheckRow& r) { return r.pass; });
  const std::string text = format == "csv" ? results_csv(rep) : to_json(rep);
  const int io = emit(text, out_path);
  if (io != kExitPass) return io;
  return rep.pass ? kExitPass : kExitFail;
}

int finish_table(RunReport& rep, const std::string& format,
                 const std::string& out_path, const std::string& table) {
  rep.pass = std::all_of(rep.results.begin(), rep.results.end(),
                         [](const CheckRow& r) { return r.pass; });
  const std::string text = format == "csv" ? table : to_json(rep);
  const int io = emit(text, out_path);
  if (io != kExitPass) return io;
  return rep.pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- identities

struct IdentityAcc {
  double trc_ricci = 0, trc_weyl = 0, weyl_trc = 0, split_a = 0, split_b = 0;
  bool iff_ok = true;
};

int run_identities(int n, int samples, std::uint64_t seed, double tol,
                   const std::string& format, const std::string& out) {
  std::vector<IdentityAcc> acc(samples);
  parallel_for(samples, [&](int i) {
    const CurvTensor r = random_curvature(seed + static_cast<std::uint64_t>(i), n, 1.0);
    const Metric g(Eigen::MatrixXd::Identity(n, n));
    const IdentityReport rep = identity_suite(r, g, tol);
    IdentityAcc& a = acc[i];
    a.split_a = rep.weyl_split_identity_a.value_or(0.0);
    a.split_b = rep.weyl_split_identity_b.value_or(0.0);
    if (n == 4) {
      a.trc_ricci = *rep.trc_ricci_identity;
      a.trc_weyl = *rep.trc_weyl_ricci_identity;
      a.weyl_trc = *rep.weyl_trc_multiple;
      a.iff_ok = *rep.iff_consistent;
    }
  });
  IdentityAcc mx;
  mx.iff_ok = true;
  for (const IdentityAcc& a : acc) {
    mx.trc_ricci = std::max(mx.trc_ricci, a.trc_ricci);
    mx.trc_weyl = std::max(mx.trc_weyl, a.trc_weyl);
    mx.weyl_trc = std::max(mx.weyl_trc, a.weyl_trc);
    mx.split_a = std::max(mx.split_a, a.split_a);
    mx.split_b = std::max(mx.split_b, a.split_b);
    mx.iff_ok = mx.iff_ok && a.iff_ok;
  }

  RunReport rep;
  rep.command = "identities";
  rep.config = {cfg("n", n), cfg("samples", samples),
                cfg("seed", static_cast<double>(seed)), cfg("tol", tol),
                cfg("generator", std::string("mt19937_64"))};
  if (n == 4) {
    rep.results.push_back(below("trc_ricci_identity_max", mx.trc_ricci, tol));
    rep.results.push_back(below("trc_weyl_ricci_identity_max", mx.trc_weyl, tol));
    rep.results.push_back(below("weyl_trc_multiple_max", mx.weyl_trc, tol));
    rep.results.push_back(claim("iff_consistent_all", mx.iff_ok));
  }
  rep.results.push_back(below("weyl_split_identity_a_max", mx.split_a, tol));
  rep.results.push_back(below("weyl_split_identity_b_max", mx.split_b, tol));
  return finish(rep, format, out);
}

// ------------------------------------------------------------------- example

void kahler_checks(RunReport& rep, const CurvTensor& r, const Metric& g,
                   const ComplexStructureJ& j, const Eigen::Matrix4d& frame,
                   double tol) {
  const ContractionBundle b = contraction_bundle(r, g);
  const EquivReport eq = equiv_conditions(r, g, j, tol);
  rep.results.push_back(claim("ricci_hermitian", eq.ricci_hermitian));
  rep.results.push_back(info("cond_a", eq.cond_a));
  rep.results.push_back(info("cond_b", eq.cond_b));
  rep.results.push_back(info("cond_c", eq.cond_c));
  rep.results.push_back(info("cond_d", eq.cond_d));
  rep.results.push_back(claim("conditions_agree", eq.cond_a == eq.cond_b &&
                                                      eq.cond_b == eq.cond_c &&
                                                      eq.cond_c == eq.cond_d));
  rep.results.push_back(claim("spectrum_ok", eq.spectrum_ok));
  rep.results.push_back(info("spectrum_a_value", eq.a_value));

  const BasisOracle oracle = weyl_component_oracle(r, g, j, tol);
  if (oracle.applicable)
    rep.results.push_back(claim("weyl_basis_oracle_matches_d", oracle.ok == eq.cond_d));

  const TwoForm om = kahler_form(g, j);
  const TwoForm wom = act_on_form(b.weyl, om, g);
  const double wom_res = norm_g(g, wom.m - (b.scalar / 6.0) * om.m) /
                         std::max(norm_g(g, om.m), kNormFloor);
  rep.results.push_back(below("weyl_kahler_form_residual", wom_res, 1e-9));

  const TwoForm eta(j.mat.transpose() * b.einstein.m);
  const HodgeSplit sp = hodge_split(eta, g, frame);
  const double eta_nrm = norm_g(g, eta.m);
  const double asd_res =
      eta_nrm <= kNormFloor ? 0.0 : norm_g(g, sp.sd.m) / eta_nrm;
  rep.results.push_back(below("einstein_form_asd_residual", asd_res, 1e-10));
}

int run_example(const std::string& kind, double k1, double k2, double a,
                double kappa, int n, double tol, const std::string& format,
                const std::string& out) {
  RunReport rep;
  rep.command = "example";
  rep.config = {cfg("kind", kind), cfg("tol", tol)};

  if (kind == "product") {
    rep.config.push_back(cfg("k1", k1));
    rep.config.push_back(cfg("k2", k2));
    const auto ex = product_surfaces(k1, k2);
    const WeaklyEinstein we = is_weakly_einstein(ex.curv, ex.g, tol);
    rep.results.push_back(info("weakly_einstein", we.weakly_einstein));
    rep.results.push_back(info("trc_factor", we.factor));
    rep.results.push_back(info("trc_multiple_residual", we.residual));
    const bool expect = std::abs(k1 * k1 - k2 * k2) <= tol * std::max(1.0, k1 * k1);
    rep.results.push_back(claim("matches_product_criterion", we.weakly_einstein == expect));
    const IdentityReport ids = identity_suite(ex.curv, ex.g, tol);
    rep.results.push_back(claim("iff_consistent", *ids.iff_consistent));
    kahler_checks(rep, ex.curv, ex.g, *ex.j, Eigen::Matrix4d::Identity(), tol);
  } else if (kind == "eps") {
    rep.config.push_back(cfg("a", a));
    const auto ex = eps_space(a);
    const ContractionBundle b = contraction_bundle(ex.curv, ex.g);
    const double a2 = a * a;
    Eigen::Vector4d eig = b.ricci.m.diagonal();
    std::sort(eig.data(), eig.data() + 4);
    Eigen::Vector4d expect(-3 * a2, -a2, -a2, a2);
    for (int i = 0; i < 4; ++i)
      rep.results.push_back(
          near("ricci_eigenvalue_" + std::to_string(i), eig(i), expect(i), 1e-12));
    const WeaklyEinstein we = is_weakly_einstein(ex.curv, ex.g, tol);
    rep.results.push_back(claim("weakly_einstein", we.weakly_einstein));
    rep.results.push_back(near("trc_factor", we.factor, 6.0 * a2 * a2, 1e-10));
    const SpectrumCheck sc = kahler_spectrum_check(b.einstein, ex.g, tol, b.scalar);
    rep.results.push_back(claim("kahler_spectrum_fails", !sc.spectrum_ok));
    const IdentityReport ids = identity_suite(ex.curv, ex.g, tol);
    rep.results.push_back(claim("iff_consistent", *ids.iff_consistent));
  } else if (kind == "constant") {
    rep.config.push_back(cfg("kappa", kappa));
    rep.config.push_back(cfg("n", n));
    const auto ex = constant_curvature(kappa, n);
    const ContractionBundle b = contraction_bundle(ex.curv, ex.g);
    rep.results.push_back(
        near("scalar", b.scalar, n * (n - 1) * kappa, 1e-10 * std::max(1.0, std::abs(kappa))));
    rep.results.push_back(below("einstein_norm", norm_g(ex.g, b.einstein.m), 1e-12));
    rep.results.push_back(below("weyl_norm", norm_g(ex.g, b.weyl), 1e-11));
    if (n == 4) {
      const WeaklyEinstein we = is_weakly_einstein(ex.curv, ex.g, tol);
      rep.results.push_back(claim("weakly_einstein", we.weakly_einstein));
    }
  } else {
    std::cerr << "error: unknown example kind: " << kind << "\n";
    return kExitUsage;
  }
  return finish(rep, format, out);
}

// -------------------------------------------------------------------- family

struct FamilyRow {
  double t, q, mu, lambda, ode_res, ein_res;
  EquivReport eq;
  double koszul, cfc, cross_mu, cross_lam, wom_res, asd_res, bianchi;
};

int run_family(const QSpec& spec, double p, double tmin, double tmax, int samples,
               double h, double tol, const std::string& format,
               const std::string& out) {
  const FamilyParams fp = family_from_qspec(spec, p);
  const Eigen::Matrix4d frame = family_orientation_frame();
  std::vector<FamilyRow> rows(samples);
  parallel_for(samples, [&](int i) {
    const double t = tmin + (tmax - tmin) * i / std::max(1, samples - 1);
    FamilyRow& row = rows[i];
    row.t = t;
    const FramePoint pt = frame_point(fp, t);
    row.q = pt.q_value;
    row.mu = pt.mu;
    row.lambda = pt.lambda;
    const WEResiduals wr = we_residual(fp, spec, t);
    row.ode_res = wr.ode;
    row.ein_res = wr.einstein;
    row.eq = equiv_conditions(pt.curv, pt.g, pt.j, tol);
    row.koszul = koszul_check(fp, t);
    row.cfc = curvature_from_connection(fp, t, h);
    const RicciEigs eig = ricci_eigs_potential_path(spec, t);
    row.cross_mu = std::abs(eig.mu - pt.mu) / std::max(1.0, std::abs(pt.mu));
    row.cross_lam = std::abs(eig.lambda - pt.lambda) / std::max(1.0, std::abs(pt.lambda));
    row.bianchi = curvature_symmetry_residual(pt.curv);

    const ContractionBundle b = contraction_bundle(pt.curv, pt.g);
    const TwoForm om = kahler_form(pt.g, pt.j);
    const TwoForm wom = act_on_form(b.weyl, om, pt.g);
    row.wom_res = norm_g(pt.g, wom.m - (b.scalar / 6.0) * om.m) /
                  std::max(norm_g(pt.g, om.m), kNormFloor);
    const TwoForm eta(pt.j.mat.transpose() * b.einstein.m);
    const double eta_nrm = norm_g(pt.g, eta.m);
    row.asd_res = eta_nrm <= kNormFloor
                      ? 0.0
                      : norm_g(pt.g, hodge_split(eta, pt.g, frame).sd.m) / eta_nrm;
  });

  RunReport rep;
  rep.command = "family";
  rep.config = {cfg("K", spec.k),     cfg("gamma", spec.gamma), cfg("eps", spec.eps),
                cfg("A", spec.a),     cfg("B", spec.b),         cfg("p", p),
                cfg("tmin", tmin),    cfg("tmax", tmax),        cfg("samples", samples),
                cfg("h", h),          cfg("tol", tol)};
  double koszul = 0, cfc = 0, cross = 0, wom = 0, asd = 0, ode = 0, bianchi = 0;
  bool agree = true, we_match = true;
  for (const FamilyRow& r : rows) {
    koszul = std::max(koszul, r.koszul);
    cfc = std::max(cfc, r.cfc);
    cross = std::max({cross, r.cross_mu, r.cross_lam});
    wom = std::max(wom, r.wom_res);
    asd = std::max(asd, r.asd_res);
    ode = std::max(ode, r.ode_res);
    bianchi = std::max(bianchi, r.bianchi);
    const bool all = r.eq.cond_a && r.eq.cond_b && r.eq.cond_c && r.eq.cond_d;
    const bool same = r.eq.cond_a == r.eq.cond_b && r.eq.cond_b == r.eq.cond_c &&
                      r.eq.cond_c == r.eq.cond_d;
    agree = agree && same;
    we_match = we_match && (all == (r.ode_res <= tol));
  }
  rep.results.push_back(below("koszul_max", koszul, 1e-10));
  rep.results.push_back(below("curvature_from_connection_max", cfc, 1e-6));
  rep.results.push_back(below("ricci_cross_path_max", cross, 1e-9));
  rep.results.push_back(below("weyl_kahler_form_residual_max", wom, 1e-9));
  rep.results.push_back(below("einstein_form_asd_residual_max", asd, 1e-10));
  rep.results.push_back(below("first_bianchi_max", bianchi, 1e-12));
  rep.results.push_back(below("ode_residual_max", ode, 1e-10));
  rep.results.push_back(claim("conditions_agree_all", agree));
  rep.results.push_back(claim("ode_matches_equivalence", we_match));

  std::string table = csv_line({"t", "Q", "mu", "lambda", "ode_residual",
                                "einstein_residual", "cond_a", "cond_b", "cond_c",
                                "cond_d"});
  for (const FamilyRow& r : rows)
    table += csv_line({format_g17(r.t), format_g17(r.q), format_g17(r.mu),
                       format_g17(r.lambda), format_g17(r.ode_res),
                       format_g17(r.ein_res), r.eq.cond_a ? "true" : "false",
                       r.eq.cond_b ? "true" : "false", r.eq.cond_c ? "true" : "false",
                       r.eq.cond_d ? "true" : "false"});
  return finish_table(rep, format, out, table);
}

// --------------------------------------------------------------------- ode-q

int run_ode_q(const QSpec& spec, double tlo, double thi, int grid, int samples,
              std::uint64_t seed, const std::string& format, const std::string& out) {
  // residual fuzz over random specs around the requested one
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uk(-5.0, 5.0), ug(-2.0, 2.0), uab(-3.0, 3.0),
      ul(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    QSpec s;
    s.k = uk(rng);
    s.gamma = ug(rng);
    s.eps = (rng() & 1) ? 1 : -1;
    s.a = uab(rng);
    s.b = uab(rng);
    const double t = s.gamma + s.eps * std::pow(10.0, ul(rng));
    const QJet jet = q_eval(s, t);
    const double u = t - s.gamma;
    worst = std::max(worst, std::abs(u * u * jet.d2q + 2.0 * jet.q - s.eps * s.k * u) /
                                (1.0 + std::abs(jet.q)));
  }

  const auto ivs = positivity_scan(spec, tlo, thi, grid);
  double root_res = 0.0;
  bool disjoint = true;
  double prev_hi = -1e300;
  for (const auto& iv : ivs) {
    if (iv.lo < prev_hi) disjoint = false;
    prev_hi = iv.hi;
    if (iv.lo_kind == BoundaryKind::zero)
      root_res = std::max(root_res, std::abs(q_eval(spec, iv.lo).q));
    if (iv.hi_kind == BoundaryKind::zero)
      root_res = std::max(root_res, std::abs(q_eval(spec, iv.hi).q));
  }

  RunReport rep;
  rep.command = "ode-q";
  rep.config = {cfg("K", spec.k),   cfg("gamma", spec.gamma), cfg("eps", spec.eps),
                cfg("A", spec.a),   cfg("B", spec.b),         cfg("tlo", tlo),
                cfg("thi", thi),    cfg("grid", grid),        cfg("samples", samples),
                cfg("seed", static_cast<double>(seed)),
                cfg("generator", std::string("mt19937_64"))};
  rep.results.push_back(below("ode_residual_max", worst, 1e-10));
  rep.results.push_back(below("root_residual_max", root_res, 1e-10));
  rep.results.push_back(claim("intervals_disjoint", disjoint));
  rep.results.push_back(info("intervals_found", static_cast<double>(ivs.size())));

  std::string table =
      csv_line({"lo", "hi", "lo_kind", "hi_kind", "lo_slope", "hi_slope"});
  auto kind_name = [](BoundaryKind k) {
    return k == BoundaryKind::zero ? "zero"
           : k == BoundaryKind::blowup ? "blowup" : "domain_edge";
  };
  for (const auto& iv : ivs)
    table += csv_line({format_g17(iv.lo), format_g17(iv.hi), kind_name(iv.lo_kind),
                       kind_name(iv.hi_kind), format_g17(iv.lo_slope),
                       format_g17(iv.hi_slope)});
  return finish_table(rep, format, out, table);
}

// ------------------------------------------------------------------- lemma-f

int run_lemma_f(int grid, double margin, const std::string& format,
                const std::string& out) {
  const SlopeScan scan = verify_lemma(grid, margin);
  RunReport rep;
  rep.command = "lemma-f";
  rep.config = {cfg("grid", grid), cfg("margin", margin)};
  rep.results.push_back(near("critical_angle", scan.c, 1.209429, 1e-5));
  rep.results.push_back(near("three_c_minus_pi", scan.three_c_minus_pi, 0.4867, 1e-3));
  rep.results.push_back(claim("three_c_minus_pi_in_range", scan.three_c_minus_pi_in_range));
  // reference decimal reproduces only to ~5e-2; kept as stated
  rep.results.push_back(near("f2_ratio", scan.f2_ratio, 1.169, 1e-3));
  rep.results.push_back(claim("f2_ratio_above_one", scan.f2_ratio > 1.0));
  rep.results.push_back(near("beta_at_zero", beta_value(0.0), M_PI, 1e-9));
  rep.results.push_back(near("alpha0", scan.alpha0, 0.3017, 1e-3));
  rep.results.push_back(near("beta_alpha0", scan.beta_alpha0, 2.418858, 1e-4));
  rep.results.push_back(near("beta_prime_alpha0", scan.beta_prime_alpha0, -1.8755, 1e-3));
  rep.results.push_back(claim("beta_prime_at_c_is_minus_one", beta_slope(scan.c) == -1.0));
  rep.results.push_back(info("max_beta_prime", scan.max_beta_prime));
  rep.results.push_back(claim("verdict_slope_below_minus_one", scan.verdict));
  return finish(rep, format, out);
}

// ---------------------------------------------------------- nonrealizability

struct SweepRow {
  double k, phase_deg, a, b;
  int intervals = 0, zero_zero = 0;
  bool match_found = false;
  double min_mismatch = 1e300;
  double roundtrip = 0.0;
};

int run_nonrealizability(int phases, double periods, int grid, double match_tol,
                         double amp, const std::string& format,
                         const std::string& out) {
  const double period_t = std::exp(4.0 * M_PI / std::sqrt(7.0));
  const double t_lo = 0.02;
  const double t_hi = t_lo * std::pow(period_t, periods);
  const std::vector<double> k_values = {-1.0, 1.0};

  std::vector<SweepRow> rows(static_cast<size_t>(phases) * k_values.size());
  parallel_for(static_cast<int>(rows.size()), [&](int idx) {
    const int ki = idx / phases;
    const int pi_ = idx % phases;
    SweepRow& row = rows[idx];
    row.k = k_values[ki];
    row.phase_deg = 360.0 * pi_ / phases;
    const double ph = 2.0 * M_PI * pi_ / phases;
    row.a = amp * std::cos(ph);
    row.b = amp * std::sin(ph);
    const QSpec spec{row.k, 0.0, 1, row.a, row.b};
    const auto ivs = positivity_scan(spec, t_lo, t_hi, grid);
    row.intervals = static_cast<int>(ivs.size());
    for (const auto& iv : ivs) {
      if (iv.lo_kind != BoundaryKind::zero || iv.hi_kind != BoundaryKind::zero)
        continue;
      ++row.zero_zero;
      if (boundary_match(iv, match_tol)) row.match_found = true;
      if (iv.lo_slope > 0.0)
        row.min_mismatch = std::min(
            row.min_mismatch, std::abs(iv.lo_slope + iv.hi_slope) / iv.lo_slope);
    }
    row.roundtrip = reduce_to_sine(spec).roundtrip_residual;
  });

  int total_iv = 0, total_zz = 0, matches = 0;
  double min_mismatch = 1e300, max_rt = 0.0;
  for (const SweepRow& r : rows) {
    total_iv += r.intervals;
    total_zz += r.zero_zero;
    if (r.match_found) ++matches;
    min_mismatch = std::min(min_mismatch, r.min_mismatch);
    max_rt = std::max(max_rt, r.roundtrip);
  }

  RunReport rep;
  rep.command = "nonrealizability";
  rep.config = {cfg("phases", phases),   cfg("periods", periods),
                cfg("grid", grid),       cfg("match_tol", match_tol),
                cfg("amp", amp),         cfg("t_lo", t_lo),
                cfg("t_hi", t_hi)};
  rep.results.push_back(info("specs_swept", static_cast<double>(rows.size())));
  rep.results.push_back(info("positivity_intervals", total_iv));
  rep.results.push_back(info("zero_zero_intervals", total_zz));
  rep.results.push_back(claim("zero_zero_intervals_found", total_zz > 0));
  rep.results.push_back(claim("no_boundary_match", matches == 0));
  rep.results.push_back(info("min_slope_mismatch", min_mismatch));
  rep.results.push_back(below("reduce_to_sine_roundtrip_max", max_rt, 1e-10));

  std::string table = csv_line({"K", "eps", "phase_deg", "A", "B", "intervals",
                                "zero_zero", "match_found", "roundtrip_residual"});
  for (const SweepRow& r : rows)
    table += csv_line({format_g17(r.k), "1", format_g17(r.phase_deg), format_g17(r.a),
                       format_g17(r.b), std::to_string(r.intervals),
                       std::to_string(r.zero_zero), r.match_found ? "true" : "false",
                       format_g17(r.roundtrip)});
  return finish_table(rep, format, out, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakly-Einstein Kahler surface verification kit"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--format may follow the subcommand

  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  // identities
  auto* c_id = app.add_subcommand("identities", "contraction identities on random tensors");
  int id_n = 4, id_samples = 1000;
  std::uint64_t id_seed = 7;
  double id_tol = 1e-9;
  c_id->add_option("--n", id_n, "dimension")->check(CLI::Range(4, 8));
  c_id->add_option("--samples", id_samples)->check(CLI::PositiveNumber);
  c_id->add_option("--seed", id_seed);
  c_id->add_option("--tol", id_tol)->check(CLI::PositiveNumber);

  // example
  auto* c_ex = app.add_subcommand("example", "concrete curvature examples");
  std::string ex_kind;
  double ex_k1 = 1.0, ex_k2 = -1.0, ex_a = 1.0, ex_kappa = 1.0;
  int ex_n = 4;
  double ex_tol = 1e-9;
  c_ex->add_option("kind", ex_kind, "product | eps | constant")->required();
  c_ex->add_option("--k1", ex_k1);
  c_ex->add_option("--k2", ex_k2);
  c_ex->add_option("--a", ex_a);
  c_ex->add_option("--kappa", ex_kappa);
  c_ex->add_option("--n", ex_n)->check(CLI::Range(2, 8));
  c_ex->add_option("--tol", ex_tol)->check(CLI::PositiveNumber);

  // family
  auto* c_fam = app.add_subcommand("family", "cohomogeneity-one family scan");
  QSpec fam_spec{4.0, 0.0, 1, 0.3, 0.0};
  double fam_p = 1.0, fam_tmin = 0.5, fam_tmax = 3.0, fam_h = 1e-5, fam_tol = 1e-8;
  int fam_samples = 40;
  c_fam->add_option("--K", fam_spec.k);
  c_fam->add_option("--gamma", fam_spec.gamma);
  c_fam->add_option("--eps", fam_spec.eps)->check(CLI::IsMember({-1, 1}));
  c_fam->add_option("--A", fam_spec.a);
  c_fam->add_option("--B", fam_spec.b);
  c_fam->add_option("--p", fam_p);
  c_fam->add_option("--tmin", fam_tmin);
  c_fam->add_option("--tmax", fam_tmax);
  c_fam->add_option("--samples", fam_samples)->check(CLI::PositiveNumber);
  c_fam->add_option("--fd-step", fam_h)->check(CLI::PositiveNumber);
  c_fam->add_option("--tol", fam_tol)->check(CLI::PositiveNumber);

  // ode-q
  auto* c_ode = app.add_subcommand("ode-q", "closed-form ODE solutions and positivity");
  QSpec ode_spec{0.0, 0.0, 1, 1.0, 0.0};
  double ode_tlo = 0.35, ode_thi = 40.0;
  int ode_grid = 2000, ode_samples = 10000;
  std::uint64_t ode_seed = 2024;
  c_ode->add_option("--K", ode_spec.k);
  c_ode->add_option("--gamma", ode_spec.gamma);
  c_ode->add_option("--eps", ode_spec.eps)->check(CLI::IsMember({-1, 1}));
  c_ode->add_option("--A", ode_spec.a);
  c_ode->add_option("--B", ode_spec.b);
  c_ode->add_option("--tlo", ode_tlo);
  c_ode->add_option("--thi", ode_thi);
  c_ode->add_option("--grid", ode_grid)->check(CLI::Range(100, 100000000));
  c_ode->add_option("--samples", ode_samples)->check(CLI::PositiveNumber);
  c_ode->add_option("--seed", ode_seed);

  // lemma-f
  auto* c_lem = app.add_subcommand("lemma-f", "level-map slope scan and constants");
  int lem_grid = 100000;
  double lem_margin = 1e-3;
  c_lem->add_option("--grid", lem_grid)->check(CLI::Range(10, 100000000));
  c_lem->add_option("--margin", lem_margin)->check(CLI::PositiveNumber);

  // nonrealizability
  auto* c_non = app.add_subcommand("nonrealizability",
                                   "endpoint-slope sweep over oscillatory profiles");
  int non_phases = 360, non_grid = 3600;
  double non_periods = 3.0, non_tol = 1e-6, non_amp = 1.0;
  c_non->add_option("--phases", non_phases)->check(CLI::PositiveNumber);
  c_non->add_option("--periods", non_periods)->check(CLI::PositiveNumber);
  c_non->add_option("--grid", non_grid)->check(CLI::Range(100, 100000000));
  c_non->add_option("--tol", non_tol)->check(CLI::PositiveNumber);
  c_non->add_option("--amp", non_amp)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*c_id) return run_identities(id_n, id_samples, id_seed, id_tol, format, out_path);
    if (*c_ex)
      return run_example(ex_kind, ex_k1, ex_k2, ex_a, ex_kappa, ex_n, ex_tol, format,
                         out_path);
    if (*c_fam)
      return run_family(fam_spec, fam_p, fam_tmin, fam_tmax, fam_samples, fam_h,
                        fam_tol, format, out_path);
    if (*c_ode)
      return run_ode_q(ode_spec, ode_tlo, ode_thi, ode_grid, ode_samples, ode_seed,
                       format, out_path);
    if (*c_lem) return run_lemma_f(lem_grid, lem_margin, format, out_path);
    if (*c_non)
      return run_nonrealizability(non_phases, non_periods, non_grid, non_tol, non_amp,
                                  format, out_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
