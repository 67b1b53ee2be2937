// vwalk: exact combinatorics of the XX chain from the command line.
//
// Subcommands expose the library operations (circulant powers, walker
// counts, Schur evaluation, plane-partition generating functions, Bethe
// amplitudes, Fermi-determinant traces) plus an identity suite that
// cross-verifies the implemented formulas against their oracles.
//
// Exit codes: 0 success, 1 guard violation or failed identity suite,
// 2 argument errors.

#include <complex>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vw/bethe.hpp"
#include "vw/circulant.hpp"
#include "vw/combinatorics.hpp"
#include "vw/genfun.hpp"
#include "vw/parallel.hpp"
#include "vw/partitions.hpp"
#include "vw/schur.hpp"
#include "vw/series.hpp"
#include "vw/walks.hpp"

using nlohmann::json;
using namespace vw;

namespace {

enum class Format { Plain, Json, Csv };

struct Options {
  Format format = Format::Plain;
  bool unsafe_limits = false;
};

json ratio_json(const BigRatio& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stol(tok));
  }
  return out;
}

BigRatio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_ratio(BigInt(text), BigInt(1));
  return make_ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

void emit_scalar(const Options& opt, const std::string& key, const json& value) {
  switch (opt.format) {
    case Format::Json:
      std::cout << json{{key, value}}.dump(2) << "\n";
      break;
    case Format::Csv:
      std::cout << key << ","
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      break;
    case Format::Plain:
      std::cout << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      break;
  }
}

void emit_object(const Options& opt, const json& obj) {
  switch (opt.format) {
    case Format::Json:
      std::cout << obj.dump(2) << "\n";
      break;
    case Format::Csv:
      for (auto it = obj.begin(); it != obj.end(); ++it)
        std::cout << it.key() << ","
                  << (it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
                  << "\n";
      break;
    case Format::Plain:
      for (auto it = obj.begin(); it != obj.end(); ++it)
        std::cout << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
                  << "\n";
      break;
  }
}

json poly_json(const QGammaPoly& poly) {
  json terms = json::array();
  for (const auto& [mono, c] : poly.items())
    terms.push_back(json{{"monomial", {mono.first, mono.second}},
                         {"coefficient", c.get_str()}});
  return terms;
}

double rel_gap(double a, double b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Identity suite

struct SuiteRow {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<SuiteRow> run_identity_suite(bool full) {
  std::vector<SuiteRow> rows;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    rows.push_back({name, pass, detail});
  };

  const long kmax = full ? 20 : 12;
  {
    bool ok = true;
    for (long m : {2L, 4L, 6L, 8L})
      for (long k = 0; k <= kmax && ok; ++k)
        for (RingSector s : {RingSector::Periodic, RingSector::Antiperiodic}) {
          RingSpec ring(m);
          CirculantPower oracle = circulant_power_oracle(ring, k, s);
          for (long d = 0; d < m; ++d)
            ok = ok && circulant_power_entry(ring, k, 1 + d, 1, s) == oracle.entry_offset(d);
        }
    record("circulant closed form vs matrix oracle (both sectors)", ok, "exact");
  }
  {
    RingSpec ring(6);
    bool ok = circulant_power_entry(ring, 14, 1, 1) == 5462 &&
              circulant_power_entry(ring, 14, 3, 1) == 5461 &&
              circulant_power_entry(ring, 15, 2, 1) == 10923 &&
              circulant_power_entry(ring, 15, 4, 1) == 10922;
    record("golden circulant entries at M=6, K=14/15", ok, "exact");
  }
  {
    double worst = 0.0;
    long nmax = full ? 20 : 12, rmax = full ? 8 : 5;
    for (long r = 1; r <= rmax; ++r)
      for (long n = 0; n <= nmax; ++n)
        for (long t = 0; t < r; ++t) {
          double trig;
          BigInt exact;
          ramus_check(r, n, t, 1e-9, &trig, &exact);
          worst = std::max(worst, std::abs(trig - to_double(exact)));
        }
    record("ramus cosine sum vs lacunary binomials", worst <= 1e-9,
           "max |gap| = " + sci(worst) + ", tol 1e-9");
  }
  {
    double worst = 0.0;
    long nmax = full ? 3 : 2;
    for (long m : {4L, 6L})
      for (long n = 1; n <= nmax; ++n)
        for (long k = 0; k <= 5; ++k) {
          RingSpec ring(m);
          auto mus = enumerate_strict(n, std::min(m, 4L));
          for (const auto& l : mus)
            for (const auto& r : mus)
              worst = std::max(worst,
                               rel_gap(generalized_ramus_rhs(ring, k, l, r),
                                       to_double(generalized_ramus_lhs(ring, k, l, r))));
        }
    record("generalized ramus product sum vs momentum grid", worst <= 1e-8,
           "max rel gap = " + sci(worst) + ", tol 1e-8");
  }
  {
    double worst = 0.0;
    for (long n = 1; n <= (full ? 3 : 2); ++n) {
      StrictPartition delta = staircase(n);
      WalkConfig line{Geometry::Line, 0, false};
      for (long k = 0; k <= (full ? 8 : 6); ++k) {
        double lhs = to_double(count_formula(line, delta, delta, k));
        double rhs = std::pow(2.0, static_cast<double>(k)) * j_integral(k, n);
        worst = std::max(worst, rel_gap(lhs, rhs));
      }
    }
    record("staircase counts vs 2^K J(K,N) quadrature", worst <= 1e-6,
           "max rel gap = " + sci(worst) + ", tol 1e-6");
  }
  {
    bool ok = true;
    WalkLimits lim{3, 8};
    for (long n = 1; n <= (full ? 3 : 2) && ok; ++n) {
      auto mus = enumerate_strict(n, 4);
      std::vector<WalkConfig> cfgs{{Geometry::Line, 0, false},
                                   {Geometry::Ring, 6, false},
                                   {Geometry::Ring, 8, false}};
      for (const auto& cfg : cfgs)
        for (const auto& l : mus)
          for (const auto& r : mus)
            for (long k = 0; k <= (full ? 6 : 4); ++k)
              ok = ok && count_formula(cfg, l, r, k) == oracle_count(cfg, l, r, k, lim).total;
    }
    record("walker determinant formula vs exhaustive oracle", ok, "exact");
  }
  {
    bool ok = true;
    WalkConfig line{Geometry::Line, 0, false};
    for (const auto& l : enumerate_strict(2, 4))
      for (const auto& r : enumerate_strict(2, 4)) {
        TruncatedSeries gen = bessel_det_generating(l, r, 6);
        for (long k = 0; k <= 6; ++k)
          ok = ok && extract_dk(gen, k) == BigRatio(count_formula(line, l, r, k));
      }
    record("bessel determinant generating function vs counts", ok, "exact");
  }
  {
    bool ok = true;
    std::mt19937 rng(20240809);
    std::uniform_int_distribution<long> num(-9, 9);
    long reps = full ? 6 : 3;
    for (long n = 1; n <= 3 && ok; ++n)
      for (long rep = 0; rep < reps && ok; ++rep) {
        std::vector<BigRatio> pts;
        while (static_cast<long>(pts.size()) < n) {
          BigRatio v = make_ratio(num(rng), 7);
          bool dup = v == 0;
          for (const auto& w : pts) dup = dup || w == v;
          if (!dup) pts.push_back(v);
        }
        std::span<const BigRatio> xs(pts);
        for (const Partition& lam : BoxPartitions(n, 3)) {
          ok = ok && schur_bialternant(lam, xs) == schur_paths(lam, xs);
          ok = ok && pieri_sum_check(lam, xs);
        }
      }
    record("schur bialternant vs path sum and pieri rule", ok, "exact");
  }
  {
    bool ok = true;
    for (long m : {4L, 6L})
      for (long n = 1; n <= 2; ++n) {
        ChainSpec spec(m, n, 0.3);
        for (const auto& two_i : all_quantum_numbers(spec)) {
          BetheSpectrum s = bethe_roots(spec, two_i);
          ok = ok && eigen_residual(spec, s) <= 1e-10;
        }
      }
    record("bethe eigenvector residuals", ok, "tol 1e-10");
  }
  {
    double worst = 0.0;
    ChainSpec spec(6, 2, 0.4);
    auto mus = enumerate_strict(2, 6);
    for (const auto& l : mus)
      for (const auto& r : mus)
        for (double beta : {0.3, 1.0})
          worst = std::max(worst, rel_gap(amplitude_spectral(spec, l, r, beta),
                                          amplitude_determinant(spec, l, r, beta)));
    record("amplitude spectral vs determinant routes", worst <= 1e-9,
           "max rel gap = " + sci(worst) + ", tol 1e-9");
  }
  {
    bool ok = true;
    for (long n = 1; n <= 3; ++n)
      for (long box = 0; box <= 2; ++box) {
        long direct = 0;
        for_each_plane_partition(n, box, [&](const PlanePartition&) { ++direct; });
        ok = ok && macmahon(n, box) == direct;
      }
    ok = ok && norm_trace_det(2, 2, make_ratio(1, 2), make_ratio(1, 3)) ==
                   norm_trace_sum(2, 2).evaluate(make_ratio(1, 2), make_ratio(1, 3));
    BigInt sum = 0;
    for (long m = 3; m <= 3 + 2 * 2; ++m) sum += diag_constrained_count(2, 2, m);
    ok = ok && sum == macmahon(2, 2);
    record("plane-partition counts: macmahon, norm-trace, diagonal slices", ok, "exact");
  }
  {
    double worst = 0.0;
    for (long m : {4L, 6L}) {
      std::vector<double> alpha(static_cast<std::size_t>(m));
      for (long i = 0; i < m; ++i)
        alpha[static_cast<std::size_t>(i)] = 0.05 * static_cast<double>(i + 1);
      double direct = 0.0;
      for (long n = 0; n <= m; ++n) {
        ChainSpec spec(m, n, 0.25);
        for (const auto& two_i : all_quantum_numbers(spec))
          direct += boltzmann_gen_exp(spec, bethe_roots(spec, two_i), alpha, 0.6);
      }
      worst = std::max(worst, rel_gap(total_trace(m, 0.25, alpha, 0.6), direct));
    }
    record("total trace vs sum over bethe spectra", worst <= 1e-9,
           "max rel gap = " + sci(worst) + ", tol 1e-9");
  }
  {
    FermiKernel kernel;
    kernel.beta = 0.0;
    kernel.infinite_chain = true;
    std::vector<long> sites{4, 2, 1};
    double got = minor_derivative(kernel, sites);
    record("flat fermi weight correlator 2^-l", rel_gap(got, 0.125) <= 1e-10,
           "got " + sci(got) + ", want 0.125, tol 1e-10");
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identities of the periodic XX chain: Schur/Bethe vectors,\n"
               "vicious-walker counts, circulant powers, plane partitions."};
  app.require_subcommand(1);
  // --h is the magnetic field throughout, so help is long-form only.
  app.set_help_flag("--help", "Print help");

  Options opt;
  std::string format = "plain";
  app.add_option("--format", format, "Output format: plain, json, csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_flag("--unsafe-limits", opt.unsafe_limits,
               "Lift desk-scale enumeration guards");

  // schur ------------------------------------------------------------------
  auto* schur = app.add_subcommand("schur", "Evaluate a Schur polynomial");
  std::string lambda_csv, points_csv, q_text, mode = "qn";
  std::string route = "bialternant";
  bool ones = false;
  schur->add_option("--lambda", lambda_csv, "Partition, e.g. 2,1,0")->required();
  schur->add_option("--x", points_csv, "Rational points, e.g. 1/2,3,5");
  schur->add_option("--route", route, "bialternant or paths")
      ->check(CLI::IsMember({"bialternant", "paths"}));
  schur->add_flag("--ones", ones, "Count of non-intersecting path nests S(1,...,1)");
  schur->add_option("--principal-q", q_text, "Principal specialization at q");
  schur->add_option("--mode", mode, "Principal mode: qn = (q..q^N), qn1 = (1..q^{N-1})")
      ->check(CLI::IsMember({"qn", "qn1"}));

  // walks ------------------------------------------------------------------
  auto* wcount = app.add_subcommand("walks-count", "Determinantal walker count");
  auto* woracle = app.add_subcommand("walks-oracle", "Exhaustive walker count");
  std::string mul_csv, mur_csv, geometry = "line";
  long steps = 0, ring_sites = 0;
  bool stays = false;
  for (CLI::App* c : {wcount, woracle}) {
    c->add_option("--muL", mul_csv, "Initial positions, decreasing")->required();
    c->add_option("--muR", mur_csv, "Final positions, decreasing")->required();
    c->add_option("--K", steps, "Step count")->required();
    c->add_option("--geometry", geometry, "line or ring")
        ->check(CLI::IsMember({"line", "ring"}));
    c->add_option("--M", ring_sites, "Ring size (ring geometry)");
    c->add_flag("--stays", stays, "Track stay-dressed counts");
  }

  // circulant ----------------------------------------------------------------
  auto* cpow = app.add_subcommand("circulant-power", "Entry of Delta^K on the M-ring");
  long cm = 6, ck = 0, coffset = 0, cj = 0, cmm = 0;
  std::string sector = "periodic";
  bool use_oracle = false;
  cpow->add_option("--M", cm, "Ring size (even)")->required();
  cpow->add_option("--K", ck, "Power")->required();
  cpow->add_option("--offset", coffset, "Offset d = j - m");
  cpow->add_option("--j", cj, "Row site (1-based)");
  cpow->add_option("--m", cmm, "Column site (1-based)");
  cpow->add_option("--sector", sector, "periodic or antiperiodic")
      ->check(CLI::IsMember({"periodic", "antiperiodic"}));
  cpow->add_flag("--oracle", use_oracle, "Use the matrix-power oracle route");

  auto* ramus = app.add_subcommand("ramus-check", "Ramus identity check");
  long rr = 1, rn = 0, rt = 0;
  double tol = 1e-9;
  ramus->add_option("--R", rr)->required();
  ramus->add_option("--n", rn)->required();
  ramus->add_option("--t", rt)->required();
  ramus->add_option("--tol", tol, "Comparison tolerance");

  auto* gramus = app.add_subcommand("gen-ramus-check",
                                    "Generalized / determinantal Ramus identity");
  bool det_form = false;
  gramus->add_option("--M", cm)->required();
  gramus->add_option("--K", ck)->required();
  gramus->add_option("--muL", mul_csv)->required();
  gramus->add_option("--muR", mur_csv)->required();
  gramus->add_option("--tol", tol);
  gramus->add_flag("--det", det_form, "Determinantal corollary instead of products");

  // plane partitions ---------------------------------------------------------
  auto* mac = app.add_subcommand("macmahon", "Boxed plane-partition count");
  long pn = 1, pbox = 0, pm = -1;
  bool list_pps = false;
  mac->add_option("--N", pn)->required();
  mac->add_option("--box", pbox)->required();
  mac->add_flag("--list", list_pps, "Emit the partitions as row-major arrays");

  auto* ntr = app.add_subcommand("norm-trace", "Norm-trace generating function");
  std::string q_str = "1/2", g_str = "1";
  bool poly_out = false, exact = false;
  ntr->add_option("--N", pn)->required();
  ntr->add_option("--box", pbox)->required();
  ntr->add_option("--q", q_str, "q (rational like 1/2, or float)");
  ntr->add_option("--gamma", g_str, "gamma");
  ntr->add_flag("--poly", poly_out, "Emit the full (q, gamma) polynomial");
  ntr->add_flag("--exact", exact, "Exact rational evaluation");

  auto* pinned = app.add_subcommand("pinned-count", "Plane partitions with pinned diagonal");
  std::string pins_csv;
  pinned->add_option("--N", pn)->required();
  pinned->add_option("--box", pbox)->required();
  pinned->add_option("--pins", pins_csv, "Pinned parts, e.g. 3,1 (empty = none)");

  auto* diagc = app.add_subcommand("diag-constrained",
                                   "Diagonally constrained plane partitions");
  bool all_m = false;
  diagc->add_option("--N", pn)->required();
  diagc->add_option("--box", pbox)->required();
  diagc->add_option("--m", pm, "Strict-partition weight");
  diagc->add_flag("--all", all_m, "Table over every admissible weight");

  // bethe ---------------------------------------------------------------------
  auto* ampl = app.add_subcommand("amplitude",
                                  "Transition amplitude <muL|e^{-beta H}|muR>");
  double beta = 1.0, field = 0.0;
  std::string aroute = "both";
  ampl->add_option("--M", cm)->required();
  ampl->add_option("--muL", mul_csv)->required();
  ampl->add_option("--muR", mur_csv)->required();
  ampl->add_option("--beta", beta)->required();
  ampl->add_option("--h", field);
  ampl->add_option("--route", aroute)
      ->check(CLI::IsMember({"spectral", "determinant", "both"}));

  auto* bcheck = app.add_subcommand("bethe-check", "Eigenvector and norm residuals");
  bcheck->add_option("--M", cm)->required();
  bcheck->add_option("--N", pn)->required();
  bcheck->add_option("--h", field);
  bcheck->add_option("--tol", tol);

  // genfun ----------------------------------------------------------------------
  auto* ttrace = app.add_subcommand("total-trace", "Tr(e^Q e^{-beta H}) by Laplace split");
  std::string alpha_csv;
  bool sectors = false;
  ttrace->add_option("--M", cm)->required();
  ttrace->add_option("--beta", beta)->required();
  ttrace->add_option("--h", field);
  ttrace->add_option("--alpha", alpha_csv, "Site weights alpha_1..alpha_M");
  ttrace->add_flag("--sectors", sectors, "Report the two sign sectors");

  auto* corr = app.add_subcommand("correlator",
                                  "Fermi-weight minors (flipped-spin correlator)");
  std::string sites_csv;
  bool infinite = false, half_grid = false;
  long ell = 1, quad = 4096;
  corr->add_option("--sites", sites_csv, "Strictly decreasing sites")->required();
  corr->add_option("--beta", beta)->required();
  corr->add_option("--h", field);
  corr->add_option("--M", cm, "Chain length (finite mode)");
  corr->add_flag("--infinite", infinite, "Infinite-chain quadrature mode");
  corr->add_flag("--half-grid", half_grid, "Half-integer momentum grid");
  corr->add_option("--ell", ell, "Sign sector (+1 or -1)");
  corr->add_option("--quad", quad, "Quadrature points (infinite mode)");

  auto* mmean = app.add_subcommand("moment-mean", "Moments of the first-moment operator");
  long order_l = 1;
  mmean->add_option("--N", pn)->required();
  mmean->add_option("--M", cm)->required();
  mmean->add_option("--beta", beta)->required();
  mmean->add_option("--l", order_l, "Moment order");

  auto* suite = app.add_subcommand("identity-suite", "Cross-verification battery");
  std::string level = "quick";
  suite->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->set_help_flag("--help", "Print help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.format =
      format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Plain;

  try {
    if (schur->parsed()) {
      Partition lam(parse_longs(lambda_csv));
      if (ones) {
        emit_scalar(opt, "value", schur_ones(lam).get_str());
      } else if (!q_text.empty()) {
        QSpec spec{parse_ratio(q_text),
                   mode == "qn" ? QSpecMode::GeometricFromQ : QSpecMode::GeometricFromOne};
        SchurLimits lim;
        if (opt.unsafe_limits) lim = {16, 64};
        BigRatio v = principal_spec(lam, spec, lim);
        emit_scalar(opt, "value",
                    opt.format == Format::Json ? ratio_json(v) : json(to_string(v)));
      } else {
        std::vector<BigRatio> pts;
        std::stringstream ss(points_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) pts.push_back(parse_ratio(tok));
        if (static_cast<long>(pts.size()) != lam.length())
          throw CLI::ValidationError("--x must match the partition length");
        SchurLimits lim;
        if (opt.unsafe_limits) lim = {16, 64};
        BigRatio v = route == "paths"
                         ? schur_paths(lam, std::span<const BigRatio>(pts), lim)
                         : schur_bialternant(lam, std::span<const BigRatio>(pts));
        emit_scalar(opt, "value",
                    opt.format == Format::Json ? ratio_json(v) : json(to_string(v)));
      }
    } else if (wcount->parsed() || woracle->parsed()) {
      WalkConfig cfg;
      cfg.geometry = geometry == "ring" ? Geometry::Ring : Geometry::Line;
      cfg.ring_sites = ring_sites;
      cfg.stays_allowed = stays;
      StrictPartition l(parse_longs(mul_csv)), r(parse_longs(mur_csv));
      if (woracle->parsed()) {
        WalkLimits lim;
        if (opt.unsafe_limits) lim = {6, 14};
        NestCount nest = oracle_count(cfg, l, r, steps, lim);
        json by = json::object();
        for (const auto& [p, c] : nest.by_stays) by[std::to_string(p)] = c.get_str();
        emit_object(opt, json{{"total", nest.total.get_str()}, {"by_stays", by}});
      } else if (stays) {
        auto coeff = count_with_stays(cfg, l, r, steps);
        json arr = json::array();
        for (const auto& c : coeff) arr.push_back(c.get_str());
        emit_object(opt, json{{"w_coefficients", arr}});
      } else {
        emit_scalar(opt, "count", count_formula(cfg, l, r, steps).get_str());
      }
    } else if (cpow->parsed()) {
      RingSpec ring(cm);
      RingSector s =
          sector == "antiperiodic" ? RingSector::Antiperiodic : RingSector::Periodic;
      BigInt v;
      if (cj > 0 && cmm > 0)
        v = use_oracle ? circulant_power_oracle(ring, ck, s).entry(cj, cmm)
                       : circulant_power_entry(ring, ck, cj, cmm, s);
      else
        v = use_oracle ? circulant_power_oracle(ring, ck, s).entry_offset(coffset)
                       : circulant_kernel_offset(ring, ck, coffset, s);
      emit_scalar(opt, "entry", v.get_str());
    } else if (ramus->parsed()) {
      double trig;
      BigInt exact_side;
      bool pass = ramus_check(rr, rn, rt, tol, &trig, &exact_side);
      emit_object(opt, json{{"trig", trig},
                            {"exact", exact_side.get_str()},
                            {"tol", tol},
                            {"pass", pass}});
    } else if (gramus->parsed()) {
      RingSpec ring(cm);
      StrictPartition l(parse_longs(mul_csv)), r(parse_longs(mur_csv));
      if (det_form) {
        auto [lhs, rhs] = det_ramus_identity(ring, ck, l, r);
        bool pass = rel_gap(to_double(lhs), rhs) <= tol;
        emit_object(opt,
                    json{{"lhs", lhs.get_str()}, {"rhs", rhs}, {"tol", tol}, {"pass", pass}});
      } else {
        BigInt lhs = generalized_ramus_lhs(ring, ck, l, r);
        double rhs = generalized_ramus_rhs(ring, ck, l, r);
        bool pass = rel_gap(to_double(lhs), rhs) <= tol;
        emit_object(opt,
                    json{{"lhs", lhs.get_str()}, {"rhs", rhs}, {"tol", tol}, {"pass", pass}});
      }
    } else if (mac->parsed()) {
      if (list_pps) {
        BigInt count = macmahon(pn, pbox);
        if (!opt.unsafe_limits && count > 10000)
          throw GuardError("macmahon --list: too many partitions (use --unsafe-limits)");
        json arr = json::array();
        for_each_plane_partition(pn, pbox, [&](const PlanePartition& pp) {
          arr.push_back(pp.row_major());
        });
        emit_object(opt, json{{"count", count.get_str()}, {"partitions", arr}});
      } else {
        emit_scalar(opt, "count", macmahon(pn, pbox).get_str());
      }
    } else if (ntr->parsed()) {
      GenFunLimits lim;
      if (opt.unsafe_limits) lim = {6, 6, 2000000};
      if (poly_out) {
        emit_object(opt, json{{"polynomial", poly_json(norm_trace_sum(pn, pbox, lim))}});
      } else if (exact || q_str.find('/') != std::string::npos ||
                 g_str.find('/') != std::string::npos) {
        BigRatio v = norm_trace_det(pn, pbox, parse_ratio(q_str), parse_ratio(g_str), lim);
        emit_scalar(opt, "value",
                    opt.format == Format::Json ? ratio_json(v) : json(to_string(v)));
      } else {
        emit_scalar(opt, "value", norm_trace_det(pn, pbox, std::stod(q_str), std::stod(g_str)));
      }
    } else if (pinned->parsed()) {
      StrictPartition pins(parse_longs(pins_csv));
      emit_scalar(opt, "count", pinned_pp_count(pn, pbox, pins).get_str());
    } else if (diagc->parsed()) {
      if (all_m) {
        json table = json::array();
        long lo = pn * (pn + 1) / 2;
        for (long m = lo; m <= lo + pn * pbox; ++m)
          table.push_back(
              json{{"m", m}, {"count", diag_constrained_count(pn, pbox, m).get_str()}});
        emit_object(opt, json{{"rows", table}});
      } else {
        if (pm < 0) throw CLI::ValidationError("diag-constrained needs --m or --all");
        emit_scalar(opt, "count", diag_constrained_count(pn, pbox, pm).get_str());
      }
    } else if (ampl->parsed()) {
      StrictPartition l(parse_longs(mul_csv)), r(parse_longs(mur_csv));
      ChainSpec spec(cm, l.length(), field);
      json out;
      if (aroute != "determinant") out["spectral"] = amplitude_spectral(spec, l, r, beta);
      if (aroute != "spectral") out["determinant"] = amplitude_determinant(spec, l, r, beta);
      emit_object(opt, out);
    } else if (bcheck->parsed()) {
      ChainSpec spec(cm, pn, field);
      long guard = opt.unsafe_limits ? 16 : 10;
      double worst_res = 0.0, worst_norm = 0.0;
      long count = 0;
      for (const auto& two_i : all_quantum_numbers(spec)) {
        BetheSpectrum s = bethe_roots(spec, two_i);
        worst_res = std::max(worst_res, eigen_residual(spec, s, guard));
        double direct = 0.0;
        for (const ComplexF& c : bethe_vector(spec, s)) direct += std::norm(c);
        worst_norm = std::max(worst_norm, rel_gap(direct, s.norm_sq));
        ++count;
      }
      emit_object(opt, json{{"spectra", count},
                            {"max_residual", worst_res},
                            {"max_norm_gap", worst_norm},
                            {"tol", tol},
                            {"pass", worst_res <= tol && worst_norm <= tol}});
    } else if (ttrace->parsed()) {
      std::vector<double> alpha =
          alpha_csv.empty() ? std::vector<double>(static_cast<std::size_t>(cm), 0.0)
                            : parse_doubles(alpha_csv);
      TotalTraceParts parts = total_trace_parts(cm, field, alpha, beta);
      if (sectors)
        emit_object(opt, json{{"total", parts.total},
                              {"ell_plus", parts.ell_plus},
                              {"ell_minus", parts.ell_minus}});
      else
        emit_scalar(opt, "total", parts.total);
    } else if (corr->parsed()) {
      FermiKernel kernel;
      kernel.beta = beta;
      kernel.h = field;
      kernel.ell = static_cast<int>(ell);
      kernel.infinite_chain = infinite;
      kernel.sites = cm;
      kernel.half_grid = half_grid;
      kernel.quad_points = quad;
      std::vector<long> sites = parse_longs(sites_csv);
      emit_scalar(opt, "value", minor_derivative(kernel, sites));
    } else if (mmean->parsed()) {
      GenFunLimits lim;
      if (opt.unsafe_limits) lim = {6, 6, 2000000};
      emit_scalar(opt, "value", moment_mean(pn, cm, beta, order_l, lim));
    } else if (suite->parsed()) {
      auto rows = run_identity_suite(level == "full");
      bool all_pass = true;
      if (opt.format == Format::Json) {
        json arr = json::array();
        for (const auto& row : rows) {
          arr.push_back(json{{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
          all_pass = all_pass && row.pass;
        }
        std::cout << json{{"checks", arr}, {"pass", all_pass}}.dump(2) << "\n";
      } else {
        for (const auto& row : rows) {
          all_pass = all_pass && row.pass;
          if (opt.format == Format::Csv)
            std::cout << (row.pass ? "PASS" : "FAIL") << "," << row.name << "," << row.detail
                      << "\n";
          else
            std::cout << (row.pass ? "[PASS] " : "[FAIL] ") << row.name << " (" << row.detail
                      << ")\n";
        }
        std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
      }
      return all_pass ? 0 : 1;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "argument error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
