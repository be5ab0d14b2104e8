// Command-line surface for the sinc-power integral library: exact values,
// expansion coefficients, certification suite, inequality scans, and the
// quadrature cross-check. Every subcommand can emit a machine-readable JSON
// report (--json / --out); exit codes separate usage errors (1), failed
// certifications (2), and honest disagreements with the published values (3).

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sincpow/sincpow.hpp>

namespace sp = sincpow;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

mpfr_prec_t prec_for_digits(long digits) {
  double bits = static_cast<double>(digits) * 3.3219280948873623 + 16.0;
  return std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(bits));
}

std::string join_rationals(const std::vector<sp::Rational>& v, std::size_t first,
                           std::size_t last) {
  std::string out;
  for (std::size_t i = first; i <= last && i < v.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += sp::to_string(v[i]);
  }
  return out;
}

struct Options {
  bool json = false;
  std::string out;
  int threads = 1;
};

void emit(const Options& opt, const sp::Report& rep, const std::string& human) {
  if (opt.json)
    std::cout << rep.to_json(true).dump(2) << "\n";
  else
    std::cout << human;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open report file: " + opt.out);
    f << rep.to_json(true).dump(2) << "\n";
  }
}

std::string status_tag(sp::CheckStatus s) {
  switch (s) {
    case sp::CheckStatus::pass: return "[pass]        ";
    case sp::CheckStatus::fail: return "[FAIL]        ";
    default: return "[discrepancy] ";
  }
}

std::string render_checks(const sp::Report& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks) {
    out << "  " << status_tag(c.status) << c.name << " ("
        << static_cast<long>(c.ms) << " ms) " << c.detail << "\n";
  }
  out << "overall: " << sp::to_string(rep.aggregate()) << " (exit "
      << rep.exit_code() << ")\n";
  return out.str();
}

// ---------------------------------------------------------------------------

void run_exact(sp::Report& rep, unsigned long n, long digits) {
  sp::ExactValue v = sp::exact_sinc_integral(n);
  mpfr_prec_t prec = prec_for_digits(digits);
  sp::BigFloat val = sp::to_float(v.r, prec);
  rep.results["n"] = n;
  rep.results["r"] = sp::json_rational(v.r);
  rep.results["value"] = sp::json_float(val, static_cast<std::size_t>(digits));
}

void run_coeffs(sp::Report& rep, int order) {
  sp::AsymptoticExpansion ex = sp::asymptotic_coefficients(order);
  const auto& pub = sp::reference::published_expansion_coefficients();
  sp::json arr = sp::json::array();
  for (int l = 1; l <= order; ++l) arr.push_back(sp::to_string(ex.c[l]));
  rep.results["order"] = order;
  rep.results["coefficients"] = arr;

  int cmp_hi = std::min<int>(order, 9);
  bool head_ok = true;
  std::string head_detail;
  for (int l = 1; l <= cmp_hi; ++l) {
    if (ex.c[l] != pub[l - 1]) {
      head_ok = false;
      head_detail += " c" + std::to_string(l) + " computed " + sp::to_string(ex.c[l]) +
                     " vs published " + sp::to_string(pub[l - 1]) + ";";
    }
  }
  rep.add_check("expansion_coefficients",
                head_ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                head_ok ? "c1..c" + std::to_string(cmp_hi) + " match the published display"
                        : head_detail);
  if (order >= 10) {
    bool same = ex.c[10] == pub[9];
    rep.add_check("c10_vs_published",
                  same ? sp::CheckStatus::pass : sp::CheckStatus::discrepancy,
                  "computed " + sp::to_string(ex.c[10]) + " vs published " +
                      sp::to_string(pub[9]) +
                      (same ? ""
                            : "; the published figure equals this engine's value when the "
                              "part-size cap is held at 10, so it reads as a truncation "
                              "artifact"));
  }
}

void run_asympt(sp::Report& rep, unsigned long n, int order, long digits) {
  sp::AsymptoticExpansion ex = sp::asymptotic_coefficients(order);
  mpfr_prec_t prec = prec_for_digits(digits);
  sp::BigFloat val = sp::asympt_eval(n, ex, prec);
  rep.results["n"] = n;
  rep.results["order"] = order;
  rep.results["value"] = sp::json_float(val, static_cast<std::size_t>(digits));
  rep.results["coefficient_sum"] = sp::json_rational(sp::expansion_partial_sum(ex, n));
  if (order == 4) {
    mpfr_prec_t wp = prec + 32;
    sp::BigFloat pref = sp::sqrt(sp::BigFloat::pi(wp) *
                                 sp::make_rational(sp::Int(3), sp::Int(2) * sp::Int(n)));
    sp::Rational scale = sp::reference::envelope_constant() *
                         sp::make_rational(sp::Int(1), sp::pow_int(sp::Int(n), 5));
    sp::BigFloat bound = sp::round_to(pref * scale, prec);
    rep.results["error_bound"] = sp::json_float(bound, 12);
    rep.results["error_bound_applies"] =
        sp::reference::envelope_exclusions().count(n) == 0;
  }
}

void run_oracle(sp::Report& rep, unsigned long n, double target, mpfr_prec_t prec) {
  sp::BigFloat tgt = sp::BigFloat::of(target, 64);
  if (!(tgt > sp::BigFloat(64)))
    throw std::invalid_argument("oracle: target error must be positive");
  sp::QuadResult q = sp::quad_sinc_pow(n, tgt, prec);
  sp::ExactValue ev = sp::exact_sinc_integral(n);
  sp::BigFloat exact = sp::to_float(ev.r, prec);
  sp::BigFloat diff = sp::abs(q.value - exact);
  rep.results["n"] = n;
  rep.results["value"] = sp::json_float(q.value, 40);
  rep.results["certified_error"] = sp::json_float(q.certified_error, 6);
  rep.results["pieces"] = q.pieces;
  rep.results["exact_r"] = sp::json_rational(ev.r);
  rep.results["difference_vs_exact"] = sp::json_float(diff, 6);
  bool ok = diff <= q.certified_error && diff <= tgt;
  rep.add_check("oracle_vs_exact", ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                "quadrature differs from the closed form by " + diff.to_string(4) +
                    " (certified " + q.certified_error.to_string(4) + ", target " +
                    tgt.to_string(4) + ")");
}

void run_schneider(sp::Report& rep, unsigned long max_n) {
  sp::ScanResult res = sp::schneider_scan(max_n);
  sp::json verdicts = sp::json::array();
  bool any_lt = false;
  std::vector<unsigned long> eq_ns;
  for (const auto& v : res.non_greater) {
    verdicts.push_back(sp::json{{"n", v.n},
                                {"lhs", sp::to_string(v.lhs)},
                                {"rhs", sp::to_string(v.rhs)},
                                {"relation", sp::to_string(v.relation)}});
    if (v.relation == sp::Relation::less) any_lt = true;
    if (v.relation == sp::Relation::equal) eq_ns.push_back(v.n);
  }
  rep.results["max_n"] = max_n;
  rep.results["non_gt_verdicts"] = verdicts;
  if (res.min_ratio_n != 0) {
    rep.results["min_lhs_rhs_ratio_from_20"] = sp::json_rational(res.min_ratio_from20);
    rep.results["min_ratio_at_n"] = res.min_ratio_n;
  }

  rep.add_check("no_lt_verdict", any_lt ? sp::CheckStatus::fail : sp::CheckStatus::pass,
                any_lt ? "a strict failure of the inequality exists"
                       : "lhs >= rhs everywhere in range");
  bool only_124 = true;
  for (const auto& v : res.non_greater)
    if (v.n != 1 && v.n != 2 && v.n != 4) only_124 = false;
  rep.add_check("gt_except_124", only_124 ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                only_124 ? "strict inequality holds for every n outside {1,2,4}"
                         : "unexpected non-GT verdicts");
  bool small_eq = false;
  for (unsigned long n : eq_ns)
    if (n == 1 || n == 2) small_eq = true;
  if (small_eq)
    rep.add_check("published_strict_claim", sp::CheckStatus::discrepancy,
                  "equality also holds at n = 1 and n = 2, while the published claim "
                  "asserts strict inequality for every n != 4");
}

// Numeric upper-tail Gaussian integral used to sanity-check the closed bound.
sp::BigFloat gaussian_upper_tail(int k, const sp::BigFloat& u0, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  auto rule = sp::gauss_legendre_rule(48, wp);
  auto f = [k, wp](const sp::BigFloat& u) {
    sp::BigFloat e = sp::exp(-(u * u) * sp::ldexp2(sp::BigFloat::of_int(1, wp), -1));
    return k == 0 ? e : e * sp::pow_si(u, k);
  };
  sp::BigFloat sum(wp), err(wp);
  long pieces = 0;
  sp::BigFloat tol = sp::BigFloat::of(1e-12, 64);
  sp::BigFloat lo = sp::round_to(u0, wp);
  for (int b = 0; b < 20; ++b) {
    sp::BigFloat hi = lo + sp::BigFloat::of_int(2, wp);
    sp::integrate_adaptive(*rule, f, lo, hi, tol, 0, sum, err, pieces);
    lo = hi;
  }
  return sum;
}

void run_certify(sp::Report& rep, unsigned long max_n, int threads) {
  const auto& pub = sp::reference::published_expansion_coefficients();

  {  // expansion coefficients, including the c10 comparison
    auto t0 = Clock::now();
    run_coeffs(rep, 10);
    rep.checks.back().ms = elapsed_ms(t0);
    rep.checks[rep.checks.size() - 2].ms = rep.checks.back().ms;
  }

  {  // Taylor coefficient bound
    auto t0 = Clock::now();
    sp::CoeffBoundCheck cb = sp::coeff_bound_check(60);
    bool tail_ok = cb.holds_from(4);
    rep.add_check("coefficient_bound_k4_60",
                  tail_ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "0.517 * 3^-k dominates |a_k| for 4 <= k <= 60 (exact rational "
                  "comparison)",
                  elapsed_ms(t0));
    if (!cb.holds_everywhere()) {
      std::string ks;
      for (int k : cb.violations) ks += (ks.empty() ? "" : ",") + std::to_string(k);
      rep.add_check("coefficient_bound_published_range", sp::CheckStatus::discrepancy,
                    "the published bound is stated for every k >= 1 but fails at k = " +
                        ks + " (|a_2| = 1/6 > 0.517/9); its uses start at k >= 4",
                    0);
    }
  }

  {  // remainder bound dominates the true remainder on a grid
    auto t0 = Clock::now();
    mpfr_prec_t prec = 192;
    sp::SeriesCoeffs logsinc = sp::series_log_sinc(12);
    bool ok = true;
    for (int K = 2; K <= 10 && ok; K += 2) {
      for (int i = 1; i <= 20 && ok; ++i) {
        sp::BigFloat x = sp::ldexp2(sp::BigFloat::pi(prec), -1) *
                         static_cast<unsigned long>(i) / 20ul;
        sp::BigFloat truth = sp::log(sp::sin(x) / x);
        sp::PowerSeries p(K);
        for (int k = 0; k <= K; ++k) p[k] = logsinc.at(k);
        sp::BigFloat approx = p.eval(x);
        if (!sp::leq_with_margin(sp::abs(truth - approx), sp::remainder_bound(x, K)))
          ok = false;
      }
    }
    rep.add_check("remainder_bound_grid",
                  ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "1.09 (x/3)^(K+2) dominates the true Taylor remainder on the "
                  "20 x 5 grid over (0, pi/2] x {2,4,6,8,10}",
                  elapsed_ms(t0));
  }

  {  // pointwise upper bound
    auto t0 = Clock::now();
    auto bad = sp::pointwise_bound_violations(1000);
    rep.add_check("pointwise_upper_bound",
                  bad.empty() ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "log(sin x / x) <= -x^2/6 at 1000 samples of (0, 1]",
                  elapsed_ms(t0));
  }

  {  // tail lemma by quadrature
    auto t0 = Clock::now();
    bool ok = true;
    std::string worst;
    for (unsigned long n = 3; n <= 20; ++n) {
      sp::QuadResult q =
          sp::quad_sinc_pow_from(n, sp::Rational(1), sp::BigFloat::of(1e-20, 64), 192);
      sp::BigFloat zero(64);
      if (!(q.value + q.certified_error >= zero) ||
          !sp::leq_with_margin(q.value, sp::tail_bound(n, 192)))
        ok = false;
    }
    rep.add_check("tail_lemma",
                  ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "0 <= integral_1^inf <= e^(-n/6) for n in [3, 20] (quadrature with "
                  "certified error)",
                  elapsed_ms(t0));
  }

  {  // Fibonacci composition identity
    auto t0 = Clock::now();
    sp::IdentityCheck ic = sp::fibonacci_identity_check(300);
    rep.add_check("fibonacci_identity",
                  ic.violations.empty() ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "sum of C(l-1, k-l-1) equals F_(k-1) for k <= 300 (exact)",
                  elapsed_ms(t0));
  }

  {  // Gaussian moments
    auto t0 = Clock::now();
    bool ok = true;
    sp::BigFloat tol = sp::BigFloat::of(1e-20, 64);
    sp::BigFloat half_pi_sqrt = sp::sqrt(sp::ldexp2(sp::BigFloat::pi(224), -1));
    for (int k = 0; k <= 10; ++k) {
      sp::BigFloat expected =
          half_pi_sqrt * sp::make_rational(sp::double_factorial(2 * k - 1), sp::Int(1));
      if (!(sp::abs(sp::gaussian_moment(k, 192) - expected) <= tol)) ok = false;
    }
    rep.add_check("gaussian_moments", ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "integral_0^inf e^(-u^2/2) u^(2k) du = (2k-1)!! sqrt(pi/2) within "
                  "1e-20 for k <= 10",
                  elapsed_ms(t0));
  }

  {  // closed Gaussian tail bound vs numeric integral
    auto t0 = Clock::now();
    sp::BigFloat u0 = sp::BigFloat::of_int(6, 192);
    sp::BigFloat numeric = gaussian_upper_tail(20, u0, 192);
    sp::BigFloat bound = sp::gaussian_tail_bound(u0, 20, 192);
    bool ok = sp::leq_with_margin(numeric, bound);
    rep.add_check("gaussian_tail_bound", ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "closed tail bound dominates the numeric integral at u0 = 6, k = 20",
                  elapsed_ms(t0));
  }

  {  // error budget at large n
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (unsigned long n : {400ul, 1000ul, 2000ul}) {
      sp::ErrorBudget b = sp::error_budget(n);
      if (!b.residual_within_envelope || !b.extension_below_taylor) ok = false;
      if (n == 400) detail = "total at n = 400 is " + b.total.to_string(4);
    }
    sp::BigFloat prev = sp::error_budget(400).total;
    for (unsigned long n = 500; n <= 2000; n += 100) {
      sp::BigFloat cur = sp::error_budget(n).total;
      if (!(cur < prev)) ok = false;
      prev = cur;
    }
    rep.add_check("error_budget", ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "residual <= 1e-5/n^5 and extension < n^-23/2 at n in {400, 1000, "
                  "2000}; total decreasing on [400, 2000]; " +
                      detail,
                  elapsed_ms(t0));
  }

  {  // order-4 envelope scan
    auto t0 = Clock::now();
    sp::EnvelopeReport env = sp::prop2_envelope(1, max_n, 128, threads);
    sp::json flagged = sp::json::array();
    for (const auto& e : env.flagged)
      flagged.push_back(sp::json{{"n", e.n}, {"residual_n5", e.residual.to_string(8)}});
    sp::json excluded = sp::json::array();
    for (const auto& e : env.published_excluded)
      excluded.push_back(sp::json{{"n", e.n}, {"residual_n5", e.residual.to_string(8)}});
    rep.results["envelope"] = sp::json{
        {"range", sp::json::array({env.n_lo, env.n_hi})},
        {"constant", sp::to_string(sp::reference::envelope_constant())},
        {"flagged", flagged},
        {"published_excluded", excluded},
        {"max_residual", env.max_residual.to_string(8)},
        {"max_residual_n", env.max_residual_n},
        {"max_unflagged_residual", env.max_unflagged_residual.to_string(8)},
        {"max_unflagged_n", env.max_unflagged_n}};
    if (env.flagged_matches_published()) {
      rep.add_check("envelope", sp::CheckStatus::pass,
                    "n^5 |relative error| <= 7.26e-3 outside the published exceptions",
                    elapsed_ms(t0));
    } else {
      std::string extra;
      for (unsigned long n : env.flagged_outside_published())
        extra += (extra.empty() ? "" : ",") + std::to_string(n);
      rep.add_check(
          "envelope", sp::CheckStatus::discrepancy,
          "the envelope also fails at n = {" + extra +
              "}, beyond the published exceptions {2,4,6,8,10}; largest passing "
              "residual " +
              env.max_unflagged_residual.to_string(6) + " at n = " +
              std::to_string(env.max_unflagged_n),
          elapsed_ms(t0));
    }
  }

  {  // circle constant behind the coefficient bound
    auto t0 = Clock::now();
    sp::BigFloat m = sp::contour_mean(sp::BigFloat::of_int(3, 128), 128);
    sp::BigFloat ref = sp::BigFloat::from_rational(sp::reference::contour_constant(), 160);
    bool ok = sp::abs(m - ref) <= sp::BigFloat::of(1e-3, 64);
    rep.results["contour_constant"] = sp::json_float(m, 12);
    rep.add_check("contour_constant", ok ? sp::CheckStatus::pass : sp::CheckStatus::fail,
                  "circle integral at r = 3 is " + m.to_string(12) +
                      ", published as 9.733...",
                  elapsed_ms(t0));
  }

  (void)pub;
}

void run_table(sp::Report& rep, unsigned long from, unsigned long to, long digits,
               std::string& csv_out) {
  if (from == 0 || to < from)
    throw std::invalid_argument("table: need 1 <= from <= to");
  sp::AsymptoticExpansion ex = sp::asymptotic_coefficients(4);
  mpfr_prec_t prec = prec_for_digits(digits);
  std::vector<sp::TableRow> rows;
  for (unsigned long n = from; n <= to; ++n) {
    sp::ExactValue v = sp::exact_sinc_integral(n);
    sp::TableRow row;
    row.n = n;
    row.r = v.r;
    row.value = sp::to_float(v.r, prec).to_string(static_cast<std::size_t>(digits));
    row.asympt = sp::asympt_eval(n, ex, prec).to_string(static_cast<std::size_t>(digits));
    row.residual = sp::envelope_residual(n, ex, 128).to_string(10);
    rows.push_back(row);
  }
  csv_out = sp::table_to_csv(rows);
  sp::json jrows = sp::json::array();
  for (const auto& row : rows)
    jrows.push_back(sp::json{{"n", row.n},
                             {"r", sp::to_string(row.r)},
                             {"value", row.value},
                             {"asympt4", row.asympt},
                             {"residual_n5", row.residual}});
  rep.results["rows"] = jrows;
  rep.results["csv"] = csv_out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact, asymptotic, and certified evaluation of the integral of "
               "(sin x / x)^n over [0, inf)"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "print the JSON report instead of plain text");
  app.add_option("--out", opt.out, "also write the JSON report to this file");
  app.add_option("--threads", opt.threads, "worker threads for range scans")
      ->check(CLI::Range(1, 64));

  unsigned long exact_n = 0;
  long exact_digits = 36;
  auto* c_exact = app.add_subcommand("exact", "closed-form value r and r * pi");
  c_exact->add_option("n", exact_n, "power of the integrand")
      ->required()
      ->check(CLI::PositiveNumber);
  c_exact->add_option("--digits", exact_digits, "significant digits to print")
      ->check(CLI::Range(1l, 100000l));

  int coeffs_order = 4;
  std::string coeffs_format = "csv";
  auto* c_coeffs = app.add_subcommand("coeffs", "expansion coefficients c_1..c_L");
  c_coeffs->add_option("--order", coeffs_order, "highest order L")
      ->required()
      ->check(CLI::Range(1, 200));
  c_coeffs->add_option("--format", coeffs_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  unsigned long asympt_n = 0;
  int asympt_order = 4;
  long asympt_digits = 36;
  auto* c_asympt = app.add_subcommand("asympt", "order-L asymptotic value at n");
  c_asympt->add_option("n", asympt_n, "power of the integrand")
      ->required()
      ->check(CLI::PositiveNumber);
  c_asympt->add_option("--order", asympt_order, "expansion order L")
      ->check(CLI::Range(1, 200));
  c_asympt->add_option("--digits", asympt_digits, "significant digits to print")
      ->check(CLI::Range(1l, 100000l));

  unsigned long certify_max_n = 400;
  auto* c_certify = app.add_subcommand("certify", "run the full certification suite");
  c_certify->add_option("--max-n", certify_max_n, "upper end of the envelope scan")
      ->check(CLI::PositiveNumber);

  unsigned long schneider_max_n = 100;
  auto* c_schneider = app.add_subcommand("schneider", "exact inequality scan");
  c_schneider->add_option("--max-n", schneider_max_n, "scan 1..max-n")
      ->check(CLI::PositiveNumber);

  unsigned long oracle_n = 0;
  double oracle_target = 1e-25;
  long oracle_prec = 256;
  auto* c_oracle = app.add_subcommand("oracle", "quadrature cross-check of the closed form");
  c_oracle->add_option("n", oracle_n, "power of the integrand")
      ->required()
      ->check(CLI::PositiveNumber);
  c_oracle->add_option("--target-err", oracle_target, "requested certified error");
  c_oracle->add_option("--prec", oracle_prec, "working precision in bits")
      ->check(CLI::Range(64l, 8192l));

  unsigned long table_from = 0, table_to = 0;
  long table_digits = 25;
  auto* c_table = app.add_subcommand("table", "CSV of exact and asymptotic values");
  c_table->add_option("--from", table_from, "first n")->required()->check(CLI::PositiveNumber);
  c_table->add_option("--to", table_to, "last n")->required()->check(CLI::PositiveNumber);
  c_table->add_option("--digits", table_digits, "significant digits for float columns")
      ->check(CLI::Range(1l, 1000l));

  // lets the global --json/--out/--threads appear after the subcommand too
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  sp::Report rep;
  auto t0 = Clock::now();
  std::string human;
  try {
    if (*c_exact) {
      rep.command = "exact";
      rep.parameters = {{"n", exact_n}, {"digits", exact_digits}};
      run_exact(rep, exact_n, exact_digits);
      std::ostringstream out;
      out << "n = " << exact_n << "\n"
          << "r = " << rep.results["r"].get<std::string>() << "\n"
          << "value = " << rep.results["value"]["value"].get<std::string>() << " ("
          << rep.results["value"]["precision_bits"].get<long>() << "-bit float)\n";
      human = out.str();
    } else if (*c_coeffs) {
      rep.command = "coeffs";
      rep.parameters = {{"order", coeffs_order}, {"format", coeffs_format}};
      run_coeffs(rep, coeffs_order);
      if (coeffs_format == "json") {
        opt.json = true;
      } else {
        std::string line;
        for (const auto& c : rep.results["coefficients"])
          line += (line.empty() ? "" : ", ") + c.get<std::string>();
        human = line + "\n";
        for (const auto& c : rep.checks)
          if (c.status != sp::CheckStatus::pass)
            human += "# " + c.name + ": " + c.detail + "\n";
      }
    } else if (*c_asympt) {
      rep.command = "asympt";
      rep.parameters = {{"n", asympt_n}, {"order", asympt_order}, {"digits", asympt_digits}};
      run_asympt(rep, asympt_n, asympt_order, asympt_digits);
      std::ostringstream out;
      out << "n = " << asympt_n << ", order = " << asympt_order << "\n"
          << "value = " << rep.results["value"]["value"].get<std::string>() << " ("
          << rep.results["value"]["precision_bits"].get<long>() << "-bit float)\n";
      if (rep.results.contains("error_bound")) {
        out << "error_bound = " << rep.results["error_bound"]["value"].get<std::string>()
            << (rep.results["error_bound_applies"].get<bool>()
                    ? "\n"
                    : " (published envelope excludes this n)\n");
      }
      human = out.str();
    } else if (*c_certify) {
      rep.command = "certify";
      rep.parameters = {{"max_n", certify_max_n}, {"threads", opt.threads}};
      run_certify(rep, certify_max_n, opt.threads);
      human = "certify: envelope range [1, " + std::to_string(certify_max_n) +
              "], threads " + std::to_string(opt.threads) + "\n" + render_checks(rep);
    } else if (*c_schneider) {
      rep.command = "schneider";
      rep.parameters = {{"max_n", schneider_max_n}};
      run_schneider(rep, schneider_max_n);
      std::ostringstream out;
      out << "scan 1.." << schneider_max_n << ": " << rep.results["non_gt_verdicts"].size()
          << " verdicts where strict inequality fails\n";
      for (const auto& v : rep.results["non_gt_verdicts"])
        out << "  n = " << v["n"].get<unsigned long>() << ": lhs = "
            << v["lhs"].get<std::string>() << ", rhs = " << v["rhs"].get<std::string>()
            << ", relation = " << v["relation"].get<std::string>() << "\n";
      out << render_checks(rep);
      human = out.str();
    } else if (*c_oracle) {
      rep.command = "oracle";
      rep.parameters = {{"n", oracle_n},
                        {"target_err", oracle_target},
                        {"prec", oracle_prec}};
      run_oracle(rep, oracle_n, oracle_target, static_cast<mpfr_prec_t>(oracle_prec));
      std::ostringstream out;
      out << "n = " << oracle_n << "\n"
          << "value = " << rep.results["value"]["value"].get<std::string>() << " ("
          << oracle_prec << "-bit float)\n"
          << "certified_error = " << rep.results["certified_error"]["value"].get<std::string>()
          << "\n"
          << "pieces = " << rep.results["pieces"].get<long>() << "\n"
          << render_checks(rep);
      human = out.str();
    } else if (*c_table) {
      rep.command = "table";
      rep.parameters = {{"from", table_from}, {"to", table_to}, {"digits", table_digits}};
      std::string csv;
      run_table(rep, table_from, table_to, table_digits, csv);
      human = csv;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  rep.total_ms = elapsed_ms(t0);
  try {
    emit(opt, rep, human);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rep.exit_code();
}
