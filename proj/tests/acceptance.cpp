// Acceptance gate: runs the numbered release criteria and prints one
// PASS/FAIL line each. With no arguments all criteria run; otherwise the
// arguments select criterion numbers. Exit code 0 only if every selected
// criterion passes. Criterion 1 drives the CLI binary named by SINCPOW_CLI.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sincpow/sincpow.hpp>

namespace sp = sincpow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> extra;  // indented lines under the verdict
};

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const char* cli = std::getenv("SINCPOW_CLI");
  if (!cli) return {-1, ""};
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// 1. The CLI reproduces c_1..c_9 exactly; c_10 either matches the published
//    figure or the disagreement is reported with exit code 3 and both values.
Outcome criterion_coefficients() {
  Outcome o;
  if (!std::getenv("SINCPOW_CLI")) {
    o.pass = false;
    o.detail = "SINCPOW_CLI not set";
    return o;
  }
  const auto& pub = sp::reference::published_expansion_coefficients();
  std::string expected;
  for (int l = 1; l <= 9; ++l)
    expected += (expected.empty() ? "" : ", ") + sp::to_string(pub[l - 1]);

  CliRun nine = run_cli("coeffs --order 9 --format csv");
  if (nine.code != 0 || !contains(nine.out, expected)) {
    o.pass = false;
    o.detail = "coeffs --order 9 exited " + std::to_string(nine.code) +
               " or did not print the nine expected rationals";
    return o;
  }

  CliRun ten = run_cli("coeffs --order 10");
  std::string pub10 = sp::to_string(pub[9]);
  std::string own10 = sp::to_string(sp::asymptotic_coefficients(10).c[10]);
  if (ten.code == 0 && contains(ten.out, pub10)) {
    o.detail = "c1..c9 exact; c10 matches the published figure";
  } else if (ten.code == 3 && contains(ten.out, pub10) && contains(ten.out, own10)) {
    o.detail = "c1..c9 exact; c10 disagreement reported with both values (exit 3)";
  } else {
    o.pass = false;
    o.detail = "coeffs --order 10 exited " + std::to_string(ten.code) +
               " without reporting the c10 comparison";
  }
  return o;
}

// 2. Envelope: n^5 |relative error of the order-4 value| <= 7.26e-3 for every
//    n in [1, 400] outside {2,4,6,8,10}; the excluded five are measured and
//    reported alongside.
Outcome criterion_envelope() {
  Outcome o;
  sp::EnvelopeReport rep = sp::prop2_envelope(1, 400, 128);
  auto extra_ns = rep.flagged_outside_published();
  o.pass = extra_ns.empty();
  if (o.pass) {
    o.detail = "residual within 7.26e-3 everywhere outside the excluded {2,4,6,8,10}";
  } else {
    std::string ns;
    for (unsigned long n : extra_ns) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    o.detail = "residual exceeds 7.26e-3 at n = {" + ns +
               "} beyond the excluded {2,4,6,8,10}";
  }
  for (const auto& e : rep.flagged)
    o.extra.push_back("flagged   n = " + std::to_string(e.n) +
                      "  residual = " + e.residual.to_string(10));
  for (const auto& e : rep.published_excluded)
    o.extra.push_back("excluded  n = " + std::to_string(e.n) +
                      "  residual = " + e.residual.to_string(10));
  o.extra.push_back("largest passing residual " + rep.max_unflagged_residual.to_string(10) +
                    " at n = " + std::to_string(rep.max_unflagged_n));
  return o;
}

// 3. Quadrature equals the closed form within 1e-25 at 256-bit precision.
Outcome criterion_oracle() {
  Outcome o;
  sp::BigFloat target = sp::BigFloat::of(1e-25, 64);
  for (unsigned long n : {2ul, 3ul, 5ul, 10ul, 20ul, 50ul}) {
    sp::QuadResult q = sp::quad_sinc_pow(n, target, 256);
    sp::BigFloat exact = sp::to_float(sp::exact_sinc_integral(n).r, 320);
    sp::BigFloat diff = sp::abs(q.value - exact);
    if (!(diff <= target) || !(diff <= q.certified_error)) {
      o.pass = false;
      o.detail += "n = " + std::to_string(n) + " differs by " + diff.to_string(4) + "; ";
    }
  }
  if (o.pass) o.detail = "quadrature within 1e-25 of the closed form at n in {2,3,5,10,20,50}";
  return o;
}

// 4. Exact rational spot values of the closed form.
Outcome criterion_spot_values() {
  Outcome o;
  const std::array<const char*, 5> expect = {"1/2", "1/2", "3/8", "1/3", "115/384"};
  for (unsigned long n = 1; n <= 5; ++n) {
    sp::Rational r = sp::exact_sinc_integral(n).r;
    if (r != sp::parse_rational(expect[n - 1])) {
      o.pass = false;
      o.detail += "r(" + std::to_string(n) + ") = " + sp::to_string(r) + " expected " +
                  expect[n - 1] + "; ";
    }
  }
  if (o.pass) o.detail = "r(1..5) = 1/2, 1/2, 3/8, 1/3, 115/384 exactly";
  return o;
}

// 5. Exact inequality scan to 2000: never LT, GT outside {1,2,4}, EQ at 4;
//    the n = 1, 2 equalities contradict the published strict claim and are
//    reported, not hidden.
Outcome criterion_inequality_scan() {
  Outcome o;
  sp::ScanResult res = sp::schneider_scan(2000);
  std::vector<unsigned long> eq;
  for (const auto& v : res.non_greater) {
    if (v.relation == sp::Relation::less) {
      o.pass = false;
      o.detail += "LT verdict at n = " + std::to_string(v.n) + "; ";
    } else {
      eq.push_back(v.n);
    }
  }
  if (eq != std::vector<unsigned long>{1, 2, 4}) {
    o.pass = false;
    std::string ns;
    for (unsigned long n : eq) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    o.detail += "equality set {" + ns + "} differs from {1,2,4}; ";
  }
  if (o.pass)
    o.detail =
        "no LT verdict to 2000; equality exactly at n = 1, 2, 4 (the 1 and 2 "
        "cases disagree with the published strict claim and are reported)";
  return o;
}

// 6. Bound suite: coefficient bound for 4 <= k <= 60, remainder bound on the
//    grid, tail lemma for n in [3, 20], Fibonacci identity to 300, Gaussian
//    moments to 1e-20.
Outcome criterion_bounds() {
  Outcome o;

  if (!sp::coeff_bound_check(60).holds_from(4))
    o.extra.push_back("coefficient bound fails somewhere in 4 <= k <= 60");

  {
    sp::SeriesCoeffs logsinc = sp::series_log_sinc(12);
    bool ok = true;
    for (int K = 2; K <= 10; K += 2)
      for (int i = 1; i <= 20; ++i) {
        sp::BigFloat x =
            sp::ldexp2(sp::BigFloat::pi(192), -1) * static_cast<unsigned long>(i) / 20ul;
        sp::PowerSeries p(K);
        for (int k = 0; k <= K; ++k) p[k] = logsinc.at(k);
        sp::BigFloat actual = sp::abs(sp::log(sp::sin(x) / x) - p.eval(x));
        if (!sp::leq_with_margin(actual, sp::remainder_bound(x, K))) ok = false;
      }
    if (!ok) o.extra.push_back("remainder bound fails on the grid");
  }

  {
    bool ok = true;
    for (unsigned long n = 3; n <= 20; ++n) {
      sp::QuadResult q =
          sp::quad_sinc_pow_from(n, sp::Rational(1), sp::BigFloat::of(1e-20, 64), 192);
      if (!(q.value + q.certified_error >= sp::BigFloat(64)) ||
          !sp::leq_with_margin(q.value, sp::tail_bound(n, 192)))
        ok = false;
    }
    if (!ok) o.extra.push_back("tail lemma fails somewhere in n in [3, 20]");
  }

  if (!sp::fibonacci_identity_check(300).violations.empty())
    o.extra.push_back("composition-count identity fails below 300");

  {
    bool ok = true;
    sp::BigFloat tol = sp::BigFloat::of(1e-20, 64);
    sp::BigFloat half_pi_sqrt = sp::sqrt(sp::ldexp2(sp::BigFloat::pi(224), -1));
    for (int k = 0; k <= 10; ++k) {
      sp::BigFloat expected = half_pi_sqrt *
                              sp::make_rational(sp::double_factorial(2 * k - 1), sp::Int(1));
      if (!(sp::abs(sp::gaussian_moment(k, 192) - expected) <= tol)) ok = false;
    }
    if (!ok) o.extra.push_back("gaussian moments drift past 1e-20");
  }

  o.pass = o.extra.empty();
  o.detail = o.pass
                 ? "coefficient, remainder, tail, identity, and moment checks all hold"
                 : "one or more bound checks failed";
  return o;
}

// 7. Circle average at radius 3 agrees with the published 9.733 to 1e-3.
Outcome criterion_contour() {
  Outcome o;
  sp::BigFloat m = sp::contour_mean(sp::BigFloat::of_int(3, 128), 128);
  sp::BigFloat ref = sp::BigFloat::from_rational(sp::reference::contour_constant(), 160);
  o.pass = sp::abs(m - ref) <= sp::BigFloat::of(1e-3, 64);
  o.detail = "circle average at r = 3 is " + m.to_string(14) + " vs published 9.733";
  return o;
}

// 8. Large-n error budget inequalities at n in {400, 1000, 2000}.
Outcome criterion_budget() {
  Outcome o;
  for (unsigned long n : {400ul, 1000ul, 2000ul}) {
    sp::ErrorBudget b = sp::error_budget(n);
    if (!b.residual_within_envelope) {
      o.pass = false;
      o.detail += "residual terms exceed 1e-5/n^5 at n = " + std::to_string(n) + "; ";
    }
    if (!b.extension_below_taylor) {
      o.pass = false;
      o.detail += "extension term reaches n^-23/2 at n = " + std::to_string(n) + "; ";
    }
  }
  if (o.pass)
    o.detail = "residual <= 1e-5/n^5 and extension < n^-23/2 at n in {400, 1000, 2000}";
  return o;
}

struct Criterion {
  int number;
  double time_limit_s;  // 0 means no limit
  Outcome (*run)();
};

const std::array<Criterion, 8> criteria = {{
    {1, 10, criterion_coefficients},
    {2, 60, criterion_envelope},
    {3, 60, criterion_oracle},
    {4, 0, criterion_spot_values},
    {5, 300, criterion_inequality_scan},
    {6, 0, criterion_bounds},
    {7, 10, criterion_contour},
    {8, 0, criterion_budget},
}};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int c = std::atoi(argv[i]);
    if (c < 1 || c > 8) {
      std::cerr << "usage: " << argv[0] << " [criterion 1..8]...\n";
      return 1;
    }
    selected.push_back(c);
  }
  if (selected.empty())
    for (const auto& c : criteria) selected.push_back(c.number);

  bool all_pass = true;
  for (int num : selected) {
    const Criterion& c = criteria[static_cast<std::size_t>(num - 1)];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += " [runtime " + std::to_string(secs) + " s exceeds the " +
                  std::to_string(static_cast<int>(c.time_limit_s)) + " s limit]";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << num << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs
         << " s) " << o.detail;
    std::cout << line.str() << "\n";
    for (const auto& e : o.extra) std::cout << "    " << e << "\n";
    if (!o.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
