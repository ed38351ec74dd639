// Acceptance gate: one criterion per line, exit code counts the failures.
// argv[1] is the path to the command line binary (criterion 9).

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apery/analytic.hpp"
#include "apery/apery_form.hpp"
#include "apery/ball_form.hpp"
#include "apery/lcm_sieve.hpp"
#include "apery/report.hpp"
#include "test_util.hpp"

using namespace apery;
using apery::test::dec;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& label) {
    std::printf("%s  %d  %s\n", pass ? "PASS" : "FAIL", id, label.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int id, const std::string& label, Fn&& fn) {
    bool pass = false;
    std::string note;
    try {
        pass = fn(note);
    } catch (const std::exception& e) {
        note = e.what();
    }
    report(id, pass, note.empty() ? label : label + " [" + note + "]");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cmd(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool within(const DecInterval& v, const BigRat& bound) {
    return v.hi() <= bound && v.lo() >= -bound;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    std::vector<LinearForm> ap, bl;
    for (long n = 0; n <= 50; ++n) {
        ap.push_back(apery_uv(n));
        bl.push_back(ball_uv(n));
    }

    criterion(1, "exactness to n = 50: integrality and vanishing sums", [&](std::string&) {
        DenominatorLcm dl;
        bool ok = true;
        for (long n = 0; n <= 50; ++n) {
            const BigInt D = dl.advance_to(n);
            ok = ok && ap[n].u.is_integer();
            ok = ok && (ap[n].v * BigRat(pow(D, 3))).is_integer();
            const AperyCoefficients cf = apery_coeffs(n);
            BigRat sum(0);
            for (long k = 0; k <= n; ++k) {
                sum += cf.a1[k];
                ok = ok && (cf.a1[k] * BigRat(D)).is_integer();
            }
            ok = ok && sum.is_zero();
            const BallCoefficients bc = ball_coeffs(n);
            ok = ok && bc.order_sum(1).is_zero() && bc.order_sum(2).is_zero() &&
                 bc.order_sum(4).is_zero();
            ok = ok && (bl[n].u * BigRat(D)).is_integer();
            ok = ok && (bl[n].v * BigRat(pow(D, 4))).is_integer();
        }
        return ok;
    });

    criterion(2, "certificates 1 <= n <= 30: exact identities and recovered prefactors",
              [&](std::string&) {
                  bool ok = true;
                  for (long n = 1; n <= 30; ++n) {
                      ok = ok && verify_apery_telescoping(n).all();
                      ok = ok && verify_ball_telescoping(n).all();
                      const Certificate fit = fit_certificate(n, CertificateShape::apery_deg2);
                      const Certificate cs = certificate_s(n);
                      ok = ok && fit.prefactor_num == cs.prefactor_num &&
                           fit.prefactor_den == cs.prefactor_den;
                      ok = ok && ball_certificate_check(n).match;
                  }
                  return ok;
              });

    criterion(3, "seed values against the binomial and recurrence oracles", [&](std::string&) {
        bool ok = ap[0].u == BigRat(2) && ap[1].u == BigRat(10) && ap[2].u == BigRat(146) &&
                  ap[3].u == BigRat(2890);
        ok = ok && ap[0].v == BigRat(0) && ap[1].v == BigRat(12) && ap[2].v == BigRat(351, 2);
        for (long n : {2L, 3L}) {
            BigInt sum(0);
            for (long k = 0; k <= n; ++k) {
                const BigInt b = binomial(n + k, n) * binomial(n, k);
                sum += b * b;
            }
            ok = ok && ap[n].u == BigRat(2 * sum);
        }
        const BigRat v2 =
            (BigRat(recurrence_lambda(1)) * BigRat(12) - BigRat(1) * BigRat(0)) / BigRat(8);
        ok = ok && ap[2].v == v2;
        return ok;
    });

    criterion(4, "recurrence: exact to n = 49, numeric residuals at 60 digits",
              [&](std::string&) {
                  bool ok = true;
                  for (long n = 1; n <= 49; ++n) {
                      const BigRat m3(pow(BigInt(n + 1), 3));
                      const BigRat lam(recurrence_lambda(n));
                      const BigRat n3(pow(BigInt(n), 3));
                      ok = ok && (m3 * ap[n + 1].u - lam * ap[n].u + n3 * ap[n - 1].u).is_zero();
                      ok = ok && (m3 * ap[n + 1].v - lam * ap[n].v + n3 * ap[n - 1].v).is_zero();
                      ok = ok && (m3 * bl[n + 1].u - lam * bl[n].u + n3 * bl[n - 1].u).is_zero();
                      ok = ok && (m3 * bl[n + 1].v - lam * bl[n].v + n3 * bl[n - 1].v).is_zero();
                  }
                  for (long n = 1; n <= 8; ++n) {
                      ok = ok && recurrence_residual(FormKind::apery, n, 60).contains_zero();
                      ok = ok && recurrence_residual(FormKind::ball, n, 60).contains_zero();
                  }
                  return ok;
              });

    criterion(5, "growth bound to n = 20 at 60 digits; saddle data to 30 digits",
              [&](std::string&) {
                  bool ok = true;
                  for (long n = 0; n <= 20; ++n) {
                      const BallBound b = ball_bound(n, 60);
                      ok = ok && b.lower_ok && b.upper_ok;
                  }
                  const BoundAnalysis b = bound_analysis(32);
                  const BigRat tol = pow10_rat(-30);
                  ok = ok && b.tau0_agree && b.poly_identity_ok;
                  ok = ok && within(b.f_prime_at_tau0, tol);
                  ok = ok && within(b.tau0.sub(b.tau0_closed, 36), tol);
                  ok = ok && within(b.sup_f.sub(b.four_log_rate, 36), tol);
                  ok = ok && apery::test::close_to(b.tau0, apery::test::kTau0, 30);
                  ok = ok && apery::test::close_to(b.sup_f, apery::test::kFourLogRate, 30);
                  return ok;
              });

    criterion(6, "coincidence: exact to n = 30, numeric to n = 30 at 40 digits",
              [&](std::string&) {
                  const CoincidenceReport r = coincidence_check(30, 40);
                  bool ok = r.seeds_ok && r.rows.size() == 31;
                  for (const auto& row : r.rows)
                      ok = ok && row.exact_equal && row.recurrence_ok && row.numeric_close;
                  return ok && r.all();
              });

    GateScan gate;
    criterion(7, "gate chain 2 <= n <= 40 and the two threshold scans", [&](std::string& note) {
        gate = irrationality_gate(40, 1, 30);
        bool ok = gate.constant_below_one && gate.constant_starts_0_7948;
        // the frozen literal is a 20-digit truncation; compare by distance,
        // containment would demand the interval cover the truncation error
        ok = ok && apery::test::close_to(gate.gate_constant, apery::test::kGateConstant, 20);
        for (long n = 2; n <= 40; ++n)
            ok = ok && gate.reports[n].positive && gate.reports[n].below_bound;
        ok = ok && gate.first_true_below_one >= 0 && gate.first_bound_below_one >= 0;
        ok = ok && gate.first_true_below_one < gate.first_bound_below_one;
        note = "bound scan: " + std::to_string(gate.first_bound_below_one) +
               ", true scan: " + std::to_string(gate.first_true_below_one);
        return ok;
    });

    criterion(8, "convergence: ratio within 5% at n = 30, error trend monotone",
              [&](std::string& note) {
                  if (gate.ratios.size() <= 30) gate = irrationality_gate(31, 1, 30);
                  const DecInterval dev = gate.ratios[30]
                                              .div(gate.ratio_target, 40)
                                              .sub(DecInterval::exact(BigRat(1), 40), 40);
                  bool ok = within(dev, BigRat(1, 20));
                  note = "deviation " + dev.to_string(3);

                  DecInterval prev;
                  for (long n = 0; n <= 30; ++n) {
                      const DecInterval err = eval_form_linear(FormKind::apery, n, 60)
                                                  .div(DecInterval::exact(ap[n].u, 70), 70);
                      if (n >= 1) ok = ok && err.certainly_less(prev);
                      if (n >= 1) {
                          const long t =
                              static_cast<long>(std::floor(3.0 * n * std::log10(1.0 / 0.0295) / 2.0));
                          ok = ok && err.hi() <= pow10_rat(-t);
                      }
                      prev = err;
                  }
                  return ok;
              });

    criterion(9, "cli determinism and exit-code contract", [&](std::string& note) {
        if (cli.empty()) {
            note = "no cli path given";
            return false;
        }
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("apery_accept_" + std::to_string(getpid()));
        fs::create_directories(dir);
        const std::string q = "'" + cli + "'";
        const std::string v1 = (dir / "v1.json").string(), v2 = (dir / "v2.json").string();

        bool ok = run_cmd(q + " verify --n-max 20 --format json --out " + v1) == 0;
        ok = ok && run_cmd(q + " verify --n-max 20 --format json --out " + v2) == 0;
        const std::string b1 = slurp(v1);
        ok = ok && !b1.empty() && b1 == slurp(v2);
        ok = ok && b1.find("\"all_pass\":true") != std::string::npos;

        const std::string t = (dir / "t.csv").string();
        ok = ok && run_cmd(q + " table --n-max 1 --format csv --out " + t) == 0;
        ok = ok && slurp(t).find("\n1,10,12,1,1,") != std::string::npos;

        const std::string g = (dir / "g.txt").string();
        ok = ok && run_cmd(q + " gate --n-max 5 --out " + g) == 0;
        ok = ok && slurp(g).find("0.7948") != std::string::npos;

        ok = ok && run_cmd(q + " verify --bad-flag >/dev/null 2>&1") == 2;
        ok = ok && run_cmd(q + " nonsense >/dev/null 2>&1") == 2;
        ok = ok && run_cmd(q + " table --format yaml >/dev/null 2>&1") == 2;
        ok = ok && run_cmd(q + " gate --n-max 1 >/dev/null 2>&1") == 2;

        if (ok) fs::remove_all(dir);
        else note = "outputs kept in " + dir.string();
        return ok;
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                failures);
    return failures;
}
