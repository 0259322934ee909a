#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kgamma/kcore.hpp"

using namespace kgamma;

namespace {

const PrecisionConfig prec;

Real50 r50(const char* s) { return Real50(s); }

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer_k(Real50(3), 2, Real50(2)) == 15);
  CHECK(pochhammer_k(Real50(2), 0, Real50(1)) == 1);
  CHECK(pochhammer_k(Real50(1), 4, Real50(1)) == 24);  // (1)_4 = 4!
  CHECK_THROWS_AS(pochhammer_k(Real50(-1), 2, Real50(1)), domain_error);
  CHECK_THROWS_AS(pochhammer_k(Real50(1), -1, Real50(1)), domain_error);
}

TEST_CASE("gamma_k anchors") {
  // Gamma_k(k) = 1 and Gamma_k(2k) follows from the recurrence
  for (double kd : {0.5, 1.0, 2.0, 3.0}) {
    const Real50 k(kd);
    auto g = gamma_k(k, k, prec);
    CHECK(fabs(g.value - 1) <= g.abs_error_bound * 4 + 1e-45);
    auto g2 = gamma_k(2 * k, k, prec);
    CHECK(fabs(g2.value - k) <= g2.abs_error_bound * 4 + 1e-45);
  }
  auto g = gamma_k(Real50(6), Real50(2), prec);
  CHECK(fabs(g.value - 8) < 1e-45);
  // half-integer anchor, 50-digit value of sqrt(pi)
  auto gh = gamma_k(Real50("0.5"), Real50(1), prec);
  const Real50 sqrt_pi =
      r50("1.7724538509055160272981674833411451827975494561224");
  CHECK(fabs(gh.value - sqrt_pi) < 1e-45);
}

TEST_CASE("ln_gamma_k backends agree within bounds") {
  for (double kd : {0.5, 1.0, 2.0, 3.0}) {
    for (double xd : {0.01, 0.3, 1.0, 2.5, 7.0, 100.0, 900.0}) {
      const Real50 x(xd), k(kd);
      auto a = ln_gamma_k(x, k, Backend::Reduction, prec);
      auto b = ln_gamma_k(x, k, Backend::Series, prec);
      CAPTURE(xd);
      CAPTURE(kd);
      CHECK(a.agrees_with(b));
      CHECK(b.abs_error_bound < 1e-30);
    }
  }
}

TEST_CASE("gamma_k recurrence property") {
  for (double kd : {0.5, 1.0, 2.0}) {
    for (double xd : {0.02, 0.7, 3.0, 40.0}) {
      const Real50 x(xd), k(kd);
      auto lhs = ln_gamma_k(x + k, k, prec);
      auto rhs = ln_gamma_k(x, k, prec);
      const Real50 resid = lhs.value - rhs.value - log(x);
      CHECK(fabs(resid) <
            10 * (lhs.abs_error_bound + rhs.abs_error_bound) + 1e-44);
    }
  }
}

TEST_CASE("gamma_k overflow policy") {
  CHECK_THROWS_AS(gamma_k(Real50(30000), Real50(1), prec), overflow_signal);
  // log-space evaluation still works at the same argument
  auto l = ln_gamma_k(Real50(30000), Real50(1), prec);
  CHECK(l.value > 270000);
}

TEST_CASE("digamma_k anchors") {
  // psi_k(k) = (ln k - gamma)/k
  for (double kd : {0.5, 1.0, 2.0, 3.0}) {
    const Real50 k(kd);
    const Real50 expect = (log(k) - euler_gamma<Real50>()) / k;
    for (Backend b : {Backend::Reduction, Backend::Series}) {
      auto d = digamma_k(k, k, b, prec);
      CHECK(fabs(d.value - expect) <= d.abs_error_bound + 1e-44);
    }
  }
  // psi(2) = 1 - gamma
  auto d = digamma_k(Real50(2), Real50(1), prec);
  CHECK(fabs(d.value - (1 - euler_gamma<Real50>())) < 1e-45);
}

TEST_CASE("digamma_k backends agree within bounds") {
  for (double kd : {0.5, 1.0, 3.0}) {
    for (double xd : {0.01, 0.3, 1.0, 7.0, 100.0}) {
      const Real50 x(xd), k(kd);
      auto a = digamma_k(x, k, Backend::Reduction, prec);
      auto b = digamma_k(x, k, Backend::Series, prec);
      CAPTURE(xd);
      CAPTURE(kd);
      CHECK(a.agrees_with(b));
    }
  }
}

TEST_CASE("polygamma_k anchors") {
  // psi'(1) = pi^2/6, psi'(2) = pi^2/6 - 1, psi''(1) = -2 zeta(3)
  const Real50 pi2_6 = pi_const<Real50>() * pi_const<Real50>() / 6;
  auto t1 = polygamma_k(1, Real50(1), Real50(1), prec);
  CHECK(fabs(t1.value - pi2_6) < 1e-44);
  auto t2 = polygamma_k(1, Real50(2), Real50(1), prec);
  CHECK(fabs(t2.value - (pi2_6 - 1)) < 1e-44);
  const Real50 zeta3 =
      r50("1.2020569031595942853997381615114499907649862923405");
  auto t3 = polygamma_k(2, Real50(1), Real50(1), prec);
  CHECK(fabs(t3.value + 2 * zeta3) < 1e-43);
  // scaling: psi_k^(r)(x) = k^-(r+1) psi^(r)(x/k)
  auto a = polygamma_k(3, Real50(5), Real50(2), prec);
  auto b = polygamma_k(3, Real50("2.5"), Real50(1), prec);
  CHECK(fabs(a.value - b.value / 16) <
        10 * (a.abs_error_bound + b.abs_error_bound));
}

TEST_CASE("polygamma_k backends agree within bounds") {
  for (int r : {1, 2, 4, 6}) {
    for (double kd : {0.5, 2.0}) {
      for (double xd : {0.01, 0.5, 3.0, 50.0}) {
        const Real50 x(xd), k(kd);
        auto a = polygamma_k(r, x, k, Backend::Reduction, prec);
        auto b = polygamma_k(r, x, k, Backend::Series, prec);
        CAPTURE(r);
        CAPTURE(xd);
        CAPTURE(kd);
        CHECK(a.agrees_with(b));
        // sign is (-1)^(r+1)
        CHECK((r % 2 == 1 ? a.value > 0 : a.value < 0));
      }
    }
  }
}

TEST_CASE("digamma_k is the derivative of ln_gamma_k") {
  const Real50 h("1e-10");
  for (double kd : {0.5, 1.0, 2.0}) {
    for (double xd : {0.5, 2.0, 9.0}) {
      const Real50 x(xd), k(kd);
      auto d = digamma_k(x, k, prec);
      const Real50 fd = (ln_gamma_k(x + h, k, prec).value -
                         ln_gamma_k(x - h, k, prec).value) /
                        (2 * h);
      CHECK(fabs(d.value - fd) < 1e-17);  // O(h^2) truncation dominates
    }
  }
}

TEST_CASE("polygamma_k is the derivative chain") {
  const Real50 h("1e-10");
  const Real50 x("1.7"), k("0.5");
  auto d1 = polygamma_k(1, x, k, prec);
  const Real50 fd1 =
      (digamma_k(x + h, k, prec).value - digamma_k(x - h, k, prec).value) /
      (2 * h);
  CHECK(fabs(d1.value - fd1) < 1e-16);
  auto d3 = polygamma_k(3, x, k, prec);
  const Real50 fd3 = (polygamma_k(2, x + h, k, prec).value -
                      polygamma_k(2, x - h, k, prec).value) /
                     (2 * h);
  CHECK(fabs(d3.value - fd3) < 1e-13);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(ln_gamma_k(Real50(-1), Real50(1), prec), domain_error);
  CHECK_THROWS_AS(ln_gamma_k(Real50(1), Real50(0), prec), domain_error);
  CHECK_THROWS_AS(digamma_k(Real50(0), Real50(1), prec), domain_error);
  CHECK_THROWS_AS(polygamma_k(0, Real50(1), Real50(1), prec), domain_error);
  CHECK_THROWS_AS(KParams(1.0, 1), domain_error);
  CHECK_THROWS_AS(KParams(0.0, 2), domain_error);
  CHECK_THROWS_AS(PrecisionConfig(20, 18), domain_error);
}

TEST_CASE("high tier sharpens the series bounds") {
  PrecisionConfig hi(100, 34);
  auto a = ln_gamma_k(Real100("0.37"), Real100(3), Backend::Series, hi);
  auto b = ln_gamma_k(Real50("0.37"), Real50(3), Backend::Series, prec);
  CHECK(a.abs_error_bound < b.abs_error_bound);
  CHECK(fabs(Real100(b.value) - a.value) <
        Real100(b.abs_error_bound) * 10 + Real100("1e-45"));
}
