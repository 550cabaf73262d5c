#include <doctest.h>

#include <cmath>
#include <complex>

#include "fixtures_util.hpp"
#include "zetasieve/numeric_util.hpp"
#include "zetasieve/specfun.hpp"

using namespace zs;
using specfun::detail::zeta_em;

namespace {

double rel_err(Cplx got, Cplx want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("gamma: axis values") {
    CHECK(specfun::gamma_complex({1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(specfun::gamma_complex({1.0, 0.0}).imag() == 0.0);
    CHECK(specfun::gamma_complex({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("gamma: |Gamma(1/2+i)|^2 = pi/cosh(pi)") {
    const double want = zsfix::num("pi_over_cosh_pi");
    const double got = std::norm(specfun::gamma_complex({0.5, 1.0}));
    CHECK(std::fabs(got - want) / want < 1e-12);
    CHECK(got == doctest::Approx(0.2710).epsilon(1e-3));
}

TEST_CASE("gamma: oracle grid, relative error <= 1e-12 up to |s| = 200") {
    for (const auto& row : zsfix::oracle().at("gamma")) {
        Cplx want = zsfix::cnum(row);
        StripPoint p{zsfix::num(row.at("sigma")), zsfix::num(row.at("rho"))};
        CAPTURE(p.sigma);
        CAPTURE(p.rho);
        CHECK(rel_err(specfun::gamma_complex(p), want) < 1e-12);
    }
}

TEST_CASE("gamma: |Gamma|^2 identities on the rho grid") {
    const double pi = 3.14159265358979323846;
    for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        CAPTURE(rho);
        CHECK(std::fabs(std::norm(specfun::gamma_complex({0.0, rho})) -
                        pi / (rho * std::sinh(pi * rho))) /
                  (pi / (rho * std::sinh(pi * rho))) <
              1e-10);
        CHECK(std::fabs(std::norm(specfun::gamma_complex({0.5, rho})) -
                        pi / std::cosh(pi * rho)) /
                  (pi / std::cosh(pi * rho)) <
              1e-10);
        CHECK(std::fabs(std::norm(specfun::gamma_complex({1.0, rho})) -
                        pi * rho / std::sinh(pi * rho)) /
                  (pi * rho / std::sinh(pi * rho)) <
              1e-10);
    }
}

TEST_CASE("gamma: pole and window errors") {
    CHECK_THROWS_AS(specfun::gamma_complex({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(specfun::gamma_complex({-1.0, 1e-13}), PoleError);
    CHECK_THROWS_AS(specfun::gamma_complex({0.0, 501.0}), RangeError);
    CHECK_NOTHROW(specfun::gamma_complex({-1.0, 3.0}));
}

TEST_CASE("digamma: known axis values") {
    CHECK(std::fabs(specfun::digamma_complex({1.0, 0.0}).real() +
                    zsfix::num("euler_gamma")) < 1e-13);
    CHECK(std::fabs(specfun::digamma_complex({0.5, 0.0}).real() -
                    zsfix::num("psi_half")) < 1e-13);
    CHECK(specfun::digamma_complex({1.0, 0.0}).imag() == 0.0);
}

TEST_CASE("digamma: oracle grid, absolute error <= 1e-12") {
    for (const auto& row : zsfix::oracle().at("digamma")) {
        Cplx want = zsfix::cnum(row);
        StripPoint p{zsfix::num(row.at("sigma")), zsfix::num(row.at("rho"))};
        CAPTURE(p.sigma);
        CAPTURE(p.rho);
        CHECK(std::abs(specfun::digamma_complex(p) - want) < 1e-12);
    }
}

TEST_CASE("digamma: conjugate symmetry") {
    SplitMix64 rng(7);
    for (int i = 0; i < 20; ++i) {
        StripPoint p{rng.uniform(-0.9, 2.0), rng.uniform(0.5, 80.0)};
        Cplx up = specfun::digamma_complex(p);
        Cplx down = specfun::digamma_complex({p.sigma, -p.rho});  // psi(conj s) = conj psi(s)
        CHECK(up.imag() == -down.imag());
        CHECK(up.real() == down.real());
    }
}

TEST_CASE("zeta: classic values") {
    CHECK(std::abs(specfun::zeta_strip({2.0, 0.0}) - Cplx(zsfix::num("zeta_2"), 0.0)) <
          1e-13);
    CHECK(specfun::zeta_strip({0.0, 0.0}).real() == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(specfun::zeta_strip({0.0, 0.0}).imag() == 0.0);
    CHECK(specfun::zeta_strip({0.3, 0.0}).imag() == 0.0);
}

TEST_CASE("zeta: vanishes at the first critical-line zero") {
    const double z1 = zsfix::zeros_below_100().front();
    CHECK(std::abs(specfun::zeta_strip({0.5, z1})) < 1e-9);
}

TEST_CASE("zeta: oracle grid") {
    for (const auto& row : zsfix::oracle().at("zeta")) {
        Cplx want = zsfix::cnum(row);
        StripPoint p{zsfix::num(row.at("sigma")), zsfix::num(row.at("rho"))};
        CAPTURE(p.sigma);
        CAPTURE(p.rho);
        EvalAccuracy acc;
        Cplx got = specfun::zeta_strip(p, acc);
        CHECK(std::abs(got - want) < 1e-11);
        CHECK(acc.achieved_bound <= acc.abs_tol);
    }
}

TEST_CASE("zeta: conjugate symmetry is exact as evaluated") {
    SplitMix64 rng(11);
    for (int i = 0; i < 25; ++i) {
        Cplx s{rng.uniform(0.05, 0.95), rng.uniform(0.5, 80.0)};
        Cplx up = zeta_em(s, 1e-12, nullptr, 0);
        Cplx down = zeta_em(std::conj(s), 1e-12, nullptr, 0);
        CHECK(up.real() == down.real());
        CHECK(up.imag() == -down.imag());
    }
}

TEST_CASE("zeta: pole and window errors") {
    CHECK_THROWS_AS(specfun::zeta_strip({1.0, 0.0}), PoleError);
    CHECK_THROWS_AS(specfun::zeta_strip({2.5, 1.0}), RangeError);
    CHECK_THROWS_AS(specfun::zeta_strip({0.5, -1.0}), RangeError);
}

TEST_CASE("zeta: unreachable accuracy raises AccuracyError") {
    EvalAccuracy acc;
    acc.abs_tol = 1e-40;
    CHECK_THROWS_AS(specfun::zeta_strip({0.5, 50.0}, acc), AccuracyError);
}

TEST_CASE("zeta_rho_deriv: i*zeta'(2) on the real axis") {
    Cplx want{0.0, zsfix::num("zeta_prime_2")};
    CHECK(std::abs(specfun::zeta_rho_deriv({2.0, 0.0}, 1) - want) < 1e-12);
}

TEST_CASE("zeta_rho_deriv: oracle grid for m = 1 and m = 2") {
    for (const auto& row : zsfix::oracle().at("zeta_rho_deriv")) {
        Cplx want = zsfix::cnum(row);
        StripPoint p{zsfix::num(row.at("sigma")), zsfix::num(row.at("rho"))};
        int m = row.at("m").get<int>();
        CAPTURE(p.sigma);
        CAPTURE(p.rho);
        CAPTURE(m);
        CHECK(std::abs(specfun::zeta_rho_deriv(p, m) - want) < 1e-10);
    }
}

TEST_CASE("zeta_rho_deriv: central differences agree to 1e-6") {
    const double h = 1e-5;
    auto fd = [&](StripPoint p) {
        Cplx hi = specfun::zeta_strip({p.sigma, p.rho + h});
        Cplx lo = specfun::zeta_strip({p.sigma, p.rho - h});
        return (hi - lo) / (2.0 * h);
    };
    CHECK(std::abs(specfun::zeta_rho_deriv({0.5, 20.0}, 1) - fd({0.5, 20.0})) < 1e-6);

    SplitMix64 rng(23);
    for (int i = 0; i < 20; ++i) {
        StripPoint p{rng.uniform(0.1, 0.9), rng.uniform(1.0, 60.0)};
        CAPTURE(p.sigma);
        CAPTURE(p.rho);
        CHECK(std::abs(specfun::zeta_rho_deriv(p, 1) - fd(p)) < 1e-6);
    }
}

TEST_CASE("zeta_rho_deriv: Cauchy-Riemann pairing with the s-derivative") {
    // d/drho zeta_R = -Im zeta', d/drho zeta_I = Re zeta'
    Cplx s{0.35, 17.0};
    Cplx ds = zeta_em(s, 1e-12, nullptr, 1);
    Cplx drho = specfun::zeta_rho_deriv({s.real(), s.imag()}, 1);
    CHECK(drho.real() == doctest::Approx(-ds.imag()).epsilon(1e-12));
    CHECK(drho.imag() == doctest::Approx(ds.real()).epsilon(1e-12));

    CHECK_THROWS_AS(specfun::zeta_rho_deriv({0.5, 5.0}, 3), RangeError);
}
