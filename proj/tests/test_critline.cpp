#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "fixtures_util.hpp"
#include "zetasieve/critline.hpp"
#include "zetasieve/specfun.hpp"
#include "zetasieve/zerofind.hpp"

using namespace zs;

TEST_CASE("factors: identities on the [1, 100] grid") {
    for (int k = 10; k <= 1000; ++k) {
        const double rho = 0.1 * k;
        critline::CriticalLineFactors f = critline::factors(rho);
        CHECK(f.dr + f.di == 1.0);
        CHECK(std::fabs(f.n * f.n - f.dr * f.di) < 1e-10);
        CHECK(f.dr > -1e-9);
        CHECK(f.dr < 1.0 + 1e-9);
    }
}

TEST_CASE("factors: oracle assembly across the log-space threshold") {
    for (const auto& row : zsfix::oracle().at("critline_factors")) {
        const double rho = zsfix::num(row.at("rho"));
        CAPTURE(rho);
        critline::CriticalLineFactors f = critline::factors(rho);
        CHECK(f.cp == doctest::Approx(zsfix::num(row.at("cp"))).epsilon(1e-10));
        CHECK(f.cm == doctest::Approx(zsfix::num(row.at("cm"))).epsilon(1e-10));
        CHECK(std::fabs(f.n - zsfix::num(row.at("n"))) < 1e-10);
        CHECK(std::fabs(f.dr - zsfix::num(row.at("dr"))) < 1e-10);
    }
}

TEST_CASE("factors: direct and log-space paths agree") {
    funceq::EvalPolicy direct;
    direct.allow_logspace = false;
    funceq::EvalPolicy logspace;
    logspace.logspace_threshold = 0.0;
    for (double rho : {5.0, 28.0, 30.0, 32.0, 90.0}) {
        CAPTURE(rho);
        critline::CriticalLineFactors a = critline::factors(rho, direct);
        critline::CriticalLineFactors b = critline::factors(rho, logspace);
        CHECK(std::fabs(a.n - b.n) < 1e-12);
        CHECK(std::fabs(a.dr - b.dr) < 1e-12);
        CHECK(std::fabs(a.cp - b.cp) < 1e-12);
        CHECK(std::fabs(a.cm - b.cm) < 1e-12);
    }
    CHECK_THROWS_AS(critline::factors(0.0), RangeError);
    CHECK_THROWS_AS(critline::factors(-2.0), RangeError);
}

TEST_CASE("half_zero_function: generically nonzero at a full zero") {
    const double z1 = zsfix::zeros_below_100().front();
    const double want = zsfix::num("f24_at_z1");
    CHECK(critline::half_zero_function(z1) == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::fabs(critline::half_zero_function(z1)) > 1e-3);
    // the N^2 = D_R D_I identity still holds there
    critline::CriticalLineFactors f = critline::factors(z1);
    CHECK(std::fabs(f.n * f.n - f.dr * f.di) < 1e-10);
}

TEST_CASE("half_zero_function: first root above 17 is the Gram-point analogue") {
    zerofind::ScanConfig cfg;
    cfg.rho_min = 17.0;
    cfg.rho_max = 19.0;
    cfg.step = 0.05;
    cfg.refine_tol = 1e-12;
    auto brackets = zerofind::scan_brackets(cfg, critline::half_zero_function);
    REQUIRE(!brackets.empty());
    auto r = zerofind::refine_root(brackets.front(), critline::half_zero_function, 1e-12);
    CHECK(std::fabs(r.rho - zsfix::num("gram0")) < 1e-6);

    // a zeta_I half-zero: D_R = 0 there, and zeta is real and nonzero
    critline::CriticalLineFactors f = critline::factors(r.rho);
    Cplx z = specfun::zeta_strip({0.5, r.rho});
    CHECK(std::fabs(f.dr) < 1e-6);
    CHECK(std::fabs(z.imag()) < 1e-6);
    CHECK(std::fabs(z.real()) > 1e-3);
}

TEST_CASE("full_zero_function: sign convention validated against oracle zeros") {
    const auto& zeros = zsfix::zeros_below_100();
    for (double z : {zeros[0], zeros[10], zeros[28]}) {
        CAPTURE(z);
        CHECK(std::fabs(critline::full_zero_function(z, 1)) < 1e-6);
    }
    // the discarded combinations do not vanish at the first zero
    const double z1 = zeros.front();
    critline::CriticalLineFactors f = critline::factors(z1);
    Cplx d = specfun::zeta_rho_deriv({0.5, z1}, 1);
    CHECK(std::fabs(f.dr * d.imag() + f.n * d.real()) > 1e-2);
    CHECK(std::fabs(f.dr * d.imag() - f.n * d.real()) > 1e-2);
}

TEST_CASE("full_zero_function: roots at the Figure-1 zeros") {
    for (double approx : {52.97, 56.446}) {
        auto target = [](double r) { return critline::full_zero_function(r, 1); };
        auto rr = zerofind::refine_root({approx - 0.05, approx + 0.05}, target, 1e-10);
        CAPTURE(approx);
        double best = 1e9;
        for (double z : zsfix::zeros_below_100()) best = std::min(best, std::fabs(z - rr.rho));
        CHECK(best < 5e-4);
    }
    CHECK_THROWS_AS(critline::full_zero_function(10.0, 3), RangeError);
}

TEST_CASE("classification: D_R roots carry zeta_I half-zeros and vice versa") {
    zerofind::ScanConfig cfg;
    cfg.rho_min = 10.0;
    cfg.rho_max = 60.0;
    cfg.step = 0.05;
    cfg.refine_tol = 1e-12;
    auto brackets = zerofind::scan_brackets(cfg, critline::half_zero_function);
    REQUIRE(brackets.size() > 10);
    int seen_dr = 0, seen_di = 0;
    for (const auto& br : brackets) {
        auto r = zerofind::refine_root(br, critline::half_zero_function, 1e-12);
        critline::CriticalLineFactors f = critline::factors(r.rho);
        Cplx z = specfun::zeta_strip({0.5, r.rho});
        CAPTURE(r.rho);
        if (f.dr < 1e-6) {
            ++seen_dr;
            CHECK(std::fabs(z.imag()) < 1e-6);
            CHECK(std::fabs(z.real()) > 1e-3);
        } else if (f.di < 1e-6) {
            ++seen_di;
            CHECK(std::fabs(z.real()) < 1e-6);
            CHECK(std::fabs(z.imag()) > 1e-3);
        } else {
            FAIL("half-zero root with neither D_R nor D_I near zero");
        }
    }
    CHECK(seen_dr > 0);
    CHECK(seen_di > 0);
}

TEST_CASE("alternation: consecutive half-zero roots flip class over [10, 100]") {
    zerofind::ScanConfig cfg;
    cfg.rho_min = 10.0;
    cfg.rho_max = 100.0;
    cfg.step = 0.05;
    auto brackets = zerofind::scan_brackets(cfg, critline::half_zero_function);
    REQUIRE(brackets.size() > 50);
    int prev = -1;
    for (const auto& br : brackets) {
        auto r = zerofind::refine_root(br, critline::half_zero_function, 1e-10);
        critline::CriticalLineFactors f = critline::factors(r.rho);
        int cls = f.dr < f.di ? 0 : 1;
        if (prev >= 0) CHECK(cls != prev);
        prev = cls;
    }
}

TEST_CASE("root-set containment: every oracle zero is a root of the m=1 equation") {
    auto target = [](double r) { return critline::full_zero_function(r, 1); };
    for (double z : zsfix::zeros_below_100()) {
        if (z < 10.0 || z > 100.0) continue;
        CAPTURE(z);
        auto rr = zerofind::refine_root({z - 0.05, z + 0.05}, target, 1e-10);
        CHECK(std::fabs(rr.rho - z) < 1e-6);
    }
}

TEST_CASE("asymptotic_ratio: oracle diagnostics at rho = 2 and 30") {
    for (const auto& row : zsfix::oracle().at("asymptotic")) {
        const double rho = zsfix::num(row.at("rho"));
        CAPTURE(rho);
        critline::AsymptoticRatios r = critline::asymptotic_ratio(rho);
        CHECK(r.exact == doctest::Approx(zsfix::num(row.at("exact"))).epsilon(1e-9));
        CHECK(r.eq25_rhs == doctest::Approx(zsfix::num(row.at("eq25_rhs"))).epsilon(1e-9));
        CHECK(r.eq27_approx ==
              doctest::Approx(zsfix::num(row.at("eq27_approx"))).epsilon(1e-9));
        CHECK(r.eq28_tan == doctest::Approx(zsfix::num(row.at("eq28_tan"))).epsilon(1e-9));
    }
}

TEST_CASE("asymptotic_ratio: eq25 coincides with the exact ratio at an eq24 root") {
    const double root = zsfix::num("eq24_root_near_30");
    critline::AsymptoticRatios r = critline::asymptotic_ratio(root);
    CHECK(std::fabs(r.exact - r.eq25_rhs) < 1e-7);
    CHECK(std::fabs(critline::half_zero_function(root)) < 1e-12);
}

TEST_CASE("asymptotic_ratio: Stirling gap small at 30, larger at 2") {
    critline::AsymptoticRatios at30 = critline::asymptotic_ratio(30.0);
    critline::AsymptoticRatios at2 = critline::asymptotic_ratio(2.0);
    REQUIRE(!at30.pole_proximity);
    CHECK(std::fabs(at30.exact - at30.eq27_approx) < 0.05);
    CHECK(std::fabs(at2.exact - at2.eq27_approx) >
          std::fabs(at30.exact - at30.eq27_approx));
}

TEST_CASE("factors: stable out to the window edge") {
    for (double rho : {200.0, 350.0, 450.0, 500.0}) {
        CAPTURE(rho);
        critline::CriticalLineFactors f = critline::factors(rho);
        CHECK(std::isfinite(f.cp));
        CHECK(std::fabs(f.cp * f.cp + f.cm * f.cm - 3.141592653589793) < 1e-9);
        CHECK(std::fabs(f.n * f.n - f.dr * f.di) < 1e-9);
    }
    CHECK_THROWS_AS(critline::factors(501.0), RangeError);
}

TEST_CASE("pure evaluators are safe under concurrent callers") {
    std::vector<double> expected;
    for (int i = 0; i < 40; ++i) expected.push_back(critline::full_zero_function(12.0 + i, 1));

    std::vector<std::thread> workers;
    std::vector<std::vector<double>> results(8);
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&results, w] {
            for (int i = 0; i < 40; ++i) {
                results[w].push_back(critline::full_zero_function(12.0 + i, 1));
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& r : results) {
        REQUIRE(r.size() == expected.size());
        for (size_t i = 0; i < r.size(); ++i) CHECK(r[i] == expected[i]);
    }
}

TEST_CASE("asymptotic_ratio: pole proximity flagged near a tan pole") {
    // rho placed so that rho*log(2 pi) sits 5e-4 past pi/2 + 16 pi
    const double ln2pi = 1.8378770664093454836;
    const double rho = (0.5 * 3.141592653589793 + 16.0 * 3.141592653589793 + 5e-4) / ln2pi;
    critline::AsymptoticRatios r = critline::asymptotic_ratio(rho);
    CHECK(r.pole_proximity);
    CHECK_THROWS_AS(critline::asymptotic_ratio(0.5), RangeError);
}
