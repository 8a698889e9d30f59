#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracpme/special.hpp"

using namespace fracpme;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
}

TEST_CASE("gamma matches high-precision values") {
    // reference values computed with 30-digit arithmetic
    CHECK(fracpme::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel_err(fracpme::gamma(1.5), 0.88622692545275801365) < 1e-13);
    CHECK(rel_err(fracpme::gamma(2.5), 1.3293403881791370205) < 1e-13);
    CHECK(rel_err(fracpme::gamma(0.5), 1.7724538509055160273) < 1e-13);
    CHECK(rel_err(fracpme::gamma(0.25), 3.6256099082219083119) < 1e-13);
    CHECK(rel_err(fracpme::gamma(1.25), 0.90640247705547707798) < 1e-13);
    CHECK(rel_err(fracpme::gamma(1.75), 0.91906252684888323385) < 1e-13);
    CHECK(rel_err(fracpme::gamma(3.5), 3.3233509704478425512) < 1e-13);
    CHECK(rel_err(fracpme::gamma(0.1), 9.5135076986687318363) < 1e-13);
    CHECK(fracpme::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fracpme::gamma(3.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gamma recurrence on [0.5, 3]") {
    for (double x = 0.5; x <= 3.0; x += 0.03125) {
        CHECK(rel_err(fracpme::gamma(x + 1.0), x * fracpme::gamma(x)) < 1e-12);
    }
}

TEST_CASE("gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(fracpme::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(fracpme::gamma(-1.5), std::domain_error);
}

TEST_CASE("jacobi rule basic structure") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (int n : {2, 8, 32}) {
            const auto rule = jacobi_rule(alpha, n);
            REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
            double prev = 0.0;
            double wsum = 0.0;
            for (int i = 0; i < n; ++i) {
                CHECK(rule.nodes[i] > prev);
                CHECK(rule.nodes[i] < 1.0);
                CHECK(rule.weights[i] > 0.0);
                prev = rule.nodes[i];
                wsum += rule.weights[i];
            }
            // sum of weights = int_0^1 (1-s)^(-alpha) ds = 1/(1-alpha)
            CHECK(rel_err(wsum, 1.0 / (1.0 - alpha)) < 1e-12);
        }
    }
}

TEST_CASE("jacobi rule spec examples") {
    const auto rule = jacobi_rule(0.5, 8);
    double c = 0.0, s1 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        c += rule.weights[i];
        s1 += rule.weights[i] * rule.nodes[i];
    }
    CHECK(rel_err(c, 2.0) < 1e-12);
    // B(2, 1/2) = Gamma(2) Gamma(1/2) / Gamma(5/2) = 4/3
    CHECK(rel_err(s1, 4.0 / 3.0) < 1e-12);

    const auto quarter = jacobi_rule(0.25, 8);
    double c4 = 0.0;
    for (double w : quarter.weights) c4 += w;
    CHECK(rel_err(c4, 4.0 / 3.0) < 1e-12);
}

TEST_CASE("jacobi rule integrates monomials to degree 2n-1") {
    // moment k: int_0^1 (1-s)^(-alpha) s^k ds = B(k+1, 1-alpha)
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (int n : {4, 8, 16, 32}) {
            const auto rule = jacobi_rule(alpha, n);
            for (int k = 0; k <= 2 * n - 1; ++k) {
                double got = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    got += rule.weights[i] * std::pow(rule.nodes[i], k);
                }
                const double want = fracpme::gamma(k + 1.0) * fracpme::gamma(1.0 - alpha) / fracpme::gamma(k + 2.0 - alpha);
                CHECK(std::abs(got - want) < 1e-11);
            }
        }
    }
}

TEST_CASE("simpson and cumulative integral agree on smooth data") {
    const double h = 0.005;
    std::vector<double> v;
    for (int i = 0; i <= 200; ++i) {
        const double x = i * h;
        v.push_back(std::exp(-x) * std::cos(3.0 * x));
    }
    // exact antiderivative of e^-x cos 3x
    auto F = [](double x) {
        return std::exp(-x) * (3.0 * std::sin(3.0 * x) - std::cos(3.0 * x)) / 10.0;
    };
    const double exact = F(1.0) - F(0.0);
    CHECK(std::abs(simpson(v, h) - exact) < 1e-9);

    const auto cum = cumulative_integral(v, h);
    CHECK(cum[0] == 0.0);
    CHECK(std::abs(cum.back() - exact) < 1e-8);
    CHECK(std::abs(cum[100] - (F(0.5) - F(0.0))) < 1e-8);

    // odd prefix length exercises the trailing-interval rule
    std::vector<double> odd(v.begin(), v.begin() + 84);
    CHECK(std::abs(simpson(odd, h) - (F(0.415) - F(0.0))) < 1e-9);
}

TEST_CASE("integrate_simpson on a closed form") {
    const double got = integrate_simpson([](double x) { return x * x * std::exp(x); }, 0.0, 2.0, 512);
    const double exact = std::exp(2.0) * (4.0 - 4.0 + 2.0) - 2.0;  // (x^2-2x+2)e^x
    CHECK(std::abs(got - exact) < 1e-8);
}
