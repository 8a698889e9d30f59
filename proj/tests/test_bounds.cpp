#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracpme/bounds.hpp"
#include "fracpme/errors.hpp"
#include "fracpme/special.hpp"

using namespace fracpme;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// bisection on a bracketing interval, used as the defining-property oracle
template <typename F>
double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo > 0) == (fm > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("params validation") {
    CHECK_NOTHROW(ProblemParams{0.5, 2.0}.validate());
    CHECK_THROWS_AS((ProblemParams{0.0, 2.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ProblemParams{1.0, 2.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ProblemParams{0.5, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ProblemParams{1.5, 0.5}.validate()), std::invalid_argument);
}

TEST_CASE("beta0 closed form") {
    CHECK(rel_err(beta0({0.5, 2.0}), 0.65049380293805813874) < 1e-13);
    CHECK(rel_err(beta0({0.25, 3.0}), 0.64538746449819201866) < 1e-13);
    CHECK(rel_err(beta0({0.75, 1.5}), 0.58717082568683676295) < 1e-13);
    // limiting substitution alpha -> 1, m -> 1 gives 1/2
    CHECK(beta0({1.0 - 1e-10, 1.0 + 1e-10}) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("g1/g2 basics") {
    const ProblemParams p{0.5, 2.0};
    for (double beta : {0.0, 0.3, 1.0, 5.0}) {
        CHECK(g1(0.0, beta, p) == 1.0);
        CHECK(g2(0.0, beta, p) == 1.0);
        for (double eta = 0.0; eta <= 3.0; eta += 0.1) {
            CHECK(g2(eta, beta, p) <= g1(eta, beta, p));
        }
    }
    // direct arithmetic at alpha=0.5, m=2, beta=1, eta=1
    const double want = 1.0 + 3.0 * (-1.0 + 2.25 / (8.0 * fracpme::gamma(1.5)));
    CHECK(rel_err(g1(1.0, 1.0, p), want) < 1e-14);
}

TEST_CASE("eta1/eta2 are the envelope roots") {
    const ProblemParams p{0.5, 2.0};
    const double b0 = beta0(p);

    SUBCASE("eta1 at the threshold has vanishing discriminant") {
        const double e = eta1(b0, p);
        CHECK(rel_err(e, 4.0 * b0 * fracpme::gamma(1.5) / (1.5 * 1.5)) < 1e-10);
        CHECK(std::abs(g1(e, b0, p)) < 1e-9);
    }

    SUBCASE("defining property via bisection") {
        for (double beta : {1.0, 1.3, 2.0}) {
            const double e1 = eta1(beta, p);
            const double ref = bisect([&](double e) { return g1(e, beta, p); }, 0.0, e1 * 1.5);
            CHECK(std::abs(e1 - ref) < 1e-10);
            CHECK(std::abs(g1(e1, beta, p)) < 1e-10);

            const double e2 = eta2(beta, p);
            CHECK(e2 > 0.0);
            CHECK(std::abs(g2(e2, beta, p)) < 1e-10);
        }
        // eta2 at beta=0 is the root of g2(., 0)
        const double e20 = eta2(0.0, p);
        CHECK(std::abs(g2(e20, 0.0, p)) < 1e-10);
    }

    SUBCASE("domain error below the threshold") {
        CHECK_THROWS_AS(eta1(0.9 * b0, p), BracketError);
        CHECK_NOTHROW(eta1(b0 * (1.0 + 1e-14), p));
    }

    SUBCASE("both roots shrink to zero for large slopes") {
        double prev1 = eta1(10.0, p), prev2 = eta2(10.0, p);
        for (double beta : {100.0, 1000.0}) {
            const double e1 = eta1(beta, p), e2 = eta2(beta, p);
            CHECK(e1 < prev1);
            CHECK(e2 < prev2);
            prev1 = e1;
            prev2 = e2;
        }
        CHECK(eta1(1000.0, p) < 1e-3);
        CHECK(eta2(1000.0, p) < 1e-3);
    }
}

TEST_CASE("monotone decreasing roots and ordering on a beta grid") {
    for (const ProblemParams p : {ProblemParams{0.25, 1.5}, {0.5, 2.0}, {0.75, 3.0}}) {
        const double b0 = beta0(p);
        double prev1 = 1e300, prev2 = 1e300;
        for (int i = 0; i <= 60; ++i) {
            const double beta = b0 * (1.0 + 3.0 * i / 60.0);
            const double e1 = eta1(beta, p), e2 = eta2(beta, p);
            CHECK(e2 <= e1 + 1e-12);
            CHECK(e1 <= prev1 + 1e-12);
            CHECK(e2 <= prev2 + 1e-12);
            prev1 = e1;
            prev2 = e2;
        }
    }
}

TEST_CASE("f_plus closed-form identity at beta0") {
    // f_plus(beta0) = alpha / (sqrt(2) sqrt((m+1) Gamma(2-alpha)))
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (double m : {1.5, 2.0, 3.0}) {
            const ProblemParams p{alpha, m};
            const double want = alpha / (std::sqrt(2.0) * std::sqrt((m + 1.0) * fracpme::gamma(2.0 - alpha)));
            CHECK(rel_err(f_plus(beta0(p), p), want) < 1e-10);
        }
    }
    CHECK(rel_err(f_plus(beta0({0.5, 2.0}), {0.5, 2.0}), 0.21683126764601937958) < 1e-10);
}

TEST_CASE("flux envelope properties") {
    const ProblemParams p{0.5, 2.0};
    const double b0 = beta0(p);

    CHECK(f_minus(0.0, p) > 0.0);
    CHECK(f_plus(1000.0 * b0, p) < 0.0);
    CHECK(f_minus(1000.0 * b0, p) < 0.0);

    SUBCASE("f_minus below f_plus above the threshold") {
        for (int i = 0; i <= 40; ++i) {
            const double beta = b0 * (1.0 + 9.0 * i / 40.0);
            CHECK(f_minus(beta, p) <= f_plus(beta, p) + 1e-12);
        }
    }

    SUBCASE("both decreasing in beta") {
        double prev_p = 1e300, prev_m = 1e300;
        for (int i = 0; i <= 50; ++i) {
            const double beta = b0 * (1.0 + 9.0 * i / 50.0);
            const double fp = f_plus(beta, p), fm = f_minus(beta, p);
            CHECK(fp < prev_p);
            CHECK(fm < prev_m);
            prev_p = fp;
            prev_m = fm;
        }
    }

    SUBCASE("sign change exists for the shooting bracket") {
        CHECK(f_plus(b0, p) > 0.0);
        bool negative_somewhere = false;
        for (double beta = b0; beta <= 1000.0 * b0; beta *= 2.0) {
            if (f_minus(beta, p) < 0.0) {
                negative_somewhere = true;
                break;
            }
        }
        CHECK(negative_somewhere);
    }
}

TEST_CASE("bounds_report assembles the right fields") {
    const ProblemParams p{0.5, 2.0};
    const double b0 = beta0(p);

    const auto below = bounds_report(0.5 * b0, p);
    CHECK_FALSE(below.eta1.has_value());
    CHECK_FALSE(below.f_plus.has_value());
    CHECK(below.eta2 > 0.0);

    const auto above = bounds_report(1.5 * b0, p);
    REQUIRE(above.eta1.has_value());
    REQUIRE(above.f_plus.has_value());
    CHECK(above.eta2 <= *above.eta1);
}
