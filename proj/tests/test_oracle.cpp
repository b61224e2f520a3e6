#include <gtest/gtest.h>

#include <cmath>

#include "lidstone/error.hpp"
#include "lidstone/oracle.hpp"

using namespace lidstone;

namespace {

const double kEpsilons[] = {1.0, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10};

}  // namespace

TEST(ExactModel, EpsilonOneCoefficients) {
    const auto m = make_exact_model(1.0);
    EXPECT_NEAR(m.r1, 0.6180339887498949, 1e-15);
    EXPECT_NEAR(m.r2, -1.618033988749895, 1e-15);

    // Boundary fit solved independently: c1 + c2 = 3/2, c1 e^{r1} + c2 e^{r2} = 5/2.
    const double e1 = std::exp(m.r1), e2 = std::exp(m.r2);
    const double c2 = (1.5 * e1 - 2.5) / (e1 - e2);
    EXPECT_NEAR(m.c2, c2, 1e-14);
    EXPECT_NEAR(m.c1, 1.5 - c2, 1e-14);
    // 30-digit evaluation of the same fit.
    EXPECT_NEAR(m.c2, 0.17074070563382187, 1e-15);
    EXPECT_NEAR(m.c1, 1.3292592943661781, 1e-15);
}

TEST(ExactModel, RootsAndBoundaryConditions) {
    for (double eps : kEpsilons) {
        const auto m = make_exact_model(eps);
        EXPECT_NEAR(eps * m.r1 * m.r1 + m.r1 - 1.0, 0.0, 1e-12) << eps;
        EXPECT_NEAR(eps * m.r2 * m.r2 + m.r2 - 1.0, 0.0, 1e-12) << eps;
        EXPECT_NEAR(m.c1 + m.c2, 0.5 + eps, 1e-12) << eps;
        EXPECT_NEAR(exact_u(m, 0.0), 0.0, 1e-10) << eps;
        EXPECT_NEAR(exact_u(m, 1.0), 0.0, 1e-10) << eps;
        EXPECT_LT(m.r2, 0.0);
    }
}

TEST(ExactModel, StableRootMatchesPrintedFormWhereItIsAccurate) {
    for (double eps : {1.0, 0.5, 1e-2}) {
        const auto m = make_exact_model(eps);
        EXPECT_NEAR(m.r2, 2.0 / (1.0 - std::sqrt(1.0 + 4.0 * eps)), 1e-12 * std::abs(m.r2));
    }
}

TEST(ExactModel, LayerWidthAndNoOverflow) {
    const auto m = make_exact_model(1e-6);
    EXPECT_NEAR(m.r2, -1e6, 2.0);
    for (double eps : {1e-12, 1e-10, 1e-6, 1.0}) {
        const auto model = make_exact_model(eps);
        for (int k = 0; k <= 1000; ++k) {
            const double x = k / 1000.0;
            EXPECT_TRUE(std::isfinite(exact_u(model, x))) << eps << ' ' << x;
        }
    }
}

TEST(ExactModel, MidpointValue) {
    EXPECT_NEAR(exact_u(make_exact_model(1.0), 0.5), 0.01159491606391616, 1e-14);
}

TEST(ExactModel, DecoupledOdeResidual) {
    for (double eps : kEpsilons) {
        const auto m = make_exact_model(eps);
        for (int k = 0; k <= 100; ++k) {
            const double x = k / 100.0;
            const double d2 = exact_u(m, x, 2), d1 = exact_u(m, x, 1), d0 = exact_u(m, x);
            // Inside the layer eps u'' and u' are ~1/eps and cancel.
            const double scale = std::abs(eps * d2) + std::abs(d1) + std::abs(d0);
            EXPECT_NEAR(-eps * d2 - d1 + d0, exact_w(x), 1e-9 + 1e-15 * scale) << eps << ' ' << x;
        }
    }
}

TEST(ExactModel, SubstitutedOdeResidual) {
    // Term by term: each exponential picks up 1 - r - eps r^2, the quadratic
    // part leaves x(1-x)/2.
    for (double eps : kEpsilons) {
        const auto m = make_exact_model(eps);
        for (int k = 0; k <= 100; ++k) {
            const double x = k / 100.0;
            const double layer = m.c1 * (1.0 - m.r1 - eps * m.r1 * m.r1) * std::exp(m.r1 * x) +
                                 m.c2 * (1.0 - m.r2 - eps * m.r2 * m.r2) * std::exp(m.r2 * x);
            const double quad = eps + (x + 0.5) - (x * x + x + 1.0) / 2.0 - eps;
            EXPECT_NEAR(layer + quad, exact_w(x), 1e-9) << eps << ' ' << x;
        }
    }
}

TEST(ExactModel, FourthOrderEquation) {
    // -eps u'''' - u''' + u'' = -f with f = 1; checked away from the layer
    // where the derivative magnitudes stay representable to 1e-9.
    for (double eps : {1.0, 1e-2}) {
        const auto m = make_exact_model(eps);
        for (int k = 0; k <= 20; ++k) {
            const double x = k / 20.0;
            const double lhs = -eps * exact_u(m, x, 4) - exact_u(m, x, 3) + exact_u(m, x, 2);
            EXPECT_NEAR(lhs, -exact_f(x), 1e-9) << eps << ' ' << x;
        }
    }
}

TEST(ExactModel, IntermediateAndSource) {
    EXPECT_EQ(exact_w(0.0), 0.0);
    EXPECT_EQ(exact_w(1.0), 0.0);
    EXPECT_EQ(exact_w(0.5), 0.125);
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(exact_f(k / 10.0), 1.0);
    // -w'' = f via central differences (w is quadratic, so exact up to round-off).
    const double h = 1e-3;
    for (double x : {0.1, 0.4, 0.9}) {
        EXPECT_NEAR(-(exact_w(x + h) - 2 * exact_w(x) + exact_w(x - h)) / (h * h), 1.0, 1e-6);
    }
}

TEST(ExactModel, DomainChecks) {
    EXPECT_THROW(make_exact_model(0.0), ParameterError);
    EXPECT_THROW(make_exact_model(1.5), ParameterError);
    const auto m = make_exact_model(0.1);
    EXPECT_THROW(exact_u(m, -0.1), ParameterError);
    EXPECT_THROW(exact_u(m, 1.1), ParameterError);
    EXPECT_THROW(exact_u(m, 0.5, 5), ParameterError);
}
