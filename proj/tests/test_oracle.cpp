#include <doctest.h>

#include <minmetric/biortho.hpp>
#include <minmetric/errors.hpp>
#include <minmetric/finite_models.hpp>
#include <minmetric/metric_cone.hpp>
#include <minmetric/oracle.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

using namespace minmetric;

namespace {

GramMatrix two_by_two_gram() {
    RealMatrix g(2, 2);
    g << 1.0, 0.5,
         0.5, 1.0;
    return make_gram(g);
}

GramMatrix four_by_four_gram(double x) {
    return gram(eigensystem(build_4x4({.x = x})));
}

} // namespace

TEST_CASE("an identity gram matrix is solved at the start point") {
    const OracleResult res = minimize(make_gram(RealMatrix::Identity(3, 3)));
    CHECK(res.converged);
    CHECK(res.iterations == 0); // alpha = 0 already satisfies the KKT system
    CHECK(res.alpha_star.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(res.objective_value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(res.active_set.empty());
    CHECK(res.kkt_residual <= 1e-10);
}

TEST_CASE("the two-by-two minimiser lands on the interior stationary point") {
    const OracleResult res = minimize(two_by_two_gram());
    CHECK(res.converged);
    CHECK(res.active_set.empty());
    CHECK(std::abs(res.alpha_star(0) + 1.0 / 3.0) < 1e-9);
    CHECK(std::abs(res.alpha_star(1) + 1.0 / 3.0) < 1e-9);
    CHECK(res.objective_value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("below the threshold the minimiser pins the distinguished direction") {
    const double x = 0.6;
    const double y4 = (1.0 - x * x) * (1.0 - x * x);
    const OracleResult res = minimize(four_by_four_gram(x));

    CHECK(res.converged);
    REQUIRE(res.active_set.size() == 1);
    CHECK(res.active_set[0] == 0);
    CHECK(res.alpha_star(0) == -1.0); // projection pins exactly

    // With alpha_0 = -1 fixed, the free block solves to -2y^4/(1+2y^4).
    const double expected_b = -2.0 * y4 / (1.0 + 2.0 * y4);
    for (Index k = 1; k < 4; ++k) {
        CHECK(std::abs(res.alpha_star(k) - expected_b) < 1e-9);
    }
    const double expected_obj = 4.0 - 3.0 / (1.0 + 2.0 * y4);
    CHECK(res.objective_value == doctest::Approx(expected_obj).epsilon(1e-10));
}

TEST_CASE("crosscheck encodes the agreement contract") {
    RealVector el(2);
    el << -0.25, -0.25;

    OracleResult interior;
    interior.alpha_star = el;
    interior.converged = true;

    CHECK(crosscheck(Verdict::MetricExists, el, interior));
    CHECK_FALSE(crosscheck(Verdict::NoMinimalMetric, el, interior));

    // Small disagreement within tolerance still passes; a large one fails.
    OracleResult off = interior;
    off.alpha_star(0) += 5e-9;
    CHECK(crosscheck(Verdict::MetricExists, el, off));
    off.alpha_star(0) += 1e-3;
    CHECK_FALSE(crosscheck(Verdict::MetricExists, el, off));

    OracleResult pinned = interior;
    pinned.active_set = {0};
    CHECK_FALSE(crosscheck(Verdict::MetricExists, el, pinned));
    CHECK(crosscheck(Verdict::NoMinimalMetric, el, pinned));
}

TEST_CASE("no feasible point beats the reported minimum") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> spread(-1.0, 1.5);
    for (const GramMatrix& G : {two_by_two_gram(), four_by_four_gram(0.6), four_by_four_gram(0.9)}) {
        const OracleResult res = minimize(G);
        REQUIRE(res.converged);
        for (int rep = 0; rep < 200; ++rep) {
            RealVector a(G.size());
            for (Index k = 0; k < G.size(); ++k) a(k) = std::max(-1.0, spread(rng));
            CHECK(hs_objective(G, a) >= res.objective_value - 1e-10);
        }
    }
}

TEST_CASE("the solution is insensitive to the step size") {
    for (const GramMatrix& G : {two_by_two_gram(), four_by_four_gram(0.6)}) {
        MinimizeOptions fine;
        fine.tol = 1e-12;
        MinimizeOptions half;
        half.tol = 1e-12;
        half.step_scale = 0.5;
        const OracleResult a = minimize(G, fine);
        const OracleResult b = minimize(G, half);
        CHECK((a.alpha_star - b.alpha_star).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(a.objective_value == doctest::Approx(b.objective_value).epsilon(1e-12));
    }
}

TEST_CASE("the objective never increases along the iteration") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const Index n = 3 + Index(seed % 5);
        const double p = 0.1 + 0.15 * double(seed % 4);
        const GramMatrix G = gram(eigensystem(random_instance(n, p, seed)));

        std::vector<double> trace;
        MinimizeOptions opts;
        opts.on_iterate = [&trace](long, double f) { trace.push_back(f); };
        const OracleResult res = minimize(G, opts);
        REQUIRE(res.converged);

        for (std::size_t k = 1; k < trace.size(); ++k) {
            CHECK(trace[k] <= trace[k - 1] + 1e-13 * (1.0 + std::abs(trace[k - 1])));
        }
        if (!trace.empty()) {
            CHECK(res.objective_value == doctest::Approx(trace.back()).epsilon(1e-12));
        }
    }
}

TEST_CASE("KKT conditions hold at the reported point") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const Index n = 4 + Index(seed % 4);
        const GramMatrix G = gram(eigensystem(random_instance(n, 0.5, seed)));
        const OracleResult res = minimize(G);
        REQUIRE(res.converged);

        const RealVector grad = hs_gradient(G, res.alpha_star);
        std::vector<bool> active(std::size_t(n), false);
        for (Index i : res.active_set) {
            CHECK(res.alpha_star(i) == -1.0);
            active[std::size_t(i)] = true;
        }
        for (Index k = 0; k < n; ++k) {
            if (active[std::size_t(k)]) {
                // Pinned coordinates must not want to move further down.
                CHECK(grad(k) >= -1e-10);
            } else {
                CHECK(std::abs(grad(k)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("an unreachable iteration cap raises NotConverged") {
    MinimizeOptions strangled;
    strangled.max_iter = 3;
    CHECK_THROWS_AS(minimize(four_by_four_gram(0.6), strangled), NotConverged);
}
