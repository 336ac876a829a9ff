#include <doctest.h>

#include <minmetric/biortho.hpp>
#include <minmetric/elsolve.hpp>
#include <minmetric/errors.hpp>
#include <minmetric/finite_models.hpp>
#include <minmetric/robin.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>

using namespace minmetric;

namespace {

GramMatrix two_by_two_gram() {
    RealMatrix g(2, 2);
    g << 1.0, 0.5,
         0.5, 1.0;
    return make_gram(g);
}

} // namespace

TEST_CASE("the stationary point of an identity gram matrix is zero") {
    const GramMatrix id = make_gram(RealMatrix::Identity(4, 4));
    CHECK(solve_el(id).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("the two-by-two stationary point is (-1/3, -1/3)") {
    const RealVector a = solve_el(two_by_two_gram());
    CHECK(a(0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(a(1) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("the four-by-four stationary point matches the closed form") {
    for (double x : {0.3, 0.6, 0.8, 0.9}) {
        const GramMatrix G = gram(eigensystem(build_4x4({.x = x})));
        const RealVector a = solve_el(G);
        const double ea = four_by_four_a(x);
        const double eb = four_by_four_b(x);
        CHECK_MESSAGE(std::abs(a(0) - ea) < 1e-10, "x=", x);
        for (Index k = 1; k < 4; ++k) {
            CHECK_MESSAGE(std::abs(a(k) - eb) < 1e-10, "x=", x, " k=", k);
        }
    }
}

TEST_CASE("classification applies the boundary tolerance band") {
    RealVector inside(2);
    inside << -0.2, 0.1;
    CHECK(classify(inside) == Verdict::MetricExists);

    RealVector far(2);
    far << -1.5, 0.0;
    CHECK(classify(far) == Verdict::NoMinimalMetric);

    RealVector boundary(2);
    boundary << -1.0, 0.0;
    CHECK(classify(boundary) == Verdict::NoMinimalMetric);

    // Just above the band: exists. Just inside it: treated as boundary.
    RealVector above(2);
    above << -1.0 + 2e-9, 0.0;
    CHECK(classify(above) == Verdict::MetricExists);

    RealVector within(2);
    within << -1.0 + 5e-10, 0.0;
    CHECK(classify(within) == Verdict::NoMinimalMetric);
}

TEST_CASE("the coupling-sum condition is evaluated strictly") {
    const GramMatrix id = make_gram(RealMatrix::Identity(3, 3));
    const SufficiencyCheck none = sufficiency_check(id);
    CHECK(none.sum == 0.0);
    CHECK(none.holds);

    // The half matrix sums to exactly 1.0: the strict inequality fails even
    // though the metric exists, showing the condition is not necessary.
    const SufficiencyCheck edge = sufficiency_check(two_by_two_gram());
    CHECK(edge.sum == 1.0);
    CHECK_FALSE(edge.holds);
}

TEST_CASE("analyze resolves the two-by-two model completely") {
    ComplexMatrix h(2, 2);
    h << 1.0, 0.0,
         1.0, 2.0;
    const BiorthogonalSystem sys = eigensystem(h);
    const ElReport rep = analyze(h, sys);

    CHECK(rep.verdict == Verdict::MetricExists);
    CHECK_FALSE(rep.marginal);
    CHECK(rep.alpha_el(0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
    CHECK(rep.alpha_el(1) == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
    CHECK(rep.el_residual < 1e-14);

    CHECK(rep.minimizer.classification == ConeRegion::Interior);
    CHECK(rep.minimizer.hs_distance * rep.minimizer.hs_distance
          == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    CHECK(rep.sufficiency_sum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_FALSE(rep.sufficiency_holds);

    CHECK(rep.oracle.converged);
    CHECK(rep.oracle.active_set.empty());
    CHECK(rep.oracle_agrees);

    REQUIRE(rep.metric.has_value());
    CHECK(std::abs((*rep.metric)(0, 1) - Complex(1.0 / 3.0, 0.0)) < 1e-10);
    REQUIRE(rep.intertwining.has_value());
    CHECK(*rep.intertwining < 1e-12);
    REQUIRE(rep.metric_min_eigenvalue.has_value());
    CHECK(*rep.metric_min_eigenvalue
          == doctest::Approx((2.0 - std::sqrt(2.0)) / 3.0).epsilon(1e-10));
}

TEST_CASE("analyze reports non-existence with a boundary minimiser") {
    const ComplexMatrix h = build_4x4({.x = 0.3});
    const ElReport rep = analyze(h, eigensystem(h));

    CHECK(rep.verdict == Verdict::NoMinimalMetric);
    CHECK(rep.alpha_el.minCoeff() < -1.0); // stationary point leaves the cone
    CHECK(rep.minimizer.classification == ConeRegion::Boundary);
    CHECK(rep.minimizer.alpha.minCoeff() == -1.0);
    CHECK_FALSE(rep.oracle.active_set.empty());
    CHECK(rep.oracle_agrees);

    // No metric: the operator-level extras stay empty.
    CHECK_FALSE(rep.metric.has_value());
    CHECK_FALSE(rep.intertwining.has_value());
    CHECK_FALSE(rep.metric_min_eigenvalue.has_value());
}

TEST_CASE("a normal operator needs no anisotropy at all") {
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    h(0, 0) = 1.0;
    h(1, 1) = 2.0;
    h(2, 2) = 3.0;
    const ElReport rep = analyze(h, eigensystem(h));
    CHECK(rep.verdict == Verdict::MetricExists);
    CHECK(rep.alpha_el.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(rep.minimizer.hs_distance == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rep.sufficiency_holds);
}

TEST_CASE("the stationary point satisfies first-order optimality") {
    for (unsigned seed = 1; seed <= 8; ++seed) {
        const Index n = 3 + Index(seed % 5);
        const GramMatrix G = gram(eigensystem(random_instance(n, 0.25, seed)));
        const RealVector a = solve_el(G);

        CHECK((G.g * a + offdiagonal_row_sums(G)).cwiseAbs().maxCoeff() <= 1e-10 * double(n));
        CHECK(hs_gradient(G, a).cwiseAbs().maxCoeff() <= 1e-9);

        // Coordinate perturbations can only increase the objective.
        const double f0 = hs_objective(G, a);
        for (Index k = 0; k < n; ++k) {
            RealVector up = a, dn = a;
            up(k) += 1e-3;
            dn(k) -= 1e-3;
            CHECK(hs_objective(G, up) > f0);
            CHECK(hs_objective(G, dn) > f0);
        }
    }
}

TEST_CASE("two-dimensional systems always admit a minimal metric") {
    // For n = 2 the stationary point is alpha = -g/(1+g) > -1 with
    // g = G[0][1] < 1, so existence can never fail.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> gdist(0.0, 0.999);
    for (int rep = 0; rep < 100; ++rep) {
        const double gval = gdist(rng);
        RealMatrix g(2, 2);
        g << 1.0, gval,
             gval, 1.0;
        const GramMatrix G = make_gram(g);
        const RealVector a = solve_el(G);
        const double expected = -gval / (1.0 + gval);
        CHECK(std::abs(a(0) - expected) < 1e-10);
        CHECK(std::abs(a(1) - expected) < 1e-10);
        CHECK(classify(a) == Verdict::MetricExists);
    }
}

TEST_CASE("when the coupling sum is small the verdict is always existence") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const GramMatrix G = gram(eigensystem(random_instance(6, 0.1, seed)));
        const ElReport rep = analyze_gram(G);
        if (rep.sufficiency_holds) {
            CHECK(rep.verdict == Verdict::MetricExists);
        }
    }
}

TEST_CASE("the independent minimiser agrees with the linear solve") {
    for (unsigned seed = 1; seed <= 15; ++seed) {
        const Index n = 3 + Index(seed % 6);
        const double p = (seed % 3 == 0) ? 0.6 : 0.2;
        const GramMatrix G = gram(eigensystem(random_instance(n, p, seed)));
        const ElReport rep = analyze_gram(G);
        CHECK_MESSAGE(rep.oracle_agrees, "seed=", seed, " n=", n, " p=", p);
        if (rep.verdict == Verdict::MetricExists) {
            CHECK((rep.alpha_el - rep.oracle.alpha_star).cwiseAbs().maxCoeff() <= 1e-8);
        } else {
            CHECK_FALSE(rep.oracle.active_set.empty());
        }
    }
}

TEST_CASE("truncated model couplings stay below their closed-form budget") {
    const RobinModel model(0.1, 500);
    const SufficiencyCheck suff = sufficiency_check(gram_matrix(model));
    CHECK(suff.holds);
    CHECK(suff.sum < 0.33);
}
