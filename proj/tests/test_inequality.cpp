#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "curv4/inequality.hpp"
#include "curv4/ode.hpp"
#include "curv4/rng.hpp"
#include "curv4/spectrum.hpp"
#include "curv4/tensor.hpp"

using namespace curv4;

TEST_SUITE("inequality") {

TEST_CASE("sharp of a diagonal matrix") {
    const Mat3 m = Vec3(2.0, 3.0, 5.0).asDiagonal();
    const Mat3 expected = Vec3(15.0, 10.0, 6.0).asDiagonal();
    CHECK((sharp3(m) - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(sharp3(Mat3::Zero()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((sharp3(Mat3::Identity()) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sharp satisfies M sharp(M)^T = det(M) I on random matrices") {
    Rng rng(103);
    for (int trial = 0; trial < 10000; ++trial) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = rng.normal();
        const Mat3 prod = m * sharp3(m).transpose();
        const double det = m.determinant();
        CHECK((prod - det * Mat3::Identity()).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("reaction terms at simple operators") {
    SUBCASE("A = C = K I doubles to 6 K^2 I") {
        const CurvatureOperator op = to_operator(constant_curvature(0.25));
        const ReactionTerms q = reaction_terms(op);
        const Mat3 expected = 6.0 * 0.0625 * Mat3::Identity();
        CHECK((q.qa - expected).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK((q.qc - expected).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(q.qb.cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("rank-one diagonal blocks reproduce themselves at value 1/2") {
        // A = C = diag(1/2, 0, 0), B = 0: sharp vanishes, 2 A^2 = A.
        const CurvatureOperator op = to_operator(product_of_surfaces(0.5, 0.5));
        const ReactionTerms q = reaction_terms(op);
        CHECK((q.qa - op.A).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK((q.qc - op.C).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(q.qb.cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("trace of the reaction closes on the trace: tr Q_A = 2 (tr A)^2 stays balanced") {
    Rng rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        const CurvatureOperator op = random_bianchi_operator(rng);
        const ReactionTerms q = reaction_terms(op);
        // tr(M^2 + 2 M#) = (tr M)^2 for 3x3 symmetric M, plus the |B|^2
        // contribution entering both sides equally.
        const double lhs = q.qa.trace() - q.qc.trace();
        const double expect = 2.0 * ((op.A.trace() * op.A.trace()) -
                                     (op.C.trace() * op.C.trace()));
        CHECK(lhs == doctest::Approx(expect).epsilon(1e-10));
        CHECK(std::abs(lhs) <= 1e-10); // trace balance: tr A = tr C
    }
}

TEST_CASE("einstein fixed point residual") {
    SUBCASE("normalized Einstein models are fixed points") {
        CHECK(einstein_fixed_point_residual(to_operator(constant_curvature(1.0 / 6.0))) <= 1e-14);
        CHECK(einstein_fixed_point_residual(to_operator(fubini_study(0.5))) <= 1e-14);
        CHECK(einstein_fixed_point_residual(to_operator(product_of_surfaces(0.5, 0.5))) <= 1e-14);
    }
    SUBCASE("a rescaled Einstein operator is not a fixed point") {
        const CurvatureOperator op =
            scale_operator(to_operator(constant_curvature(1.0 / 6.0)), 1.1);
        const double res = einstein_fixed_point_residual(op);
        // A = 1.1/6 I vs Q_A = 6 (1.1/6)^2 I: per entry 0.11/6, Frobenius x sqrt3.
        CHECK(res == doctest::Approx(std::sqrt(3.0) * 0.11 / 6.0).epsilon(1e-12));
        CHECK(res > 1e-3);
    }
    SUBCASE("non-Einstein input is refused") {
        CHECK_THROWS_AS(einstein_fixed_point_residual(to_operator(round_cylinder(2.0))),
                        std::domain_error);
    }
}

TEST_CASE("drift bracket closed-form values") {
    CHECK(wminus_drift_bracket(12.0, Vec3(-1.0, -1.0, 2.0), Vec3::Zero()) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(wminus_drift_bracket(12.0, Vec3(-2.0 / 3.0, -2.0 / 3.0, 4.0 / 3.0), Vec3::Zero()) ==
          doctest::Approx(32.0).epsilon(1e-12));
    CHECK(wminus_drift_bracket(12.0, Vec3::Zero(), Vec3(1.0, 2.0, 3.0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(wminus_drift_bracket(-1.0, Vec3::Zero(), Vec3::Zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(wminus_drift_bracket(12.0, Vec3(1.0, 1.0, 1.0), Vec3::Zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(wminus_drift_bracket(12.0, Vec3::Zero(), Vec3(-1.0, 0.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("drift bracket is nonnegative when the column sums are equal") {
    // With bt_1 = bt_2 = bt_3 = s the cross term R sum(c_i) s vanishes by the
    // constraint, leaving (1/4) R^2 |c|^2 - 3 R sum c^3 + 12 s |c|^2; the
    // first two terms are the feasible-simplex objective scaled by R/4.
    Rng rng(109);
    for (int trial = 0; trial < 2000; ++trial) {
        const double r = 0.1 + 12.0 * rng.uniform();
        double c1 = (rng.uniform() - 0.5) * r / 3.0;
        double c2 = (rng.uniform() - 0.5) * r / 3.0;
        double c3 = -c1 - c2;
        // Keep within the feasible cap c_i <= r/6 by rescaling.
        const double top = std::max({c1, c2, c3});
        if (top > r / 6.0) {
            const double f = (r / 6.0) / top;
            c1 *= f;
            c2 *= f;
            c3 *= f;
        }
        const double s = rng.uniform();
        const Vec3 c = Vec3(c1, c2, c3);
        const Vec3 bt = Vec3(s, s, s);
        const double cross_exact = r * c.dot(bt); // = r s (c1+c2+c3) = 0 up to fp
        CHECK(std::abs(cross_exact) <= 1e-12 * r);
        CHECK(wminus_drift_bracket(r, c, bt, 1e-9) >= -1e-10);
    }
}

TEST_CASE("objective closed-form values") {
    CHECK(objective_G(12.0, Vec3(-1.0, -1.0, 2.0)) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(objective_G(12.0, Vec3::Zero()) == 0.0);
    CHECK(objective_G(12.0, Vec3(-2.0 / 3.0, -2.0 / 3.0, 4.0 / 3.0)) ==
          doctest::Approx(32.0 / 3.0).epsilon(1e-12));
    CHECK(objective_G(12.0, Vec3(0.0, -2.0, 2.0)) == doctest::Approx(96.0).epsilon(1e-12));
    CHECK_THROWS_AS(objective_G(12.0, Vec3(1.0, 0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("lagrange candidates") {
    const LagrangeSolution s = lagrange_candidates(12.0);
    CHECK(s.interior_symmetric_value == 0.0);
    CHECK(s.interior_asymmetric_value == doctest::Approx(1728.0 / 162.0).epsilon(1e-14));
    CHECK(s.interior_asymmetric(0) == doctest::Approx(-2.0 / 3.0));
    CHECK(s.interior_asymmetric(2) == doctest::Approx(4.0 / 3.0));
    CHECK(s.boundary_min_value == 0.0);
    CHECK(s.boundary_minimizer(0) == doctest::Approx(-1.0));
    CHECK(s.boundary_minimizer(2) == doctest::Approx(2.0));
    CHECK(s.min_value() == 0.0);
    CHECK(s.boundary_value(0.0) == doctest::Approx(96.0));
    CHECK(s.boundary_value(-1.0) == doctest::Approx(0.0));
    CHECK(s.equality_sites().size() == 4);
    // Candidate values agree with direct evaluation of the objective.
    CHECK(objective_G(12.0, s.interior_asymmetric) ==
          doctest::Approx(s.interior_asymmetric_value).epsilon(1e-12));
    CHECK(objective_G(12.0, s.boundary_minimizer) ==
          doctest::Approx(s.boundary_min_value).epsilon(1e-12));
    CHECK_THROWS_AS(lagrange_candidates(0.0), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_candidates(-2.0), std::invalid_argument);
}

TEST_CASE("grid minimum finds the equality sites") {
    SUBCASE("R = 12 with sites on the grid") {
        const GridMinResult g = grid_minimize_G(12.0, 2e-3);
        CHECK_FALSE(g.unbounded_below);
        CHECK(std::abs(g.min_value) <= 1e-12);
        REQUIRE(g.minimizers.size() == 4);
        const auto sites = lagrange_candidates(12.0).equality_sites();
        for (const Vec3& site : sites) {
            double best = 1e300;
            for (const Vec3& rep : g.minimizers)
                best = std::min(best, (rep - site).norm());
            CHECK(best <= 1e-12); // on-grid sites are their clusters' reps
        }
    }
    SUBCASE("R = 1 and R = 2 with off-grid boundary sites") {
        for (double r : {1.0, 2.0}) {
            CAPTURE(r);
            const GridMinResult g = grid_minimize_G(r, 1e-3);
            CHECK_FALSE(g.unbounded_below);
            CHECK(std::abs(g.min_value) <= 1e-12); // the origin site is on-grid
            CHECK(g.minimizers.size() == 4);
            const auto sites = lagrange_candidates(r).equality_sites();
            // Off-grid boundary sites: their reps hug the boundary within the
            // band sublevel blob, whose along-face radius is a few grid cells.
            for (const Vec3& site : sites) {
                double best = 1e300;
                for (const Vec3& rep : g.minimizers)
                    best = std::min(best, (rep - site).norm());
                CHECK(best <= 8e-3);
            }
            // Conversely, every reported minimizer is near some true site.
            for (const Vec3& rep : g.minimizers) {
                double best = 1e300;
                for (const Vec3& site : sites) best = std::min(best, (rep - site).norm());
                CHECK(best <= 8e-3);
            }
        }
    }
    SUBCASE("R = 1.2 puts the boundary sites back on the grid") {
        const GridMinResult g = grid_minimize_G(1.2, 1e-3);
        CHECK(std::abs(g.min_value) <= 1e-12);
        REQUIRE(g.minimizers.size() == 4);
        const auto sites = lagrange_candidates(1.2).equality_sites();
        for (const Vec3& site : sites) {
            double best = 1e300;
            for (const Vec3& rep : g.minimizers)
                best = std::min(best, (rep - site).norm());
            CHECK(best <= 1e-12);
        }
    }
    SUBCASE("the saddle never enters the near-minimal set") {
        const GridMinResult g = grid_minimize_G(12.0, 1e-3);
        const Vec3 saddle = lagrange_candidates(12.0).interior_asymmetric;
        for (const Vec3& rep : g.minimizers)
            CHECK((rep - saddle).norm() > 0.1);
    }
    SUBCASE("R <= 0 is reported unbounded with ray evidence") {
        for (double r : {0.0, -3.0}) {
            const GridMinResult g = grid_minimize_G(r, 1e-2);
            CHECK(g.unbounded_below);
            REQUIRE(g.ray_samples.size() == 4);
            CHECK(g.ray_samples.back().second < -7e10);
            for (std::size_t i = 1; i < g.ray_samples.size(); ++i)
                CHECK(g.ray_samples[i].second < g.ray_samples[i - 1].second);
        }
    }
    SUBCASE("invalid step") {
        CHECK_THROWS_AS(grid_minimize_G(12.0, 0.0), std::invalid_argument);
    }
}

TEST_CASE("barrier quantity") {
    CHECK(barrier_quantity(Vec3(0.0, 1.0, 1.0), 0.0) == doctest::Approx(4.0));
    CHECK(barrier_quantity(Vec3(-0.1, 0.2, 0.3), 0.5) == doctest::Approx(0.76).epsilon(1e-14));
    CHECK(barrier_quantity(Vec3::Zero(), 0.0) == 0.0);
}

TEST_CASE("eigen gap drift right-hand side") {
    CHECK(eigen_gap_drift_rhs(Vec3(0.0, 1.0, 2.0), 1.0, Vec3::Zero(), 2.0) ==
          doctest::Approx(7.0).epsilon(1e-14));
    CHECK_THROWS_AS(eigen_gap_drift_rhs(Vec3::Zero(), 0.0, Vec3::Zero(), 0.0),
                    std::invalid_argument);
    // Equal singular values and middle eigenvalue >= 0 make it nonnegative.
    Rng rng(113);
    for (int trial = 0; trial < 1000; ++trial) {
        const double lo = -std::abs(rng.normal()) - std::abs(rng.normal());
        const double mid = std::abs(rng.normal());
        const Vec3 c(lo, mid, mid + std::abs(rng.normal()));
        const double s = std::abs(rng.normal());
        const double rc0 = std::abs(rng.normal());
        const double r = 0.1 + 5.0 * rng.uniform();
        CHECK(eigen_gap_drift_rhs(c, rc0, Vec3(s, s, s), r) >= -1e-12);
    }
}

} // TEST_SUITE
