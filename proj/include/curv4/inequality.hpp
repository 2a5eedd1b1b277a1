#pragma once

#include <vector>

#include "curv4/operator.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// Transpose of the adjugate, by cofactors: M . adj(M) = det(M) . I.
Mat3 sharp3(const Mat3& m);

// Quadratic reaction part of the curvature evolution in block form:
//   Q_A = 2(A^2 + 2 A# + B B^T)
//   Q_B = 2(A B + B C + 2 B#)
//   Q_C = 2(C^2 + 2 C# + B^T B)
struct ReactionTerms {
    Mat3 qa;
    Mat3 qb;
    Mat3 qc;
};

ReactionTerms reaction_terms(const CurvatureOperator& op);

// A normalized Einstein shrinker (Rc = g/2, parallel curvature) is a fixed
// point of the reaction: Rm = 2(Rm^2 + Rm#).  Returns the largest blockwise
// Frobenius deviation max(|A - Q_A|, |B - Q_B|, |C - Q_C|).
// Throws std::domain_error when the input is not Einstein
// (|traceless Ricci| > einstein_tol); the normalization R = 2 is NOT
// enforced, so de-normalized controls evaluate to a nonzero residual.
double einstein_fixed_point_residual(const CurvatureOperator& op,
                                     double einstein_tol = 1e-10);

// Bracketed right-hand side of the drift lower bound for the norm of the
// anti-self-dual block, as a function of the trace-free spectrum c (sum 0,
// ascending) and the squared column sums bt of the off-diagonal block:
//   (1/4) R^2 sum c_i^2 - 3 R sum c_i^3 + 4 (sum c_i^2)(sum bt_i^2)
//     - R sum c_i bt_i^2.
// The full bound carries a further factor 2/(R^2 |C|), reported by callers
// only when |C| > 0.  Throws std::invalid_argument for R <= 0 (trivial
// soliton), sum c beyond tol, or negative bt entries.
double wminus_drift_bracket(double r, const Vec3& c, const Vec3& b_col_sq,
                            double tol = 1e-10);

// G(c) = R sum c_i^2 - 12 sum c_i^3 on the constraint plane sum c = 0.
// Throws std::invalid_argument when the constraint fails beyond tol.
double objective_G(double r, const Vec3& c, double tol = 1e-10);

struct GridMinResult {
    double min_value = 0.0;
    Vec3 argmin = Vec3::Zero();
    // Cluster representatives of near-minimal grid points (within the
    // flatness band), sorted lexicographically.
    std::vector<Vec3> minimizers;
    bool unbounded_below = false;
    // For R <= 0: (s, G(s.(-1,-1,2))) ray samples witnessing divergence.
    std::vector<std::pair<double, double>> ray_samples;
};

// Brute-force minimum of G over the feasible simplex {sum c = 0, c_i <= R/6},
// parameterized by (c_1, c_2) on a grid of the enclosing box
// [-R/3 - step, R/6]^2 (sum c = 0 and c_i <= R/6 force c_i >= -R/3).
// Near-minimal points within band = max(R^2 step, 20 R step^2,
// 1e-9 max(1,R)^3) are merged into clusters by single linkage at distance
// 2*step; each cluster reports its smallest-G point (lexicographic
// tie-break).  The linear term covers boundary sites that fall between grid
// points, where the constrained gradient is of order R^2.
// For R <= 0 the feasible region degenerates and G is unbounded below along
// rays; the result reports unboundedness with sampled evidence instead.
GridMinResult grid_minimize_G(double r, double step);

// Closed-form critical points of G on the constraint set.
struct LagrangeSolution {
    double r = 0.0;
    Vec3 interior_symmetric = Vec3::Zero(); // (0,0,0)
    double interior_symmetric_value = 0.0;  // 0
    Vec3 interior_asymmetric = Vec3::Zero(); // (-R/18, -R/18, R/9), a saddle
    double interior_asymmetric_value = 0.0;  // R^3/162
    Vec3 boundary_minimizer = Vec3::Zero();  // (-R/12, -R/12, R/6)
    double boundary_min_value = 0.0;         // 0
    // On the boundary face c_3 = R/6: G = 8 R (c_1 + R/12)^2.
    double boundary_value(double c1) const;
    // The equality sites: origin plus all permutations of (-R/12, -R/12, R/6).
    std::vector<Vec3> equality_sites() const;
    double min_value() const; // minimum over the candidate set (= 0)
};

// Throws std::invalid_argument for r <= 0.
LagrangeSolution lagrange_candidates(double r);

// 2 C_1^2 + 2 B_1^2 + 4 C_2 C_3 for ascending C eigenvalues and the smallest
// singular value B_1 of the off-diagonal block.
double barrier_quantity(const Vec3& c_eigs, double b1);

// Right-hand side of the drift bound for the normalized eigenvalue gap
// (C_3 - C_1)/R:
//   (2/R^2) [ (C_3 - C_1) |Rc0|^2 + R (B_1^2 - B_3^2) + 3 R (C_3 - C_1) C_2 ].
// Nonnegative when B_1 = B_2 = B_3 and C_2 >= 0.  Throws for R <= 0.
double eigen_gap_drift_rhs(const Vec3& c_eigs, double ricci0_norm_sq,
                           const Vec3& b_singulars, double r);

} // namespace curv4
