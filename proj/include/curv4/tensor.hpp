#pragma once

#include <array>
#include <string>
#include <vector>

#include "curv4/tolerances.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// Algebraic curvature tensor on R^4 in an orthonormal frame, with the
// symmetries R_ijkl = -R_jikl = -R_ijlk = R_klij held by construction.
// Storage is the 21 canonical components with i<j, k<l and (i,j) <= (k,l)
// in the pair order (12,13,14,23,24,34).  Indices are 1-based throughout.
class CurvatureTensor {
public:
    static constexpr int kNumPairs = 6;
    static constexpr int kNumCanonical = 21;
    // Pair order (12,13,14,23,24,34), 1-based entries.
    static constexpr std::array<std::array<int, 2>, kNumPairs> kPairs{
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

    CurvatureTensor() { storage_.fill(0.0); }

    // Index of the unordered pair {i,j}, i != j, in the canonical order.
    static int pair_index(int i, int j);

    // R_ijkl for any 1-based indices; 0 when i == j or k == l.
    double component(int i, int j, int k, int l) const;

    // Sets R_ijkl (and all symmetry images). i != j, k != l required.
    void set_component(int i, int j, int k, int l, double value);

    // Matrix of the operator in the simple basis {e_i ^ e_j}: entry
    // (p, q) = R_{P[p] P[q]}.  Symmetric by construction.
    Mat6 simple_matrix() const;
    static CurvatureTensor from_simple_matrix(const Mat6& m);

    const std::array<double, kNumCanonical>& canonical() const { return storage_; }

private:
    static int flat_index(int p, int q); // p <= q, 0-based pair indices
    std::array<double, kNumCanonical> storage_;
};

struct BianchiViolation {
    std::array<int, 4> ijkl;
    double residual;
};

struct ValidationResult {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<BianchiViolation> violations;
};

// Exhaustive first-Bianchi check: residual |R_ijkl + R_iklj + R_iljk| over
// all index quadruples.  Antisymmetry and pair symmetry hold by storage.
ValidationResult validate_tensor(const CurvatureTensor& t, double bianchi_tol = kBianchiTol);

struct RicciData {
    Mat4 ricci;
    double scalar = 0.0;
    Mat4 traceless;
    Vec4 eigenvalues; // of the traceless part, ascending
};

// Ric_ik = sum_j R_ijkj in the orthonormal frame.
RicciData ricci_contraction(const CurvatureTensor& t);

// Frame rotation e'_a = sum_i Q_ia e_i: R'_abcd = R(e'_a, e'_b, e'_c, e'_d).
// Exact contraction through 2x2 minors of Q; Q only needs to be invertible,
// orthogonality is the caller's concern.
CurvatureTensor rotate_tensor(const CurvatureTensor& t, const Mat4& q);

// Model builders.  All return validated tensors.
CurvatureTensor flat();
// R_ijkl = K (d_ik d_jl - d_il d_jk); sectional curvature K on every plane.
CurvatureTensor constant_curvature(double k);
// Factor curvature k1 on span(e1,e2), k2 on span(e3,e4).
CurvatureTensor product_of_surfaces(double k1, double k2);
// S^3(r) x R: sectional 1/r^2 on planes inside span(e1,e2,e3), 0 on planes
// containing e4.
CurvatureTensor round_cylinder(double r);
// Complex projective plane in a frame {e1, Je1, e2, Je2}, scaled so that
// Ric = scale * g (holomorphic sectional curvature (2/3)*scale).
CurvatureTensor fubini_study(double scale);

} // namespace curv4
