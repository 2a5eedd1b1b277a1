#pragma once

#include "curv4/rng.hpp"
#include "curv4/tensor.hpp"
#include "curv4/tolerances.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// The two orderings of two-form bases in use: the simple basis
// {e_i ^ e_j} in the pair order (12,13,14,23,24,34), and the
// self-dual/anti-self-dual basis (phi+_1..3, phi-_1..3), each with the
// 1/sqrt(2) normalization.  Both are orthonormal for the inner product
// <X^Y, V^W> = <X,V><Y,W> - <X,W><Y,V>.
enum class TwoFormBasis { Simple, SelfDualSplit };

// Change-of-basis matrix from the given basis to the simple basis
// (columns are basis elements in simple coordinates).  Orthogonal.
const Mat6& basis_matrix(TwoFormBasis basis);

// Curvature operator on two-forms in the phi basis: full matrix
// [[A, B], [B^T, C]].  A and C are symmetric; tr A = tr C = R/4 for any
// operator coming from a Bianchi-valid tensor.
struct CurvatureOperator {
    Mat3 A = Mat3::Zero();
    Mat3 B = Mat3::Zero();
    Mat3 C = Mat3::Zero();
    double R = 0.0; // scalar curvature, consistency field = 2(tr A + tr C)

    Mat6 full() const;
    double norm() const; // Frobenius norm of the full 6x6 matrix
};

CurvatureOperator make_operator(const Mat3& a, const Mat3& b, const Mat3& c);

struct OperatorValidation {
    bool pass = true;
    double sym_residual_a = 0.0;
    double sym_residual_c = 0.0;
    double trace_gap = 0.0;
};

OperatorValidation validate_operator(const CurvatureOperator& op,
                                     double sym_tol = kSymTol,
                                     double trace_tol = kTraceTol);

// Conjugates the simple-basis matrix of t into the phi basis and returns the
// blocks.  reverse_orientation first re-expresses t in the frame with e4
// negated, which exchanges the roles of the self-dual and anti-self-dual
// parts (A and C swap spectra, B transposes).
// Throws std::invalid_argument when t fails the Bianchi check.
CurvatureOperator to_operator(const CurvatureTensor& t, bool reverse_orientation = false,
                              double bianchi_tol = kBianchiTol);

// Inverse of to_operator.  Throws std::invalid_argument when A or C is not
// symmetric within sym_tol or |tr A - tr C| > trace_tol (such blocks do not
// come from a Bianchi-valid tensor).
CurvatureTensor from_operator(const CurvatureOperator& op, double sym_tol = kSymTol,
                              double trace_tol = kTraceTol);

// Traceless Ricci tensor encoded by the off-diagonal block: the explicit
// symmetric trace-free 4x4 matrix built from the entries of B.  Linear
// bijection; no Bianchi assumption needed.
Mat4 b_to_traceless_ricci(const Mat3& b);

// Inverse map.  Throws std::invalid_argument if rc0 is not symmetric and
// trace-free within tol.
Mat3 traceless_ricci_to_b(const Mat4& rc0, double tol = kSymTol);

// Random symmetric 6x6 matrix with standard normal entries, least-squares
// projected onto the Bianchi hyperplane R_1234 - R_1324 + R_1423 = 0.
CurvatureTensor random_bianchi_tensor(Rng& rng);
CurvatureOperator random_bianchi_operator(Rng& rng);

} // namespace curv4
