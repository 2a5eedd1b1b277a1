#include "curv4/operator.hpp"

#include <cmath>
#include <stdexcept>

namespace curv4 {

namespace {

Mat6 make_phi_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat6 p;
    p.setZero();
    // Rows: simple pairs (12,13,14,23,24,34); columns: phi+_1..3, phi-_1..3.
    p(0, 0) = s; p(5, 0) = s;   // phi+_1 = (e12 + e34)/sqrt2
    p(1, 1) = s; p(4, 1) = -s;  // phi+_2 = (e13 - e24)/sqrt2
    p(2, 2) = s; p(3, 2) = s;   // phi+_3 = (e14 + e23)/sqrt2
    p(0, 3) = s; p(5, 3) = -s;  // phi-_1 = (e12 - e34)/sqrt2
    p(1, 4) = s; p(4, 4) = s;   // phi-_2 = (e13 + e24)/sqrt2
    p(2, 5) = s; p(3, 5) = -s;  // phi-_3 = (e14 - e23)/sqrt2
    return p;
}

const Mat6 kIdentity6 = Mat6::Identity();
const Mat6 kPhiMatrix = make_phi_matrix();

} // namespace

const Mat6& basis_matrix(TwoFormBasis basis) {
    return basis == TwoFormBasis::Simple ? kIdentity6 : kPhiMatrix;
}

Mat6 CurvatureOperator::full() const {
    Mat6 m;
    m.block<3, 3>(0, 0) = A;
    m.block<3, 3>(0, 3) = B;
    m.block<3, 3>(3, 0) = B.transpose();
    m.block<3, 3>(3, 3) = C;
    return m;
}

double CurvatureOperator::norm() const { return full().norm(); }

CurvatureOperator make_operator(const Mat3& a, const Mat3& b, const Mat3& c) {
    CurvatureOperator op;
    op.A = a;
    op.B = b;
    op.C = c;
    op.R = 2.0 * (a.trace() + c.trace());
    return op;
}

OperatorValidation validate_operator(const CurvatureOperator& op, double sym_tol,
                                     double trace_tol) {
    OperatorValidation v;
    v.sym_residual_a = (op.A - op.A.transpose()).cwiseAbs().maxCoeff();
    v.sym_residual_c = (op.C - op.C.transpose()).cwiseAbs().maxCoeff();
    v.trace_gap = std::abs(op.A.trace() - op.C.trace());
    v.pass = v.sym_residual_a <= sym_tol && v.sym_residual_c <= sym_tol &&
             v.trace_gap <= trace_tol;
    return v;
}

CurvatureOperator to_operator(const CurvatureTensor& t, bool reverse_orientation,
                              double bianchi_tol) {
    const ValidationResult check = validate_tensor(t, bianchi_tol);
    if (!check.pass)
        throw std::invalid_argument("tensor violates the first Bianchi identity");
    CurvatureTensor oriented = t;
    if (reverse_orientation) {
        Mat4 flip = Mat4::Identity();
        flip(3, 3) = -1.0;
        oriented = rotate_tensor(t, flip);
    }
    const Mat6& p = basis_matrix(TwoFormBasis::SelfDualSplit);
    const Mat6 m_phi = p.transpose() * oriented.simple_matrix() * p;
    return make_operator(m_phi.block<3, 3>(0, 0), m_phi.block<3, 3>(0, 3),
                         m_phi.block<3, 3>(3, 3));
}

CurvatureTensor from_operator(const CurvatureOperator& op, double sym_tol, double trace_tol) {
    const OperatorValidation v = validate_operator(op, sym_tol, trace_tol);
    if (!v.pass)
        throw std::invalid_argument(
            "operator blocks do not come from a Bianchi-valid tensor (symmetry or trace gap)");
    const Mat6& p = basis_matrix(TwoFormBasis::SelfDualSplit);
    const Mat6 m = p * op.full() * p.transpose();
    return CurvatureTensor::from_simple_matrix(m);
}

Mat4 b_to_traceless_ricci(const Mat3& b) {
    Mat4 rc;
    rc(0, 0) = b(0, 0) + b(1, 1) + b(2, 2);
    rc(1, 1) = b(0, 0) - b(1, 1) - b(2, 2);
    rc(2, 2) = b(1, 1) - b(0, 0) - b(2, 2);
    rc(3, 3) = b(2, 2) - b(0, 0) - b(1, 1);
    rc(0, 1) = rc(1, 0) = b(2, 1) - b(1, 2);
    rc(0, 2) = rc(2, 0) = b(0, 2) - b(2, 0);
    rc(0, 3) = rc(3, 0) = b(1, 0) - b(0, 1);
    rc(1, 2) = rc(2, 1) = b(1, 0) + b(0, 1);
    rc(1, 3) = rc(3, 1) = b(0, 2) + b(2, 0);
    rc(2, 3) = rc(3, 2) = b(1, 2) + b(2, 1);
    return rc;
}

Mat3 traceless_ricci_to_b(const Mat4& rc0, double tol) {
    if ((rc0 - rc0.transpose()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("traceless Ricci input is not symmetric");
    if (std::abs(rc0.trace()) > tol)
        throw std::invalid_argument("traceless Ricci input has nonzero trace");
    Mat3 b;
    b(0, 0) = 0.5 * (rc0(0, 0) + rc0(1, 1));
    b(1, 1) = 0.5 * (rc0(0, 0) + rc0(2, 2));
    b(2, 2) = 0.5 * (rc0(0, 0) + rc0(3, 3));
    b(2, 1) = 0.5 * (rc0(0, 1) + rc0(2, 3));
    b(1, 2) = 0.5 * (rc0(2, 3) - rc0(0, 1));
    b(0, 2) = 0.5 * (rc0(0, 2) + rc0(1, 3));
    b(2, 0) = 0.5 * (rc0(1, 3) - rc0(0, 2));
    b(1, 0) = 0.5 * (rc0(0, 3) + rc0(1, 2));
    b(0, 1) = 0.5 * (rc0(1, 2) - rc0(0, 3));
    return b;
}

CurvatureTensor random_bianchi_tensor(Rng& rng) {
    Mat6 m;
    for (int i = 0; i < 6; ++i) {
        m(i, i) = rng.normal();
        for (int j = i + 1; j < 6; ++j) m(i, j) = m(j, i) = rng.normal();
    }
    // Single Bianchi constraint among simple-basis entries:
    // m(0,5) - m(1,4) + m(2,3) = 0; least-squares projection.
    const double d = (m(0, 5) - m(1, 4) + m(2, 3)) / 3.0;
    m(0, 5) -= d; m(5, 0) -= d;
    m(1, 4) += d; m(4, 1) += d;
    m(2, 3) -= d; m(3, 2) -= d;
    return CurvatureTensor::from_simple_matrix(m);
}

CurvatureOperator random_bianchi_operator(Rng& rng) {
    return to_operator(random_bianchi_tensor(rng));
}

} // namespace curv4
