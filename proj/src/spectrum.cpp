#include "curv4/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace curv4 {

namespace {

Vec3 sym3_eigenvalues(const Mat3& m) {
    Eigen::SelfAdjointEigenSolver<Mat3> solver(0.5 * (m + m.transpose()));
    return solver.eigenvalues(); // ascending
}

} // namespace

BlockSpectrum block_spectrum(const CurvatureOperator& op) {
    BlockSpectrum s;
    s.a_eigs = sym3_eigenvalues(op.A);
    s.c_eigs = sym3_eigenvalues(op.C);
    const double third = op.R / 12.0;
    s.wplus_eigs = s.a_eigs.array() - third;
    s.wminus_eigs = s.c_eigs.array() - third;
    const Vec3 btb = sym3_eigenvalues(op.B.transpose() * op.B).cwiseMax(0.0);
    s.b_singulars = btb.cwiseSqrt();
    const Mat4 rc0 = b_to_traceless_ricci(op.B);
    Eigen::SelfAdjointEigenSolver<Mat4> rc_solver(rc0);
    s.traceless_ricci_eigs = rc_solver.eigenvalues();
    for (int i = 0; i < 3; ++i) {
        s.b_row_sq(i) = op.B.row(i).squaredNorm();
        s.b_col_sq(i) = op.B.col(i).squaredNorm();
    }
    return s;
}

double IdentityResiduals::max() const {
    return std::max({ricci_cubic_vs_det_b, wminus_cubic, b_row_sq_vs_ricci, b_col_sq_vs_ricci});
}

IdentityResiduals block_identity_residuals(const CurvatureOperator& op) {
    const BlockSpectrum s = block_spectrum(op);
    const Vec4& lam = s.traceless_ricci_eigs;
    const double lam3 = lam.array().cube().sum();
    const double lam2 = lam.squaredNorm();
    const Vec3& c = s.wminus_eigs;
    const double c3 = c.array().cube().sum();

    IdentityResiduals r;
    r.ricci_cubic_vs_det_b = std::abs(lam3 - 24.0 * op.B.determinant());
    r.wminus_cubic = std::abs(c3 + 6.0 * c(0) * c(1) * c(2) - 3.0 * c3);
    r.b_row_sq_vs_ricci = std::abs(s.b_row_sq.sum() - 0.25 * lam2);
    r.b_col_sq_vs_ricci = std::abs(s.b_col_sq.sum() - 0.25 * lam2);
    return r;
}

PicVerdict pic_classify(const CurvatureOperator& op, double strict_tol) {
    const BlockSpectrum s = block_spectrum(op);
    PicVerdict v;
    v.a_pair_sum = s.a_eigs(0) + s.a_eigs(1);
    v.c_pair_sum = s.c_eigs(0) + s.c_eigs(1);
    const bool a_pos = v.a_pair_sum > strict_tol;
    const bool c_pos = v.c_pair_sum > strict_tol;
    const bool a_nonneg = v.a_pair_sum > -strict_tol;
    const bool c_nonneg = v.c_pair_sum > -strict_tol;
    v.pic = a_pos && c_pos;
    v.nnic = a_nonneg && c_nonneg;
    v.half_pic = a_pos || c_pos;
    v.half_nnic = a_nonneg || c_nonneg;
    if (a_pos && c_pos)
        v.strict_side = PicVerdict::StrictSide::Both;
    else if (a_pos)
        v.strict_side = PicVerdict::StrictSide::A;
    else if (c_pos)
        v.strict_side = PicVerdict::StrictSide::C;
    assert(!v.pic || v.half_pic);
    assert(!v.half_pic || v.half_nnic);
    assert(!v.pic || v.nnic);
    return v;
}

const char* to_string(PicVerdict::StrictSide side) {
    switch (side) {
        case PicVerdict::StrictSide::None: return "none";
        case PicVerdict::StrictSide::A: return "A";
        case PicVerdict::StrictSide::C: return "C";
        case PicVerdict::StrictSide::Both: return "both";
    }
    return "none";
}

KahlerBlocks kahler_adapted_blocks(const CurvatureOperator& op, double tol) {
    KahlerBlocks k;
    Mat3 a_pattern = Mat3::Zero();
    a_pattern(0, 0) = op.R / 4.0;
    double res = (op.A - a_pattern).cwiseAbs().maxCoeff();
    res = std::max(res, op.B.row(1).cwiseAbs().maxCoeff());
    res = std::max(res, op.B.row(2).cwiseAbs().maxCoeff());
    k.residual = res;
    k.pass = res <= tol;
    k.d = op.B.row(0).transpose();
    return k;
}

PinchingReport pinching_report(const CurvatureOperator& op, bool kahler, double tol) {
    PinchingReport p;
    p.a_sq = op.A.squaredNorm();
    p.b_sq = op.B.squaredNorm();
    p.c_sq = op.C.squaredNorm();
    const Mat4 rc0 = b_to_traceless_ricci(op.B);
    p.ricci0_sq = rc0.squaredNorm();
    p.r_sq = op.R * op.R;
    p.ricci_sq = p.ricci0_sq + p.r_sq / 4.0;
    p.rm_sq = p.a_sq + 2.0 * p.b_sq + p.c_sq;

    const double scale = std::max(1.0, p.ricci0_sq);
    p.b_identity_residual = std::abs(p.b_sq - 0.25 * p.ricci0_sq);
    p.b_identity_ok = p.b_identity_residual <= tol * scale;

    const PicVerdict verdict = pic_classify(op);
    if (verdict.nnic)
        p.nnic_c_bound_ok = p.c_sq <= (3.0 / 16.0) * p.r_sq + tol * std::max(1.0, p.r_sq);

    if (kahler) {
        const KahlerBlocks k = kahler_adapted_blocks(op, std::max(tol, kSymTol));
        if (!k.pass)
            throw std::domain_error("kahler flag set but the adapted block pattern fails");
        p.kahler_a_norm_ok =
            std::abs(p.a_sq - p.r_sq / 16.0) <= tol * std::max(1.0, p.r_sq);
        p.kahler_rm_rc_ok = p.rm_sq <= 2.5 * p.ricci_sq + tol * std::max(1.0, p.ricci_sq);
    }
    return p;
}

} // namespace curv4
