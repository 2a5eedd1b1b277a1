#pragma once

#include <optional>

#include "curv4/operator.hpp"
#include "curv4/tolerances.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// Eigen/singular data of the block decomposition.  a_i and c_i are the
// trace-free parts A_i - R/12 and C_i - R/12 (conformal curvature spectra).
struct BlockSpectrum {
    Vec3 a_eigs;             // eigenvalues of A, ascending
    Vec3 c_eigs;             // eigenvalues of C, ascending
    Vec3 wplus_eigs;         // a_i = A_i - R/12, ascending
    Vec3 wminus_eigs;        // c_i = C_i - R/12, ascending
    Vec3 b_singulars;        // singular values of B, ascending (>= 0)
    Vec4 traceless_ricci_eigs; // ascending
    Vec3 b_row_sq;           // b_i^2 = sum_j B_ij^2
    Vec3 b_col_sq;           // bt_i^2 = sum_j B_ji^2
};

BlockSpectrum block_spectrum(const CurvatureOperator& op);

// Residuals of the algebraic identities tying the traceless-Ricci spectrum
// to the off-diagonal block and the anti-self-dual spectrum:
//   sum lambda_i^3 = 24 det B,
//   sum c_i^3 + 6 c_1 c_2 c_3 = 3 sum c_i^3   (trace-free cubic identity),
//   sum b_i^2 = sum bt_i^2 = (1/4) sum lambda_i^2.
struct IdentityResiduals {
    double ricci_cubic_vs_det_b = 0.0;
    double wminus_cubic = 0.0;
    double b_row_sq_vs_ricci = 0.0;
    double b_col_sq_vs_ricci = 0.0;
    double max() const;
};

IdentityResiduals block_identity_residuals(const CurvatureOperator& op);

// Two-positivity verdict for both blocks.  Values within (-strict_tol,
// strict_tol] count as weakly zero: "positive" means > strict_tol,
// "nonnegative" means > -strict_tol.
struct PicVerdict {
    double a_pair_sum = 0.0; // A_1 + A_2
    double c_pair_sum = 0.0; // C_1 + C_2
    bool pic = false;        // both pair sums positive
    bool nnic = false;       // both pair sums nonnegative
    bool half_pic = false;   // at least one pair sum positive
    bool half_nnic = false;  // at least one pair sum nonnegative
    enum class StrictSide { None, A, C, Both } strict_side = StrictSide::None;
};

PicVerdict pic_classify(const CurvatureOperator& op, double strict_tol = kStrictTol);

const char* to_string(PicVerdict::StrictSide side);

// Adapted-frame block pattern of a Kaehler surface (frame {e1, Je1, e2, Je2}):
// A = diag(R/4, 0, 0) and rows 2,3 of B vanish.  d is the first row of B.
struct KahlerBlocks {
    bool pass = false;
    double residual = 0.0; // max deviation from the pattern
    Vec3 d = Vec3::Zero();
};

KahlerBlocks kahler_adapted_blocks(const CurvatureOperator& op, double tol = kSymTol);

// Squared-norm bookkeeping and the pinching inequalities:
// always |B|^2 = |Rc0|^2/4; when 2-nonnegative on both sides,
// |C|^2 <= (3/16) R^2; for Kaehler blocks, |A|^2 = R^2/16 and
// |Rm|^2 <= (5/2)|Rc|^2, with |Rm|^2 := |A|^2 + 2|B|^2 + |C|^2.
// Throws std::domain_error when kahler is set but the adapted-frame
// pattern fails.
struct PinchingReport {
    double a_sq = 0.0;
    double b_sq = 0.0;
    double c_sq = 0.0;
    double ricci0_sq = 0.0;
    double ricci_sq = 0.0;
    double r_sq = 0.0;
    double rm_sq = 0.0;
    double b_identity_residual = 0.0;
    bool b_identity_ok = false;
    std::optional<bool> nnic_c_bound_ok;  // set when the verdict is nnic
    std::optional<bool> kahler_a_norm_ok; // set when kahler
    std::optional<bool> kahler_rm_rc_ok;  // set when kahler
};

PinchingReport pinching_report(const CurvatureOperator& op, bool kahler = false,
                               double tol = 1e-12);

} // namespace curv4
