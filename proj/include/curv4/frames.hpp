#pragma once

#include <cstdint>

#include "curv4/tensor.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// Element of SO(4): the frame e'_a = sum_i Q_ia e_i (columns of Q).
class FrameRotation {
public:
    explicit FrameRotation(const Mat4& q, double tol = 1e-12);
    const Mat4& matrix() const { return q_; }

private:
    Mat4 q_;
};

// Sign of the 2 R'_1234 term in the isotropic sum.  Minus pairs with the
// self-dual block (identity frame: 2(A_22 + A_33)); Plus with the
// anti-self-dual block.
enum class IsotropicSign { Plus, Minus };

// R'_1313 + R'_1414 + R'_2323 + R'_2424 +- 2 R'_1234 in the rotated frame:
// twice the complex sectional curvature of the isotropic plane spanned by
// (e'_1 + i e'_2)/sqrt2, (e'_3 + i e'_4)/sqrt2 up to a positive constant
// (the Hermitian-form normalization contributes a factor 1/4, which no
// positivity predicate depends on).
double isotropic_sum(const CurvatureTensor& t, const FrameRotation& frame, IsotropicSign sign);

struct FrameScanResult {
    double min_value = 0.0;
    Mat4 argmin_frame = Mat4::Identity();
    std::uint64_t argmin_index = 0;
};

// Minimum of isotropic_sum over Haar-random frames.  Sample i draws from the
// sub-stream derive_stream(seed, i), and ties break toward the smaller index,
// so the result is independent of any partitioning of the sample range.
// The exact minimum over all of SO(4) is 2(A_1 + A_2) for sign Minus and
// 2(C_1 + C_2) for sign Plus; the sampled value never goes below it.
FrameScanResult frame_min_scan(const CurvatureTensor& t, IsotropicSign sign,
                               std::uint64_t samples, std::uint64_t seed);

} // namespace curv4
