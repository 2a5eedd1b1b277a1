#include "curv4/frames.hpp"

#include <stdexcept>

#include "curv4/rng.hpp"

namespace curv4 {

namespace {

// Minor vector of the new pair (a, b) (0-based): simple-basis coordinates of
// e'_a ^ e'_b, entry (i<j) = Q_ia Q_jb - Q_ja Q_ib.
Vec6 minor_column(const Mat4& q, int a, int b) {
    Vec6 w;
    for (int r = 0; r < CurvatureTensor::kNumPairs; ++r) {
        const int i = CurvatureTensor::kPairs[r][0] - 1;
        const int j = CurvatureTensor::kPairs[r][1] - 1;
        w(r) = q(i, a) * q(j, b) - q(j, a) * q(i, b);
    }
    return w;
}

double isotropic_sum_simple(const Mat6& m, const Mat4& q, IsotropicSign sign) {
    const Vec6 w12 = minor_column(q, 0, 1);
    const Vec6 w13 = minor_column(q, 0, 2);
    const Vec6 w14 = minor_column(q, 0, 3);
    const Vec6 w23 = minor_column(q, 1, 2);
    const Vec6 w24 = minor_column(q, 1, 3);
    const Vec6 w34 = minor_column(q, 2, 3);
    const double sectional = w13.dot(m * w13) + w14.dot(m * w14) + w23.dot(m * w23) +
                             w24.dot(m * w24);
    const double cross = 2.0 * w12.dot(m * w34);
    return sign == IsotropicSign::Minus ? sectional - cross : sectional + cross;
}

} // namespace

FrameRotation::FrameRotation(const Mat4& q, double tol) : q_(q) {
    if ((q.transpose() * q - Mat4::Identity()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("frame matrix is not orthogonal");
    if (std::abs(q.determinant() - 1.0) > tol)
        throw std::invalid_argument("frame matrix must have determinant +1");
}

double isotropic_sum(const CurvatureTensor& t, const FrameRotation& frame, IsotropicSign sign) {
    return isotropic_sum_simple(t.simple_matrix(), frame.matrix(), sign);
}

FrameScanResult frame_min_scan(const CurvatureTensor& t, IsotropicSign sign,
                               std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const Mat6 m = t.simple_matrix();
    FrameScanResult best;
    bool first = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng(derive_stream(seed, i));
        const Mat4 q = haar_so4(rng);
        const double value = isotropic_sum_simple(m, q, sign);
        if (first || value < best.min_value) {
            best.min_value = value;
            best.argmin_frame = q;
            best.argmin_index = i;
            first = false;
        }
    }
    return best;
}

} // namespace curv4
