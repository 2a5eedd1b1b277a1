#include "curv4/rng.hpp"

namespace curv4 {

Mat4 haar_so4(Rng& rng) {
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Mat4> qr(g);
    Mat4 q = qr.householderQ();
    const Mat4 r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int i = 0; i < 4; ++i)
        if (r(i, i) < 0.0) q.col(i) = -q.col(i);
    if (q.determinant() < 0.0) q.col(3) = -q.col(3);
    return q;
}

} // namespace curv4
