#include "curv4/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace curv4 {

namespace {

// pair_lookup[i][j] = canonical index of {i,j} (1-based i,j), -1 on diagonal.
constexpr std::array<std::array<int, 5>, 5> make_pair_lookup() {
    std::array<std::array<int, 5>, 5> lut{};
    for (auto& row : lut) row.fill(-1);
    for (int p = 0; p < CurvatureTensor::kNumPairs; ++p) {
        const int i = CurvatureTensor::kPairs[p][0];
        const int j = CurvatureTensor::kPairs[p][1];
        lut[i][j] = p;
        lut[j][i] = p;
    }
    return lut;
}

constexpr auto kPairLookup = make_pair_lookup();

void check_index(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("tensor index out of range [1,4]");
}

} // namespace

int CurvatureTensor::pair_index(int i, int j) {
    check_index(i);
    check_index(j);
    const int p = kPairLookup[i][j];
    if (p < 0) throw std::invalid_argument("degenerate index pair");
    return p;
}

int CurvatureTensor::flat_index(int p, int q) {
    // Upper triangle of a 6x6, row-major: row p starts at 6p - p(p-1)/2.
    return p * 6 - p * (p - 1) / 2 + (q - p);
}

double CurvatureTensor::component(int i, int j, int k, int l) const {
    check_index(i);
    check_index(j);
    check_index(k);
    check_index(l);
    if (i == j || k == l) return 0.0;
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    int p = kPairLookup[i][j];
    int q = kPairLookup[k][l];
    if (p > q) std::swap(p, q);
    return sign * storage_[flat_index(p, q)];
}

void CurvatureTensor::set_component(int i, int j, int k, int l, double value) {
    check_index(i);
    check_index(j);
    check_index(k);
    check_index(l);
    if (i == j || k == l) throw std::invalid_argument("cannot set a degenerate component");
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    int p = kPairLookup[i][j];
    int q = kPairLookup[k][l];
    if (p > q) std::swap(p, q);
    storage_[flat_index(p, q)] = sign * value;
}

Mat6 CurvatureTensor::simple_matrix() const {
    Mat6 m;
    for (int p = 0; p < kNumPairs; ++p)
        for (int q = p; q < kNumPairs; ++q) {
            const double v = storage_[flat_index(p, q)];
            m(p, q) = v;
            m(q, p) = v;
        }
    return m;
}

CurvatureTensor CurvatureTensor::from_simple_matrix(const Mat6& m) {
    CurvatureTensor t;
    for (int p = 0; p < kNumPairs; ++p)
        for (int q = p; q < kNumPairs; ++q)
            t.storage_[flat_index(p, q)] = 0.5 * (m(p, q) + m(q, p));
    return t;
}

ValidationResult validate_tensor(const CurvatureTensor& t, double bianchi_tol) {
    ValidationResult result;
    for (const double v : t.canonical())
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite tensor component");
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    const double cyc = t.component(i, j, k, l) + t.component(i, k, l, j) +
                                       t.component(i, l, j, k);
                    const double res = std::abs(cyc);
                    if (res > result.max_residual) result.max_residual = res;
                    if (res > bianchi_tol)
                        result.violations.push_back({{i, j, k, l}, res});
                }
    result.pass = result.violations.empty();
    return result;
}

RicciData ricci_contraction(const CurvatureTensor& t) {
    RicciData out;
    out.ricci.setZero();
    for (int i = 1; i <= 4; ++i)
        for (int k = i; k <= 4; ++k) {
            double s = 0.0;
            for (int j = 1; j <= 4; ++j) s += t.component(i, j, k, j);
            out.ricci(i - 1, k - 1) = s;
            out.ricci(k - 1, i - 1) = s;
        }
    out.scalar = out.ricci.trace();
    out.traceless = out.ricci - (out.scalar / 4.0) * Mat4::Identity();
    Eigen::SelfAdjointEigenSolver<Mat4> solver(out.traceless);
    out.eigenvalues = solver.eigenvalues();
    return out;
}

CurvatureTensor rotate_tensor(const CurvatureTensor& t, const Mat4& q) {
    // Column w_p of W holds the simple-basis coordinates of e'_a ^ e'_b for
    // the p-th canonical pair (a,b): W[(ij)][(ab)] = Q_ia Q_jb - Q_ja Q_ib.
    Mat6 w;
    for (int p = 0; p < CurvatureTensor::kNumPairs; ++p) {
        const int a = CurvatureTensor::kPairs[p][0] - 1;
        const int b = CurvatureTensor::kPairs[p][1] - 1;
        for (int r = 0; r < CurvatureTensor::kNumPairs; ++r) {
            const int i = CurvatureTensor::kPairs[r][0] - 1;
            const int j = CurvatureTensor::kPairs[r][1] - 1;
            w(r, p) = q(i, a) * q(j, b) - q(j, a) * q(i, b);
        }
    }
    const Mat6 rotated = w.transpose() * t.simple_matrix() * w;
    return CurvatureTensor::from_simple_matrix(rotated);
}

CurvatureTensor flat() { return CurvatureTensor{}; }

CurvatureTensor constant_curvature(double k) {
    if (!std::isfinite(k)) throw std::invalid_argument("non-finite curvature parameter");
    CurvatureTensor t;
    for (const auto& pair : CurvatureTensor::kPairs)
        t.set_component(pair[0], pair[1], pair[0], pair[1], k);
    return t;
}

CurvatureTensor product_of_surfaces(double k1, double k2) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
        throw std::invalid_argument("non-finite curvature parameter");
    CurvatureTensor t;
    t.set_component(1, 2, 1, 2, k1);
    t.set_component(3, 4, 3, 4, k2);
    return t;
}

CurvatureTensor round_cylinder(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("radius must be positive");
    const double k = 1.0 / (r * r);
    CurvatureTensor t;
    t.set_component(1, 2, 1, 2, k);
    t.set_component(1, 3, 1, 3, k);
    t.set_component(2, 3, 2, 3, k);
    return t;
}

CurvatureTensor fubini_study(double scale) {
    if (!std::isfinite(scale)) throw std::invalid_argument("non-finite curvature parameter");
    // Complex space form with holomorphic sectional curvature h, J e1 = e2,
    // J e3 = e4; Ric = (3h/2) g, so h = (2/3) scale.
    const double h = (2.0 / 3.0) * scale;
    CurvatureTensor t;
    t.set_component(1, 2, 1, 2, h);
    t.set_component(3, 4, 3, 4, h);
    t.set_component(1, 3, 1, 3, h / 4.0);
    t.set_component(1, 4, 1, 4, h / 4.0);
    t.set_component(2, 3, 2, 3, h / 4.0);
    t.set_component(2, 4, 2, 4, h / 4.0);
    t.set_component(1, 2, 3, 4, h / 2.0);
    t.set_component(1, 3, 2, 4, h / 4.0);
    t.set_component(1, 4, 2, 3, -h / 4.0);
    return t;
}

} // namespace curv4
