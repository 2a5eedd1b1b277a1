#include "curv4/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curv4 {

const std::vector<ModelName>& model_catalog() {
    static const std::vector<ModelName> catalog{
        ModelName::Sphere4,  ModelName::Cylinder3x1, ModelName::Cp2,
        ModelName::S2xS2,    ModelName::Cp1xC,       ModelName::Gaussian4};
    return catalog;
}

std::string to_string(ModelName name) {
    switch (name) {
        case ModelName::Sphere4: return "sphere4";
        case ModelName::Cylinder3x1: return "cylinder3x1";
        case ModelName::Cp2: return "cp2";
        case ModelName::S2xS2: return "s2xs2";
        case ModelName::Cp1xC: return "cp1xc";
        case ModelName::Gaussian4: return "gaussian4";
    }
    return "sphere4";
}

ModelName model_from_string(const std::string& name) {
    for (ModelName m : model_catalog())
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown model name: " + name);
}

std::string model_description(ModelName name) {
    switch (name) {
        case ModelName::Sphere4:
            return "round S^4, sectional curvature 1/6 (R = 2, f = 2)";
        case ModelName::Cylinder3x1:
            return "S^3(2) x R, line coordinate t (R = 3/2, f = t^2/4 + 3/2)";
        case ModelName::Cp2:
            return "complex projective plane with Rc = g/2 (R = 2, f = 2)";
        case ModelName::S2xS2:
            return "S^2 x S^2, each factor with Gauss curvature 1/2 (R = 2, f = 2)";
        case ModelName::Cp1xC:
            return "S^2 x R^2, sphere factor with Gauss curvature 1/2, flat coordinate z "
                   "(R = 1, f = |z|^2/4 + 1)";
        case ModelName::Gaussian4:
            return "flat R^4 Gaussian shrinker, f = |x|^2/4";
    }
    return "";
}

SolitonPointData model_point_data(const ModelId& id) {
    for (double p : id.param)
        if (!std::isfinite(p)) throw std::invalid_argument("non-finite model parameter");
    SolitonPointData d;
    switch (id.name) {
        case ModelName::Sphere4: {
            d.tensor = constant_curvature(1.0 / 6.0);
            d.f = 2.0;
            break;
        }
        case ModelName::Cp2: {
            d.tensor = fubini_study(0.5);
            d.f = 2.0;
            break;
        }
        case ModelName::S2xS2: {
            d.tensor = product_of_surfaces(0.5, 0.5);
            d.f = 2.0;
            break;
        }
        case ModelName::Cylinder3x1: {
            const double t = id.param[0];
            d.tensor = round_cylinder(2.0);
            d.f = t * t / 4.0 + 1.5;
            d.grad_f = Vec4(0.0, 0.0, 0.0, t / 2.0);
            d.hess_f(3, 3) = 0.5;
            break;
        }
        case ModelName::Gaussian4: {
            const Vec4 x(id.param[0], id.param[1], id.param[2], id.param[3]);
            d.tensor = flat();
            d.f = x.squaredNorm() / 4.0;
            d.grad_f = x / 2.0;
            d.hess_f = 0.5 * Mat4::Identity();
            break;
        }
        case ModelName::Cp1xC: {
            const double z1 = id.param[0];
            const double z2 = id.param[1];
            d.tensor = product_of_surfaces(0.5, 0.0);
            d.f = (z1 * z1 + z2 * z2) / 4.0 + 1.0;
            d.grad_f = Vec4(0.0, 0.0, z1 / 2.0, z2 / 2.0);
            d.hess_f(2, 2) = 0.5;
            d.hess_f(3, 3) = 0.5;
            break;
        }
    }
    return d;
}

double SolitonResiduals::max() const {
    return std::max({soliton_eq, trace_identity, gradient_identity, normalization});
}

SolitonResiduals soliton_residuals(const SolitonPointData& d) {
    const RicciData ric = ricci_contraction(d.tensor);
    SolitonResiduals r;
    r.soliton_eq = (ric.ricci + d.hess_f - 0.5 * Mat4::Identity()).norm();
    r.trace_identity = std::abs(ric.scalar + d.hess_f.trace() - 2.0);
    r.gradient_identity = (d.grad_r - 2.0 * ric.ricci * d.grad_f).norm();
    r.normalization = std::abs(ric.scalar + d.grad_f.squaredNorm() - d.f);
    return r;
}

ModelExpectation model_expectations(ModelName name) {
    ModelExpectation e;
    const auto fill = [&e](double a1, double a2, double a3, double c1, double c2, double c3) {
        e.a_eigs = Vec3(a1, a2, a3);
        e.c_eigs = Vec3(c1, c2, c3);
        e.a_pair_sum = a1 + a2;
        e.c_pair_sum = c1 + c2;
    };
    switch (name) {
        case ModelName::Sphere4:
            fill(1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6);
            e.pic = e.nnic = e.half_pic = e.half_nnic = true;
            e.strict_side = PicVerdict::StrictSide::Both;
            break;
        case ModelName::Cylinder3x1:
            fill(1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8);
            e.pic = e.nnic = e.half_pic = e.half_nnic = true;
            e.strict_side = PicVerdict::StrictSide::Both;
            break;
        case ModelName::Cp2:
            fill(0.0, 0.0, 0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6);
            e.pic = false;
            e.nnic = e.half_pic = e.half_nnic = true;
            e.strict_side = PicVerdict::StrictSide::C;
            break;
        case ModelName::S2xS2:
            fill(0.0, 0.0, 0.5, 0.0, 0.0, 0.5);
            e.pic = e.half_pic = false;
            e.nnic = e.half_nnic = true;
            break;
        case ModelName::Cp1xC:
            fill(0.0, 0.0, 0.25, 0.0, 0.0, 0.25);
            e.pic = e.half_pic = false;
            e.nnic = e.half_nnic = true;
            break;
        case ModelName::Gaussian4:
            fill(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
            e.pic = e.half_pic = false;
            e.nnic = e.half_nnic = true;
            break;
    }
    return e;
}

std::vector<ModelId> model_sample_points(ModelName name) {
    std::vector<ModelId> points;
    switch (name) {
        case ModelName::Cylinder3x1:
            for (double t : {-2.0, -0.5, 0.0, 1.0, 3.0})
                points.push_back({name, {t, 0.0, 0.0, 0.0}});
            break;
        case ModelName::Gaussian4:
            points.push_back({name, {0.0, 0.0, 0.0, 0.0}});
            points.push_back({name, {2.0, 0.0, 0.0, 0.0}});
            points.push_back({name, {1.0, -2.0, 0.5, 3.0}});
            points.push_back({name, {-0.25, 0.75, -1.5, 0.125}});
            points.push_back({name, {4.0, 4.0, -4.0, 4.0}});
            break;
        case ModelName::Cp1xC:
            points.push_back({name, {0.0, 0.0, 0.0, 0.0}});
            points.push_back({name, {1.0, 0.0, 0.0, 0.0}});
            points.push_back({name, {-0.5, 2.0, 0.0, 0.0}});
            points.push_back({name, {3.0, -1.25, 0.0, 0.0}});
            points.push_back({name, {-2.0, -2.0, 0.0, 0.0}});
            break;
        default:
            // Homogeneous: one point carries all the information.
            for (int i = 0; i < 5; ++i) points.push_back({name, {0.0, 0.0, 0.0, 0.0}});
            break;
    }
    return points;
}

} // namespace curv4
