#pragma once

#include <array>
#include <string>
#include <vector>

#include "curv4/spectrum.hpp"
#include "curv4/tensor.hpp"
#include "curv4/types.hpp"

namespace curv4 {

// The catalog of model gradient shrinking solitons, all normalized to
// Rc + Hess f = g/2 with R + |grad f|^2 = f.  Finite quotients are not
// distinguished: the pointwise data is identical.
enum class ModelName { Sphere4, Cylinder3x1, Cp2, S2xS2, Cp1xC, Gaussian4 };

// Point of a model.  param is used only along the flat directions of the
// inhomogeneous models: cylinder3x1 reads param[0] as the line coordinate t,
// gaussian4 reads all four entries as x, cp1xc reads param[0..1] as the
// coordinate z of the flat factor.  Homogeneous models ignore param.
struct ModelId {
    ModelName name = ModelName::Sphere4;
    std::array<double, 4> param{0.0, 0.0, 0.0, 0.0};
};

const std::vector<ModelName>& model_catalog();
std::string to_string(ModelName name);
// Throws std::invalid_argument for an unknown name.
ModelName model_from_string(const std::string& name);
std::string model_description(ModelName name);

// Curvature plus the 2-jet of the potential at one point, in the point's
// orthonormal frame.
struct SolitonPointData {
    CurvatureTensor tensor;
    double f = 0.0;
    Vec4 grad_f = Vec4::Zero();
    Mat4 hess_f = Mat4::Zero();
    Vec4 grad_r = Vec4::Zero();
};

SolitonPointData model_point_data(const ModelId& id);

// Residuals of the defining equation and the pointwise identities:
//   soliton_eq      = |Rc + Hess f - g/2|_F
//   trace_identity  = |R + Lap f - 2|
//   gradient_identity = |grad R - 2 Rc(grad f)|_2
//   normalization   = |R + |grad f|^2 - f|
struct SolitonResiduals {
    double soliton_eq = 0.0;
    double trace_identity = 0.0;
    double gradient_identity = 0.0;
    double normalization = 0.0;
    double max() const;
};

SolitonResiduals soliton_residuals(const SolitonPointData& d);

// Ground-truth classification table used as the oracle for end-to-end tests.
struct ModelExpectation {
    double a_pair_sum = 0.0;
    double c_pair_sum = 0.0;
    bool pic = false;
    bool nnic = false;
    bool half_pic = false;
    bool half_nnic = false;
    PicVerdict::StrictSide strict_side = PicVerdict::StrictSide::None;
    Vec3 a_eigs = Vec3::Zero();
    Vec3 c_eigs = Vec3::Zero();
};

ModelExpectation model_expectations(ModelName name);

// Five representative parameter points per model (a single point for the
// homogeneous ones, spread along the flat directions otherwise).
std::vector<ModelId> model_sample_points(ModelName name);

} // namespace curv4
