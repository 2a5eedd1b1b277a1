#include <doctest.h>

#include <stdexcept>

#include "curv4/soliton.hpp"

using namespace curv4;

TEST_SUITE("soliton") {

TEST_CASE("catalog names round-trip through strings") {
    for (ModelName name : model_catalog()) {
        CHECK(model_from_string(to_string(name)) == name);
        CHECK_FALSE(model_description(name).empty());
    }
    CHECK_THROWS_AS(model_from_string("klein-bottle"), std::invalid_argument);
    CHECK(model_catalog().size() == 6);
}

TEST_CASE("every model satisfies the soliton equations at sample points") {
    for (ModelName name : model_catalog()) {
        CAPTURE(to_string(name));
        const auto points = model_sample_points(name);
        CHECK(points.size() == 5);
        for (const ModelId& id : points) {
            const SolitonResiduals res = soliton_residuals(model_point_data(id));
            CHECK(res.soliton_eq <= 1e-12);
            CHECK(res.trace_identity <= 1e-12);
            CHECK(res.gradient_identity <= 1e-12);
            CHECK(res.normalization <= 1e-12);
        }
    }
}

TEST_CASE("potential jets at specific points") {
    SUBCASE("cylinder at t = 3") {
        ModelId id;
        id.name = ModelName::Cylinder3x1;
        id.param = {3.0, 0.0, 0.0, 0.0};
        const SolitonPointData d = model_point_data(id);
        CHECK(d.f == doctest::Approx(9.0 / 4.0 + 1.5));
        CHECK(d.grad_f(3) == doctest::Approx(1.5));
        CHECK(d.grad_f.head<3>().cwiseAbs().maxCoeff() == 0.0);
        CHECK(d.hess_f(3, 3) == doctest::Approx(0.5));
        CHECK(d.hess_f.topLeftCorner<3, 3>().cwiseAbs().maxCoeff() == 0.0);
        CHECK(d.grad_r.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("gaussian at x = (2, 0, 0, 0)") {
        ModelId id;
        id.name = ModelName::Gaussian4;
        id.param = {2.0, 0.0, 0.0, 0.0};
        const SolitonPointData d = model_point_data(id);
        CHECK(d.f == doctest::Approx(1.0));
        CHECK(d.grad_f(0) == doctest::Approx(1.0));
        CHECK((d.hess_f - 0.5 * Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(d.tensor.canonical() == flat().canonical());
    }
    SUBCASE("compact models have constant potential f = 2") {
        for (ModelName name : {ModelName::Sphere4, ModelName::Cp2, ModelName::S2xS2}) {
            const SolitonPointData d = model_point_data(ModelId{name, {}});
            CHECK(d.f == doctest::Approx(2.0));
            CHECK(d.grad_f.cwiseAbs().maxCoeff() == 0.0);
            CHECK(d.hess_f.cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("a perturbed hessian is caught by the residuals") {
    ModelId id;
    id.name = ModelName::Cylinder3x1;
    id.param = {1.0, 0.0, 0.0, 0.0};
    SolitonPointData d = model_point_data(id);
    d.hess_f *= 1.1;
    const SolitonResiduals res = soliton_residuals(d);
    CHECK(res.soliton_eq == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(res.trace_identity == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(res.max() >= 0.05);
}

TEST_CASE("expectation table agrees with the classifier end to end") {
    for (ModelName name : model_catalog()) {
        CAPTURE(to_string(name));
        const ModelExpectation exp = model_expectations(name);
        for (const ModelId& id : model_sample_points(name)) {
            const CurvatureOperator op = to_operator(model_point_data(id).tensor);
            const PicVerdict v = pic_classify(op);
            CHECK(v.a_pair_sum == doctest::Approx(exp.a_pair_sum).epsilon(1e-12));
            CHECK(v.c_pair_sum == doctest::Approx(exp.c_pair_sum).epsilon(1e-12));
            CHECK(v.pic == exp.pic);
            CHECK(v.nnic == exp.nnic);
            CHECK(v.half_pic == exp.half_pic);
            CHECK(v.half_nnic == exp.half_nnic);
            CHECK(v.strict_side == exp.strict_side);
            const BlockSpectrum s = block_spectrum(op);
            for (int i = 0; i < 3; ++i) {
                CHECK(s.a_eigs(i) == doctest::Approx(exp.a_eigs(i)).epsilon(1e-12));
                CHECK(s.c_eigs(i) == doctest::Approx(exp.c_eigs(i)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("strictly pic models are exactly the sphere and the cylinder") {
    CHECK(model_expectations(ModelName::Sphere4).pic);
    CHECK(model_expectations(ModelName::Cylinder3x1).pic);
    CHECK_FALSE(model_expectations(ModelName::Cp2).pic);
    CHECK(model_expectations(ModelName::Cp2).strict_side == PicVerdict::StrictSide::C);
    CHECK(model_expectations(ModelName::Cp2).nnic);
    for (ModelName name : {ModelName::S2xS2, ModelName::Cp1xC, ModelName::Gaussian4}) {
        const ModelExpectation exp = model_expectations(name);
        CHECK_FALSE(exp.pic);
        CHECK_FALSE(exp.half_pic);
        CHECK(exp.nnic);
        CHECK(exp.half_nnic);
        CHECK(exp.strict_side == PicVerdict::StrictSide::None);
    }
}

TEST_CASE("cylinder off-diagonal block has equal singular values") {
    const ModelId id{ModelName::Cylinder3x1, {0.0, 0.0, 0.0, 0.0}};
    const BlockSpectrum s = block_spectrum(to_operator(model_point_data(id).tensor));
    CHECK(s.b_singulars(0) == doctest::Approx(s.b_singulars(2)).epsilon(1e-14));
    CHECK(s.b_singulars(0) == doctest::Approx(0.125));
}

TEST_CASE("non-finite parameters are rejected") {
    ModelId id;
    id.name = ModelName::Gaussian4;
    id.param = {std::nan(""), 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(model_point_data(id), std::invalid_argument);
}

} // TEST_SUITE
