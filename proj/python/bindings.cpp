#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "curv4/cli.hpp"
#include "curv4/io.hpp"
#include "curv4/soliton.hpp"
#include "curv4/spectrum.hpp"
#include "curv4/version.hpp"

namespace py = pybind11;

namespace {

// All structured data crosses the boundary as JSON text; the python wrapper
// decodes it.  Keeps the binding layer free of duplicate schemas.
std::string decompose_json(const std::string& doc_text) {
    const curv4::Json doc = curv4::Json::parse(doc_text);
    const curv4::CurvatureOperator op = curv4::operator_from_any_json(doc);
    return curv4::operator_to_json(op).dump();
}

std::string classify_json(const std::string& doc_text) {
    const curv4::Json doc = curv4::Json::parse(doc_text);
    const curv4::CurvatureOperator op = curv4::operator_from_any_json(doc);
    const curv4::PicVerdict v = curv4::pic_classify(op);
    const curv4::BlockSpectrum s = curv4::block_spectrum(op);
    curv4::Json out{{"a_pair_sum", v.a_pair_sum},
                    {"c_pair_sum", v.c_pair_sum},
                    {"pic", v.pic},
                    {"nnic", v.nnic},
                    {"half_pic", v.half_pic},
                    {"half_nnic", v.half_nnic},
                    {"strict_side", curv4::to_string(v.strict_side)},
                    {"a_eigs", {s.a_eigs(0), s.a_eigs(1), s.a_eigs(2)}},
                    {"c_eigs", {s.c_eigs(0), s.c_eigs(1), s.c_eigs(2)}}};
    return out.dump();
}

std::string model_tensor_json(const std::string& name) {
    const curv4::ModelName model = curv4::model_from_string(name);
    const curv4::SolitonPointData d = curv4::model_point_data({model, {0, 0, 0, 0}});
    return curv4::tensor_to_json(d.tensor).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = curv4::cli_dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

std::vector<std::string> model_names() {
    std::vector<std::string> names;
    for (curv4::ModelName name : curv4::model_catalog())
        names.push_back(curv4::to_string(name));
    return names;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "four-dimensional curvature-operator toolbox (native core)";
    m.def("version", [] { return std::string(curv4::kVersion); });
    m.def("run_cli", &run_cli, py::arg("args"),
          "Run one CLI invocation in-process; returns (exit_code, stdout, stderr).");
    m.def("model_names", &model_names, "Names of the catalog models.");
    m.def("decompose_json", &decompose_json, py::arg("doc"),
          "Tensor or operator JSON text -> operator JSON text.");
    m.def("classify_json", &classify_json, py::arg("doc"),
          "Tensor or operator JSON text -> two-positivity verdict JSON text.");
    m.def("model_tensor_json", &model_tensor_json, py::arg("name"),
          "Curvature tensor of a catalog model as JSON text.");
}
