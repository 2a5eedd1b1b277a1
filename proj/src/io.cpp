#include "curv4/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace curv4 {

namespace {

Json mat3_to_json(const Mat3& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Mat3 mat3_from_json(const Json& j, const char* label) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(std::string("block ") + label + " must be a 3x3 array");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument(std::string("block ") + label + " must be a 3x3 array");
        for (int k = 0; k < 3; ++k) {
            if (!row[k].is_number())
                throw std::invalid_argument(std::string("block ") + label +
                                            " entries must be numbers");
            m(i, k) = row[k].get<double>();
        }
    }
    return m;
}

} // namespace

Json tensor_to_json(const CurvatureTensor& t) {
    Json components = Json::array();
    for (int p = 0; p < CurvatureTensor::kNumPairs; ++p)
        for (int q = p; q < CurvatureTensor::kNumPairs; ++q) {
            const int i = CurvatureTensor::kPairs[p][0];
            const int j = CurvatureTensor::kPairs[p][1];
            const int k = CurvatureTensor::kPairs[q][0];
            const int l = CurvatureTensor::kPairs[q][1];
            const double v = t.component(i, j, k, l);
            if (v != 0.0)
                components.push_back(Json{{"ijkl", {i, j, k, l}}, {"value", v}});
        }
    return Json{{"kind", "curvature_tensor"}, {"components", components}};
}

CurvatureTensor tensor_from_json(const Json& j, double bianchi_tol) {
    if (!j.is_object() || j.value("kind", "") != "curvature_tensor")
        throw std::invalid_argument("expected kind \"curvature_tensor\"");
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("missing components array");
    CurvatureTensor t;
    std::set<std::array<int, 4>> seen;
    for (const Json& entry : j["components"]) {
        if (!entry.is_object() || !entry.contains("ijkl") || !entry.contains("value"))
            throw std::invalid_argument("component entries need ijkl and value");
        const Json& idx = entry["ijkl"];
        if (!idx.is_array() || idx.size() != 4)
            throw std::invalid_argument("ijkl must hold four indices");
        std::array<int, 4> q{};
        for (int n = 0; n < 4; ++n) {
            if (!idx[n].is_number_integer())
                throw std::invalid_argument("ijkl indices must be integers");
            q[n] = idx[n].get<int>();
            if (q[n] < 1 || q[n] > 4)
                throw std::invalid_argument("ijkl indices must lie in [1,4]");
        }
        const bool canonical =
            q[0] < q[1] && q[2] < q[3] &&
            (q[0] < q[2] || (q[0] == q[2] && q[1] <= q[3]));
        if (!canonical)
            throw std::invalid_argument("ijkl must be canonical: i<j, k<l, (i,j) <= (k,l)");
        if (!seen.insert(q).second)
            throw std::invalid_argument("duplicate canonical quadruple");
        if (!entry["value"].is_number())
            throw std::invalid_argument("component value must be a number");
        t.set_component(q[0], q[1], q[2], q[3], entry["value"].get<double>());
    }
    const ValidationResult check = validate_tensor(t, bianchi_tol);
    if (!check.pass)
        throw std::invalid_argument("tensor violates the first Bianchi identity, residual " +
                                    std::to_string(check.max_residual));
    return t;
}

Json operator_to_json(const CurvatureOperator& op) {
    return Json{{"kind", "curvature_operator"},
                {"A", mat3_to_json(op.A)},
                {"B", mat3_to_json(op.B)},
                {"C", mat3_to_json(op.C)}};
}

CurvatureOperator operator_from_json(const Json& j, double sym_tol, double trace_tol) {
    if (!j.is_object() || j.value("kind", "") != "curvature_operator")
        throw std::invalid_argument("expected kind \"curvature_operator\"");
    for (const char* key : {"A", "B", "C"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("missing block ") + key);
    const CurvatureOperator op = make_operator(mat3_from_json(j["A"], "A"),
                                               mat3_from_json(j["B"], "B"),
                                               mat3_from_json(j["C"], "C"));
    const OperatorValidation v = validate_operator(op, sym_tol, trace_tol);
    if (!v.pass)
        throw std::invalid_argument("operator blocks fail symmetry or trace admissibility");
    return op;
}

CurvatureOperator operator_from_any_json(const Json& j) {
    const std::string kind = j.is_object() ? j.value("kind", "") : "";
    if (kind == "curvature_tensor") return to_operator(tensor_from_json(j));
    if (kind == "curvature_operator") return operator_from_json(j);
    throw std::invalid_argument("expected curvature_tensor or curvature_operator document");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
}

} // namespace curv4
