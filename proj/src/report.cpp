#include "curv4/report.hpp"

#include <chrono>
#include <sstream>

#include "curv4/version.hpp"

namespace curv4 {

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::ReportOnly: return "report-only";
    }
    return "pass";
}

Json CheckRecord::to_json() const {
    Json j{{"name", name}, {"status", to_string(status)}, {"runtime_ms", runtime_ms}};
    if (residual) j["residual"] = *residual;
    if (tolerance) j["tolerance"] = *tolerance;
    if (seed) j["seed"] = *seed;
    if (!detail.empty()) j["detail"] = detail;
    if (!payload.is_null()) j["payload"] = payload;
    return j;
}

VerificationReport::VerificationReport(std::string suite_name)
    : suite(std::move(suite_name)), tool_version(kVersion) {}

bool VerificationReport::overall_pass() const {
    for (const CheckRecord& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

Json VerificationReport::to_json() const {
    Json checks_json = Json::array();
    for (const CheckRecord& c : checks) checks_json.push_back(c.to_json());
    return Json{{"suite", suite},
                {"tool_version", tool_version},
                {"conventions", conventions_fingerprint()},
                {"checks", checks_json},
                {"overall", overall_pass() ? "pass" : "fail"}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out.precision(12);
    for (const CheckRecord& c : checks) {
        const char* tag = c.status == CheckStatus::Pass     ? "[PASS]"
                          : c.status == CheckStatus::Fail   ? "[FAIL]"
                                                            : "[REPORT]";
        out << tag << " " << c.name;
        if (!c.detail.empty()) out << " - " << c.detail;
        if (c.residual) {
            out << " (residual " << *c.residual;
            if (c.tolerance) out << ", tol " << *c.tolerance;
            out << ")";
        }
        out << "\n";
    }
    out << (overall_pass() ? "OVERALL: pass" : "OVERALL: fail") << " - " << checks.size()
        << " checks, suite " << suite << "\n";
    return out.str();
}

Json conventions_fingerprint() {
    return Json{
        {"pair_order", "12,13,14,23,24,34"},
        {"indices", "1-based, orthonormal frame"},
        {"two_form_inner_product",
         "<X^Y,V^W> = <X,V><Y,W> - <X,W><Y,V>; simple two-forms orthonormal"},
        {"orientation", "e1,e2,e3,e4 positive; self-dual block listed first"},
        {"self_dual_basis",
         "(e12+e34, e13-e24, e14+e23, e12-e34, e13+e24, e14-e23)/sqrt2"},
        {"reaction_convention", "dM/dt = 2(M^2 + 2 M#) blockwise"},
        {"soliton_normalization", "Rc + Hess f = g/2, R + |grad f|^2 = f"},
    };
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::elapsed_ms() const {
    const std::int64_t now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                 std::chrono::steady_clock::now().time_since_epoch())
                                 .count();
    return static_cast<double>(now - start_ns_) / 1e6;
}

} // namespace curv4
