#pragma once

namespace curv4 {

// Default numeric tolerances. Every tolerance that appears in a public
// contract is named here; callers may pass overrides where the API allows.
struct Tolerances {
    double bianchi = 1e-10;     // first-Bianchi residual on canonical components
    double symmetry = 1e-12;    // symmetry defect of block matrices
    double trace = 1e-10;       // |tr A - tr C| admissibility gate
    double strict = 1e-11;      // two-sided band around 0 for sign predicates
    double drift = 1e-8;        // allowed tr A - tr C drift along ODE trajectories
};

inline constexpr double kBianchiTol = 1e-10;
inline constexpr double kSymTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kStrictTol = 1e-11;
inline constexpr double kDriftTol = 1e-8;

} // namespace curv4
