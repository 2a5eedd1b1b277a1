#pragma once

#include <cstdint>
#include <vector>

#include "curv4/inequality.hpp"
#include "curv4/operator.hpp"

namespace curv4 {

// d/dt (A, B, C) = (Q_A, Q_B, Q_C): the quadratic reaction part of the
// curvature evolution, with diffusion and drift dropped.  Trace balance
// tr A = tr C is preserved exactly: tr(M^2 + 2 M#) = (tr M)^2 gives
// d(tr A - tr C)/dt = 2(tr A + tr C)(tr A - tr C).
ReactionTerms ode_rhs(const CurvatureOperator& op);

enum class HaltReason { ReachedTMax, BlowUp, NonFinite };

const char* to_string(HaltReason reason);

// Invariants sampled along a trajectory.
struct OdeSample {
    double t = 0.0;
    double trace_gap = 0.0; // tr A - tr C
    double a_pair = 0.0;    // A_1 + A_2
    double c_pair = 0.0;    // C_1 + C_2
    double norm = 0.0;      // Frobenius norm of the full operator
};

struct OdeResult {
    std::vector<OdeSample> samples; // one per step, including t = 0
    CurvatureOperator final_op;     // last finite state
    double t_final = 0.0;
    HaltReason reason = HaltReason::ReachedTMax;
};

// Classical fixed-step 4-stage Runge-Kutta.  Halts at t_max, when the norm
// exceeds blowup_factor * max(norm(initial), 1e-300) (quadratic blow-up is
// genuine, so the cap separates blow-up from instability), or on a non-finite
// state (the last good state is reported).  A final partial step lands
// exactly on t_max when dt does not divide it.
OdeResult ode_integrate(const CurvatureOperator& initial, double dt, double t_max,
                        double blowup_factor = 1e6);

CurvatureOperator scale_operator(const CurvatureOperator& op, double factor);

struct ConeExit {
    std::uint64_t sample_index = 0;
    std::uint64_t rejection_rounds = 0; // draws needed to meet the margin
    double t = 0.0;
    double c_pair = 0.0;
};

struct ConeStats {
    std::uint64_t runs = 0;
    std::vector<ConeExit> exits;
    double min_normalized_c_pair = 0.0; // min over all steps of (C_1+C_2)/norm
    std::uint64_t blowups = 0;
};

// Empirical cone-invariance run: random unit-norm Bianchi operators
// conditioned on C_1 + C_2 > margin are integrated; an exit is recorded when
// C_1 + C_2 drops below -exit_tol before blow-up.  Per-sample sub-streams
// make the aggregate independent of evaluation order.  Evidence, not proof.
ConeStats cone_experiment(std::uint64_t samples, std::uint64_t seed, double dt,
                          double t_max, double margin = 0.05, double exit_tol = 1e-8);

} // namespace curv4
