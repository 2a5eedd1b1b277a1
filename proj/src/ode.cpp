#include "curv4/ode.hpp"

#include <cmath>
#include <stdexcept>

#include "curv4/spectrum.hpp"

namespace curv4 {

ReactionTerms ode_rhs(const CurvatureOperator& op) { return reaction_terms(op); }

const char* to_string(HaltReason reason) {
    switch (reason) {
        case HaltReason::ReachedTMax: return "reached-t-max";
        case HaltReason::BlowUp: return "blow-up";
        case HaltReason::NonFinite: return "non-finite";
    }
    return "reached-t-max";
}

CurvatureOperator scale_operator(const CurvatureOperator& op, double factor) {
    return make_operator(factor * op.A, factor * op.B, factor * op.C);
}

namespace {

struct BlockState {
    Mat3 a, b, c;

    BlockState operator+(const BlockState& o) const { return {a + o.a, b + o.b, c + o.c}; }
    BlockState scaled(double s) const { return {s * a, s * b, s * c}; }
    bool finite() const { return a.allFinite() && b.allFinite() && c.allFinite(); }
};

BlockState rhs(const BlockState& s) {
    const ReactionTerms q = reaction_terms(make_operator(s.a, s.b, s.c));
    return {q.qa, q.qb, q.qc};
}

BlockState rk4_step(const BlockState& s, double h) {
    const BlockState k1 = rhs(s);
    const BlockState k2 = rhs(s + k1.scaled(h / 2.0));
    const BlockState k3 = rhs(s + k2.scaled(h / 2.0));
    const BlockState k4 = rhs(s + k3.scaled(h));
    return s + (k1 + k2.scaled(2.0) + k3.scaled(2.0) + k4).scaled(h / 6.0);
}

OdeSample sample_state(double t, const CurvatureOperator& op) {
    const BlockSpectrum spec = block_spectrum(op);
    OdeSample s;
    s.t = t;
    s.trace_gap = op.A.trace() - op.C.trace();
    s.a_pair = spec.a_eigs(0) + spec.a_eigs(1);
    s.c_pair = spec.c_eigs(0) + spec.c_eigs(1);
    s.norm = op.norm();
    return s;
}

} // namespace

OdeResult ode_integrate(const CurvatureOperator& initial, double dt, double t_max,
                        double blowup_factor) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");

    const double cap = blowup_factor * std::max(initial.norm(), 1e-300);
    OdeResult result;
    BlockState state{initial.A, initial.B, initial.C};
    CurvatureOperator op = make_operator(state.a, state.b, state.c);
    double t = 0.0;
    result.samples.push_back(sample_state(t, op));

    const auto n_full = static_cast<std::uint64_t>(std::floor(t_max / dt + 1e-12));
    const double remainder = t_max - static_cast<double>(n_full) * dt;
    const std::uint64_t n_total = n_full + (remainder > 1e-12 * std::max(1.0, t_max) ? 1 : 0);

    for (std::uint64_t k = 1; k <= n_total; ++k) {
        const double h = k <= n_full ? dt : remainder;
        const double t_next = k <= n_full ? static_cast<double>(k) * dt : t_max;
        const BlockState next = rk4_step(state, h);
        if (!next.finite()) {
            result.reason = HaltReason::NonFinite;
            break;
        }
        state = next;
        t = t_next;
        op = make_operator(state.a, state.b, state.c);
        result.samples.push_back(sample_state(t, op));
        if (op.norm() > cap) {
            result.reason = HaltReason::BlowUp;
            break;
        }
        if (k == n_total) result.reason = HaltReason::ReachedTMax;
    }
    result.final_op = op;
    result.t_final = t;
    return result;
}

ConeStats cone_experiment(std::uint64_t samples, std::uint64_t seed, double dt,
                          double t_max, double margin, double exit_tol) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    ConeStats stats;
    stats.runs = samples;
    bool have_min = false;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng(derive_stream(seed, i));
        CurvatureOperator op;
        std::uint64_t rounds = 0;
        while (true) {
            ++rounds;
            op = random_bianchi_operator(rng);
            op = scale_operator(op, 1.0 / op.norm());
            const BlockSpectrum spec = block_spectrum(op);
            if (spec.c_eigs(0) + spec.c_eigs(1) > margin) break;
        }
        const OdeResult run = ode_integrate(op, dt, t_max);
        if (run.reason == HaltReason::BlowUp) ++stats.blowups;
        bool exited = false;
        for (const OdeSample& s : run.samples) {
            const double normalized = s.norm > 0.0 ? s.c_pair / s.norm : s.c_pair;
            if (!have_min || normalized < stats.min_normalized_c_pair) {
                stats.min_normalized_c_pair = normalized;
                have_min = true;
            }
            if (!exited && s.c_pair < -exit_tol) {
                stats.exits.push_back({i, rounds, s.t, s.c_pair});
                exited = true;
            }
        }
    }
    return stats;
}

} // namespace curv4
