#include "rio/monte_carlo.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rio {

namespace {

struct TrialOutcome {
    bool success = false;
    bool step1_misid = false;
    bool has_step3 = false;
    bool step3_misid = false;
    bool step4_misid = false;
    bool m_zero = false;
};

TrialOutcome run_trial(const McParams& params, std::uint64_t index) {
    RandomStream rng = RandomStream::derive(params.seed, index);

    cplx alpha, beta;
    if (params.input) {
        alpha = params.input->first;
        beta = params.input->second;
    } else {
        rng.haar_qubit(alpha, beta);
    }
    BranchState psi = make_input_state(alpha, beta);

    ProtocolResult result;
    if (params.protocol == Protocol::Riho) {
        LumpOperator op = params.op ? *params.op
                                    : LumpOperator{rng.unit_phase(), rng.unit_phase()};
        result = run_riho(psi, op, params.channel, params.model, rng);
    } else {
        const int m = params.ripuo_choice ? *params.ripuo_choice : rng.bit();
        LumpOperator op = params.op ? *params.op
                                    : LumpOperator{rng.unit_phase(), rng.unit_phase()};
        result = run_ripuo(psi, sub_operator(op, m), m, params.channel, params.model, rng);
    }

    TrialOutcome out;
    out.success = result.achieved_fidelity > 1.0 - 1e-9;
    out.step1_misid = result.step1_record.misidentified;
    if (result.step3_record) {
        out.has_step3 = true;
        out.step3_misid = result.step3_record->misidentified;
    }
    out.step4_misid = result.step4_record.misidentified;
    out.m_zero = result.outcomes.m == 0;
    return out;
}

}  // namespace

McSummary run_monte_carlo_serial(const McParams& params) {
    McSummary summary;
    summary.trials = params.trials;
    for (long i = 0; i < params.trials; ++i) {
        const TrialOutcome t = run_trial(params, static_cast<std::uint64_t>(i));
        summary.successes += t.success;
        summary.step1.samples += 1;
        summary.step1.misidentified += t.step1_misid;
        if (t.has_step3) {
            summary.step3.samples += 1;
            summary.step3.misidentified += t.step3_misid;
        }
        summary.step4.samples += 1;
        summary.step4.misidentified += t.step4_misid;
        summary.m_zero += t.m_zero;
    }
    return summary;
}

McSummary run_monte_carlo_parallel(const McParams& params) {
    McSummary summary;
    summary.trials = params.trials;

    long successes = 0, s1m = 0, s3n = 0, s3m = 0, s4m = 0, m_zero = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    reduction(+ : successes, s1m, s3n, s3m, s4m, m_zero)
#endif
    for (long i = 0; i < params.trials; ++i) {
        const TrialOutcome t = run_trial(params, static_cast<std::uint64_t>(i));
        successes += t.success;
        s1m += t.step1_misid;
        s3n += t.has_step3;
        s3m += t.step3_misid;
        s4m += t.step4_misid;
        m_zero += t.m_zero;
    }

    summary.successes = successes;
    summary.step1 = {params.trials, s1m};
    summary.step3 = {s3n, s3m};
    summary.step4 = {params.trials, s4m};
    summary.m_zero = m_zero;
    return summary;
}

McSummary run_monte_carlo(const McParams& params) {
    return params.parallel ? run_monte_carlo_parallel(params) : run_monte_carlo_serial(params);
}

double monte_carlo_success(const McParams& params) {
    if (params.trials < 1) throw std::invalid_argument("monte carlo needs at least one trial");
    return run_monte_carlo(params).success_rate();
}

}  // namespace rio
