#pragma once

/**
 * Closed-form estimation of kappa_A from a single noisy flux measurement,
 * with admissibility certification and analytic error bounds.
 *
 * The flux map q = Phi(kappa_A) is a Moebius function of kappa_A, strictly
 * monotone with horizontal asymptote q_bar_M, so it inverts in closed form.
 * A measurement q_hat is admissible when it lies strictly inside
 * (Phi(kappa_min), Phi(kappa_max)); the estimate error then obeys
 * |kappa_A - kappa_hat| < K2 * eps for noise level eps.
 */

#include <optional>

#include "thermoprobe/rod_model.hpp"

namespace thermoprobe {

/// Prior bounds 0 < kappa_min < kappa_max assumed to contain kappa_A,
/// kappa_B and the estimate. Defaults cover all common metals with margin.
struct ConductivityBounds {
    double kappa_min = 1.0;
    double kappa_max = 1000.0;

    void validate() const;  // throws std::invalid_argument
};

/// Image of the conductivity bounds under the flux map, plus the map's
/// supremum. A measurement is usable iff it lies strictly between q_min and
/// q_max; q_asymptote is the hard ceiling no measurement may reach.
struct AdmissibleFluxInterval {
    double q_min;        ///< flux at kappa_min
    double q_max;        ///< flux at kappa_max
    double q_asymptote;  ///< flux supremum (kappa_A -> infinity)

    /// Strictly inside (q_min, q_max); orientation-aware so the same test
    /// works for F < Ta where all fluxes are negative.
    bool contains(double measured_flux) const;
};

/// Everything the estimation workflow produces for one measurement.
/// kappa_hat and elasticity_at_measurement are absent when the measurement
/// is inadmissible (resp. at/beyond the asymptote).
struct EstimationReport {
    std::optional<double> kappa_hat;
    double measured_flux = 0.0;
    double noise_level = 0.0;
    bool admissible = false;
    double bound_K1 = 0.0;  ///< reciprocal-conductivity error per unit flux error
    double bound_K2 = 0.0;  ///< conductivity error per unit flux error
    double absolute_error_bound = 0.0;  ///< K2 * noise_level
    std::optional<double> elasticity_at_measurement;
    AdmissibleFluxInterval interval{};
    // Distance diagnostics, 0 when the measurement is inside the interval.
    double below_min_by = 0.0;
    double above_max_by = 0.0;
};

/// Inverts the flux map:
/// kappa_hat = q_hat*h*l*kappa_B / (h*kappa_B*(F-Ta) - q_hat*h*(L-l) - q_hat*kappa_B).
/// Throws std::domain_error when q_hat has the wrong sign (or is zero), and
/// InadmissibleMeasurementError when q_hat is at or beyond the asymptote
/// (non-positive denominator, guarded at 1e-13 relative).
double estimate_conductivity(const RodConfig& config, double measured_flux);

AdmissibleFluxInterval admissible_interval(const RodConfig& config,
                                           const ConductivityBounds& bounds);

bool check_admissible(double measured_flux, const AdmissibleFluxInterval& interval);

/// K1 = l/(kappa_min^2*|F-Ta|) * [1 + (kappa_min/(h*l))*(1 + h*(L-l)/kappa_B)]^2,
/// equal to |F-Ta|/(l*q_min^2). Bounds the reciprocal-conductivity error:
/// |1/kappa_A - 1/kappa_hat| < K1*|q - q_hat| whenever both lie above kappa_min.
double error_bound_K1(const RodConfig& config, const ConductivityBounds& bounds);

/// K2 = kappa_max^2 * K1; bounds the estimation error itself:
/// |kappa_A - kappa_hat| < K2 * eps.
double error_bound_K2(const RodConfig& config, const ConductivityBounds& bounds);

/// Aggregates estimate, admissibility verdict, error bounds and elasticity
/// for one measurement. Inadmissible measurements yield a report with
/// admissible = false and distance diagnostics rather than an exception.
/// Throws only for invalid config/bounds or negative noise_level.
EstimationReport build_report(const RodConfig& config, double measured_flux,
                              double noise_level, const ConductivityBounds& bounds);

}  // namespace thermoprobe
