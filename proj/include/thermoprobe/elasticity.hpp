#pragma once

/**
 * Elasticity diagnostic E(q) = (q/kappa_A) * d(kappa_A)/dq: the percent
 * change of the estimate per percent change of the measurement. E depends
 * only on the rod configuration, never on kappa_A, so it can be evaluated
 * before any estimation to decide whether a measurement campaign is worth
 * running. E(q) = q_bar_M / (q_bar_M - q) blows up at the flux asymptote.
 */

#include <cstddef>
#include <vector>

#include "thermoprobe/rod_model.hpp"

namespace thermoprobe {

struct CurvePoint {
    double q;           ///< flux [W m^-2]
    double elasticity;  ///< dimensionless
};

/// Uniformly sampled elasticity curve over a sub-interval of (0, q_bar_M).
struct ElasticityCurve {
    RodConfig config;
    double asymptote;                 ///< q_bar_M
    std::vector<CurvePoint> samples;  ///< increasing in both coordinates
};

/// E(q) = q_bar_M/(q_bar_M - q), > 1 for every admissible q.
/// Throws std::domain_error for q of the wrong sign (or zero) and
/// AsymptoteError for q at or beyond q_bar_M.
double elasticity(const RodConfig& config, double q);

/// dE/dq = q_bar_M/(q_bar_M - q)^2. Same domain as elasticity().
double elasticity_derivative(const RodConfig& config, double q);

/// Location of the vertical asymptote; identical (bit-for-bit) to the
/// q_asymptote reported by admissible_interval().
double vertical_asymptote(const RodConfig& config);

/// n >= 2 uniformly spaced samples of E over [q_lo, q_hi]. The interval
/// must lie strictly below the asymptote.
ElasticityCurve sample_curve(const RodConfig& config, double q_lo, double q_hi,
                             std::size_t n);

}  // namespace thermoprobe
