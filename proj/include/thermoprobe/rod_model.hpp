#pragma once

/**
 * Stationary heat conduction in a two-material bar.
 *
 * A bar of length L, insulated on its lateral surface, is made of material A
 * on (0, l) and material B on (l, L), joined at x = l with negligible contact
 * resistance:
 *
 *   u''(x) = 0                     on (0, l) and (l, L)
 *   u(l-)  = u(l+)                 temperature continuity
 *   kappa_A u'(l-) = kappa_B u'(l+)  flux continuity
 *   u(0)   = F                     fixed temperature at the hidden end
 *   kappa_B u'(L) = -h (u(L) - Ta) convective loss at the accessible end
 *
 * The solution is piecewise linear; everything in this header is the exact
 * closed form. Units are SI with temperatures in degrees Celsius.
 */

#include <cstddef>

namespace thermoprobe {

/// Fixed parameters of the bar: geometry, boundary data and the conductivity
/// of the known (right-hand, accessible) material B. The conductivity of
/// material A is deliberately not a member; it is the quantity the inverse
/// problem estimates and is passed to each operation explicitly.
struct RodConfig {
    double length_L;      ///< bar length [m]
    double interface_l;   ///< interface position, 0 < l < L [m]
    double source_F;      ///< fixed temperature at x = 0 [degC]
    double ambient_Ta;    ///< ambient fluid temperature [degC]
    double convection_h;  ///< convection coefficient at x = L [W m^-2 degC^-1]
    double kappa_B;       ///< conductivity of material B [W m^-1 degC^-1]

    /// Geometric and positivity invariants; throws std::invalid_argument
    /// with a field-level message on violation.
    void validate() const;

    /// Additionally requires F != Ta, which every inverse-side formula
    /// divides by. Forward evaluations accept F == Ta (uniform bar at
    /// ambient temperature, zero flux).
    void validate_for_estimation() const;

    double delta_T() const { return source_F - ambient_Ta; }
};

/// Piecewise-linear stationary temperature profile for a given kappa_A.
/// Immutable after construction; cheap to copy.
struct TemperatureProfile {
    TemperatureProfile(const RodConfig& config, double kappa_A);

    RodConfig config;
    double kappa_A;                ///< conductivity of material A [W m^-1 degC^-1]
    double zeta;                   ///< composite conductance (see below)
    double slope_left;             ///< du/dx on (0, l) [degC/m]
    double slope_right;            ///< du/dx on (l, L) [degC/m]
    double interface_temperature;  ///< u(l) [degC]
};

/// zeta = kappa_A*kappa_B + kappa_A*h*(L-l) + kappa_B*h*l. All three terms
/// are positive, so the composite conductance never cancels.
double composite_conductance(const RodConfig& config, double kappa_A);

/// u(x) for x in [0, L]. At exactly x = l the left branch is returned (the
/// branches agree analytically; this only fixes floating-point behavior).
/// Throws std::domain_error for x outside [0, L].
double evaluate_temperature(const TemperatureProfile& profile, double x);

/// Heat flux q = -kappa_B u'(L) = kappa_B*kappa_A*h*(F-Ta)/zeta measured at
/// the accessible end. Strictly increasing in kappa_A for F > Ta.
/// Throws std::domain_error for kappa_A <= 0.
double heat_flux(const RodConfig& config, double kappa_A);

/// Supremum of the flux map as kappa_A -> infinity:
/// q_bar_M = h*kappa_B*(F-Ta) / (kappa_B + h*(L-l)).
/// This is both the admissibility ceiling and the vertical asymptote of the
/// elasticity function; all modules share this single evaluation.
double flux_supremum(const RodConfig& config);

/// Angle between the two profile segments at x = l, in [0, pi/2). Zero
/// exactly when kappa_A == kappa_B. Computed from the arctangents of the two
/// slopes, which is stable near zero.
double interface_angle(const RodConfig& config, double kappa_A);

}  // namespace thermoprobe
