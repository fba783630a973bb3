#pragma once

#include <stdexcept>
#include <string>

namespace thermoprobe {

/// A flux value at or beyond the vertical asymptote q_bar_M, where the
/// conductivity map and the elasticity function cease to exist.
class AsymptoteError : public std::domain_error {
public:
    AsymptoteError(const std::string& msg, double asymptote)
        : std::domain_error(msg), asymptote_(asymptote) {}

    double asymptote() const { return asymptote_; }

private:
    double asymptote_;
};

/// A flux measurement for which no positive conductivity estimate exists
/// (the estimator denominator is non-positive). Carries the asymptote so
/// callers can report how far out of range the measurement is.
class InadmissibleMeasurementError : public AsymptoteError {
public:
    InadmissibleMeasurementError(const std::string& msg, double measured_flux,
                                 double asymptote)
        : AsymptoteError(msg, asymptote), measured_flux_(measured_flux) {}

    double measured_flux() const { return measured_flux_; }

private:
    double measured_flux_;
};

}  // namespace thermoprobe
