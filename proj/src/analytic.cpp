#include "zeno/analytic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamped_asin(double x) {
  if (x > 1.0) {
    if (x > 1.0 + kDomainSlack) throw Error("analytic-uncorrelated", "asin argument out of range");
    x = 1.0;
  } else if (x < -1.0) {
    if (x < -1.0 - kDomainSlack) throw Error("analytic-uncorrelated", "asin argument out of range");
    x = -1.0;
  }
  return std::asin(x);
}

double cos_pow(double x, int n) { return std::pow(std::cos(x), n); }

}  // namespace

void UncorrelatedPoint::validate() const {
  if (!(nu >= 0.0 && nu <= 1.0)) throw Error("analytic-uncorrelated", "nu must lie in [0,1]");
  if (n_completed < 0) throw Error("analytic-uncorrelated", "n_completed must be >= 0");
  if (!(delta_t > 0.0)) throw Error("analytic-uncorrelated", "delta_t must be > 0");
  if (!(s >= -kDomainSlack && s <= delta_t + kDomainSlack))
    throw Error("analytic-uncorrelated", "s must lie in [0, delta_t]");
}

double analytic_nu_effective(double nu, int n_completed, double delta_t) {
  return nu * cos_pow(delta_t, 2 * n_completed);
}

double analytic_p1(const UncorrelatedPoint& p) {
  p.validate();
  const double c = std::cos(p.s);
  return analytic_nu_effective(p.nu, p.n_completed, p.delta_t) * c * c;
}

SpeedValue analytic_vqsl(const UncorrelatedPoint& p) {
  p.validate();
  const double cn = cos_pow(p.delta_t, p.n_completed);
  const double cs = std::cos(p.s);
  const double denom_sq = 1.0 - p.nu * cn * cn * cs * cs;
  if (denom_sq <= 1e-15)
    return {std::numeric_limits<double>::quiet_NaN(), true};
  const double value = std::sqrt(p.nu) * std::abs(cn * std::sin(p.s)) / std::sqrt(denom_sq);
  return {value, false};
}

TauQslValue analytic_tau_qsl(double nu, double tau, int n) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw Error("analytic-uncorrelated", "nu must lie in [0,1]");
  if (!(tau > 0.0)) throw Error("analytic-uncorrelated", "tau must be > 0");
  if (n < 1) throw Error("analytic-uncorrelated", "n must be >= 1");
  const double root_nu = std::sqrt(nu);
  const double path = clamped_asin(root_nu) - clamped_asin(root_nu * cos_pow(tau / n, n));
  if (path <= 0.0)
    return {std::numeric_limits<double>::infinity(), true};
  return {tau / path, false};
}

}  // namespace zeno
