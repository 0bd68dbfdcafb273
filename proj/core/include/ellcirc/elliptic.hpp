#pragma once

namespace ellcirc {

/// Incomplete elliptic integral of the second kind,
///   E(phi, eps) = integral_0^phi sqrt(1 - eps^2 sin^2 t) dt,
/// for 0 <= phi <= pi/2 and 0 <= eps <= 1. `eps` is the modulus (for an
/// ellipse, its eccentricity), not the parameter m = eps^2.
///
/// Evaluated through Carlson's symmetric integrals R_F and R_D; absolute
/// error is below 1e-14 over the whole domain. eps == 1 is handled in closed
/// form (E(phi, 1) = sin phi). Throws DomainError outside the domain.
double incomplete_e(double phi, double eps);

/// Complete elliptic integral of the second kind, E(eps) = E(pi/2, eps).
double complete_e(double eps);

/// Carlson's symmetric integral of the first kind. At most one argument may be zero.
double carlson_rf(double x, double y, double z);

/// Carlson's symmetric integral of the second kind. x, y >= 0 (not both zero), z > 0.
double carlson_rd(double x, double y, double z);

}  // namespace ellcirc
