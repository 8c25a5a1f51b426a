#ifndef VVMOD_SPECFUN_HPP
#define VVMOD_SPECFUN_HPP

#include "vvmod/common.hpp"

namespace vvmod {

/// Riemann zeta on the strip 0 < Re(s) <= 12, s != 1. Alternating-series
/// acceleration of eta(s) with Chebyshev-flavoured weights (50 terms),
/// ~1e-13 relative accuracy for |Im(s)| up to ~10.
/// Throws DomainError outside the strip or within 1e-13 of the pole at 1.
Complex zeta(Complex s);

/// Gamma via a fixed 15-term Lanczos kernel (g = 607/128), reflection
/// formula for Re(s) < 1/2. ~1e-12 relative on Re(s) in [-10, 20].
/// Throws DomainError at the poles (non-positive integers).
Complex gamma_fn(Complex s);

/// 1/Gamma(s); returns exactly 0 at non-positive integers. Entire, so no
/// domain restriction beyond gamma_fn's accuracy range.
Complex gamma_reciprocal(Complex s);

/// Divisor power sum sigma_z(n) = sum_{d | n} d^z, exact divisor
/// enumeration by trial division. Requires n >= 1.
Complex sigma_divisor(long long n, Complex z);

/// sigma_1(n) in exact integer arithmetic (for q-expansion coefficients).
long long sigma1_int(long long n);

/// Parameters for a divisor power sum.
struct DivisorSumSpec {
    long long n;      // index, >= 1
    Complex exponent; // z in sigma_z
};

inline Complex sigma_divisor(const DivisorSumSpec& sp) {
    return sigma_divisor(sp.n, sp.exponent);
}

/// Kummer U(a, b, z) for real z > 0 and complex a, b.
/// Supported parameters:
///   - a a non-positive integer: terminating polynomial (exact recursion);
///   - otherwise Re(a) > -6: double-exponential quadrature of the Laplace
///     integral for Re(a) >= 1/2, extended downward by the three-term
///     recurrence in a.
/// Throws DomainError outside that range.
Complex hypergeometric_u(Complex a, Complex b, double z);

/// Whittaker W_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} U(mu-kappa+1/2, 1+2mu, z)
/// for real z > 0; parameter domain inherited from hypergeometric_u.
Complex whittaker_w(Complex kappa, Complex mu, double z);

} // namespace vvmod

#endif
