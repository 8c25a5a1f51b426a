#ifndef VVMOD_TESTS_ORACLES_HPP
#define VVMOD_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. They take
// different routes than the library (adaptive Simpson instead of
// double-exponential trapezoid, direct power series instead of accelerated
// alternating series, naive O(R^2) lattice scans instead of the library's
// enumeration) so that agreement is evidence, not tautology.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "vvmod/common.hpp"

namespace oracles {

using vvmod::Complex;

// ---- adaptive Simpson on [a, b] for complex-valued integrands ----

inline Complex simpson_step(const std::function<Complex(double)>& f, double a,
                            double b, Complex fa, Complex fm, Complex fb,
                            Complex whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    Complex flm = f(lm), frm = f(rm);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    Complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline Complex integrate(const std::function<Complex(double)>& f, double a,
                         double b, double tol = 1e-12) {
    Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// ---- zeta by direct Dirichlet series with Euler-Maclaurin tail ----
// zeta(s) ~ sum_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2 + s M^{-s-1}/12
// accurate to ~1e-12 for Re(s) > 1 with M = 2000.

inline Complex zeta_direct(Complex s) {
    const int M = 2000;
    Complex acc = 0.0;
    for (int n = 1; n < M; ++n) acc += std::exp(-s * std::log(double(n)));
    acc += std::exp((1.0 - s) * std::log(double(M))) / (s - 1.0);
    acc += 0.5 * std::exp(-s * std::log(double(M)));
    acc += s / 12.0 * std::exp(-(s + 1.0) * std::log(double(M)));
    return acc;
}

// ---- gamma by quadrature of the Euler integral (Re(s) > 0) ----
// Gamma(s) = int_0^inf t^{s-1} e^{-t} dt, split at t=1 with substitution
// t = u^2 on the left to soften the endpoint.

inline Complex gamma_quadrature(Complex s) {
    auto left = [&](double u) { // t = u^2, dt = 2u du
        if (u == 0.0) return Complex(0.0);
        return 2.0 * std::exp((s - 1.0) * 2.0 * std::log(u)) * std::exp(-u * u) * u;
    };
    auto right = [&](double t) {
        return std::exp((s - 1.0) * std::log(t)) * std::exp(-t);
    };
    return integrate(left, 0.0, 1.0, 1e-13) + integrate(right, 1.0, 60.0, 1e-13);
}

// ---- Kummer M series and the U connection formula ----
// M(a,b,z) = sum z^n (a)_n / ((b)_n n!); converges for all z.
// U(a,b,z) = Gamma(1-b)/Gamma(a-b+1) M(a,b,z)
//          + Gamma(b-1)/Gamma(a) z^{1-b} M(a-b+1,2-b,z), b not an integer.
// The two terms cancel to ~z^{-a} against magnitudes ~e^z, so this oracle
// loses roughly e^z/|U| ulps: usable to ~1e-9 only for z <~ 12.

inline Complex kummer_m(Complex a, Complex b, double z) {
    Complex term = 1.0, acc = 1.0;
    for (int n = 0; n < 400; ++n) {
        term *= (a + double(n)) / (b + double(n)) * z / double(n + 1);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc) && n > 5) break;
    }
    return acc;
}

// Gamma for the connection formula, via the library-independent quadrature
// plus reflection (only used at generic non-integer parameters).
inline Complex gamma_reflect_quad(Complex s) {
    if (s.real() >= 0.5) return gamma_quadrature(s);
    return vvmod::kPi /
           (std::sin(vvmod::kPi * s) * gamma_quadrature(1.0 - s));
}

inline Complex u_connection(Complex a, Complex b, double z) {
    Complex t1 = gamma_reflect_quad(1.0 - b) / gamma_reflect_quad(a - b + 1.0) *
                 kummer_m(a, b, z);
    Complex t2 = gamma_reflect_quad(b - 1.0) / gamma_reflect_quad(a) *
                 std::exp((1.0 - b) * std::log(z)) * kummer_m(a - b + 1.0, 2.0 - b, z);
    return t1 + t2;
}

// ---- naive divisor sum ----

inline Complex sigma_naive(long long n, Complex z) {
    Complex acc = 0.0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) acc += std::exp(z * std::log(double(d)));
    return acc;
}

} // namespace oracles

#endif
