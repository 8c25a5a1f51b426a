#include "vvmod/specfun.hpp"

#include <cmath>
#include <vector>

namespace vvmod {

namespace {

const double kLn2 = 0.6931471805599453094172321214581766;

// Complex power with a positive real base.
Complex pow_real(double base, Complex expo) {
    return std::exp(expo * std::log(base));
}

bool near_nonpositive_integer(Complex s, double tol, long* which) {
    if (std::abs(s.imag()) > tol) return false;
    double r = std::round(s.real());
    if (r > 0.5 || std::abs(s.real() - r) > tol) return false;
    if (which) *which = long(r);
    return true;
}

} // namespace

Complex zeta(Complex s) {
    if (!(s.real() > 0.0) || s.real() > 12.0)
        throw DomainError("zeta: argument outside supported strip 0 < Re(s) <= 12");
    if (std::abs(s - Complex(1.0)) < 1e-13)
        throw DomainError("zeta: pole at s = 1");

    // eta(s) = sum_{k>=0} (-1)^k (k+1)^{-s}, accelerated (CVZ algorithm 1).
    const int n = 50;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::exp(-s * std::log(double(k + 1)));
        b *= (double(k) + n) * (double(k) - n) / ((k + 0.5) * (k + 1.0));
    }
    Complex eta = acc / d;

    // zeta = eta / (1 - 2^{1-s}); expm1 keeps accuracy near s = 1.
    Complex w = (1.0 - s) * kLn2;
    Complex denom = -(std::exp(w) - 1.0);
    if (std::abs(w) < 0.5) {
        // exp(w)-1 loses bits for small w; split into real/imag expm1 form.
        double a = w.real(), t = w.imag();
        double em = std::expm1(a);
        denom = -Complex(em * std::cos(t) - 2.0 * std::sin(t * 0.5) * std::sin(t * 0.5),
                         (em + 1.0) * std::sin(t));
    }
    return eta / denom;
}

namespace {

// Lanczos, g = 607/128, 15 coefficients (Godfrey's set).
const double kLanczosG = 4.7421875;
const double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex lanczos_gamma(Complex z) {
    // valid for Re(z) >= 1/2
    Complex x = kLanczos[0];
    for (int i = 1; i < 15; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
    Complex t = z + (kLanczosG - 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * x;
}

} // namespace

Complex gamma_fn(Complex s) {
    long pole = 0;
    if (near_nonpositive_integer(s, 1e-12, &pole))
        throw DomainError("gamma: pole at non-positive integer " + std::to_string(pole));
    if (s.real() >= 0.5) return lanczos_gamma(s);
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
    return kPi / (std::sin(kPi * s) * lanczos_gamma(1.0 - s));
}

Complex gamma_reciprocal(Complex s) {
    if (near_nonpositive_integer(s, 1e-12, nullptr)) return 0.0;
    return 1.0 / gamma_fn(s);
}

Complex sigma_divisor(long long n, Complex z) {
    if (n < 1) throw DomainError("sigma_divisor: requires n >= 1");
    Complex acc = 0.0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        acc += pow_real(double(d), z);
        long long e = n / d;
        if (e != d) acc += pow_real(double(e), z);
    }
    return acc;
}

long long sigma1_int(long long n) {
    if (n < 1) throw DomainError("sigma1_int: requires n >= 1");
    long long acc = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        acc += d;
        long long e = n / d;
        if (e != d) acc += e;
    }
    return acc;
}

namespace {

// U(-N, b, z) = sum_{i=0}^{N} [(-N)_i (-N-b+1)_i / i!] (-1)^i z^{N-i}
// (terminating Kummer series written highest power first).
Complex u_terminating(long Nneg, Complex b, double z) {
    long N = -Nneg;
    Complex acc = 0.0;
    Complex poch_a = 1.0; // (-N)_i
    Complex poch_c = 1.0; // (-N-b+1)_i
    double fact = 1.0;
    for (long i = 0; i <= N; ++i) {
        double sign = (i % 2) ? -1.0 : 1.0;
        acc += poch_a * poch_c / fact * sign * std::pow(z, double(N - i));
        poch_a *= Complex(double(-N + i));
        poch_c *= (Complex(double(-N + 1 + i)) - b);
        fact *= double(i + 1);
    }
    return acc;
}

// U(a,b,z) = (1/Gamma(a)) int_0^inf e^{-z t} t^{a-1} (1+t)^{b-a-1} dt for
// Re(a) > 0. Exp-sinh transform t = exp((pi/2) sinh u); the integrand is
// evaluated in log space so large t cannot overflow.
Complex u_laplace_integral(Complex a, Complex b, double z) {
    const double h = 0.03;
    const double u_lo = -4.8, u_hi = 3.2;
    Complex bma1 = b - a - 1.0;
    NeumaierSumC acc;
    int steps = int(std::round((u_hi - u_lo) / h));
    for (int i = 0; i <= steps; ++i) {
        double u = u_lo + h * i;
        double sh = std::sinh(u) * (kPi / 2.0);
        double t = std::exp(sh);        // substitution variable
        double logt = sh;
        double jac = t * (kPi / 2.0) * std::cosh(u);
        // e^{-z t} t^{a-1} (1+t)^{b-a-1} * jac, assembled in log space
        Complex logv = -z * t + (a - 1.0) * logt + bma1 * std::log1p(t);
        double lr = logv.real();
        if (lr < -745.0) continue;      // underflow: term is exactly 0
        acc.add(std::exp(logv) * jac);
    }
    return acc.value() * h * gamma_reciprocal(a);
}

} // namespace

Complex hypergeometric_u(Complex a, Complex b, double z) {
    if (!(z > 0.0))
        throw DomainError("hypergeometric_u: requires z > 0");
    long n = 0;
    if (near_nonpositive_integer(a, 1e-12, &n))
        return u_terminating(n, b, z);
    if (a.real() >= 0.5)
        return u_laplace_integral(a, b, z);
    if (a.real() <= -6.0)
        throw DomainError("hypergeometric_u: Re(a) <= -6 unsupported unless a is a non-positive integer");
    // Shift up to Re >= 1/2, then recur down:
    // U(a,b,z) = (z + 2(a+1) - b) U(a+1,b,z) - (a+1)(a+2-b) U(a+2,b,z).
    int shift = int(std::ceil(0.5 - a.real()));
    Complex uc = u_laplace_integral(a + double(shift), b, z);
    Complex up = u_laplace_integral(a + double(shift + 1), b, z);
    for (int step = shift - 1; step >= 0; --step) {
        Complex ap = a + double(step); // recovering U(ap)
        Complex un = (z + 2.0 * (ap + 1.0) - b) * uc - (ap + 1.0) * (ap + 2.0 - b) * up;
        up = uc;
        uc = un;
    }
    return uc;
}

Complex whittaker_w(Complex kappa, Complex mu, double z) {
    if (!(z > 0.0))
        throw DomainError("whittaker_w: requires z > 0");
    Complex a = mu - kappa + 0.5;
    Complex b = 2.0 * mu + 1.0;
    return std::exp(-z / 2.0) * pow_real(z, mu + 0.5) * hypergeometric_u(a, b, z);
}

} // namespace vvmod
