#include "vvmod/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vvmod/specfun.hpp"

namespace vvmod {

namespace {

// w^n for integer n (n may be negative).
Complex ipow(Complex w, int n) {
    if (n < 0) return 1.0 / ipow(w, -n);
    Complex acc = 1.0;
    for (int i = 0; i < n; ++i) acc *= w;
    return acc;
}

Complex pow_real(double base, Complex expo) {
    return std::exp(expo * std::log(base));
}

// x d + y c = gcd(d, c)
void ext_gcd(long long d, long long c, long long& x, long long& y) {
    if (c == 0) {
        x = (d > 0) ? 1 : -1;
        y = 0;
        return;
    }
    long long x1, y1;
    ext_gcd(c, d % c, x1, y1);
    x = y1;
    y = x1 - (d / c) * y1;
}

double binom(int n, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc = acc * double(n - i) / double(i + 1);
    return acc;
}

double factorial(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= double(i);
    return acc;
}

} // namespace

std::vector<CosetRep> enumerate_cosets(long long radius) {
    if (radius < 1) throw DomainError("enumerate_cosets: radius must be >= 1");
    std::vector<CosetRep> out;
    out.push_back({0, 1, 1, 0}); // the identity coset
    for (long long c = 1; c <= radius; ++c)
        for (long long d = -radius; d <= radius; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            CosetRep rep{c, d, 0, 0};
            if (d == 0) {
                rep.a = 0;
                rep.b = -1;
            } else {
                long long x, y;
                ext_gcd(d, c, x, y); // x d + y c = 1
                rep.a = x;
                rep.b = -y; // a d - b c = 1
                // shift a -> a + t c, b -> b + t d to minimize |b|
                long long t = std::llround(-double(rep.b) / double(d));
                long long best_b = rep.b + t * d, best_a = rep.a + t * c;
                for (long long dt : {-1LL, 1LL}) {
                    long long nb = rep.b + (t + dt) * d;
                    if (std::abs(nb) < std::abs(best_b) ||
                        (std::abs(nb) == std::abs(best_b) && nb > best_b)) {
                        best_b = nb;
                        best_a = rep.a + (t + dt) * c;
                    }
                }
                rep.a = best_a;
                rep.b = best_b;
            }
            out.push_back(rep);
        }
    std::sort(out.begin(), out.end(), [](const CosetRep& p, const CosetRep& q) {
        long long np = p.c * p.c + p.d * p.d, nq = q.c * q.c + q.d * q.d;
        if (np != nq) return np < nq;
        if (p.c != q.c) return p.c < q.c;
        return p.d > q.d;
    });
    return out;
}

SumResult eis_sum(int k, Complex s, const EvalPoint& tau, long long radius) {
    double growth = 2.0 * s.real() + double(k);
    if (growth <= 2.0)
        throw DomainError("eis_sum: series diverges unless 2 Re(s) + k > 2");
    if (k % 2 != 0) return {Complex(0.0), 0.0}; // termwise parity cancellation
    std::vector<CosetRep> reps = enumerate_cosets(radius);
    Complex t = tau.tau();
    NeumaierSumC acc;
    double boundary = 0.0;
    for (const CosetRep& rep : reps) {
        Complex w = double(rep.c) * t + double(rep.d);
        double n2 = std::norm(w);
        Complex term = pow_real(tau.y / n2, s) * ipow(w, -k);
        acc.add(term);
        if (std::max(rep.c, std::abs(rep.d)) >= radius)
            boundary += std::abs(term);
    }
    // integral comparison: mass of shell rho ~ radius scales like
    // rho^{1-growth}; factor 4 cushions the discrete shell fluctuation
    double tail = boundary * (1.0 + 4.0 * double(radius) / (growth - 2.0));
    return {acc.value(), tail};
}

namespace {

Complex constant_profile_raw(int k, Complex s) {
    double sign = (k / 2 % 2) ? -1.0 : 1.0; // (-1)^{k/2}
    Complex arg = double(k - 1) + 2.0 * s;
    return sign * std::exp((2.0 - double(k) - 2.0 * s) * std::log(2.0)) * kPi *
           gamma_fn(arg) * gamma_reciprocal(s) * gamma_reciprocal(double(k) + s) *
           zeta(arg) / zeta(double(k) + 2.0 * s);
}

} // namespace

Complex eis_constant_profile(int k, Complex s) {
    if (k < 0 || k % 2 != 0)
        throw DomainError("eis_constant_profile: requires even k >= 0");
    // At s = (2-k)/2 <= 0 the zeta pole is cancelled by the 1/Gamma(s) zero;
    // fill the removable point by a symmetric shift + Richardson step.
    double s_rm = (2.0 - double(k)) / 2.0;
    if (s_rm <= 0.0 && std::abs(s - Complex(s_rm)) < 1e-8) {
        const double e1 = 1e-4, e2 = 1e-5;
        Complex a1 = 0.5 * (constant_profile_raw(k, s + e1) + constant_profile_raw(k, s - e1));
        Complex a2 = 0.5 * (constant_profile_raw(k, s + e2) + constant_profile_raw(k, s - e2));
        return (e1 * e1 * a2 - e2 * e2 * a1) / (e1 * e1 - e2 * e2);
    }
    return constant_profile_raw(k, s);
}

namespace {

// magnitudes (pre phase factor) of the +n and -n Whittaker terms
struct FourierTermPair {
    Complex pos, neg;
};

FourierTermPair fourier_term(int k, Complex s, double y, Complex pref, long long n) {
    Complex sig = sigma_divisor(n, double(k - 1) + 2.0 * s);
    Complex common = pref * sig * pow_real(double(n), -(s + double(k) / 2.0)) *
                     std::pow(y, -double(k) / 2.0);
    Complex mu = double(k - 1) / 2.0 + s;
    double z = 4.0 * kPi * double(n) * y;
    FourierTermPair out{0.0, 0.0};
    Complex gp = gamma_reciprocal(s + double(k));
    if (gp != Complex(0.0))
        out.pos = common * gp * whittaker_w(double(k) / 2.0, mu, z);
    Complex gn = gamma_reciprocal(s);
    if (gn != Complex(0.0))
        out.neg = common * gn * whittaker_w(-double(k) / 2.0, mu, z);
    return out;
}

} // namespace

SumResult eis_fourier(int k, Complex s, const EvalPoint& tau, int nterms) {
    if (k < 0 || k % 2 != 0)
        throw DomainError("eis_fourier: requires even k >= 0");
    if (nterms < 0)
        throw DomainError("eis_fourier: nterms must be >= 0");
    double y = tau.y;
    NeumaierSumC acc;
    acc.add(pow_real(y, s));
    acc.add(eis_constant_profile(k, s) * pow_real(y, 1.0 - double(k) - s));

    double sign = (k / 2 % 2) ? -1.0 : 1.0;
    Complex pref = sign * pow_real(kPi, s + double(k) / 2.0) / zeta(double(k) + 2.0 * s);
    for (long long n = 1; n <= nterms; ++n) {
        FourierTermPair tp = fourier_term(k, s, y, pref, n);
        Complex e(std::cos(2.0 * kPi * n * tau.x), std::sin(2.0 * kPi * n * tau.x));
        acc.add(tp.pos * e);
        acc.add(tp.neg * std::conj(e));
    }
    // honest tail estimate: magnitude of the first omitted term pair,
    // extended by the e^{-2 pi y} geometric decay
    FourierTermPair next = fourier_term(k, s, y, pref, nterms + 1);
    double rho = std::exp(-2.0 * kPi * y);
    double tail = (std::abs(next.pos) + std::abs(next.neg)) / (1.0 - rho);
    return {acc.value(), tail};
}

double e2_depth_constant() { return -3.0 / kPi; }

ScalarExpansion e2hol_expansion(int order) {
    ScalarExpansion e(2, order);
    e.set_coeff(0, 0, 1.0);
    for (int n = 1; n <= order; ++n)
        e.set_coeff(0, n, -24.0 * double(sigma1_int(n)));
    return e;
}

ScalarExpansion e2_expansion(int order) {
    ScalarExpansion e = e2hol_expansion(order);
    e.set_coeff(1, 0, e2_depth_constant());
    return e;
}

VectorForm e2vec(int order) {
    ScalarExpansion low = ScalarExpansion::constant(e2_depth_constant(), 0, order);
    return VectorForm(1, 1, {low, e2_expansion(order)});
}

namespace {

void validate_vv(const EisensteinSpec& spec) {
    if (spec.m < 0 || spec.j < 0 || spec.j > spec.m)
        throw DomainError("vector series: requires 0 <= j <= m");
    if (((spec.k % 2) + 2) % 2 != ((spec.m % 2) + 2) % 2)
        throw DomainError("vector series: parity requires k == m (mod 2)");
}

} // namespace

VSumResult vv_eis_sum(const EisensteinSpec& spec, const EvalPoint& tau,
                      long long radius) {
    validate_vv(spec);
    double growth = 2.0 * spec.s.real() + double(spec.k) - double(spec.m);
    if (growth <= 2.0)
        throw DomainError("vv_eis_sum: series diverges unless 2 Re(s) + k - m > 2");
    std::vector<CosetRep> reps = enumerate_cosets(radius);
    Complex t = tau.tau();
    // per-coset value: (X-tau)^j (cX+d)^{m-j} (c tau+d)^{-k-j} (y/|c tau+d|^2)^s
    XPolynomial xmt(spec.j);
    {
        XPolynomial base(1);
        base.set_coeff(0, -t);
        base.set_coeff(1, 1.0);
        XPolynomial acc(0);
        acc.set_coeff(0, 1.0);
        for (int i = 0; i < spec.j; ++i) acc = xp_mul(acc, base);
        xmt = acc;
    }
    std::vector<NeumaierSumC> acc(spec.m + 1);
    double boundary = 0.0;
    for (const CosetRep& rep : reps) {
        Complex w = double(rep.c) * t + double(rep.d);
        Complex scalar = pow_real(tau.y / std::norm(w), spec.s) * ipow(w, -(spec.k + spec.j));
        XPolynomial cxd(spec.m - spec.j);
        {
            double bin = 1.0;
            for (int i = 0; i <= spec.m - spec.j; ++i) {
                cxd.set_coeff(i, bin * std::pow(double(rep.c), i) *
                                     std::pow(double(rep.d), spec.m - spec.j - i));
                bin = bin * double(spec.m - spec.j - i) / double(i + 1);
            }
        }
        XPolynomial poly = xp_mul(xmt, cxd); // degree m
        for (int i = 0; i <= spec.m; ++i) acc[i].add(scalar * poly.coeff(i));
        if (std::max(rep.c, std::abs(rep.d)) >= radius)
            boundary += std::abs(scalar) * poly.max_abs();
    }
    XPolynomial value(spec.m);
    for (int i = 0; i <= spec.m; ++i) value.set_coeff(i, acc[i].value());
    return {value, boundary * (1.0 + 4.0 * double(radius) / (growth - 2.0))};
}

VSumResult eahol_sum(const EisensteinSpec& spec, const EvalPoint& tau,
                     long long radius) {
    validate_vv(spec);
    int kj = spec.k - spec.m + 2 * spec.j; // weight of the scalar factor
    if (2.0 * spec.s.real() + double(kj) <= 2.0)
        throw DomainError("eahol_sum: series diverges unless 2 Re(s) + k - m + 2j > 2");
    std::vector<CosetRep> reps = enumerate_cosets(radius);
    Complex t = tau.tau();
    Complex s = spec.s;
    auto F = [&](Complex tp) {
        return xp_scale(frame_value(spec.j, spec.m, tp), pow_real(tp.imag(), s));
    };
    std::vector<NeumaierSumC> acc(spec.m + 1);
    double boundary = 0.0;
    for (const CosetRep& rep : reps) {
        GroupElement g(double(rep.a), double(rep.b), double(rep.c), double(rep.d));
        XPolynomial term = slash_value(F, spec.k, spec.m, g, t);
        for (int i = 0; i <= spec.m; ++i) acc[i].add(term.coeff(i));
        if (std::max(rep.c, std::abs(rep.d)) >= radius) boundary += term.max_abs();
    }
    XPolynomial value(spec.m);
    for (int i = 0; i <= spec.m; ++i) value.set_coeff(i, acc[i].value());
    double growth = 2.0 * spec.s.real() + double(kj);
    return {value, boundary * (1.0 + 4.0 * double(radius) / (growth - 2.0))};
}

namespace {

struct ProductTerm {
    int r;
    Complex coef; // (i/2)^{m-j} binom(m-j, r-j) r!
    SumResult scalar;
};

std::vector<ProductTerm> product_terms(const EisensteinSpec& spec,
                                       const EvalPoint& tau, int nterms) {
    validate_vv(spec);
    if (spec.k - spec.m + 2 * spec.j < 0)
        throw DomainError("vv_eis_product: scalar weight k - m + 2j must be >= 0");
    Complex pref = ipow(Complex(0.0, 0.5), spec.m - spec.j);
    std::vector<ProductTerm> terms;
    for (int r = spec.j; r <= spec.m; ++r) {
        ProductTerm pt;
        pt.r = r;
        pt.coef = pref * binom(spec.m - spec.j, r - spec.j) * factorial(r);
        pt.scalar = eis_fourier(spec.k - spec.m + 2 * r,
                                spec.s - double(r - spec.j), tau, nterms);
        terms.push_back(pt);
    }
    return terms;
}

} // namespace

std::vector<Complex> vv_eis_product_components(const EisensteinSpec& spec,
                                               const EvalPoint& tau, int nterms) {
    std::vector<Complex> out(spec.m + 1, Complex(0.0));
    for (const ProductTerm& pt : product_terms(spec, tau, nterms))
        out[pt.r] = pt.coef * pt.scalar.value;
    return out;
}

VSumResult vv_eis_product(const EisensteinSpec& spec, const EvalPoint& tau,
                          int nterms) {
    XPolynomial value(spec.m);
    double tail = 0.0;
    for (const ProductTerm& pt : product_terms(spec, tau, nterms)) {
        XPolynomial fr = frame_value(pt.r, spec.m, tau.tau());
        value = xp_add(value, xp_scale(fr, pt.coef * pt.scalar.value));
        tail += std::abs(pt.coef) * pt.scalar.tail_bound * fr.max_abs();
    }
    return {value, tail};
}

namespace {

const int kContourPoints = 16;
const double kContourRadius = 0.05;

// (1/2 pi i) oint f ds discretized with the given stride over 16 points.
Complex contour_value(const std::vector<Complex>& vals, int stride) {
    Complex acc = 0.0;
    int npts = 0;
    for (int l = 0; l < kContourPoints; l += stride) {
        double th = 2.0 * kPi * l / kContourPoints;
        acc += vals[l] * Complex(std::cos(th), std::sin(th));
        ++npts;
    }
    return acc * (kContourRadius / double(npts));
}

Complex contour_extract(const std::vector<Complex>& vals) {
    double fmax = 0.0;
    for (Complex v : vals) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("residue_at: non-finite evaluation on the contour");
        fmax = std::max(fmax, std::abs(v));
    }
    Complex r8 = contour_value(vals, 2);
    Complex r16 = contour_value(vals, 1);
    double scale = std::max(std::abs(r16), kContourRadius * fmax);
    if (std::abs(r8 - r16) > 1e-3 * std::max(scale, 1e-300))
        throw DomainError("residue_at: contour integral did not stabilize");
    return r8;
}

} // namespace

Complex residue_at(const std::function<Complex(Complex)>& f, Complex s0) {
    std::vector<Complex> vals(kContourPoints);
    for (int l = 0; l < kContourPoints; ++l) {
        double th = 2.0 * kPi * l / kContourPoints;
        vals[l] = f(s0 + kContourRadius * Complex(std::cos(th), std::sin(th)));
    }
    return contour_extract(vals);
}

XPolynomial e2vec_residue_term(const EvalPoint& tau, int nterms) {
    // shared contour: one vv_eis_product evaluation per point serves both
    // X-coefficients
    std::vector<XPolynomial> polys;
    polys.reserve(kContourPoints);
    for (int l = 0; l < kContourPoints; ++l) {
        double th = 2.0 * kPi * l / kContourPoints;
        Complex s = Complex(1.0) + kContourRadius * Complex(std::cos(th), std::sin(th));
        EisensteinSpec spec{1, 1, 0, s};
        polys.push_back(vv_eis_product(spec, tau, nterms).value);
    }
    XPolynomial res(1);
    for (int i = 0; i <= 1; ++i) {
        std::vector<Complex> vals(kContourPoints);
        for (int l = 0; l < kContourPoints; ++l) vals[l] = polys[l].coeff(i);
        res.set_coeff(i, contour_extract(vals));
    }
    return xp_scale(res, Complex(0.0, 2.0));
}

VSumResult e2vec_via_eisenstein(const EvalPoint& tau, int nterms) {
    EisensteinSpec direct{1, 1, 1, 0.0};
    VSumResult part = vv_eis_product(direct, tau, nterms);
    XPolynomial res = e2vec_residue_term(tau, nterms);
    return {xp_add(part.value, res), part.tail_bound};
}

} // namespace vvmod
