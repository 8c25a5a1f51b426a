#include "vvmod/symframe.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace vvmod {

GroupElement::GroupElement(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    double det = a * d - b * c;
    if (std::abs(det - 1.0) > 1e-12)
        throw DomainError("GroupElement: determinant must be 1 (got " +
                          std::to_string(det) + ")");
}

GroupElement ge_mul(const GroupElement& g, const GroupElement& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

Complex moebius(const GroupElement& g, Complex tau) {
    if (!(tau.imag() > 0.0))
        throw DomainError("moebius: tau must lie in the upper half-plane");
    return (g.a * tau + g.b) / (g.c * tau + g.d);
}

GroupElement random_sl2(SplitMix64& rng) {
    double x = rng.uniform(-2.0, 2.0);
    double t = rng.uniform(0.5, 2.0);
    double th = rng.uniform(0.0, 2.0 * kPi);
    GroupElement N(1, x, 0, 1);
    GroupElement A(t, 0, 0, 1.0 / t);
    GroupElement K(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
    return ge_mul(ge_mul(N, A), K);
}

XPolynomial::XPolynomial(int bound) {
    if (bound < 0) throw DomainError("XPolynomial: negative degree bound");
    coef_.assign(bound + 1, Complex(0.0));
}

Complex XPolynomial::coeff(int i) const {
    if (i < 0 || i >= int(coef_.size())) return 0.0;
    return coef_[i];
}

void XPolynomial::set_coeff(int i, Complex v) {
    if (i < 0 || i >= int(coef_.size()))
        throw DomainError("XPolynomial: coefficient index out of range");
    coef_[i] = v;
}

Complex XPolynomial::eval(Complex x) const {
    Complex acc = 0.0;
    for (int i = int(coef_.size()) - 1; i >= 0; --i) acc = acc * x + coef_[i];
    return acc;
}

double XPolynomial::max_abs() const {
    double m = 0.0;
    for (const Complex& c : coef_) m = std::max(m, std::abs(c));
    return m;
}

XPolynomial xp_add(const XPolynomial& p, const XPolynomial& q) {
    XPolynomial out(std::max(p.bound(), q.bound()));
    for (int i = 0; i <= out.bound(); ++i) out.set_coeff(i, p.coeff(i) + q.coeff(i));
    return out;
}

XPolynomial xp_scale(const XPolynomial& p, Complex c) {
    XPolynomial out(p.bound());
    for (int i = 0; i <= p.bound(); ++i) out.set_coeff(i, c * p.coeff(i));
    return out;
}

XPolynomial xp_mul(const XPolynomial& p, const XPolynomial& q) {
    XPolynomial out(p.bound() + q.bound());
    for (int i = 0; i <= p.bound(); ++i) {
        if (p.coeff(i) == Complex(0.0)) continue;
        for (int j = 0; j <= q.bound(); ++j)
            out.set_coeff(i + j, out.coeff(i + j) + p.coeff(i) * q.coeff(j));
    }
    return out;
}

double xp_max_abs_diff(const XPolynomial& p, const XPolynomial& q) {
    double m = 0.0;
    for (int i = 0; i <= std::max(p.bound(), q.bound()); ++i)
        m = std::max(m, std::abs(p.coeff(i) - q.coeff(i)));
    return m;
}

namespace {

// (u X + v)^n with exact binomial coefficients.
XPolynomial power_linear(double u, double v, int n) {
    XPolynomial out(n);
    double binom = 1.0;
    for (int i = 0; i <= n; ++i) {
        out.set_coeff(i, binom * std::pow(u, i) * std::pow(v, n - i));
        binom = binom * double(n - i) / double(i + 1);
    }
    return out;
}

XPolynomial power_linear_c(Complex u, Complex v, int n) {
    XPolynomial out(n);
    double binom = 1.0;
    Complex upow = 1.0;
    for (int i = 0; i <= n; ++i) {
        Complex vpow = 1.0;
        for (int t = 0; t < n - i; ++t) vpow *= v;
        out.set_coeff(i, binom * upow * vpow);
        upow *= u;
        binom = binom * double(n - i) / double(i + 1);
    }
    return out;
}

} // namespace

XPolynomial act_on_x(const GroupElement& g, const XPolynomial& p) {
    int m = p.bound();
    XPolynomial out(m);
    for (int alpha = 0; alpha <= m; ++alpha) {
        Complex c = p.coeff(alpha);
        if (c == Complex(0.0)) continue;
        XPolynomial term = xp_mul(power_linear(g.a, g.b, alpha),
                                  power_linear(g.c, g.d, m - alpha));
        out = xp_add(out, xp_scale(term, c));
    }
    return out;
}

XPolynomial slash_value(const std::function<XPolynomial(Complex)>& F, int k,
                        int m, const GroupElement& g, Complex tau) {
    Complex w = g.c * tau + g.d;
    XPolynomial val = F(moebius(g, tau));
    if (val.bound() != m)
        throw DomainError("slash_value: function value has wrong degree bound");
    return xp_scale(act_on_x(g, val), std::pow(w, -k));
}

XPolynomial frame_value(int j, int m, Complex tau) {
    if (m < 0 || j < 0 || j > m)
        throw DomainError("frame_value: requires 0 <= j <= m");
    if (!(tau.imag() > 0.0))
        throw DomainError("frame_value: tau must lie in the upper half-plane");
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= double(i);
    double sign = ((m - j) % 2) ? -1.0 : 1.0;
    Complex scale = sign / fact * std::pow(tau.imag(), double(j - m));
    XPolynomial p = power_linear_c(1.0, -tau, j);
    XPolynomial q = power_linear_c(1.0, -std::conj(tau), m - j);
    return xp_scale(xp_mul(p, q), scale);
}

std::vector<std::vector<Complex>> frame_matrix(int m, Complex tau) {
    std::vector<std::vector<Complex>> mat(m + 1, std::vector<Complex>(m + 1));
    for (int j = 0; j <= m; ++j) {
        XPolynomial col = frame_value(j, m, tau);
        for (int i = 0; i <= m; ++i) mat[i][j] = col.coeff(i);
    }
    return mat;
}

std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> mat,
                                  std::vector<Complex> rhs) {
    int n = int(mat.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(mat[r][col]) > std::abs(mat[piv][col])) piv = r;
        if (std::abs(mat[piv][col]) < 1e-250)
            throw DomainError("solve_linear: singular matrix");
        std::swap(mat[piv], mat[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            Complex f = mat[r][col] / mat[col][col];
            if (f == Complex(0.0)) continue;
            for (int c = col; c < n; ++c) mat[r][c] -= f * mat[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Complex> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Complex acc = rhs[r];
        for (int c = r + 1; c < n; ++c) acc -= mat[r][c] * x[c];
        x[r] = acc / mat[r][r];
    }
    return x;
}

std::vector<Complex> frame_coordinates(int m, Complex tau, const XPolynomial& p) {
    if (p.bound() != m)
        throw DomainError("frame_coordinates: degree bound mismatch");
    std::vector<Complex> rhs(m + 1);
    for (int i = 0; i <= m; ++i) rhs[i] = p.coeff(i);
    return solve_linear(frame_matrix(m, tau), rhs);
}

VectorForm::VectorForm(int m, int weight, std::vector<ScalarExpansion> frame)
    : m_(m), weight_(weight), frame_(std::move(frame)) {
    if (m_ < 0) throw DomainError("VectorForm: negative symmetric degree");
    if (int(frame_.size()) != m_ + 1)
        throw DomainError("VectorForm: expected " + std::to_string(m_ + 1) +
                          " frame components, got " + std::to_string(frame_.size()));
    for (int j = 0; j <= m_; ++j) {
        int want = weight_ - m_ + 2 * j;
        if (frame_[j].weight() != want)
            throw DomainError("VectorForm: component " + std::to_string(j) +
                              " must carry weight " + std::to_string(want) +
                              ", got " + std::to_string(frame_[j].weight()));
        if (frame_[j].order() != frame_[0].order())
            throw DomainError("VectorForm: components must share one q-order");
    }
}

const ScalarExpansion& VectorForm::component(int j) const {
    if (j < 0 || j > m_) throw DomainError("VectorForm: component index out of range");
    return frame_[j];
}

VEvalResult vf_eval(const VectorForm& f, const EvalPoint& p) {
    XPolynomial acc(f.m());
    double tail = 0.0;
    for (int j = 0; j <= f.m(); ++j) {
        EvalResult er = se_eval(f.component(j), p);
        XPolynomial fr = frame_value(j, f.m(), p.tau());
        acc = xp_add(acc, xp_scale(fr, er.value));
        tail += er.tail_bound * fr.max_abs();
    }
    return {acc, tail};
}

VectorForm vf_lower(const VectorForm& f) {
    std::vector<ScalarExpansion> out;
    out.reserve(f.m() + 1);
    for (int j = 0; j <= f.m(); ++j) {
        ScalarExpansion part = lower(f.component(j));
        if (j >= 1) {
            double shift = double(j) * double(f.m() - j + 1);
            part = se_add(part, se_scale(f.component(j - 1), shift));
        }
        out.push_back(std::move(part));
    }
    return VectorForm(f.m(), f.weight() - 2, std::move(out));
}

VectorForm vf_raise(const VectorForm& f) {
    std::vector<ScalarExpansion> out;
    out.reserve(f.m() + 1);
    for (int j = 0; j <= f.m(); ++j) {
        ScalarExpansion part = raise(f.component(j));
        if (j + 1 <= f.m()) {
            // f_{j+1} carries weight (k-m+2j)+2 already, matching raise(f_j)
            part = se_add(part, f.component(j + 1));
        }
        out.push_back(std::move(part));
    }
    return VectorForm(f.m(), f.weight() + 2, std::move(out));
}

double vf_max_abs(const VectorForm& f) {
    double m = 0.0;
    for (int j = 0; j <= f.m(); ++j) m = std::max(m, f.component(j).max_abs());
    return m;
}

std::string vf_to_json(const VectorForm& f) {
    nlohmann::ordered_json j;
    j["m"] = f.m();
    j["weight"] = f.weight();
    auto arr = nlohmann::ordered_json::array();
    for (int c = 0; c <= f.m(); ++c)
        arr.push_back(nlohmann::ordered_json::parse(se_to_json(f.component(c))));
    j["frame"] = std::move(arr);
    return j.dump();
}

VectorForm vf_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("vector form parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("weight") ||
        !j.contains("frame") || !j["m"].is_number_integer() ||
        !j["weight"].is_number_integer() || !j["frame"].is_array())
        throw DomainError("vector form parse: missing or mistyped field");
    std::vector<ScalarExpansion> comps;
    for (const auto& e : j["frame"]) comps.push_back(se_from_json(e.dump()));
    return VectorForm(j["m"].get<int>(), j["weight"].get<int>(), std::move(comps));
}

} // namespace vvmod
