#include "vvmod/qyseries.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace vvmod {

namespace {

bool is_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

} // namespace

ScalarExpansion::ScalarExpansion(int weight, int order)
    : weight_(weight), order_(order) {
    if (order < 0) throw DomainError("ScalarExpansion: order must be >= 0");
    rows_.assign(1, std::vector<Complex>(order_ + 1, Complex(0.0)));
}

ScalarExpansion ScalarExpansion::constant(Complex value, int weight, int order) {
    ScalarExpansion e(weight, order);
    e.set_coeff(0, 0, value);
    return e;
}

int ScalarExpansion::depth() const {
    for (int r = int(rows_.size()) - 1; r >= 0; --r)
        for (const Complex& c : rows_[r])
            if (!is_zero(c)) return r;
    return 0;
}

Complex ScalarExpansion::coeff(int r, int n) const {
    if (r < 0 || n < 0 || n > order_ || r >= int(rows_.size())) return 0.0;
    return rows_[r][n];
}

void ScalarExpansion::set_coeff(int r, int n, Complex value) {
    if (r < 0) throw DomainError("ScalarExpansion: negative depth index");
    if (n < 0 || n > order_) throw DomainError("ScalarExpansion: q-power index out of range");
    if (r >= int(rows_.size()))
        rows_.resize(r + 1, std::vector<Complex>(order_ + 1, Complex(0.0)));
    rows_[r][n] = value;
}

double ScalarExpansion::max_abs() const {
    double m = 0.0;
    for (const auto& row : rows_)
        for (const Complex& c : row) m = std::max(m, std::abs(c));
    return m;
}

void ScalarExpansion::trim() {
    while (rows_.size() > 1) {
        for (const Complex& c : rows_.back())
            if (!is_zero(c)) return;
        rows_.pop_back();
    }
}

ScalarExpansion se_add(const ScalarExpansion& a, const ScalarExpansion& b) {
    if (a.weight() != b.weight())
        throw DomainError("se_add: weight tags differ (" + std::to_string(a.weight()) +
                          " vs " + std::to_string(b.weight()) + ")");
    int order = std::min(a.order(), b.order());
    int depth = std::max(a.depth(), b.depth());
    ScalarExpansion out(a.weight(), order);
    for (int r = 0; r <= depth; ++r)
        for (int n = 0; n <= order; ++n)
            out.set_coeff(r, n, a.coeff(r, n) + b.coeff(r, n));
    out.trim();
    return out;
}

ScalarExpansion se_scale(const ScalarExpansion& a, Complex c) {
    ScalarExpansion out(a.weight(), a.order());
    for (int r = 0; r <= a.depth(); ++r)
        for (int n = 0; n <= a.order(); ++n)
            out.set_coeff(r, n, c * a.coeff(r, n));
    out.trim();
    return out;
}

ScalarExpansion se_mul(const ScalarExpansion& a, const ScalarExpansion& b) {
    int order = std::min(a.order(), b.order());
    ScalarExpansion out(a.weight() + b.weight(), order);
    for (int r1 = 0; r1 <= a.depth(); ++r1)
        for (int r2 = 0; r2 <= b.depth(); ++r2)
            for (int n1 = 0; n1 <= order; ++n1) {
                Complex ca = a.coeff(r1, n1);
                if (is_zero(ca)) continue;
                for (int n2 = 0; n1 + n2 <= order; ++n2) {
                    Complex cb = b.coeff(r2, n2);
                    if (is_zero(cb)) continue;
                    out.set_coeff(r1 + r2, n1 + n2,
                                  out.coeff(r1 + r2, n1 + n2) + ca * cb);
                }
            }
    out.trim();
    return out;
}

EvalResult se_eval(const ScalarExpansion& a, const EvalPoint& p) {
    // q = e^{2 pi i tau}
    double decay = std::exp(-2.0 * kPi * p.y);
    Complex q = decay * Complex(std::cos(2.0 * kPi * p.x), std::sin(2.0 * kPi * p.x));
    Complex value = 0.0;
    double tail = 0.0;
    double ypow = 1.0; // y^{-r}
    for (int r = 0; r <= a.depth(); ++r) {
        Complex row = 0.0;
        for (int n = a.order(); n >= 0; --n) row = row * q + a.coeff(r, n);
        value += ypow * row;
        // geometric tail from the last retained coefficient of this row
        for (int n = a.order(); n >= 0; --n) {
            double c = std::abs(a.coeff(r, n));
            if (c != 0.0) {
                tail += c * ypow * std::pow(decay, n + 1) / (1.0 - decay);
                break;
            }
        }
        ypow /= p.y;
    }
    return {value, tail};
}

ScalarExpansion lower(const ScalarExpansion& a) {
    ScalarExpansion out(a.weight() - 2, a.order());
    for (int r = 0; r + 1 <= a.depth(); ++r)
        for (int n = 0; n <= a.order(); ++n)
            out.set_coeff(r, n, -double(r + 1) * a.coeff(r + 1, n));
    out.trim();
    return out;
}

ScalarExpansion q_scale(const ScalarExpansion& a) {
    ScalarExpansion out(a.weight() + 2, a.order());
    for (int r = 0; r <= a.depth(); ++r)
        for (int n = 0; n <= a.order(); ++n)
            out.set_coeff(r, n, double(n) * a.coeff(r, n));
    out.trim();
    return out;
}

ScalarExpansion y_shift(const ScalarExpansion& a) {
    int k = a.weight();
    ScalarExpansion out(k + 2, a.order());
    for (int r = 0; r <= a.depth(); ++r)
        for (int n = 0; n <= a.order(); ++n)
            out.set_coeff(r + 1, n, double(k - r) * a.coeff(r, n));
    out.trim();
    return out;
}

ScalarExpansion raise(const ScalarExpansion& a) {
    return se_add(se_scale(q_scale(a), -4.0 * kPi), y_shift(a));
}

ScalarExpansion laplace(const ScalarExpansion& a) {
    return se_scale(raise(lower(a)), -1.0);
}

bool se_equal_exact(const ScalarExpansion& a, const ScalarExpansion& b) {
    if (a.weight() != b.weight()) return false;
    int depth = std::max(a.depth(), b.depth());
    int order = std::max(a.order(), b.order());
    for (int r = 0; r <= depth; ++r)
        for (int n = 0; n <= order; ++n)
            if (a.coeff(r, n) != b.coeff(r, n)) return false;
    return true;
}

double se_max_abs_diff(const ScalarExpansion& a, const ScalarExpansion& b) {
    int depth = std::max(a.depth(), b.depth());
    int order = std::max(a.order(), b.order());
    double m = 0.0;
    for (int r = 0; r <= depth; ++r)
        for (int n = 0; n <= order; ++n)
            m = std::max(m, std::abs(a.coeff(r, n) - b.coeff(r, n)));
    return m;
}

std::string se_to_json(const ScalarExpansion& a) {
    nlohmann::ordered_json j;
    j["weight"] = a.weight();
    j["depth"] = a.depth();
    j["order"] = a.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int r = 0; r <= a.depth(); ++r)
        for (int n = 0; n <= a.order(); ++n) {
            Complex c = a.coeff(r, n);
            if (is_zero(c)) continue;
            coeffs.push_back({r, n, c.real(), c.imag()});
        }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

ScalarExpansion se_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("expansion parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("weight") || !j.contains("depth") ||
        !j.contains("order") || !j.contains("coeffs") ||
        !j["weight"].is_number_integer() || !j["depth"].is_number_integer() ||
        !j["order"].is_number_integer() || !j["coeffs"].is_array())
        throw DomainError("expansion parse: missing or mistyped field");
    int depth = j["depth"].get<int>();
    int order = j["order"].get<int>();
    if (depth < 0 || order < 0)
        throw DomainError("expansion parse: negative depth or order");
    ScalarExpansion out(j["weight"].get<int>(), order);
    std::vector<std::vector<bool>> seen(depth + 1, std::vector<bool>(order + 1, false));
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 4 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
            !entry[2].is_number() || !entry[3].is_number())
            throw DomainError("expansion parse: coefficient entry must be [r,n,re,im]");
        int r = entry[0].get<int>(), n = entry[1].get<int>();
        if (r < 0 || r > depth || n < 0 || n > order)
            throw DomainError("expansion parse: coefficient index out of range");
        if (seen[r][n])
            throw DomainError("expansion parse: duplicate (r,n) pair");
        seen[r][n] = true;
        out.set_coeff(r, n, Complex(entry[2].get<double>(), entry[3].get<double>()));
    }
    return out;
}

} // namespace vvmod
