#ifndef VVMOD_SYMFRAME_HPP
#define VVMOD_SYMFRAME_HPP

#include <functional>
#include <string>
#include <vector>

#include "vvmod/common.hpp"
#include "vvmod/qyseries.hpp"

namespace vvmod {

/// Real 2x2 matrix with det = 1 (checked to 1e-12 at construction).
struct GroupElement {
    double a, b, c, d;
    GroupElement(double a_, double b_, double c_, double d_);
    static GroupElement identity() { return {1, 0, 0, 1}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement T() { return {1, 1, 0, 1}; }
};

GroupElement ge_mul(const GroupElement& g, const GroupElement& h);

/// (a tau + b) / (c tau + d); requires Im(tau) > 0.
Complex moebius(const GroupElement& g, Complex tau);

/// Random element via the Iwasawa product N(x) A(t) K(theta) with
/// x in [-2,2], t in [1/2,2], theta in [0,2pi).
GroupElement random_sl2(SplitMix64& rng);

/// Polynomial in the formal variable X of degree <= bound (the symmetric
/// power degree m). Coefficients ascending.
class XPolynomial {
public:
    explicit XPolynomial(int bound);
    int bound() const { return int(coef_.size()) - 1; }
    Complex coeff(int i) const;
    void set_coeff(int i, Complex v);
    Complex eval(Complex x) const;
    double max_abs() const;

private:
    std::vector<Complex> coef_;
};

XPolynomial xp_add(const XPolynomial& p, const XPolynomial& q);
XPolynomial xp_scale(const XPolynomial& p, Complex c);
XPolynomial xp_mul(const XPolynomial& p, const XPolynomial& q); // bounds add
double xp_max_abs_diff(const XPolynomial& p, const XPolynomial& q);

/// Degree-m substitution action: p(X) -> (cX+d)^m p((aX+b)/(cX+d)),
/// expanded exactly through binomial coefficients (m = p.bound()).
XPolynomial act_on_x(const GroupElement& g, const XPolynomial& p);

/// Value of (F |_{k,m} g)(tau) for a polynomial-valued function F:
/// (cX+d)^m (c tau + d)^{-k} F(g tau)(gX).
XPolynomial slash_value(const std::function<XPolynomial(Complex)>& F, int k,
                        int m, const GroupElement& g, Complex tau);

/// Frame polynomial e_{j,m-j}(tau) =
///   ((-1)^{m-j} / j!) y^{j-m} (X-tau)^j (X-taubar)^{m-j},
/// invariant of weight m-2j under the degree-m slash. Requires 0<=j<=m.
XPolynomial frame_value(int j, int m, Complex tau);

/// (m+1)x(m+1) matrix whose column j holds the X-coefficients of
/// frame_value(j, m, tau).
std::vector<std::vector<Complex>> frame_matrix(int m, Complex tau);

/// Dense LU solve with partial pivoting; throws DomainError when singular.
std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> mat,
                                  std::vector<Complex> rhs);

/// Coordinates of p in the frame basis at tau.
std::vector<Complex> frame_coordinates(int m, Complex tau, const XPolynomial& p);

/// Vector-valued expansion in the frame basis: component j multiplies
/// e_{j,m-j} and is a ScalarExpansion tagged with weight k-m+2j, where k is
/// the total weight. All components share one q-order.
class VectorForm {
public:
    VectorForm(int m, int weight, std::vector<ScalarExpansion> frame);
    int m() const { return m_; }
    int weight() const { return weight_; }
    int order() const { return frame_[0].order(); }
    const ScalarExpansion& component(int j) const;

private:
    int m_;
    int weight_;
    std::vector<ScalarExpansion> frame_;
};

struct VEvalResult {
    XPolynomial value;
    double tail_bound;
};

/// Sum_j (component j at tau) * e_{j,m-j}(tau).
VEvalResult vf_eval(const VectorForm& f, const EvalPoint& p);

/// Total lowering in the frame basis: component j of the result is
/// lower(f_j) + j (m-j+1) f_{j-1}; total weight drops by 2.
VectorForm vf_lower(const VectorForm& f);

/// Total raising: component j of the result is raise(f_j) + f_{j+1};
/// total weight rises by 2.
VectorForm vf_raise(const VectorForm& f);

/// Largest coefficient magnitude across components.
double vf_max_abs(const VectorForm& f);

/// JSON object {"m","weight","frame":[...]} with components ascending.
std::string vf_to_json(const VectorForm& f);
VectorForm vf_from_json(const std::string& text);

} // namespace vvmod

#endif
