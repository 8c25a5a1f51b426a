#ifndef VVMOD_EISENSTEIN_HPP
#define VVMOD_EISENSTEIN_HPP

#include <functional>
#include <vector>

#include "vvmod/common.hpp"
#include "vvmod/qyseries.hpp"
#include "vvmod/symframe.hpp"

namespace vvmod {

/// Parameters of a vector-valued real-analytic series: total weight k,
/// symmetric degree m, frame index j (0 <= j <= m), spectral parameter s.
/// Scalar series are the m = j = 0 case.
struct EisensteinSpec {
    int k = 0;
    int m = 0;
    int j = 0;
    Complex s = 0.0;
};

/// One normalized coprime pair (c,d) -- c > 0, or c = 0 and d = 1 -- plus a
/// completion to an integer matrix [[a,b],[c,d]] of determinant 1 with |b|
/// minimal (ties toward b >= 0; the (1,0) pair completes to [[0,-1],[1,0]]).
struct CosetRep {
    long long c, d;
    long long a, b;
};

/// All representatives with max(|c|,|d|) <= radius, sorted by
/// (c^2 + d^2, c, -d) ascending.
std::vector<CosetRep> enumerate_cosets(long long radius);

struct SumResult {
    Complex value;
    double tail_bound;
};

/// Scalar series sum over normalized pairs of
/// y^s |c tau + d|^{-2s} (c tau + d)^{-k}, compensated summation in the
/// canonical enumeration order. Returns exact 0 for odd k (the pair
/// identification cancels the sum termwise). Throws DomainError unless
/// 2 Re(s) + k > 2.
SumResult eis_sum(int k, Complex s, const EvalPoint& tau, long long radius);

/// The same function through its expansion
///   y^s + C(k,s) y^{1-k-s} + sum_{n != 0} (Whittaker term) e(nx),
/// truncated at |n| <= nterms. Requires even k >= 0. At parameter points
/// where the zeta factor's pole is cancelled by a gamma zero the profile is
/// filled in by a symmetric epsilon shift with Richardson extrapolation.
SumResult eis_fourier(int k, Complex s, const EvalPoint& tau, int nterms);

/// Coefficient C(k,s) of y^{1-k-s} in eis_fourier (exposed for residue and
/// continuation work); same removable-point handling.
Complex eis_constant_profile(int k, Complex s);

/// Holomorphic weight-2 expansion 1 - 24 sum_{n>=1} sigma_1(n) q^n.
ScalarExpansion e2hol_expansion(int order);

/// e2hol plus the depth correction (-3/pi) y^{-1}; weight 2.
ScalarExpansion e2_expansion(int order);

/// The depth constant -3/pi. Single definition site so that the exact
/// cancellations in the vector-form identities are bitwise.
double e2_depth_constant();

/// Degree-1, weight-1 vector form: component 1 is e2_expansion, component 0
/// the constant -3/pi.
VectorForm e2vec(int order);

struct VSumResult {
    XPolynomial value;
    double tail_bound;
};

/// Vector-valued series: sum over cosets of the slash translates of
/// (X - tau)^j (Im tau)^s, in closed per-coset form. Throws DomainError
/// unless k == m (mod 2), 0 <= j <= m, and 2 Re(s) + k - m > 2.
VSumResult vv_eis_sum(const EisensteinSpec& spec, const EvalPoint& tau,
                      long long radius);

/// Partial sum of the slash translates of e_{j,m-j} (Im tau)^s, routed
/// through the generic substitution action (an independent code path used
/// to check the termwise frame-invariance identity).
VSumResult eahol_sum(const EisensteinSpec& spec, const EvalPoint& tau,
                     long long radius);

/// Finite frame combination
///   (i/2)^{m-j} sum_{r=j}^{m} binom(m-j, r-j) r! e_{r,m-r}(tau)
///     E_{k-m+2r}(tau, s-r+j)
/// with the scalar factors through eis_fourier (valid at continued s).
VSumResult vv_eis_product(const EisensteinSpec& spec, const EvalPoint& tau,
                          int nterms);

/// The scalar multiplier of frame_value(r, m, tau) in vv_eis_product for
/// r = 0..m (zero for r < j).
std::vector<Complex> vv_eis_product_components(const EisensteinSpec& spec,
                                               const EvalPoint& tau,
                                               int nterms);

/// Discrete contour integral (1/2 pi i) oint f around s0: 8 equally spaced
/// points on |s - s0| = 0.05. Throws DomainError when doubling to 16 points
/// moves the result by more than 1e-3 relative to the result's scale, or
/// when an evaluation is not finite.
Complex residue_at(const std::function<Complex(Complex)>& f, Complex s0);

/// 2i * Res_{s=1} of the (k,m,j) = (1,1,0) series, as a polynomial
/// (computed on a shared 16-point contour through vv_eis_product).
XPolynomial e2vec_residue_term(const EvalPoint& tau, int nterms);

/// E2vec rebuilt analytically: the (1,1,1) series at s = 0 plus
/// e2vec_residue_term.
VSumResult e2vec_via_eisenstein(const EvalPoint& tau, int nterms);

} // namespace vvmod

#endif
