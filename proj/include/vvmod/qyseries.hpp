#ifndef VVMOD_QYSERIES_HPP
#define VVMOD_QYSERIES_HPP

#include <string>
#include <vector>

#include "vvmod/common.hpp"

namespace vvmod {

/// Point tau = x + iy in the upper half-plane.
struct EvalPoint {
    double x, y;
    EvalPoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw DomainError("EvalPoint: requires y > 0");
    }
    Complex tau() const { return {x, y}; }
};

/// Truncated expansion  sum_{r=0}^{depth} sum_{n=0}^{order} c(r,n) y^{-r} q^n
/// with q = e^{2 pi i tau}, tagged with the modular weight it transforms in.
/// The weight tag is bookkeeping for the operator calculus (raising needs k),
/// not a property the numbers could reveal; mismatched tags are an error.
///
/// depth() is minimal: a row counts only if some stored coefficient in it is
/// nonzero, so the zero expansion has depth 0 and exact cancellations shrink
/// the reported depth with tolerance exactly 0.
class ScalarExpansion {
public:
    /// Zero expansion of the given weight, coefficients up to q^order.
    ScalarExpansion(int weight, int order);

    static ScalarExpansion constant(Complex value, int weight, int order);

    int weight() const { return weight_; }
    int order() const { return order_; }
    /// Largest r with a nonzero stored coefficient (0 if none).
    int depth() const;

    /// c(r, n); zero outside the stored range.
    Complex coeff(int r, int n) const;
    /// Requires 0 <= n <= order and r >= 0; rows grow on demand.
    void set_coeff(int r, int n, Complex value);

    /// Largest |c(r,n)| over the stored range.
    double max_abs() const;

    /// Drop trailing all-zero rows from storage (depth() already ignores
    /// them; this canonicalizes storage so identical values compare equal).
    void trim();

private:
    int weight_;
    int order_;
    std::vector<std::vector<Complex>> rows_; // rows_[r][n]
};

struct EvalResult {
    Complex value;
    double tail_bound; // heuristic: last retained coefficients + geometric |q| decay
};

/// Sum; requires equal weight tags. Orders truncate to the smaller one.
ScalarExpansion se_add(const ScalarExpansion& a, const ScalarExpansion& b);

/// Scalar multiple (weight unchanged).
ScalarExpansion se_scale(const ScalarExpansion& a, Complex c);

/// Product; weights add, orders truncate to the smaller one.
ScalarExpansion se_mul(const ScalarExpansion& a, const ScalarExpansion& b);

/// Evaluate at tau; deterministic summation order (Horner in q per row,
/// rows ascending).
EvalResult se_eval(const ScalarExpansion& a, const EvalPoint& p);

/// Lowering: y^{-r} q^n -> -r y^{-(r-1)} q^n; weight k -> k-2.
ScalarExpansion lower(const ScalarExpansion& a);

/// Raising at the tagged weight k: y^{-r} q^n -> -4 pi n y^{-r} q^n
/// + (k-r) y^{-(r+1)} q^n; weight k -> k+2. Implemented exactly as
/// (-4 pi) * q_scale(a) + y_shift(a).
ScalarExpansion raise(const ScalarExpansion& a);

/// The two graded generator parts of raising. Each is an exact integer rule
/// (and a graded derivation), so Leibniz holds bitwise on integer inputs;
/// both carry the raised weight tag k+2 so raise() is their combination.
ScalarExpansion q_scale(const ScalarExpansion& a); // c(r,n) -> n c(r,n)
ScalarExpansion y_shift(const ScalarExpansion& a); // c(r,n) -> (k-r) c(r,n) at row r+1

/// Laplacian at the tagged weight: -raise(lower(a)); weight unchanged.
ScalarExpansion laplace(const ScalarExpansion& a);

/// Exact comparison: same weight tag and identical coefficient values.
bool se_equal_exact(const ScalarExpansion& a, const ScalarExpansion& b);

/// max |a - b| over coefficients (weight tags ignored).
double se_max_abs_diff(const ScalarExpansion& a, const ScalarExpansion& b);

/// JSON object {"weight","depth","order","coeffs":[[r,n,re,im],...]} with
/// nonzero coefficients in lexicographic (r,n) order.
std::string se_to_json(const ScalarExpansion& a);

/// Parse and validate (rejects out-of-range indices, duplicate (r,n),
/// malformed shapes). Accepts exactly the se_to_json layout.
ScalarExpansion se_from_json(const std::string& text);

} // namespace vvmod

#endif
