#ifndef VVMOD_TESTS_SUPPORT_HPP
#define VVMOD_TESTS_SUPPORT_HPP

// Shared helpers for unit and acceptance tests.

#include <functional>

#include "vvmod/common.hpp"
#include "vvmod/qyseries.hpp"

namespace test_support {

using vvmod::Complex;
using vvmod::EvalPoint;
using vvmod::ScalarExpansion;
using vvmod::SplitMix64;

/// Random expansion with small integer coefficients (|c| <= 8). Products of
/// such expansions stay well inside exact double-integer range, so graded
/// algebra identities can be checked with tolerance exactly 0.
inline ScalarExpansion random_int_expansion(SplitMix64& rng, int weight,
                                            int max_depth, int order) {
    ScalarExpansion e(weight, order);
    int depth = rng.uniform_int(0, max_depth);
    for (int r = 0; r <= depth; ++r)
        for (int n = 0; n <= order; ++n) {
            // ~half the cells occupied
            if (rng.uniform() < 0.5) continue;
            e.set_coeff(r, n, Complex(double(rng.uniform_int(-8, 8)),
                                      double(rng.uniform_int(-8, 8))));
        }
    return e;
}

/// Central finite differences of a function of tau at (x, y):
/// returns {d/dtau, d/dtau-bar} via (d_x -+ i d_y)/2.
inline std::pair<Complex, Complex>
fd_tau_derivatives(const std::function<Complex(double, double)>& f, double x,
                   double y, double h = 1e-5) {
    Complex dx = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    Complex dy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    Complex i(0.0, 1.0);
    return {(dx - i * dy) / 2.0, (dx + i * dy) / 2.0};
}

} // namespace test_support

#endif
