#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "vvmod/eisenstein.hpp"
#include "vvmod/specfun.hpp"

using namespace vvmod;

TEST_SUITE("eisenstein") {

TEST_CASE("coset enumeration: radius 1 reference order") {
    std::vector<CosetRep> reps = enumerate_cosets(1);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].c == 0);
    CHECK(reps[0].d == 1);
    CHECK(reps[1].c == 1);
    CHECK(reps[1].d == 0);
    CHECK(reps[2].c == 1);
    CHECK(reps[2].d == 1);
    CHECK(reps[3].c == 1);
    CHECK(reps[3].d == -1);
    // the (1,0) pair completes to [[0,-1],[1,0]]
    CHECK(reps[1].a == 0);
    CHECK(reps[1].b == -1);
    CHECK_THROWS_AS(enumerate_cosets(0), DomainError);
}

TEST_CASE("coset enumeration against a naive lattice scan") {
    const long long R = 30;
    std::vector<CosetRep> reps = enumerate_cosets(R);
    // independent scan: all coprime pairs, one per +-, c >= 0 normalization
    std::set<std::pair<long long, long long>> want;
    for (long long c = -R; c <= R; ++c)
        for (long long d = -R; d <= R; ++d) {
            if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
            bool keep = c > 0 || (c == 0 && d > 0);
            if (keep) want.insert({c, d});
        }
    std::set<std::pair<long long, long long>> got;
    for (const CosetRep& r : reps) got.insert({r.c, r.d});
    CHECK(got == want);
    CHECK(reps.size() == want.size());

    // sorted by (c^2+d^2, c, -d); completions are unimodular with minimal |b|
    for (size_t i = 0; i < reps.size(); ++i) {
        const CosetRep& r = reps[i];
        CHECK(r.a * r.d - r.b * r.c == 1);
        if (r.d != 0) {
            for (long long t = -4; t <= 4; ++t) {
                if (t == 0) continue;
                long long b2 = r.b + t * r.d;
                CHECK(std::abs(b2) >= std::abs(r.b));
                if (std::abs(b2) == std::abs(r.b)) CHECK(r.b >= 0);
            }
        }
        if (i == 0) continue;
        const CosetRep& p = reps[i - 1];
        auto key = [](const CosetRep& x) {
            return std::tuple<long long, long long, long long>(
                x.c * x.c + x.d * x.d, x.c, -x.d);
        };
        CHECK(key(p) < key(r));
    }
}

TEST_CASE("scalar series: guards and parity collapse") {
    EvalPoint i(0.0, 1.0);
    CHECK_THROWS_AS(eis_sum(0, 1.0, i, 50), DomainError);
    CHECK_THROWS_AS(eis_sum(2, 0.0, i, 50), DomainError);
    SumResult odd = eis_sum(5, 0.0, i, 50);
    CHECK(odd.value == Complex(0.0));
    CHECK(odd.tail_bound == 0.0);
}

TEST_CASE("expansion coefficients: weight 4 and 6 at s = 0 are the classics") {
    EvalPoint p(0.21, 0.9);
    // independent q-expansions with exact divisor sums
    ScalarExpansion e4(4, 30), e6(6, 30);
    e4.set_coeff(0, 0, 1.0);
    e6.set_coeff(0, 0, 1.0);
    for (int n = 1; n <= 30; ++n) {
        e4.set_coeff(0, n, 240.0 * sigma_divisor(n, 3.0).real());
        e6.set_coeff(0, n, -504.0 * sigma_divisor(n, 5.0).real());
    }
    SumResult f4 = eis_fourier(4, 0.0, p, 30);
    SumResult f6 = eis_fourier(6, 0.0, p, 30);
    CHECK(std::abs(f4.value - se_eval(e4, p).value) < 1e-10);
    CHECK(std::abs(f6.value - se_eval(e6, p).value) < 1e-10);
    // C(4,0) and C(6,0) vanish (gamma zero, no zeta pole)
    CHECK(std::abs(eis_constant_profile(4, 0.0)) < 1e-12);
    CHECK(std::abs(eis_constant_profile(6, 0.0)) < 1e-12);
}

TEST_CASE("removable point: weight 2 profile equals -3/pi") {
    CHECK(std::abs(eis_constant_profile(2, 0.0) - Complex(-3.0 / kPi)) < 1e-10);
    // continuity: epsilon-filled value sits on the analytic branch
    Complex nearby = eis_constant_profile(2, 1e-6);
    CHECK(std::abs(nearby - eis_constant_profile(2, 0.0)) < 1e-4);
    EvalPoint p(0.13, 1.1);
    SumResult f2 = eis_fourier(2, 0.0, p, 40);
    CHECK(std::abs(f2.value - se_eval(e2_expansion(40), p).value) < 1e-10);
}

TEST_CASE("cross-evaluator agreement for the scalar series") {
    EvalPoint i(0.0, 1.0);
    SumResult a = eis_sum(4, 0.0, i, 400);
    SumResult b = eis_fourier(4, 0.0, i, 40);
    CHECK(std::abs(a.value - b.value) < 1e-6);
    CHECK(std::abs(a.value - b.value) < a.tail_bound + b.tail_bound + 1e-9);

    EvalPoint p(0.3, 0.8);
    SumResult c = eis_sum(0, 2.3, p, 300);
    SumResult d = eis_fourier(0, 2.3, p, 40);
    CHECK(std::abs(c.value - d.value) < 2e-5);
    CHECK(std::abs(c.value - d.value) < c.tail_bound + d.tail_bound + 1e-9);
}

TEST_CASE("e2 family wiring") {
    ScalarExpansion hol = e2hol_expansion(8);
    CHECK(hol.coeff(0, 0) == Complex(1.0));
    CHECK(hol.coeff(0, 1) == Complex(-24.0));
    CHECK(hol.coeff(0, 6) == Complex(-24.0 * 12.0));
    CHECK(hol.depth() == 0);
    ScalarExpansion full = e2_expansion(8);
    CHECK(full.depth() == 1);
    CHECK(full.coeff(1, 0) == Complex(e2_depth_constant()));
    VectorForm v = e2vec(8);
    CHECK(v.m() == 1);
    CHECK(v.weight() == 1);
    CHECK(se_equal_exact(v.component(1), full));
    // the lowering cancels exactly, coefficient by coefficient
    CHECK(vf_max_abs(vf_lower(v)) == 0.0);
}

TEST_CASE("vector series guards") {
    EvalPoint p(0.0, 1.0);
    CHECK_THROWS_AS(vv_eis_sum({2, 1, 0, 3.0}, p, 20), DomainError); // parity
    CHECK_THROWS_AS(vv_eis_sum({4, 2, 3, 3.0}, p, 20), DomainError); // j range
    CHECK_THROWS_AS(vv_eis_sum({3, 1, 1, 0.0}, p, 20), DomainError); // divergent
    CHECK_THROWS_AS(vv_eis_product({1, 3, 0, 5.0}, p, 5), DomainError); // negative scalar weight
}

TEST_CASE("vector series reduces to the scalar one at m = 0") {
    EvalPoint p(0.4, 1.2);
    VSumResult v = vv_eis_sum({4, 0, 0, Complex(0.5, 0.2)}, p, 60);
    SumResult s = eis_sum(4, Complex(0.5, 0.2), p, 60);
    CHECK(std::abs(v.value.coeff(0) - s.value) < 1e-14);
}

TEST_CASE("termwise frame invariance: slashed frame series factorizes") {
    EvalPoint p(0.27, 1.05);
    for (EisensteinSpec spec : {EisensteinSpec{5, 1, 1, 0.0},
                                EisensteinSpec{4, 2, 1, 0.5},
                                EisensteinSpec{3, 3, 3, Complex(0.25, 0.1)}}) {
        long long R = 40;
        VSumResult lhs = eahol_sum(spec, p, R);
        int kj = spec.k - spec.m + 2 * spec.j;
        SumResult scalar = eis_sum(kj, spec.s, p, R);
        XPolynomial want = xp_scale(frame_value(spec.j, spec.m, p.tau()), scalar.value);
        CHECK(xp_max_abs_diff(lhs.value, want) < 1e-10 * (1.0 + want.max_abs()));
    }
}

TEST_CASE("frame combination matches the coset sum (both frame indices)") {
    EvalPoint p(0.3, 0.8);
    for (int j : {0, 1}) {
        EisensteinSpec spec{5, 1, j, 0.0};
        VSumResult sum = vv_eis_sum(spec, p, 150);
        VSumResult prod = vv_eis_product(spec, p, 40);
        for (int i = 0; i <= 1; ++i) {
            double scale = 1.0 + std::abs(prod.value.coeff(i));
            CHECK(std::abs(sum.value.coeff(i) - prod.value.coeff(i)) < 3e-4 * scale);
        }
    }
}

TEST_CASE("residue extraction") {
    // analytic: residue 0, no spurious instability error
    Complex r0 = residue_at([](Complex s) { return s * s; }, 1.0);
    CHECK(std::abs(r0) < 1e-12);
    // simple pole with regular part
    Complex r1 = residue_at(
        [](Complex s) { return 3.0 / (s - 1.0) + std::cos(s); }, 1.0);
    CHECK(std::abs(r1 - 3.0) < 1e-6);
    // pole just off-center but on the contour band: flagged as unstable
    Complex bad = Complex(1.0) + 0.05 * std::exp(Complex(0.0, kPi / 7.0));
    CHECK_THROWS_AS(
        residue_at([bad](Complex s) { return 1.0 / (s - bad); }, 1.0),
        DomainError);
}

TEST_CASE("weight-0 series has residue 3/pi at s = 1, independent of tau") {
    for (EvalPoint p : {EvalPoint(0.0, 1.0), EvalPoint(0.3, 0.8)}) {
        Complex r = residue_at(
            [&](Complex s) { return eis_fourier(0, s, p, 30).value; }, 1.0);
        CHECK(std::abs(r - 3.0 / kPi) < 1e-5);
    }
}

TEST_CASE("residue term of the degree-1 series is -(3/pi) e_{0,1}") {
    EvalPoint p(0.3, 0.8);
    XPolynomial res = e2vec_residue_term(p, 30);
    XPolynomial want = xp_scale(frame_value(0, 1, p.tau()), -3.0 / kPi);
    CHECK(xp_max_abs_diff(res, want) < 1e-5);
}

TEST_CASE("the two constructions of e2vec agree") {
    for (EvalPoint p : {EvalPoint(0.0, 1.0), EvalPoint(0.3, 0.8)}) {
        VSumResult analytic = e2vec_via_eisenstein(p, 40);
        VEvalResult direct = vf_eval(e2vec(40), p);
        CHECK(xp_max_abs_diff(analytic.value, direct.value) < 1e-5);
    }
}

} // TEST_SUITE
