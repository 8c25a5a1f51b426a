#include "vvmod/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "vvmod/eisenstein.hpp"
#include "vvmod/qyseries.hpp"
#include "vvmod/symframe.hpp"

namespace vvmod {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_complex(Complex v) {
    double re = v.real() + 0.0, im = v.imag() + 0.0; // normalize -0
    return fmt_double(re) + (im < 0 ? "" : "+") + fmt_double(im) + "i";
}

double tol_for(const CheckConfig& cfg, const std::string& name, double fallback) {
    auto it = cfg.tolerance_override.find(name);
    return it == cfg.tolerance_override.end() ? fallback : it->second;
}

void finalize(CheckReport& r, const CheckConfig& cfg, double fallback_tol,
              bool structural_ok = true) {
    r.tolerance = tol_for(cfg, r.name, fallback_tol);
    r.passed = structural_ok && r.residual <= r.tolerance;
}

ScalarExpansion random_expansion(SplitMix64& rng, int weight, int max_depth,
                                 int order) {
    ScalarExpansion e(weight, order);
    int depth = rng.uniform_int(0, max_depth);
    for (int r = 0; r <= depth; ++r)
        for (int n = 0; n <= order; ++n) {
            if (rng.uniform() < 0.5) continue;
            e.set_coeff(r, n, Complex(double(rng.uniform_int(-8, 8)),
                                      double(rng.uniform_int(-8, 8))));
        }
    return e;
}

// central differences of a scalar function of tau
std::pair<Complex, Complex> fd_tau(const std::function<Complex(double, double)>& f,
                                   double x, double y, double h = 1e-5) {
    Complex dx = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    Complex dy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    Complex i(0.0, 1.0);
    return {(dx - i * dy) / 2.0, (dx + i * dy) / 2.0};
}

const EvalPoint kModularTaus[5] = {
    {0.0, 1.0}, {0.3, 0.95}, {-0.25, 1.1}, {0.1, 0.9}, {0.45, 0.89}};

const EvalPoint kAgreementTaus[5] = {
    {0.0, 1.0}, {0.3, 0.8}, {-0.4, 1.2}, {0.25, 1.5}, {0.1, 0.7}};

} // namespace

CheckReport check_e2vec_holomorphic(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "e2vec_holomorphic";
    r.anchor = "E2vec_LR_basis";
    r.parameters["order"] = std::to_string(cfg.order);
    VectorForm v = e2vec(cfg.order);
    VectorForm low = vf_lower(v);
    r.residual = vf_max_abs(low);
    bool depth_clean = low.component(0).depth() == 0 && low.component(1).depth() == 0;
    r.notes = "lowering cancels the depth term against the constant component "
              "coefficientwise; both result components are empty";
    finalize(r, cfg, 0.0, depth_clean);
    return r;
}

CheckReport check_e2vec_modular(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "e2vec_modular";
    r.anchor = "vector_valued_E2hol";
    r.parameters["order"] = std::to_string(cfg.order);
    r.parameters["group_elements"] = "S,T";
    r.parameters["sample_points"] = "5";
    VectorForm v = e2vec(cfg.order);
    auto F = [&](Complex t) {
        return vf_eval(v, EvalPoint(t.real(), t.imag())).value;
    };
    double worst = 0.0, tails = 0.0;
    for (const EvalPoint& p : kModularTaus) {
        VEvalResult direct = vf_eval(v, p);
        tails = std::max(tails, direct.tail_bound);
        for (GroupElement g : {GroupElement::S(), GroupElement::T()}) {
            XPolynomial slashed = slash_value(F, v.weight(), v.m(), g, p.tau());
            worst = std::max(worst, xp_max_abs_diff(slashed, direct.value));
        }
    }
    r.residual = worst;
    r.notes = "max q-truncation tail over sample points: " + fmt_double(tails);
    finalize(r, cfg, 1e-6);
    return r;
}

CheckReport check_frame_maass_table(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "frame_maass_table";
    r.anchor = "symd_LR_basis_maass_operators";
    int m_max = 4;
    r.parameters["m_max"] = std::to_string(m_max);
    r.parameters["sample_points"] = "3";
    const EvalPoint taus[3] = {{0.13, 0.91}, {-0.4, 1.2}, {0.0, 1.0}};
    double worst = 0.0;
    for (int m = 0; m <= m_max; ++m)
        for (int j = 0; j <= m; ++j)
            for (const EvalPoint& p : taus)
                for (int i = 0; i <= m; ++i) {
                    auto fi = [&](double xx, double yy) {
                        return frame_value(j, m, Complex(xx, yy)).coeff(i);
                    };
                    auto [dtau, dtaubar] = fd_tau(fi, p.x, p.y);
                    Complex ii(0.0, 1.0);
                    Complex lower_fd = -2.0 * ii * p.y * p.y * dtaubar;
                    Complex lower_tab = (j < m)
                        ? double((j + 1) * (m - j)) *
                              frame_value(j + 1, m, p.tau()).coeff(i)
                        : Complex(0.0);
                    worst = std::max(worst, std::abs(lower_fd - lower_tab));
                    Complex raise_fd = 2.0 * ii * dtau +
                                       double(m - 2 * j) / p.y * fi(p.x, p.y);
                    Complex raise_tab =
                        (j > 0) ? frame_value(j - 1, m, p.tau()).coeff(i)
                                : Complex(0.0);
                    worst = std::max(worst, std::abs(raise_fd - raise_tab));
                }
    r.residual = worst;
    r.notes = "lowering maps line j to (j+1)(m-j) times line j+1; raising "
              "shifts one line down with coefficient 1; both ends annihilate";
    finalize(r, cfg, 1e-6);
    return r;
}

CheckReport check_decomposition_roundtrip(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "decomposition_roundtrip";
    r.anchor = "vector_valued_almost_holomorphic_decomposition";
    int k = 3;
    r.parameters["m_max"] = "4";
    r.parameters["seed"] = std::to_string(cfg.seed);
    r.parameters["trials"] = "4 per degree";
    SplitMix64 rng(cfg.seed);
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<ScalarExpansion> comps;
            for (int j = 0; j <= m; ++j)
                comps.push_back(random_expansion(rng, k - m + 2 * j, 2, 10));
            VectorForm vf(m, k, comps);
            EvalPoint p(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.4));
            XPolynomial val = vf_eval(vf, p).value;
            std::vector<Complex> coords = frame_coordinates(m, p.tau(), val);
            for (int j = 0; j <= m; ++j)
                worst = std::max(worst,
                                 std::abs(coords[j] - se_eval(comps[j], p).value));
        }
    r.residual = worst;
    r.notes = "frame matrix solve recovers the component values at tau";
    finalize(r, cfg, 1e-9);
    return r;
}

CheckReport check_lr_e2_relation(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "lr_e2_relation";
    r.anchor = "E2_lowering_raising_relation";
    r.parameters["order"] = std::to_string(cfg.order);
    ScalarExpansion e2 = e2_expansion(cfg.order);
    ScalarExpansion lr = lower(raise(e2));
    Complex c = lr.coeff(0, 0); // e2 has constant term exactly 1
    r.parameters["c"] = fmt_complex(c);
    double prop = se_max_abs_diff(lr, se_scale(e2, c));
    double harm = laplace(e2).max_abs();
    r.residual = std::max(prop, harm);
    bool magnitude_exact = std::abs(c) == 2.0;
    r.notes = std::string("measured c = ") + fmt_complex(c) +
              "; |c| = 2 holds exactly; laplacian of e2 vanishes "
              "coefficientwise (residual includes it)";
    finalize(r, cfg, 0.0, magnitude_exact);
    return r;
}

CheckReport check_bk_case_IIIb_form(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "bk_case_IIIb_form";
    r.anchor = "E2_indecomposable_analogue";
    r.parameters["order"] = std::to_string(cfg.order);
    ScalarExpansion e2 = e2_expansion(cfg.order);
    ScalarExpansion half_raise = se_scale(raise(e2), 0.5);
    // weight-consistent pair under total weight 3: (e2, raise(e2)/2)
    VectorForm f(1, 3, {e2, half_raise});
    r.parameters["component_weights"] = "2,4";

    VectorForm g1 = vf_lower(f);
    // expected: the raised line cancels exactly, the other collapses to a
    // constant equal to -(depth constant) = 3/pi
    double line1 = g1.component(1).max_abs();
    double structure = 0.0;
    for (int rr = 0; rr <= g1.component(0).depth(); ++rr)
        for (int n = 0; n <= g1.component(0).order(); ++n)
            if (rr != 0 || n != 0)
                structure = std::max(structure, std::abs(g1.component(0).coeff(rr, n)));
    Complex constant = g1.component(0).coeff(0, 0);
    double const_dev = std::abs(constant - Complex(-e2_depth_constant()));
    r.parameters["constant"] = fmt_complex(constant);

    // lowering chain exhausts after 3 steps (bound: max depth + m + 1 = 4)
    VectorForm g2 = vf_lower(g1);
    VectorForm g3 = vf_lower(g2);
    int chain = vf_max_abs(g3) == 0.0 ? 3 : 4;
    r.parameters["lowerings_to_zero"] = std::to_string(chain);
    bool chain_ok = vf_max_abs(g2) > 0.0 && vf_max_abs(g3) == 0.0;

    // the transposed component assignment is weight-inhomogeneous and is
    // rejected by the constructor
    bool transposed_rejected = false;
    try {
        VectorForm bad(1, 1, {half_raise, e2});
        (void)bad;
    } catch (const DomainError&) {
        transposed_rejected = true;
    }

    r.residual = std::max({line1, structure, const_dev, vf_max_abs(g3)});
    r.notes = "lowering lands on a single frame line with constant "
              "coefficient 3/pi (exact); chain needs 3 steps, within the "
              "depth+m+1 bound of 4; the transposed component pairing is "
              "weight-inhomogeneous and rejected";
    finalize(r, cfg, 0.0, chain_ok && transposed_rejected);
    return r;
}

CheckReport check_e2vec_two_constructions(const CheckConfig& cfg) {
    CheckReport r;
    r.name = "e2vec_two_constructions";
    r.anchor = "Evec2_eisenstein_expression";
    r.parameters["order"] = std::to_string(cfg.order);
    r.parameters["sample_points"] = "5";
    VectorForm v = e2vec(cfg.order);
    double worst = 0.0, res_dev = 0.0;
    for (const EvalPoint& p : kAgreementTaus) {
        VSumResult analytic = e2vec_via_eisenstein(p, cfg.order);
        VEvalResult direct = vf_eval(v, p);
        worst = std::max(worst, xp_max_abs_diff(analytic.value, direct.value));
        XPolynomial res = e2vec_residue_term(p, cfg.order);
        XPolynomial res_closed =
            xp_scale(frame_value(0, 1, p.tau()), -3.0 / kPi);
        res_dev = std::max(res_dev, xp_max_abs_diff(res, res_closed));
    }
    r.residual = worst;
    r.notes = "series-at-s=0 plus 2i times the s=1 residue reproduces the "
              "q-expansion; residue term deviates from -(3/pi) e_{0,1} by " +
              fmt_double(res_dev);
    finalize(r, cfg, 1e-5);
    return r;
}

const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"e2vec_holomorphic", check_e2vec_holomorphic},
        {"e2vec_modular", check_e2vec_modular},
        {"frame_maass_table", check_frame_maass_table},
        {"decomposition_roundtrip", check_decomposition_roundtrip},
        {"lr_e2_relation", check_lr_e2_relation},
        {"bk_case_IIIb_form", check_bk_case_IIIb_form},
        {"e2vec_two_constructions", check_e2vec_two_constructions},
    };
    return reg;
}

const std::vector<std::string>& known_anchors() {
    static const std::vector<std::string> anchors = {
        "def_maass_operators",
        "symd_LR_basis",
        "symd_LR_basis_maass_operators",
        "symd_LR_basis_SL2R_invariance",
        "vector_valued_E2hol",
        "E2vec_LR_basis",
        "classical_eisenstein_fourier_expansion",
        "vector_valued_real_analytic_eisenstein_series",
        "vector_valued_almost_holomorphic_decomposition",
        "vector_valued_eisenstein_series_product",
        "Evec2_eisenstein_expression",
        "E2_lowering_raising_relation",
        "E2_indecomposable_analogue",
    };
    return anchors;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    const char* p = pattern.c_str();
    const char* t = text.c_str();
    std::function<bool(const char*, const char*)> rec =
        [&](const char* pp, const char* tt) -> bool {
        if (*pp == '\0') return *tt == '\0';
        if (*pp == '*') return rec(pp + 1, tt) || (*tt != '\0' && rec(pp, tt + 1));
        return *pp == *tt && rec(pp + 1, tt + 1);
    };
    return rec(p, t);
}

std::vector<CheckReport> run_all(const CheckConfig& cfg,
                                 const std::string& name_glob) {
    std::vector<CheckReport> out;
    for (const auto& [name, fn] : check_registry())
        if (glob_match(name_glob, name)) out.push_back(fn(cfg));
    return out;
}

std::string report_to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j.dump();
}

} // namespace vvmod
