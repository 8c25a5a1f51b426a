#include "vvmod/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vvmod/eisenstein.hpp"
#include "vvmod/identities.hpp"
#include "vvmod/qyseries.hpp"
#include "vvmod/symframe.hpp"

namespace vvmod {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_g(double v, const char* spec = "%.12g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// "a,b" -> two doubles, rejecting trailing junk
std::pair<double, double> parse_pair(const std::string& text, const std::string& name) {
    double a = 0.0, b = 0.0;
    int consumed = 0;
    int got = std::sscanf(text.c_str(), " %lf , %lf %n", &a, &b, &consumed);
    if (got != 2 || text[static_cast<std::size_t>(consumed)] != '\0')
        throw CLI::ValidationError(name, "expected two comma-separated numbers, got '" + text + "'");
    return {a, b};
}

ordered_json value_array(const std::vector<Complex>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (Complex c : coeffs) arr.push_back({c.real(), c.imag()});
    return arr;
}

void run_qexp(std::ostream& out, const std::string& form, int order, int fj, int fm) {
    ordered_json doc;
    doc["schema"] = "vvmod/1";
    doc["command"] = "qexp";
    doc["form"] = form;
    doc["order"] = order;
    if (form == "e2hol") {
        doc["data"] = ordered_json::parse(se_to_json(e2hol_expansion(order)));
    } else if (form == "e2") {
        doc["data"] = ordered_json::parse(se_to_json(e2_expansion(order)));
    } else if (form == "e2vec") {
        doc["data"] = ordered_json::parse(vf_to_json(e2vec(order)));
    } else { // frame: the pure frame line, constant 1 at component j
        if (fj < 0 || fm < 0 || fj > fm)
            throw CLI::ValidationError("frame", "needs 0 <= j <= m (--j, --m)");
        doc["j"] = fj;
        doc["m"] = fm;
        std::vector<ScalarExpansion> comps;
        for (int i = 0; i <= fm; ++i)
            comps.push_back(ScalarExpansion::constant(i == fj ? 1.0 : 0.0,
                                                      2 * (i - fj), order));
        doc["data"] = ordered_json::parse(
            vf_to_json(VectorForm(fm, fm - 2 * fj, comps)));
    }
    out << doc.dump() << "\n";
}

void run_eval(std::ostream& out, int k, int m, int j, const std::string& s_text,
              const std::string& tau_text, const std::string& evaluator,
              long long radius, int terms) {
    auto [sre, sim] = parse_pair(s_text, "--s");
    auto [tx, ty] = parse_pair(tau_text, "--tau");
    Complex s(sre, sim);
    EvalPoint tau(tx, ty);

    std::vector<Complex> coeffs;
    double tail = 0.0;
    bool lattice = evaluator == "sum" || evaluator == "orbit";
    if (evaluator == "sum" && m == 0) {
        if (j != 0) throw DomainError("j must be 0 for the scalar series (m = 0)");
        SumResult r = eis_sum(k, s, tau, radius);
        coeffs = {r.value};
        tail = r.tail_bound;
    } else if (evaluator == "sum") {
        VSumResult r = vv_eis_sum({k, m, j, s}, tau, radius);
        for (int i = 0; i <= m; ++i) coeffs.push_back(r.value.coeff(i));
        tail = r.tail_bound;
    } else if (evaluator == "fourier") {
        if (m != 0) throw DomainError("the fourier evaluator applies to the scalar series (m = 0)");
        if (j != 0) throw DomainError("j must be 0 for the scalar series (m = 0)");
        SumResult r = eis_fourier(k, s, tau, terms);
        coeffs = {r.value};
        tail = r.tail_bound;
    } else if (evaluator == "product") {
        VSumResult r = vv_eis_product({k, m, j, s}, tau, terms);
        for (int i = 0; i <= m; ++i) coeffs.push_back(r.value.coeff(i));
        tail = r.tail_bound;
    } else { // orbit
        VSumResult r = eahol_sum({k, m, j, s}, tau, radius);
        for (int i = 0; i <= m; ++i) coeffs.push_back(r.value.coeff(i));
        tail = r.tail_bound;
    }

    ordered_json doc;
    doc["schema"] = "vvmod/1";
    doc["command"] = "eval";
    doc["k"] = k;
    doc["m"] = m;
    doc["j"] = j;
    doc["s"] = {sre, sim};
    doc["tau"] = {tx, ty};
    doc["evaluator"] = evaluator;
    if (lattice)
        doc["radius"] = radius;
    else
        doc["terms"] = terms;
    doc["value"] = value_array(coeffs);
    doc["tail_bound"] = tail;
    out << doc.dump() << "\n";
}

int run_verify(std::ostream& out, const std::string& glob, int order,
               long long radius, std::uint64_t seed,
               const std::vector<std::string>& tol_specs,
               const std::string& format) {
    CheckConfig cfg;
    cfg.order = order;
    cfg.radius = radius;
    cfg.seed = seed;
    for (const std::string& spec : tol_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--tol", "expected NAME=VALUE, got '" + spec + "'");
        std::string name = spec.substr(0, eq);
        char* end = nullptr;
        double v = std::strtod(spec.c_str() + eq + 1, &end);
        if (end == spec.c_str() + eq + 1 || *end != '\0')
            throw CLI::ValidationError("--tol", "bad numeric value in '" + spec + "'");
        cfg.tolerance_override[name] = v;
    }

    std::vector<CheckReport> reports = run_all(cfg, glob);
    if (reports.empty())
        throw CLI::ValidationError("verify", "no checks match '" + glob + "'");
    int passed = 0;
    for (const CheckReport& r : reports) passed += r.passed ? 1 : 0;
    bool all = passed == static_cast<int>(reports.size());

    if (format == "json") {
        ordered_json doc;
        doc["schema"] = "vvmod/1";
        doc["command"] = "verify";
        ordered_json cj;
        cj["glob"] = glob;
        cj["order"] = order;
        cj["radius"] = radius;
        cj["seed"] = seed;
        ordered_json tj = ordered_json::object();
        for (const auto& [name, v] : cfg.tolerance_override) tj[name] = v;
        cj["tolerance_override"] = std::move(tj);
        doc["config"] = std::move(cj);
        ordered_json arr = ordered_json::array();
        for (const CheckReport& r : reports)
            arr.push_back(ordered_json::parse(report_to_json(r)));
        doc["reports"] = std::move(arr);
        doc["all_passed"] = all;
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "name,anchor,residual,tolerance,passed\n";
        for (const CheckReport& r : reports)
            out << r.name << "," << r.anchor << "," << fmt_g(r.residual) << ","
                << fmt_g(r.tolerance) << "," << (r.passed ? "true" : "false") << "\n";
    } else { // table
        char line[160];
        std::snprintf(line, sizeof line, "%-26s %-6s %13s %13s\n", "check",
                      "status", "residual", "tolerance");
        out << line;
        for (const CheckReport& r : reports) {
            std::snprintf(line, sizeof line, "%-26s %-6s %13s %13s\n",
                          r.name.c_str(), r.passed ? "pass" : "FAIL",
                          fmt_g(r.residual, "%.6g").c_str(),
                          fmt_g(r.tolerance, "%.6g").c_str());
            out << line;
        }
        out << passed << "/" << reports.size() << " checks passed\n";
    }
    return all ? 0 : 1;
}

void run_checks(std::ostream& out) {
    ordered_json doc;
    doc["schema"] = "vvmod/1";
    doc["command"] = "checks";
    ordered_json arr = ordered_json::array();
    for (const auto& [name, fn] : check_registry()) arr.push_back(name);
    doc["checks"] = std::move(arr);
    out << doc.dump() << "\n";
}

} // namespace

CliResult cli_main(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult res;

    CLI::App app{"almost-holomorphic modular forms: expansions, Eisenstein "
                 "evaluators, and mechanized identity checks"};
    app.name("vvmod");
    app.require_subcommand(1);
    // every error path is a single machine-parsable line
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    // qexp
    std::string form;
    int qexp_order = 60, frame_j = 0, frame_m = 0;
    CLI::App* qexp = app.add_subcommand("qexp", "print a built-in expansion as JSON");
    qexp->add_option("form", form, "one of e2hol, e2, e2vec, frame")
        ->required()
        ->check(CLI::IsMember({"e2hol", "e2", "e2vec", "frame"}));
    qexp->add_option("--order", qexp_order, "q-truncation order")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    qexp->add_option("--j", frame_j, "frame index (form=frame)")
        ->capture_default_str();
    qexp->add_option("--m", frame_m, "symmetric-power degree (form=frame)")
        ->capture_default_str();

    // eval
    int k = 4, m = 0, j = 0, terms = 60;
    long long radius = 400;
    std::string s_text = "0,0", tau_text, evaluator = "sum";
    CLI::App* eval = app.add_subcommand("eval", "evaluate an Eisenstein series at a point");
    eval->add_option("--k", k, "weight parameter")->required();
    eval->add_option("--m", m, "symmetric-power degree (0 = scalar)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--j", j, "frame index of the seed term")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--s", s_text, "spectral parameter as re,im")->capture_default_str();
    eval->add_option("--tau", tau_text, "point as x,y with y > 0")->required();
    eval->add_option("--evaluator", evaluator,
                     "sum (lattice), fourier (scalar expansion), product "
                     "(frame decomposition), orbit (termwise slash action)")
        ->capture_default_str()
        ->check(CLI::IsMember({"sum", "fourier", "product", "orbit"}));
    eval->add_option("--radius", radius, "lattice radius for sum/orbit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    eval->add_option("--order", terms, "term count for fourier/product")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // verify
    std::string glob = "*", format = "table";
    int v_order = 60;
    long long v_radius = 400;
    std::uint64_t seed = 1;
    std::vector<std::string> tol_specs;
    CLI::App* verify = app.add_subcommand("verify", "run the mechanized identity checks");
    verify->add_option("glob", glob, "check-name filter ('*' wildcard)")
        ->capture_default_str();
    verify->add_option("--order", v_order, "q-truncation order")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--radius", v_radius, "lattice radius")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    verify->add_option("--tol", tol_specs, "override a check tolerance, NAME=VALUE");
    verify->add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv", "json"}));

    // checks
    app.add_subcommand("checks", "list the registered check names as JSON");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (app.got_subcommand(qexp)) {
            run_qexp(out, form, qexp_order, frame_j, frame_m);
        } else if (app.got_subcommand(eval)) {
            run_eval(out, k, m, j, s_text, tau_text, evaluator, radius, terms);
        } else if (app.got_subcommand(verify)) {
            res.exit_code = run_verify(out, glob, v_order, v_radius, seed,
                                       tol_specs, format);
        } else {
            run_checks(out);
        }
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        res.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        res.exit_code = 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 3;
    }

    res.out = out.str();
    res.err = err.str();
    return res;
}

} // namespace vvmod
