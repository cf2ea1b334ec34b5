// Command-line front end: exact oracle, KL3 and AJL evaluators, Hadamard-test
// estimator, theta sweeps and invariant check suites, with JSON/CSV output.

#include "jones/ajl.hpp"
#include "jones/angle.hpp"
#include "jones/bracket.hpp"
#include "jones/braid.hpp"
#include "jones/checks.hpp"
#include "jones/errors.hpp"
#include "jones/hadamard.hpp"
#include "jones/kernels.hpp"
#include "jones/kl3.hpp"
#include "jones/markov.hpp"
#include "jones/path_basis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;

namespace {

using namespace jones;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json coeff_json(const BigInt& c) {
    static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    if (c >= lo && c <= hi) return json(c.convert_to<std::int64_t>());
    return json(c.str()); // exact, as a decimal string
}

json poly_json(const LaurentInt& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.term_list()) terms.push_back(json::array({e, coeff_json(c)}));
    return json{{"text", p.text()}, {"terms", terms}};
}

json quarter_json(const QuarterLaurent& v) {
    json terms = json::array();
    for (const auto& [qe, c] : v.term_list()) terms.push_back(json::array({qe, coeff_json(c)}));
    return json{{"text", v.text()}, {"exponent_unit", "t^(1/4)"}, {"terms", terms}};
}

enum class Format { json, text };

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

struct OutputSink {
    std::string path; // empty = stdout

    void write(const std::string& doc) const {
        if (path.empty()) {
            std::cout << doc;
            if (doc.empty() || doc.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file " + path);
        out << doc;
        if (doc.empty() || doc.back() != '\n') out << '\n';
    }
};

// Flat key:value rendering of a result document; {re,im} objects print as
// complex numbers and check cases as one line each.
std::string text_from_doc(const json& doc) {
    std::ostringstream out;
    for (const auto& [key, val] : doc.items()) {
        if (val.is_object() && val.contains("re") && val.contains("im")) {
            out << key << ": " << fmt_complex(Complex(val["re"].get<double>(), val["im"].get<double>()))
                << "\n";
        } else if (key == "cases" && val.is_array()) {
            for (const auto& c : val)
                out << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>()
                    << "  worst " << c["worst"].get<double>() << " (tol " << c["tolerance"].get<double>()
                    << ")  " << c["detail"].get<std::string>() << "\n";
        } else if (val.is_string()) {
            out << key << ": " << val.get<std::string>() << "\n";
        } else {
            out << key << ": " << val.dump() << "\n";
        }
    }
    return out.str();
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("JONES_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- exact ----

struct ExactArgs {
    std::string braid;
    int strands = 2;
    std::string algorithm = "auto";
    std::size_t cap = kStateSumCap;
};

int run_exact(const ExactArgs& a, const OutputSink& sink, Format format) {
    const BraidWord b = parse_braid(a.braid, a.strands);
    BracketAlgo algo = BracketAlgo::auto_select;
    if (a.algorithm == "statesum") algo = BracketAlgo::state_sum;
    else if (a.algorithm == "fold") algo = BracketAlgo::tl_fold;
    else if (a.algorithm != "auto") throw std::invalid_argument("unknown algorithm " + a.algorithm);

    const LaurentInt raw = bracket_value(b, algo, a.cap);
    const LaurentInt reduced = div_exact(raw, LaurentInt::loop_value());
    const LaurentInt f = reduced * writhe_normalizer(-exponent_sum(b));
    const QuarterLaurent v = QuarterLaurent::from_f_polynomial(f);

    if (format == Format::text) {
        std::ostringstream out;
        out << "braid [" << to_string(b) << "] on " << b.n_strands << " strands, exponent sum "
            << exponent_sum(b) << ", closure components " << closure_permutation(b).components << "\n"
            << "raw:     " << raw.text() << "\n"
            << "reduced: " << reduced.text() << "\n"
            << "f:       " << f.text() << "\n"
            << "jones:   " << v.text() << "\n";
        sink.write(out.str());
        return 0;
    }

    json doc;
    doc["braid"] = to_string(b);
    doc["strands"] = b.n_strands;
    doc["exponent_sum"] = exponent_sum(b);
    doc["components"] = closure_permutation(b).components;
    doc["raw"] = poly_json(raw);
    doc["reduced"] = poly_json(reduced);
    doc["f"] = poly_json(f);
    doc["jones"] = quarter_json(v);
    sink.write(doc.dump(2));
    return 0;
}

// ------------------------------------------------------------------ kl3 ----

struct Kl3Args {
    std::string braid;
    int strands = 3;
    std::string theta;
    bool allow_nonunitary = false;
};

int run_kl3(const Kl3Args& a, const OutputSink& sink, Format format) {
    const BraidWord b = parse_braid(a.braid, a.strands);
    const double theta = parse_angle(a.theta);
    const KLParams params = KLParams::from_theta(theta, a.allow_nonunitary);
    const Complex tr = rho3(b, params).trace();
    const Complex bracket = bracket_kl3(b, params);
    const Complex f = jones_kl3(b, params);

    if (format == Format::text) {
        std::ostringstream out;
        out.precision(12);
        out << "braid [" << to_string(b) << "], theta = " << theta << ", A = " << fmt_complex(params.A)
            << ", delta = " << params.delta << (params.unitary ? " (unitary)" : " (not unitary)") << "\n"
            << "trace(rho(b))     = " << fmt_complex(tr) << "\n"
            << "bracket (reduced) = " << fmt_complex(bracket) << "\n"
            << "f                 = " << fmt_complex(f) << "\n";
        sink.write(out.str());
        return 0;
    }

    json doc;
    doc["braid"] = to_string(b);
    doc["strands"] = b.n_strands;
    doc["theta"] = theta;
    doc["A"] = complex_json(params.A);
    doc["delta"] = params.delta;
    doc["trace_re"] = tr.real();
    doc["trace_im"] = tr.imag();
    doc["bracket"] = complex_json(bracket); // reduced convention
    doc["bracket_raw"] = complex_json(bracket * Complex(params.delta));
    doc["f"] = complex_json(f);
    doc["unitary"] = params.unitary;
    sink.write(doc.dump(2));
    return 0;
}

// ------------------------------------------------------------------ ajl ----

struct AjlArgs {
    std::string braid;
    int strands = 3;
    std::string theta;
    int r = 0; // 0 = default n+2
    bool force_truncation = false;
};

int run_ajl(const AjlArgs& a, const OutputSink& sink, Format format) {
    const BraidWord b = parse_braid(a.braid, a.strands);
    const double theta = parse_angle(a.theta);
    const int r = a.r > 0 ? a.r : b.n_strands + 2;
    const ParamReport report = validate_params(theta, r, b.n_strands);
    if (!report.valid) throw std::invalid_argument("invalid AJL parameters: " + report.error);
    const AJLParams params = AJLParams::make(theta, r);
    const PathBasis basis = PathBasis::enumerate(b.n_strands, r);
    const Complex tr = weighted_trace(rho_ajl(b, basis, params), basis, params);
    const Complex raw = bracket_ajl(b, basis, params, a.force_truncation);
    const Complex reduced = raw / params.d;
    const Complex f = ipow(-ipow(params.A, 3), -exponent_sum(b)) * reduced;

    if (format == Format::text) {
        std::ostringstream out;
        out.precision(12);
        out << "braid [" << to_string(b) << "], theta = " << theta << ", r = " << r << ", A = "
            << fmt_complex(params.A) << ", d = " << params.d << "\n"
            << "basis dimension " << basis.dim() << ", mode " << report.mode() << "\n";
        for (const auto& w : report.warnings) out << "warning: " << w << "\n";
        out << "weighted trace TR = " << fmt_complex(tr) << "\n"
            << "bracket (raw)     = " << fmt_complex(raw) << "\n"
            << "bracket (reduced) = " << fmt_complex(reduced) << "\n"
            << "f                 = " << fmt_complex(f) << "\n";
        sink.write(out.str());
        return 0;
    }

    json doc;
    doc["braid"] = to_string(b);
    doc["strands"] = b.n_strands;
    doc["theta"] = theta;
    doc["r"] = r;
    doc["A"] = complex_json(params.A);
    doc["d"] = params.d;
    doc["dimension"] = basis.dim();
    doc["mode"] = report.mode();
    doc["warnings"] = report.warnings;
    doc["weighted_trace"] = complex_json(tr);
    doc["bracket_raw"] = complex_json(raw);
    doc["bracket_reduced"] = complex_json(reduced);
    doc["f"] = complex_json(f);
    sink.write(doc.dump(2));
    return 0;
}

// ------------------------------------------------------------- hadamard ----

struct HadamardArgs {
    std::string braid;
    int strands = 2;
    std::string method = "ajl";
    std::string theta;
    int r = 0;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 1;
    std::string parts = "both";
    bool with_exact = false;
};

int run_hadamard(const HadamardArgs& a, const OutputSink& sink, Format format) {
    const BraidWord b = parse_braid(a.braid, a.strands);
    const double theta = parse_angle(a.theta);
    ShotPlan plan;
    plan.shots = a.shots;
    plan.seed = a.seed;
    if (a.parts == "real") plan.parts = Parts::real_only;
    else if (a.parts == "imag") plan.parts = Parts::imag_only;
    else if (a.parts == "both") plan.parts = Parts::both;
    else throw std::invalid_argument("unknown parts mode " + a.parts);
    const bool with_jones = plan.parts == Parts::both; // single-part runs estimate the trace only

    json doc;
    doc["method"] = a.method;
    doc["braid"] = to_string(b);
    doc["strands"] = b.n_strands;
    doc["theta"] = theta;
    doc["shots"] = plan.shots;
    doc["seed"] = plan.seed;

    if (a.method == "ajl") {
        const int r = a.r > 0 ? a.r : b.n_strands + 2;
        const ParamReport report = validate_params(theta, r, b.n_strands);
        if (!report.valid) throw std::invalid_argument("invalid AJL parameters: " + report.error);
        if (report.truncated && !report.root_of_unity)
            throw truncation_error("truncated basis at generic theta; the estimated trace would not "
                                   "reproduce the bracket (use r >= n+2 or a root of unity)");
        const AJLParams params = AJLParams::make(theta, r);
        const PathBasis basis = PathBasis::enumerate(b.n_strands, r);
        const TraceEstimate est = estimate_weighted_trace(b, basis, params, plan);
        doc["r"] = r;
        doc["mode"] = report.mode();
        doc["estimate_re"] = est.estimate.real();
        doc["estimate_im"] = est.estimate.imag();
        doc["stderr_re"] = est.stderr_re;
        doc["stderr_im"] = est.stderr_im;
        if (with_jones) {
            const JonesEstimate je = estimate_jones_ajl(b, basis, params, plan);
            doc["bracket_raw_estimate"] = complex_json(je.bracket_raw);
            doc["bracket_reduced_estimate"] = complex_json(je.bracket_reduced);
            doc["jones_estimate"] = complex_json(je.jones);
            doc["confidence_radius"] = je.confidence_radius;
        }
        json sectors = json::array();
        for (const auto& s : est.per_sector)
            sectors.push_back(json{{"node", s.node}, {"re", s.re}, {"im", s.im}});
        doc["per_sector"] = sectors;
        if (a.with_exact) {
            const Complex tr = weighted_trace(rho_ajl(b, basis, params), basis, params);
            const Complex f =
                ipow(-ipow(params.A, 3), -exponent_sum(b)) * (tr / params.lambda(1) / params.d);
            doc["exact"] = json{{"trace_re", tr.real()}, {"trace_im", tr.imag()}, {"jones", complex_json(f)}};
        }
    } else if (a.method == "kl3") {
        const KLParams params = KLParams::from_theta(theta);
        const TraceEstimate est = estimate_trace_kl3(b, params, plan);
        doc["estimate_re"] = est.estimate.real();
        doc["estimate_im"] = est.estimate.imag();
        doc["stderr_re"] = est.stderr_re;
        doc["stderr_im"] = est.stderr_im;
        if (with_jones) {
            const JonesEstimate je = estimate_jones_kl3(b, params, plan);
            doc["bracket_raw_estimate"] = complex_json(je.bracket_raw);
            doc["bracket_reduced_estimate"] = complex_json(je.bracket_reduced);
            doc["jones_estimate"] = complex_json(je.jones);
            doc["confidence_radius"] = je.confidence_radius;
        }
        if (a.with_exact) {
            const Complex tr = rho3(b, params).trace();
            doc["exact"] = json{{"trace_re", tr.real()},
                                {"trace_im", tr.imag()},
                                {"jones", complex_json(jones_kl3(b, params))}};
        }
    } else {
        throw std::invalid_argument("unknown method " + a.method + " (expected ajl or kl3)");
    }
    sink.write(format == Format::text ? text_from_doc(doc) : doc.dump(2));
    return 0;
}

// ---------------------------------------------------------------- sweep ----

struct SweepArgs {
    std::string braid;
    int strands = 3;
    std::string method = "ajl";
    std::string theta_min;
    std::string theta_max;
    int steps = 50;
    int r = 0;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 1;
    int threads = 0;
};

// One CSV row: theta, A, raw-convention bracket and f at that angle.
struct SweepRow {
    double theta;
    Complex A;
    Complex bracket_raw;
    Complex f;
};

int run_sweep(const SweepArgs& a, const OutputSink& sink) {
    const BraidWord b = parse_braid(a.braid, a.strands);
    if (a.steps < 1) throw std::invalid_argument("sweep needs at least one step");
    const double lo = parse_angle(a.theta_min);
    const double hi = parse_angle(a.theta_max);
    std::vector<double> grid(static_cast<std::size_t>(a.steps));
    for (int i = 0; i < a.steps; ++i)
        grid[static_cast<std::size_t>(i)] = a.steps == 1 ? lo : lo + (hi - lo) * i / (a.steps - 1);

    const int r = a.r > 0 ? a.r : b.n_strands + 2;
    const int I = exponent_sum(b);

    // validate the whole grid up front so a bad range fails before any output
    for (double theta : grid) {
        if (a.method == "ajl" || a.method == "hadamard") {
            const ParamReport rep = validate_params(theta, r, b.n_strands);
            if (!rep.valid)
                throw std::invalid_argument("grid point theta = " + fmt_double(theta) + " invalid: " + rep.error);
            if (rep.truncated && !rep.root_of_unity)
                throw truncation_error("grid point theta = " + fmt_double(theta) +
                                       " uses a truncated basis at generic theta");
        } else if (a.method == "kl3") {
            KLParams::from_theta(theta); // throws when singular or not unitary
        } else {
            throw std::invalid_argument("unknown sweep method " + a.method);
        }
    }

    std::optional<PathBasis> basis;
    if (a.method != "kl3") basis.emplace(PathBasis::enumerate(b.n_strands, r));

    auto eval_row = [&](std::size_t idx) -> SweepRow {
        const double theta = grid[idx];
        SweepRow row{};
        row.theta = theta;
        if (a.method == "kl3") {
            const KLParams params = KLParams::from_theta(theta);
            row.A = params.A;
            const Complex reduced = bracket_kl3(b, params);
            row.bracket_raw = reduced * Complex(params.delta);
            row.f = ipow(-ipow(params.A, 3), -I) * reduced;
        } else if (a.method == "ajl") {
            const AJLParams params = AJLParams::make(theta, r);
            row.A = params.A;
            row.bracket_raw = bracket_ajl(b, *basis, params, true);
            row.f = ipow(-ipow(params.A, 3), -I) * (row.bracket_raw / params.d);
        } else {
            const AJLParams params = AJLParams::make(theta, r);
            row.A = params.A;
            ShotPlan plan{a.shots, a.seed + idx, Parts::both};
            const JonesEstimate je = estimate_jones_ajl(b, *basis, params, plan);
            row.bracket_raw = je.bracket_raw;
            row.f = je.jones;
        }
        return row;
    };

    const int workers = thread_count(a.threads);
    std::vector<SweepRow> rows(grid.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = eval_row(i);
    } else {
        std::vector<std::future<void>> futures;
        futures.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < grid.size();
                     i += static_cast<std::size_t>(workers))
                    rows[i] = eval_row(i);
            }));
        }
        for (auto& f : futures) f.get();
    }

    std::ostringstream csv;
    csv << "theta,A_re,A_im,bracket_re,bracket_im,f_re,f_im\n";
    for (const SweepRow& row : rows) {
        csv << fmt_double(row.theta) << ',' << fmt_double(row.A.real()) << ',' << fmt_double(row.A.imag())
            << ',' << fmt_double(row.bracket_raw.real()) << ',' << fmt_double(row.bracket_raw.imag()) << ','
            << fmt_double(row.f.real()) << ',' << fmt_double(row.f.imag()) << '\n';
    }
    sink.write(csv.str());
    return 0;
}

// ---------------------------------------------------------------- check ----

struct CheckArgs {
    std::string level = "fast";
    std::uint64_t seed = 2024;
};

int run_check(const CheckArgs& a, const OutputSink& sink, Format format) {
    CheckLevel level;
    if (a.level == "fast") level = CheckLevel::fast;
    else if (a.level == "full") level = CheckLevel::full;
    else throw std::invalid_argument("unknown check level " + a.level);

    const CheckReport report = run_checks(level, a.seed);
    json doc;
    doc["level"] = a.level;
    doc["seed"] = a.seed;
    doc["kernel"] = kernels::impl_name(kernels::active());
    doc["all_pass"] = report.all_pass;
    json cases = json::array();
    for (const CheckCase& c : report.cases) {
        cases.push_back(json{{"name", c.name},
                             {"pass", c.pass},
                             {"worst", c.worst},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}});
    }
    doc["cases"] = cases;
    sink.write(format == Format::text ? text_from_doc(doc) : doc.dump(2));
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jones polynomial of braid closures: exact bracket oracle, KL3 and continuous-angle "
                 "AJL evaluators, and a simulated Hadamard-test estimator"};
    app.require_subcommand(1);

    OutputSink sink;
    app.add_option("-o,--output", sink.path, "write the result here instead of stdout");
    std::string format_name = "json";
    app.add_option("--format", format_name, "json | text (sweep always emits CSV)");

    ExactArgs exact;
    auto* cmd_exact = app.add_subcommand("exact", "exact bracket/Jones polynomials (Laurent in A, V in t)")->fallthrough();
    cmd_exact->add_option("--braid", exact.braid, "braid word, e.g. \"1 -2 1 -2\"")->required();
    cmd_exact->add_option("--strands", exact.strands, "strand count")->required();
    cmd_exact->add_option("--algorithm", exact.algorithm, "auto | statesum | fold");
    cmd_exact->add_option("--cap", exact.cap, "state-sum crossing cap (default 24)");

    Kl3Args kl3;
    auto* cmd_kl3 = app.add_subcommand("kl3", "three-strand unitary trace evaluation at A = exp(i theta)")->fallthrough();
    cmd_kl3->add_option("--braid", kl3.braid, "braid word on <= 3 strands")->required();
    cmd_kl3->add_option("--strands", kl3.strands, "2 or 3 (2-strand words embed)");
    cmd_kl3->add_option("--theta", kl3.theta, "angle in radians or a pi fraction like pi/5")->required();
    cmd_kl3->add_flag("--allow-nonunitary", kl3.allow_nonunitary, "permit delta^2 < 1 (experimental)");

    AjlArgs ajl;
    auto* cmd_ajl = app.add_subcommand("ajl", "path-model Markov-trace evaluation at A = i exp(i theta/2)")->fallthrough();
    cmd_ajl->add_option("--braid", ajl.braid, "braid word")->required();
    cmd_ajl->add_option("--strands", ajl.strands, "strand count")->required();
    cmd_ajl->add_option("--theta", ajl.theta, "angle in (0, pi/r], radians or pi fraction")->required();
    cmd_ajl->add_option("--r", ajl.r, "line graph parameter (default strands+2)");
    cmd_ajl->add_flag("--force-truncation", ajl.force_truncation,
                      "evaluate even when r < n+2 at generic theta");

    HadamardArgs had;
    auto* cmd_had = app.add_subcommand("hadamard", "simulated Hadamard-test trace estimation")->fallthrough();
    cmd_had->add_option("--braid", had.braid, "braid word")->required();
    cmd_had->add_option("--strands", had.strands, "strand count")->required();
    cmd_had->add_option("--method", had.method, "ajl | kl3");
    cmd_had->add_option("--theta", had.theta, "angle, radians or pi fraction")->required();
    cmd_had->add_option("--r", had.r, "line graph parameter (ajl; default strands+2)");
    cmd_had->add_option("--shots", had.shots, "total shot budget");
    cmd_had->add_option("--seed", had.seed, "RNG seed (identical seeds reproduce bit-identically)");
    cmd_had->add_option("--parts", had.parts, "real | imag | both");
    cmd_had->add_flag("--with-exact", had.with_exact, "include the exact trace and Jones value");

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate a method over a theta grid, CSV output")->fallthrough();
    cmd_sweep->add_option("--braid", sweep.braid, "braid word")->required();
    cmd_sweep->add_option("--strands", sweep.strands, "strand count")->required();
    cmd_sweep->add_option("--method", sweep.method, "ajl | kl3 | hadamard");
    cmd_sweep->add_option("--theta-min", sweep.theta_min, "grid start")->required();
    cmd_sweep->add_option("--theta-max", sweep.theta_max, "grid end")->required();
    cmd_sweep->add_option("--steps", sweep.steps, "number of grid points");
    cmd_sweep->add_option("--r", sweep.r, "line graph parameter (default strands+2)");
    cmd_sweep->add_option("--shots", sweep.shots, "shots per grid point (hadamard)");
    cmd_sweep->add_option("--seed", sweep.seed, "base seed; row i uses seed+i (hadamard)");
    cmd_sweep->add_option("--threads", sweep.threads, "worker threads (default $JONES_THREADS or 1)");

    CheckArgs check;
    auto* cmd_check = app.add_subcommand("check", "run the invariant suites and report pass/fail")->fallthrough();
    cmd_check->add_option("--level", check.level, "fast | full");
    cmd_check->add_option("--seed", check.seed, "suite RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        Format format;
        if (format_name == "json") format = Format::json;
        else if (format_name == "text") format = Format::text;
        else throw std::invalid_argument("unknown format " + format_name + " (expected json or text)");
        if (*cmd_exact) return run_exact(exact, sink, format);
        if (*cmd_kl3) return run_kl3(kl3, sink, format);
        if (*cmd_ajl) return run_ajl(ajl, sink, format);
        if (*cmd_had) return run_hadamard(had, sink, format);
        if (*cmd_sweep) return run_sweep(sweep, sink);
        if (*cmd_check) return run_check(check, sink, format);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
