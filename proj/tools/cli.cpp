#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rds11/behavior.hpp"
#include "rds11/conjugacy.hpp"
#include "rds11/equilibria.hpp"
#include "rds11/model.hpp"
#include "rds11/oracle.hpp"
#include "rds11/registry.hpp"
#include "rds11/simulate.hpp"
#include "rds11/stability.hpp"

namespace rds11::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitForbidden = 3;
constexpr int kExitVerifyFailed = 4;

struct ValidationFailure : Error {
    using Error::Error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_state(const State& s) {
    return "(" + fmt(s.x) + ", " + fmt(s.y) + ")";
}

/// Accepts "11,K", "(11,K)" or a bare index "K".
CaseId parse_case(std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
    if (text.rfind("11,", 0) == 0) text = text.substr(3);
    try {
        std::size_t pos = 0;
        const int idx = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return CaseId(idx);
    } catch (const UnknownCase&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationFailure("cannot parse case '" + text +
                                "'; expected e.g. 11,7 or 7");
    }
}

constexpr const char* kSymbols[] = {"alpha1", "A1",     "alpha2", "beta2",
                                    "gamma2", "A2",     "B2",     "C2"};

struct ParamFlags {
    std::map<std::string, double> given;

    void add_to(CLI::App* sub) {
        for (const char* sym : kSymbols) {
            const std::string name = std::string("--") + sym;
            sub->add_option_function<double>(
                name, [this, sym](double v) { given[sym] = v; },
                std::string("value of ") + sym + " (when the case uses it)");
        }
    }
};

/// Assemble CaseParams from the flags, in signature order. Case 11,22
/// additionally accepts --beta2 (the pre-normalization form) and rescales.
CaseParams build_params(CaseId id, const ParamFlags& pf, std::ostream& err) {
    const CaseSpec& spec = case_spec(id);
    auto is_signature_symbol = [&](const std::string& sym) {
        return std::find(spec.param_names.begin(), spec.param_names.end(), sym) !=
               spec.param_names.end();
    };
    const bool beta2_form_1122 =
        id.index() == 22 && pf.given.count("beta2") != 0;
    for (const auto& [sym, _] : pf.given)
        if (!is_signature_symbol(sym) && !(beta2_form_1122 && sym == "beta2"))
            throw ValidationFailure("case " + id.label() +
                                    " has no parameter named " + sym);
    std::vector<double> values;
    for (const std::string& sym : spec.param_names) {
        auto it = pf.given.find(sym);
        if (it == pf.given.end())
            throw ValidationFailure("case " + id.label() +
                                    " requires parameter " + sym +
                                    " (pass --" + sym + ")");
        values.push_back(it->second);
    }
    if (beta2_form_1122) {
        err << "note: case 11,22 given beta2; rescaling x* = beta2*x gives "
               "alpha1* = alpha1*beta2\n";
        return normalize_1122(values[0], values[1], values[2],
                              pf.given.at("beta2"));
    }
    return validate(id, std::move(values));
}

nlohmann::json params_json(const CaseParams& cp) {
    const CaseSpec& spec = case_spec(cp.id());
    nlohmann::json j;
    for (std::size_t i = 0; i < spec.param_names.size(); ++i)
        j[spec.param_names[i]] = cp.values()[i];
    return j;
}

std::string params_text(const CaseParams& cp) {
    const CaseSpec& spec = case_spec(cp.id());
    std::string s;
    for (std::size_t i = 0; i < spec.param_names.size(); ++i) {
        if (i) s += " ";
        s += spec.param_names[i] + "=" + fmt(cp.values()[i]);
    }
    return s;
}

// --- config file: one "key = value" per line, '#' comments -----------------

SimOptions apply_config(SimOptions base, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationFailure("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos)
            throw ValidationFailure(path + ":" + std::to_string(lineno) +
                                    ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "max_iters")
                base.max_iters = static_cast<std::size_t>(std::stoull(val));
            else if (key == "conv_tol") base.conv_tol = std::stod(val);
            else if (key == "period_tol") base.period_tol = std::stod(val);
            else if (key == "diverge_y") base.diverge_y = std::stod(val);
            else if (key == "diverge_x") base.diverge_x = std::stod(val);
            else if (key == "window") base.window = std::stoi(val);
            else
                throw ValidationFailure(path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        } catch (const ValidationFailure&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationFailure(path + ":" + std::to_string(lineno) +
                                    ": cannot parse value '" + val + "'");
        }
    }
    return base;
}

/// Sim-option flags shared by simulate and sweep. Flag > config > default.
struct SimFlags {
    std::string config_path;
    SimOptions flags;  // values written by CLI11
    CLI::Option *o_max = nullptr, *o_conv = nullptr, *o_ptol = nullptr,
                *o_dy = nullptr, *o_dx = nullptr, *o_win = nullptr;

    void add_to(CLI::App* sub) {
        sub->add_option("--config", config_path,
                        "key = value file presetting these simulation options");
        o_max = sub->add_option("--max-iters", flags.max_iters, "iteration budget");
        o_conv = sub->add_option("--conv-tol", flags.conv_tol,
                                 "convergence step tolerance");
        o_ptol = sub->add_option("--period-tol", flags.period_tol,
                                 "periodicity tolerance");
        o_dy = sub->add_option("--diverge-y", flags.diverge_y,
                               "divergence threshold on y");
        o_dx = sub->add_option("--diverge-x", flags.diverge_x,
                               "divergence threshold on x");
        o_win = sub->add_option("--window", flags.window,
                                "largest period searched");
    }

    SimOptions resolve() const {
        SimOptions opts;
        if (!config_path.empty()) opts = apply_config(opts, config_path);
        if (o_max->count()) opts.max_iters = flags.max_iters;
        if (o_conv->count()) opts.conv_tol = flags.conv_tol;
        if (o_ptol->count()) opts.period_tol = flags.period_tol;
        if (o_dy->count()) opts.diverge_y = flags.diverge_y;
        if (o_dx->count()) opts.diverge_x = flags.diverge_x;
        if (o_win->count()) opts.window = flags.window;
        opts.check();
        return opts;
    }
};

// --- classify ---------------------------------------------------------------

void cmd_classify(const CaseParams& cp, bool json_out, std::ostream& out) {
    const BehaviorPrediction p = predict(cp);
    if (json_out) {
        nlohmann::json j{{"schema", 1},
                         {"case", cp.id().label()},
                         {"params", params_json(cp)},
                         {"prediction", to_json(p)}};
        out << j.dump(2) << "\n";
        return;
    }
    const CaseSpec& spec = case_spec(cp.id());
    out << "case:        " << cp.id().label() << "   y' = " << spec.reduced_form
        << "\n";
    out << "parameters:  " << params_text(cp) << "\n";
    out << "prediction:  " << to_string(p.kind) << "\n";
    out << "region:      " << p.region_note << "\n";
    if (p.kind == BehaviorPrediction::Kind::FiniteTimeEquilibrium)
        out << "within:      " << p.within_steps << " steps\n";
    if (p.equilibrium) out << "equilibrium: " << fmt_state(*p.equilibrium) << "\n";
    if (p.saddle) out << "saddle:      " << fmt_state(*p.saddle) << "\n";
    if (p.interior_attractor)
        out << "attractor:   " << fmt_state(*p.interior_attractor) << "\n";
    if (!p.manifold.empty()) out << "manifold:    " << p.manifold << "\n";
    if (p.kind == BehaviorPrediction::Kind::ContinuumOfEquilibria)
        out << "equilibria:  every (alpha1/(A1+v), v), v >= 0\n";
}

// --- simulate ---------------------------------------------------------------

void cmd_simulate(const CaseParams& cp, const State& ic, const SimOptions& opts,
                  bool json_out, const std::string& csv_path, std::ostream& out,
                  std::ostream& err) {
    const Orbit orbit = iterate(cp, ic, opts);
    const ObservedBehavior ob = observe(orbit, opts);
    if (json_out) {
        nlohmann::json j{{"schema", 1},
                         {"case", cp.id().label()},
                         {"params", params_json(cp)},
                         {"ic", {{"x", ic.x}, {"y", ic.y}}},
                         {"orbit", orbit_json(orbit)},
                         {"observed", to_json(ob)}};
        out << j.dump(2) << "\n";
    } else if (!csv_path.empty() && csv_path != "-") {
        std::ofstream f(csv_path);
        if (!f) throw ValidationFailure("cannot open " + csv_path + " for writing");
        f << orbit_csv(orbit);
    } else {
        out << orbit_csv(orbit);
    }
    err << "observed: " << describe(ob) << " after "
        << orbit.states.size() - 1 << " steps";
    if (ob.limit) err << ", limit " << fmt_state(*ob.limit);
    err << "\n";
}

// --- verify -----------------------------------------------------------------

double spectrum_diff(const Spectrum& a, const Spectrum& b) {
    return std::max(std::abs(a.lambda1 - b.lambda1),
                    std::abs(a.lambda2 - b.lambda2));
}

std::string fmt_complex(const std::complex<double>& z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           fmt(std::abs(z.imag())) + "i";
}

std::string fmt_spectrum(const Spectrum& s) {
    return "{" + fmt_complex(s.lambda1) + ", " + fmt_complex(s.lambda2) + "}";
}

int cmd_verify(const CaseParams& cp, int grid_n, double threshold,
               double eigen_tol, bool json_out, std::ostream& out) {
    bool ok = true;
    nlohmann::json j{{"schema", 1},
                     {"case", cp.id().label()},
                     {"params", params_json(cp)}};
    std::ostringstream text;
    text << "case: " << cp.id().label() << "  (" << params_text(cp) << ")\n";

    if (is_conjugate_case(cp.id())) {
        const double res =
            verify_conjugacy(cp, domain_grid(cp, grid_n, grid_n));
        const bool pass = res <= threshold;
        ok = ok && pass;
        text << "conjugacy residual (" << grid_n << "x" << grid_n
             << " grid): " << fmt(res) << "  [threshold " << fmt(threshold)
             << "] " << (pass ? "OK" : "FAIL") << "\n";
        j["conjugacy"] = {{"grid", grid_n},
                          {"max_residual", res},
                          {"threshold", threshold},
                          {"pass", pass}};
    } else {
        text << "conjugacy: autonomous Riccati y-dynamics; "
                "conjugacy check not applicable\n";
        j["conjugacy"] = {{"applicable", false},
                          {"reason", "autonomous Riccati y-dynamics"}};
    }

    const EquilibriumSet eq = equilibria(cp);
    nlohmann::json spectra = nlohmann::json::array();
    auto check_point = [&](const State& p, const char* label) {
        const Spectrum closed = spectrum_closed(cp, p);
        const Spectrum numeric = spectrum_numeric(cp, p);
        const double diff = spectrum_diff(closed, numeric);
        const bool pass = diff <= eigen_tol;
        ok = ok && pass;
        text << "spectrum at " << label << " " << fmt_state(p) << ": closed "
             << fmt_spectrum(closed) << ", numeric " << fmt_spectrum(numeric)
             << ", max diff " << fmt(diff) << "  [tol " << fmt(eigen_tol) << "] "
             << (pass ? "OK" : "FAIL") << "  -> "
             << to_string(classify_local(closed)) << "\n";
        spectra.push_back({{"at", label},
                           {"x", p.x},
                           {"y", p.y},
                           {"max_diff", diff},
                           {"pass", pass},
                           {"class", to_string(classify_local(closed))}});
    };
    switch (eq.kind()) {
        case EquilibriumSet::Kind::One: check_point(eq.point(), "equilibrium"); break;
        case EquilibriumSet::Kind::Two:
            check_point(eq.saddle(), "saddle");
            check_point(eq.interior(), "interior");
            break;
        case EquilibriumSet::Kind::Continuum:
            for (double v : {0.0, 1.0, 10.0})
                check_point(eq.continuum_at(v),
                            ("continuum v=" + fmt(v)).c_str());
            break;
        case EquilibriumSet::Kind::None:
            text << "spectrum: no nonnegative equilibrium in this region; "
                    "check skipped\n";
            break;
    }
    j["spectra"] = std::move(spectra);
    j["pass"] = ok;

    if (json_out)
        out << j.dump(2) << "\n";
    else
        out << text.str();
    return ok ? kExitOk : kExitVerifyFailed;
}

// --- sweep ------------------------------------------------------------------

struct SweepRow {
    double value;
    std::string predicted;
    std::string observed;
    std::optional<State> limit;
};

void cmd_sweep(CaseId id, const ParamFlags& fixed, const std::string& vary,
               double lo, double hi, int steps, const State& ic,
               const SimOptions& opts, unsigned jobs, std::ostream& out,
               std::ostream& err) {
    const CaseSpec& spec = case_spec(id);
    if (std::find(spec.param_names.begin(), spec.param_names.end(), vary) ==
        spec.param_names.end())
        throw ValidationFailure("case " + id.label() + " has no parameter named " +
                                vary + " to sweep");
    if (fixed.given.count(vary))
        throw ValidationFailure("parameter " + vary +
                                " is being swept; do not also pass --" + vary);
    if (!(lo > 0.0)) throw ValidationFailure("sweep range must have lo > 0");
    if (!(hi >= lo)) throw ValidationFailure("sweep range must have hi >= lo");
    if (steps < 2) throw ValidationFailure("sweep needs at least 2 steps");

    std::vector<double> values;
    if (lo == hi) {
        values.push_back(lo);  // degenerate range: single row
    } else {
        values.reserve(steps);
        for (int i = 0; i < steps; ++i)
            values.push_back(lo + (hi - lo) * i / (steps - 1));
    }

    // Build each row's parameters up front so validation fails before any
    // simulation work starts.
    std::vector<CaseParams> row_params;
    row_params.reserve(values.size());
    for (double v : values) {
        ParamFlags pf = fixed;
        pf.given[vary] = v;
        row_params.push_back(build_params(id, pf, err));
    }

    std::vector<SweepRow> rows(values.size());
    std::exception_ptr fail;
    std::mutex fail_mu;
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < values.size(); i += step) {
            try {
                const BehaviorPrediction p = predict(row_params[i]);
                const ObservedBehavior ob =
                    observe(iterate(row_params[i], ic, opts), opts);
                rows[i] = {values[i], to_string(p.kind), describe(ob), ob.limit};
            } catch (...) {
                std::lock_guard<std::mutex> lk(fail_mu);
                if (!fail) fail = std::current_exception();
                return;
            }
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, values.size()));
    if (n_threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(work, t, n_threads);
        for (auto& th : pool) th.join();
    }
    if (fail) std::rethrow_exception(fail);

    out << "param,predicted,observed,limit_x,limit_y\n";
    for (const SweepRow& r : rows) {
        out << fmt(r.value) << "," << r.predicted << "," << r.observed << ","
            << (r.limit ? fmt(r.limit->x) : "nan") << ","
            << (r.limit ? fmt(r.limit->y) : "nan") << "\n";
    }
}

// --- cases ------------------------------------------------------------------

void cmd_cases(bool json_out, std::ostream& out) {
    if (json_out) {
        out << cases_json().dump(2) << "\n";
        return;
    }
    out << "index  parameters                          y'\n";
    for (const CaseSpec& s : all_case_specs()) {
        std::string names;
        for (std::size_t i = 0; i < s.param_names.size(); ++i)
            names += (i ? ", " : "") + s.param_names[i];
        char line[128];
        std::snprintf(line, sizeof(line), "%-6s %-35s %s\n", s.id.label().c_str(),
                      names.c_str(), s.reduced_form.c_str());
        out << line;
        if (s.forbidden_initials != ForbiddenSet::None)
            out << "       forbidden initial: " << to_string(s.forbidden_initials)
                << "\n";
    }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dynamics of the 17 Riccati-reducible planar rational systems"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand(
        "classify", "predicted global behavior for a parameter point");
    std::string classify_case;
    ParamFlags classify_params;
    bool classify_json = false;
    classify->add_option("case", classify_case, "case id, e.g. 11,7")->required();
    classify_params.add_to(classify);
    classify->add_flag("--json", classify_json, "emit JSON (schema 1)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "iterate an orbit and report "
                                                    "the observed behavior");
    std::string simulate_case;
    ParamFlags simulate_params;
    SimFlags simulate_sim;
    double sim_x0 = 0.0, sim_y0 = 0.0;
    bool simulate_json = false;
    std::string simulate_csv;
    simulate->add_option("case", simulate_case, "case id, e.g. 11,2")->required();
    simulate_params.add_to(simulate);
    simulate->add_option("--x0", sim_x0, "initial x")->required();
    simulate->add_option("--y0", sim_y0, "initial y")->required();
    simulate_sim.add_to(simulate);
    simulate->add_flag("--json", simulate_json, "emit JSON instead of CSV");
    simulate->add_option("--csv", simulate_csv, "write the n,x,y orbit here "
                                                "('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "conjugacy residual and closed-vs-numeric spectrum check");
    std::string verify_case;
    ParamFlags verify_params;
    int verify_grid = 20;
    double verify_threshold = 1e-12;
    double verify_eigen_tol = 1e-9;
    bool verify_json = false;
    verify->add_option("case", verify_case, "case id, e.g. 11,11")->required();
    verify_params.add_to(verify);
    verify->add_option("--grid-n", verify_grid, "grid points per axis")
        ->check(CLI::PositiveNumber);
    verify->add_option("--threshold", verify_threshold,
                       "max allowed conjugacy residual");
    verify->add_option("--eigen-tol", verify_eigen_tol,
                       "max allowed closed-vs-numeric eigenvalue difference");
    verify->add_flag("--json", verify_json, "emit JSON (schema 1)");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "vary one parameter and tabulate predicted/observed behavior");
    std::string sweep_case, sweep_vary, sweep_out_path;
    ParamFlags sweep_params;
    SimFlags sweep_sim;
    double sweep_lo = 0.0, sweep_hi = 0.0;
    int sweep_steps = 0;
    double sweep_x0 = 0.5, sweep_y0 = 0.5;
    unsigned sweep_jobs = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("case", sweep_case, "case id, e.g. 11,13")->required();
    sweep->add_option("--vary", sweep_vary, "parameter symbol to sweep")
        ->required();
    sweep->add_option("--lo", sweep_lo, "first value (must be > 0)")->required();
    sweep->add_option("--hi", sweep_hi, "last value")->required();
    sweep->add_option("--steps", sweep_steps, "number of grid points (>= 2)")
        ->required();
    sweep_params.add_to(sweep);
    sweep->add_option("--x0", sweep_x0, "initial x (default 0.5)");
    sweep->add_option("--y0", sweep_y0, "initial y (default 0.5)");
    sweep_sim.add_to(sweep);
    sweep->add_option("--jobs", sweep_jobs, "worker threads");
    sweep->add_option("--out", sweep_out_path, "write CSV here instead of stdout");

    // cases
    auto* cases = app.add_subcommand("cases", "list the 17 case signatures");
    bool cases_json_flag = false;
    cases->add_flag("--json", cases_json_flag, "emit JSON (schema 1)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (classify->parsed()) {
            const CaseId id = parse_case(classify_case);
            cmd_classify(build_params(id, classify_params, err), classify_json, out);
            return kExitOk;
        }
        if (simulate->parsed()) {
            const CaseId id = parse_case(simulate_case);
            const CaseParams cp = build_params(id, simulate_params, err);
            State ic(0.0, 0.0);
            try {
                ic = State(sim_x0, sim_y0);
            } catch (const DomainViolation& e) {
                throw ValidationFailure(std::string("bad initial condition: ") +
                                        e.what());
            }
            cmd_simulate(cp, ic, simulate_sim.resolve(), simulate_json,
                         simulate_csv, out, err);
            return kExitOk;
        }
        if (verify->parsed()) {
            const CaseId id = parse_case(verify_case);
            return cmd_verify(build_params(id, verify_params, err), verify_grid,
                              verify_threshold, verify_eigen_tol, verify_json, out);
        }
        if (sweep->parsed()) {
            const CaseId id = parse_case(sweep_case);
            State ic(0.0, 0.0);
            try {
                ic = State(sweep_x0, sweep_y0);
            } catch (const DomainViolation& e) {
                throw ValidationFailure(std::string("bad initial condition: ") +
                                        e.what());
            }
            if (!sweep_out_path.empty()) {
                std::ofstream f(sweep_out_path);
                if (!f)
                    throw ValidationFailure("cannot open " + sweep_out_path +
                                            " for writing");
                cmd_sweep(id, sweep_params, sweep_vary, sweep_lo, sweep_hi,
                          sweep_steps, ic, sweep_sim.resolve(), sweep_jobs, f, err);
            } else {
                cmd_sweep(id, sweep_params, sweep_vary, sweep_lo, sweep_hi,
                          sweep_steps, ic, sweep_sim.resolve(), sweep_jobs, out,
                          err);
            }
            return kExitOk;
        }
        if (cases->parsed()) {
            cmd_cases(cases_json_flag, out);
            return kExitOk;
        }
    } catch (const ForbiddenInitial& e) {
        err << "error: " << e.what() << "\n";
        return kExitForbidden;
    } catch (const ZeroDenominator& e) {
        err << "error: " << e.what() << "\n";
        return kExitForbidden;
    } catch (const Error& e) {
        // UnknownCase, ArityMismatch, NonPositiveParameter, ValidationFailure,
        // InvalidParameter, DomainViolation: all user input problems here.
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    err << "error: no subcommand given\n";
    return kExitValidation;
}

}  // namespace rds11::cli
