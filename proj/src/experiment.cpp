#include "ehl/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <limits>
#include <sstream>

#include "ehl/entropy.hpp"
#include "ehl/evolve.hpp"
#include "ehl/io.hpp"
#include "ehl/lsi.hpp"
#include "ehl/normalization.hpp"
#include "ehl/verify.hpp"

namespace ehl {

using json = nlohmann::ordered_json;

void OutputBundle::add(const std::string& name, const std::string& body) {
    files_.emplace_back(name, body);
}

void OutputBundle::flush() {
    namespace fs = std::filesystem;
    fs::create_directories(dir_);
    json manifest;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    manifest["written_at"] = stamp;
    manifest["files"] = json::array();
    for (const auto& [name, body] : files_) {
        write_text_file((fs::path(dir_) / name).string(), body);
        json entry;
        entry["path"] = name;
        entry["bytes"] = body.size();
        entry["fnv1a64"] = fnv1a64_hex(body);
        manifest["files"].push_back(entry);
    }
    write_text_file((fs::path(dir_) / "manifest.json").string(), manifest.dump(2) + "\n");
}

namespace {

json echo_config(const RunConfig& cfg) {
    json j;
    j["domain"] = {{"kind", to_string(cfg.kind)}, {"d", cfg.d}, {"R", cfg.R}, {"x0", cfg.x0}};
    const char* datum = cfg.datum_kind == InitialDatum::Kind::gaussian_shell ? "gaussian_shell"
                        : cfg.datum_kind == InitialDatum::Kind::annulus      ? "annulus"
                                                                             : "point_approx";
    j["initial"] = {{"kind", datum},        {"center", cfg.center},   {"width", cfg.width},
                    {"mass", cfg.mass},     {"r1", cfg.r1},           {"r2", cfg.r2},
                    {"height", cfg.height}, {"location", cfg.location}, {"epsilon", cfg.epsilon}};
    j["time"] = {{"t0", cfg.t0},     {"t_final", cfg.t_final},
                 {"ratio", cfg.ratio}, {"dt", cfg.resolved_dt()},
                 {"n", cfg.n},       {"r_max", cfg.resolved_r_max()}};
    j["output"] = {{"dir", cfg.dir}, {"formats", cfg.formats}};
    j["lsi"] = {{"tau_list", cfg.tau_list},
                {"c_assembly", cfg.c_assembly},
                {"poincare_n", cfg.poincare_n}};
    return j;
}

std::string series_csv(const RateSeries& s) {
    std::ostringstream out;
    out << "t,value\n";
    for (size_t i = 0; i < s.t.size(); ++i)
        out << fmt_double(s.t[i]) << ',' << fmt_double(s.value[i]) << '\n';
    return out.str();
}

struct Solved {
    HarmonicProfile profile;
    std::vector<RadialField> fields;
    double m_phi = 0.0;
};

Solved solve_stage(const RunConfig& cfg) {
    Solved s;
    const ExteriorDomain dom = cfg.domain();
    s.profile = make_profile(dom);
    const InitialDatum u0 = cfg.datum();
    const std::vector<double> times = cfg.solve_times();
    if (dom.kind == DomainKind::half_line) {
        s.fields = solve_exact_halfline(u0, cfg.x0, times, cfg.n);
        auto density = datum_evaluator(u0, dom);
        s.m_phi = integrate(
            [&](double y) { return s.profile.phi(y) * density(y); },
            std::max(cfg.x0, u0.support_lo()), u0.support_hi(), {1e-14, 1e-12, 4000});
    } else {
        RadialGrid grid = make_fv_grid(dom.dim, dom.boundary(), cfg.resolved_r_max(), cfg.n,
                                       dom.kind == DomainKind::ball_complement
                                           ? GridRule::graded_toward_boundary
                                           : GridRule::uniform);
        s.fields = solve_radial_fd(dom, u0, times, grid, cfg.resolved_dt());
        s.m_phi = harmonic_mass(s.fields.front());
    }
    return s;
}

json profile_stage(const RunConfig& cfg, OutputBundle& out) {
    const HarmonicProfile p = make_profile(cfg.domain());
    const double b = cfg.domain().boundary();
    std::ostringstream csv;
    csv << "r,phi,dphi\n";
    std::vector<double> grid;
    const int n = 513;
    for (int i = 0; i <= n; ++i) {
        const double r = b + 1e-3 + 10.0 * i / n;
        grid.push_back(r);
        csv << fmt_double(r) << ',' << fmt_double(p.phi(r)) << ',' << fmt_double(p.grad(r))
            << '\n';
    }
    out.add("profile.csv", csv.str());
    json j;
    j["harmonicity_residual"] = check_harmonicity(p, grid);
    if (cfg.d >= 3) j["cstar"] = p.cstar();
    return j;
}

json normalize_stage(const RunConfig& cfg, OutputBundle& out) {
    const HarmonicProfile p = make_profile(cfg.domain());
    NormalizationTable table = make_normalization_table(p, cfg.tau_list);
    std::ostringstream csv;
    write_csv(table, csv);
    out.add("normalization.csv", csv.str());
    json j;
    j["rows"] = table.rows.size();
    double worst = 0.0;
    for (const auto& r : table.rows) worst = std::max(worst, std::abs(r.K * r.I - 1.0));
    j["max_KI_defect"] = worst;
    return j;
}

json lsi_stage(const RunConfig& cfg, OutputBundle& out, double* lambda_hat_min) {
    const HarmonicProfile p = make_profile(cfg.domain());
    std::vector<LsiRow> rows = lsi_report(p, cfg.tau_list, cfg.c_assembly, cfg.poincare_n);
    std::ostringstream csv;
    write_csv(rows, csv);
    out.add("lsi.csv", csv.str());
    json j;
    j["rows"] = json::array();
    double lam = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        j["rows"].push_back({{"tau", r.tau},
                             {"phidd_min", r.phidd_min},
                             {"be_lambda", r.be_lambda},
                             {"poincare", r.poincare},
                             {"assembled_bound", r.assembled}});
        lam = std::min(lam, r.assembled);
    }
    j["lambda_hat_min"] = lam;
    if (lambda_hat_min) *lambda_hat_min = lam;
    return j;
}

void fields_stage(const Solved& s, OutputBundle& out) {
    for (size_t i = 0; i < s.fields.size(); ++i) {
        std::ostringstream csv;
        write_field_csv(s.fields[i], csv);
        char name[32];
        std::snprintf(name, sizeof(name), "field_%04zu.csv", i);
        out.add(name, csv.str());
    }
}

json entropy_stage(const Solved& s, double lambda_hat_min, OutputBundle& out, json* pass) {
    std::vector<RadialField> gs;
    std::vector<TransientEquilibrium> eqs;
    for (const auto& f : s.fields) {
        if (!(f.time > 0.0)) continue;
        RadialField g = self_similar(f, s.profile, s.m_phi);
        eqs.push_back(make_equilibrium(s.profile, g.time));
        gs.push_back(std::move(g));
    }
    EntropyTrace trace = entropy_trace(gs, eqs);
    std::ostringstream csv;
    write_csv(trace, csv);
    out.add("entropy.csv", csv.str());

    bool h_ok = true, ck_ok = true, probe_ok = true, balance_ok = true, requiv_ok = true;
    double max_requiv = 0.0;
    for (size_t i = 0; i < trace.rows.size(); ++i) {
        const EntropyRow& r = trace.rows[i];
        h_ok = h_ok && r.H >= 0.0;
        ck_ok = ck_ok && r.ck_gap >= -1e-8;
        probe_ok = probe_ok && lambda_hat_min * r.H <= r.fisher + 1e-8;
        if (std::isfinite(r.balance))
            balance_ok = balance_ok &&
                         std::abs(r.balance) <=
                             0.05 * std::max(r.fisher, std::abs(r.R)) + 1e-10;
        const double rd = remainder_R_direct(gs[i], s.profile, gs[i].time);
        max_requiv = std::max(max_requiv, std::abs(r.R - rd));
    }
    requiv_ok = max_requiv <= 1e-4;

    json j;
    j["rows"] = trace.rows.size();
    j["max_remainder_mismatch"] = max_requiv;
    if (pass) {
        (*pass)["entropy_nonnegative"] = h_ok;
        (*pass)["ck_gap"] = ck_ok;
        (*pass)["lsi_probe"] = probe_ok;
        (*pass)["balance_residual"] = balance_ok;
        (*pass)["remainder_equivalence"] = requiv_ok;
    }
    return j;
}

json rates_stage(const RunConfig& cfg, const Solved& s, double lambda_hat_min, OutputBundle& out,
                 json* constants) {
    const HarmonicProfile& p = s.profile;
    RateSeries weighted{"weighted_l1", {}, {}}, plain{"plain_l1", {}, {}},
        uniform{"uniform_rel", {}, {}};
    for (const auto& f : s.fields) {
        if (f.time < 2.0) continue;
        const double kt = k_of_t(p, f.time);
        weighted.t.push_back(f.time);
        weighted.value.push_back(error_norm(f, p, s.m_phi, ErrorMode::weighted_l1, kt));
        plain.t.push_back(f.time);
        plain.value.push_back(error_norm(f, p, s.m_phi, ErrorMode::plain_l1, kt));
        uniform.t.push_back(f.time);
        uniform.value.push_back(error_norm(f, p, s.m_phi, ErrorMode::uniform_rel, kt));
    }
    out.add("series_weighted_l1.csv", series_csv(weighted));
    out.add("series_plain_l1.csv", series_csv(plain));
    out.add("series_uniform_rel.csv", series_csv(uniform));

    const double w_lo = std::max(10.0, cfg.t0);
    const double w_hi = cfg.t_final / std::sqrt(10.0);  // drop the last half-decade
    json j;
    for (const RateSeries* s2 : {&weighted, &plain, &uniform}) {
        double peak = 0.0;
        for (double v : s2->value) peak = std::max(peak, v);
        try {
            RateFit fit = fit_rate(*s2, w_lo, w_hi);
            j[s2->label] = {{"alpha", fit.alpha},
                            {"prefactor", fit.prefactor},
                            {"residual", fit.max_log_residual},
                            {"max_value", peak}};
        } catch (const std::exception& ex) {
            j[s2->label] = {{"error", ex.what()}, {"max_value", peak}};
        }
    }

    // One-sided theorem-shape bounds with split-window constants (d >= 2).
    if (cfg.d >= 2 && weighted.t.size() >= 4 && constants) {
        std::vector<double> shape_w(weighted.t.size()), shape_p(weighted.t.size());
        for (size_t i = 0; i < weighted.t.size(); ++i) {
            const double t = weighted.t[i];
            if (cfg.d >= 3) {
                shape_w[i] = std::pow(t, -lambda_hat_min / 4.0);
                shape_p[i] = shape_w[i];
            } else {
                shape_w[i] = 1.0 / std::log(t) + std::pow(t, -lambda_hat_min / 4.0);
                shape_p[i] = shape_w[i] / std::log(t);
            }
        }
        SplitBoundCheck bw = split_bound(weighted.t, weighted.value, shape_w);
        SplitBoundCheck bp = split_bound(plain.t, plain.value, shape_p);
        (*constants)["weighted_bound_C"] = bw.c_fit;
        (*constants)["weighted_bound_validated"] = bw.pass;
        (*constants)["plain_bound_C"] = bp.c_fit;
        (*constants)["plain_bound_validated"] = bp.pass;
    }
    return j;
}

json mass_stage(const RunConfig& cfg, const Solved& s, OutputBundle& out, json* pass) {
    RateSeries mass{"mass", {}, {}};
    RateSeries hm{"harmonic_mass", {}, {}};
    for (const auto& f : s.fields) {
        if (!(f.time > 0.0)) continue;
        mass.t.push_back(f.time);
        mass.value.push_back(field_integral(f));
        hm.t.push_back(f.time);
        hm.value.push_back(harmonic_mass(f));
    }
    out.add("mass.csv", series_csv(mass));
    RateSeries resid = mass_asymptote_residual(mass, s.profile, s.m_phi);
    out.add("mass_residual.csv", series_csv(resid));

    bool nonincreasing = true;
    for (size_t i = 1; i < mass.value.size(); ++i)
        nonincreasing = nonincreasing &&
                        mass.value[i] <= mass.value[i - 1] * (1.0 + 1e-12) + 1e-15;
    double drift = 0.0;
    for (double v : hm.value) drift = std::max(drift, std::abs(v - s.m_phi) / s.m_phi);
    const bool exact_solver = cfg.kind == DomainKind::half_line;
    if (pass) {
        (*pass)["mass_nonincreasing"] =
            cfg.kind == DomainKind::full_space ? true : nonincreasing;
        (*pass)["harmonic_mass_drift"] = drift <= (exact_solver ? 1e-6 : 1e-4);
    }

    json j;
    j["m_phi"] = s.m_phi;
    j["harmonic_mass_max_drift"] = drift;
    try {
        RateFit fit = fit_rate(mass, std::max(10.0, cfg.t0), cfg.t_final / std::sqrt(10.0));
        j["fit"] = {{"alpha", fit.alpha},
                    {"prefactor", fit.prefactor},
                    {"residual", fit.max_log_residual}};
    } catch (const std::exception& ex) {
        j["fit"] = {{"error", ex.what()}};
    }
    return j;
}

template <typename F>
auto run_stage(const char* name, F&& fn) {
    try {
        return fn();
    } catch (const std::exception& ex) {
        throw std::runtime_error(std::string("stage ") + name + ": " + ex.what());
    }
}

}  // namespace

json run_experiment(const RunConfig& cfg, OutputBundle& out, const std::string& subcommand) {
    json report;
    report["config"] = echo_config(cfg);
    report["domain"] = report["config"]["domain"];
    json pass = json::object();
    json constants = json::object();

    const bool all = subcommand == "all";
    const bool needs_fields = all || subcommand == "solve" || subcommand == "entropy" ||
                              subcommand == "rates" || subcommand == "mass";
    const bool needs_lsi = all || subcommand == "lsi" || subcommand == "entropy" ||
                           subcommand == "rates";

    if (all || subcommand == "profile")
        report["profile"] = run_stage("profile", [&] { return profile_stage(cfg, out); });
    if (all || subcommand == "normalize")
        report["normalization"] = run_stage("normalize", [&] { return normalize_stage(cfg, out); });

    double lam = 0.0;
    if (needs_lsi)
        report["lsi"] = run_stage("lsi", [&] { return lsi_stage(cfg, out, &lam); });

    Solved solved;
    if (needs_fields)
        solved = run_stage("solve", [&] { return solve_stage(cfg); });

    if (all || subcommand == "solve") fields_stage(solved, out);
    if (all || subcommand == "entropy")
        report["entropy"] =
            run_stage("entropy", [&] { return entropy_stage(solved, lam, out, &pass); });
    if (all || subcommand == "rates")
        report["exponents"] =
            run_stage("rates", [&] { return rates_stage(cfg, solved, lam, out, &constants); });
    if (all || subcommand == "mass")
        report["mass"] = run_stage("mass", [&] { return mass_stage(cfg, solved, out, &pass); });

    report["constants"] = constants;
    report["pass"] = pass;
    out.add("report.json", report.dump(2) + "\n");
    return report;
}

int dispatch(const std::string& subcommand, const std::string& config_path,
             const std::string& out_dir, bool quiet) {
    static const std::vector<std::string> known = {"profile", "normalize", "solve", "entropy",
                                                   "lsi",     "rates",     "mass",  "all"};
    if (std::find(known.begin(), known.end(), subcommand) == known.end()) {
        std::cerr << "unknown subcommand '" << subcommand << "'\n";
        return 2;
    }
    RunConfig cfg;
    try {
        cfg = parse_config(read_text_file(config_path));
    } catch (const ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    }
    const std::string dir = out_dir.empty() ? cfg.dir : out_dir;
    try {
        OutputBundle out(dir);
        json report = run_experiment(cfg, out, subcommand);
        out.flush();
        if (!quiet) std::cout << "wrote " << dir << "/report.json\n";
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace ehl
