#include "ehl/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ehl/evolve.hpp"

namespace ehl {

namespace {

const std::map<std::string, std::vector<std::string>> kSchema = {
    {"domain", {"kind", "d", "R", "x0"}},
    {"initial", {"kind", "center", "width", "mass", "r1", "r2", "height", "location", "epsilon"}},
    {"time", {"t0", "t_final", "ratio", "dt", "n", "r_max"}},
    {"output", {"dir", "formats"}},
    {"lsi", {"tau_list", "c_assembly", "poincare_n"}},
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line;
};

double to_double(const Entry& e, const std::string& key) {
    try {
        size_t pos = 0;
        double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(e.line) + ": value of '" + key +
                          "' is not a number: '" + e.value + "'");
    }
}

int to_int(const Entry& e, const std::string& key) {
    const double v = to_double(e, key);
    if (v != std::floor(v))
        throw ConfigError("line " + std::to_string(e.line) + ": value of '" + key +
                          "' is not an integer: '" + e.value + "'");
    return static_cast<int>(v);
}

std::vector<double> to_list(const Entry& e, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(e.line) + ": list entry of '" + key +
                              "' is not a number: '" + item + "'");
        }
    }
    if (out.empty())
        throw ConfigError("line " + std::to_string(e.line) + ": '" + key + "' list is empty");
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::map<std::string, Entry>> table;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (kSchema.find(section) == kSchema.end())
                throw ConfigError("line " + std::to_string(lineno) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": entry outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& allowed = kSchema.at(section);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key +
                              "' in section [" + section + "]");
        auto [it, inserted] = table[section].emplace(key, Entry{value, lineno});
        if (!inserted)
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                              "' (first set on line " + std::to_string(it->second.line) + ")");
    }

    RunConfig cfg;
    auto get = [&](const std::string& sec, const std::string& key) -> const Entry* {
        auto s = table.find(sec);
        if (s == table.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };

    int domain_line = 0;
    if (const Entry* e = get("domain", "kind")) {
        domain_line = e->line;
        try {
            cfg.kind = domain_kind_from_string(e->value);
        } catch (const std::exception& ex) {
            throw ConfigError("line " + std::to_string(e->line) + ": " + ex.what());
        }
    }
    cfg.d = cfg.kind == DomainKind::half_line ? 1 : 3;
    if (const Entry* e = get("domain", "d")) cfg.d = to_int(*e, "d");
    if (const Entry* e = get("domain", "R")) cfg.R = to_double(*e, "R");
    if (const Entry* e = get("domain", "x0")) cfg.x0 = to_double(*e, "x0");
    try {
        (void)cfg.domain();
    } catch (const std::exception& ex) {
        throw ConfigError("line " + std::to_string(domain_line) + ": invalid domain: " +
                          ex.what());
    }

    if (const Entry* e = get("initial", "kind")) {
        if (e->value == "gaussian_shell")
            cfg.datum_kind = InitialDatum::Kind::gaussian_shell;
        else if (e->value == "annulus")
            cfg.datum_kind = InitialDatum::Kind::annulus;
        else if (e->value == "point_approx")
            cfg.datum_kind = InitialDatum::Kind::point_approx;
        else
            throw ConfigError("line " + std::to_string(e->line) + ": unknown initial kind '" +
                              e->value + "'");
    } else if (cfg.kind != DomainKind::half_line) {
        cfg.datum_kind = InitialDatum::Kind::gaussian_shell;
    }
    if (const Entry* e = get("initial", "center")) cfg.center = to_double(*e, "center");
    if (const Entry* e = get("initial", "width")) cfg.width = to_double(*e, "width");
    if (const Entry* e = get("initial", "mass")) cfg.mass = to_double(*e, "mass");
    if (const Entry* e = get("initial", "r1")) cfg.r1 = to_double(*e, "r1");
    if (const Entry* e = get("initial", "r2")) cfg.r2 = to_double(*e, "r2");
    if (const Entry* e = get("initial", "height")) cfg.height = to_double(*e, "height");
    if (const Entry* e = get("initial", "location")) cfg.location = to_double(*e, "location");
    if (const Entry* e = get("initial", "epsilon")) cfg.epsilon = to_double(*e, "epsilon");
    try {
        (void)cfg.datum();
    } catch (const std::exception& ex) {
        throw ConfigError(std::string("invalid [initial] section: ") + ex.what());
    }

    if (const Entry* e = get("time", "t0")) cfg.t0 = to_double(*e, "t0");
    if (const Entry* e = get("time", "t_final")) cfg.t_final = to_double(*e, "t_final");
    if (const Entry* e = get("time", "ratio")) cfg.ratio = to_double(*e, "ratio");
    if (const Entry* e = get("time", "dt")) cfg.dt = to_double(*e, "dt");
    if (const Entry* e = get("time", "n")) cfg.n = to_int(*e, "n");
    if (const Entry* e = get("time", "r_max")) cfg.r_max = to_double(*e, "r_max");
    if (!(cfg.t0 > 0.0) || !(cfg.t_final > cfg.t0) || !(cfg.ratio > 1.0))
        throw ConfigError("[time] requires 0 < t0 < t_final and ratio > 1");
    if (cfg.n < 16) throw ConfigError("[time] requires n >= 16");

    if (const Entry* e = get("output", "dir")) cfg.dir = e->value;
    if (const Entry* e = get("output", "formats")) cfg.formats = e->value;

    if (const Entry* e = get("lsi", "tau_list")) cfg.tau_list = to_list(*e, "tau_list");
    if (const Entry* e = get("lsi", "c_assembly")) cfg.c_assembly = to_double(*e, "c_assembly");
    if (const Entry* e = get("lsi", "poincare_n")) cfg.poincare_n = to_int(*e, "poincare_n");
    if (!(cfg.c_assembly > 0.0)) throw ConfigError("[lsi] c_assembly must be positive");
    for (double tau : cfg.tau_list)
        if (tau < 0.0) throw ConfigError("[lsi] tau_list entries must be >= 0");

    return cfg;
}

ExteriorDomain RunConfig::domain() const {
    const double param = kind == DomainKind::ball_complement ? R : x0;
    return make_domain(kind, d, param);
}

InitialDatum RunConfig::datum() const {
    switch (datum_kind) {
        case InitialDatum::Kind::gaussian_shell:
            return InitialDatum::make_gaussian_shell(center, width, mass);
        case InitialDatum::Kind::annulus:
            return InitialDatum::make_annulus(r1, r2, height);
        case InitialDatum::Kind::point_approx:
            return InitialDatum::make_point_approx(location, epsilon);
    }
    throw ConfigError("invalid initial datum kind");
}

std::vector<double> RunConfig::solve_times() const {
    std::vector<double> times;
    for (double t = t0; t < t_final * (1.0 - 1e-12); t *= ratio) times.push_back(t);
    times.push_back(t_final);
    return times;
}

double RunConfig::resolved_r_max() const {
    if (r_max > 0.0) return r_max;
    return default_r_max(domain(), datum(), t_final);
}

double RunConfig::resolved_dt() const {
    if (dt > 0.0) return dt;
    return (resolved_r_max() - domain().boundary()) / (n - 1);
}

}  // namespace ehl
