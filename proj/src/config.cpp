#include "fracspec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "fracspec/format.hpp"

namespace fracspec {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_number(const std::string& key, const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || tok.empty())
        throw ConfigError(key + ": expected a number, got '" + tok + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& tok) {
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end != tok.c_str() + tok.size() || tok.empty())
        throw ConfigError(key + ": expected an integer, got '" + tok + "'");
    return static_cast<int>(v);
}

CoefficientFn parse_coefficient(const std::string& key, const std::string& value) {
    const auto toks = split_ws(value);
    if (toks.empty()) throw ConfigError(key + ": empty coefficient");
    if (toks[0] == "constant") {
        if (toks.size() != 2) throw ConfigError(key + ": constant takes exactly one value");
        return Constant{parse_number(key, toks[1])};
    }
    if (toks[0] == "poly") {
        if (toks.size() < 2) throw ConfigError(key + ": poly needs at least one coefficient");
        Polynomial p;
        for (size_t k = 1; k < toks.size(); ++k) p.coeffs.push_back(parse_number(key, toks[k]));
        return p;
    }
    if (toks[0] == "piecewise") {
        PiecewiseConstant p;
        size_t k = 1;
        for (; k < toks.size() && toks[k] != ":"; ++k)
            p.breakpoints.push_back(parse_number(key, toks[k]));
        if (k == toks.size()) throw ConfigError(key + ": piecewise needs a ':' separator");
        for (++k; k < toks.size(); ++k) p.values.push_back(parse_number(key, toks[k]));
        try {
            coeff_validate(p, key.c_str());
        } catch (const std::exception& ex) {
            throw ConfigError(ex.what());
        }
        return p;
    }
    throw ConfigError(key + ": unknown coefficient kind '" + toks[0] +
                      "' (expected constant, poly or piecewise)");
}

std::string serialize_coefficient(const CoefficientFn& fn) {
    if (const auto* c = std::get_if<Constant>(&fn)) return "constant " + fmt_shortest(c->value);
    if (const auto* p = std::get_if<Polynomial>(&fn)) {
        std::string out = "poly";
        for (const double v : p->coeffs) out += " " + fmt_shortest(v);
        return out;
    }
    const auto& p = std::get<PiecewiseConstant>(fn);
    std::string out = "piecewise";
    for (const double b : p.breakpoints) out += " " + fmt_shortest(b);
    out += " :";
    for (const double v : p.values) out += " " + fmt_shortest(v);
    return out;
}

}  // namespace

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
        case OutputFormat::plot_data: return "plot-data";
        case OutputFormat::svg: return "svg";
    }
    return "?";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "plot-data") return OutputFormat::plot_data;
    if (name == "svg") return OutputFormat::svg;
    throw ConfigError("formats: unknown format '" + name +
                      "' (expected csv, json, plot-data or svg)");
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    config.experiment.problem.source = Constant{0.0};
    bool have_alpha = false, have_r = false, have_n_values = false;

    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "problem" && section != "experiment" && section != "output")
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qkey = "[" + section + "] " + key;

        if (section == "problem") {
            if (key == "alpha") {
                config.experiment.problem.alpha = parse_number(qkey, value);
                have_alpha = true;
            } else if (key == "r") {
                config.experiment.problem.r = parse_number(qkey, value);
                have_r = true;
            } else if (key == "b") {
                config.experiment.problem.advection = parse_coefficient(qkey, value);
            } else if (key == "c") {
                config.experiment.problem.reaction = parse_coefficient(qkey, value);
            } else if (key == "f") {
                config.experiment.problem.source = parse_coefficient(qkey, value);
            } else {
                throw ConfigError(qkey + ": unknown key");
            }
        } else if (section == "experiment") {
            if (key == "N_values") {
                config.experiment.n_values.clear();
                for (const auto& tok : split_ws(value))
                    config.experiment.n_values.push_back(parse_int(qkey, tok));
                have_n_values = true;
            } else if (key == "N_ref") {
                config.experiment.n_ref = parse_int(qkey, value);
            } else if (key == "nodes") {
                config.experiment.quad_nodes = parse_int(qkey, value);
            } else if (key == "f_regularity") {
                config.experiment.f_regularity = parse_number(qkey, value);
            } else {
                throw ConfigError(qkey + ": unknown key");
            }
        } else if (section == "output") {
            if (key == "dir") {
                config.out_dir = value;
            } else if (key == "formats") {
                config.formats.clear();
                for (const auto& tok : split_ws(value)) config.formats.push_back(parse_format(tok));
            } else if (key == "grid") {
                config.grid_points = parse_int(qkey, value);
            } else {
                throw ConfigError(qkey + ": unknown key");
            }
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                              "' outside of any section");
        }
    }

    if (!have_alpha) throw ConfigError("[problem] alpha: missing required key");
    if (!have_r) throw ConfigError("[problem] r: missing required key");
    if (!have_n_values) throw ConfigError("[experiment] N_values: missing required key");
    if (config.grid_points < 2) throw ConfigError("[output] grid: must be >= 2");
    if (config.formats.empty()) throw ConfigError("[output] formats: must name at least one format");
    if (config.out_dir.empty()) throw ConfigError("[output] dir: must not be empty");
    try {
        config.experiment.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& config) {
    const auto& e = config.experiment;
    std::string out;
    out += "[problem]\n";
    out += "alpha = " + fmt_shortest(e.problem.alpha) + "\n";
    out += "r = " + fmt_shortest(e.problem.r) + "\n";
    out += "b = " + serialize_coefficient(e.problem.advection) + "\n";
    out += "c = " + serialize_coefficient(e.problem.reaction) + "\n";
    out += "f = " + serialize_coefficient(e.problem.source) + "\n";
    out += "\n[experiment]\n";
    out += "N_values =";
    for (const int n : e.n_values) out += " " + std::to_string(n);
    out += "\n";
    out += "N_ref = " + std::to_string(e.n_ref) + "\n";
    out += "nodes = " + std::to_string(e.quad_nodes) + "\n";
    out += "f_regularity = " + fmt_shortest(e.f_regularity) + "\n";
    out += "\n[output]\n";
    out += "dir = " + config.out_dir + "\n";
    out += "formats =";
    for (const auto f : config.formats) out += " " + format_name(f);
    out += "\n";
    out += "grid = " + std::to_string(config.grid_points) + "\n";
    return out;
}

}  // namespace fracspec
