#pragma once

// Flat key=value run configuration.  '#' starts a comment, blank lines are
// skipped, optional [section] headers prefix the keys that follow with
// "section.".  Unknown keys are an error.

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "swedg/run.hpp"

namespace swedg {

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

inline std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("bad section header at line " +
                                         std::to_string(lineno));
            section = detail::trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("expected key=value at line " + std::to_string(lineno));
        std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("empty key at line " + std::to_string(lineno));
        if (!section.empty()) key = section + "." + key;
        kv[key] = val;
    }
    return kv;
}

inline ProblemId parse_problem(const std::string& s) {
    if (s == "lake") return ProblemId::Lake;
    if (s == "vortex") return ProblemId::Vortex;
    if (s == "dambreak") return ProblemId::DamBreak;
    throw std::runtime_error("unknown problem '" + s + "'");
}

inline Scheme parse_scheme(const std::string& s) {
    if (s == "hybridized") return Scheme::Hybridized;
    if (s == "sbp-legendre") return Scheme::SbpLegendre;
    if (s == "sbp-lobatto") return Scheme::SbpLobatto;
    throw std::runtime_error("unknown scheme '" + s + "'");
}

inline Penalty parse_penalty(const std::string& s) {
    if (s == "ec") return Penalty::EntropyConservative;
    if (s == "lax-friedrichs") return Penalty::LaxFriedrichs;
    throw std::runtime_error("unknown penalty '" + s + "'");
}

inline const char* problem_name(ProblemId p) {
    switch (p) {
        case ProblemId::Lake: return "lake";
        case ProblemId::Vortex: return "vortex";
        case ProblemId::DamBreak: return "dambreak";
    }
    return "?";
}

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Hybridized: return "hybridized";
        case Scheme::SbpLegendre: return "sbp-legendre";
        case Scheme::SbpLobatto: return "sbp-lobatto";
    }
    return "?";
}

inline const char* penalty_name(Penalty p) {
    return p == Penalty::EntropyConservative ? "ec" : "lax-friedrichs";
}

inline void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    auto to_int = [](const std::string& k, const std::string& v) {
        size_t pos = 0;
        int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::runtime_error("bad integer for " + k);
        return r;
    };
    auto to_double = [](const std::string& k, const std::string& v) {
        size_t pos = 0;
        double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::runtime_error("bad number for " + k);
        return r;
    };
    for (const auto& [key, val] : kv) {
        if (key == "problem") cfg.problem = parse_problem(val);
        else if (key == "degree") cfg.degree = to_int(key, val);
        else if (key == "scheme") cfg.scheme = parse_scheme(val);
        else if (key == "penalty") cfg.penalty = parse_penalty(val);
        else if (key == "nx") cfg.nx = to_int(key, val);
        else if (key == "ny") cfg.ny = to_int(key, val);
        else if (key == "warp") cfg.warp = to_double(key, val);
        else if (key == "cfl") cfg.cfl = to_double(key, val);
        else if (key == "tfinal") cfg.tfinal = to_double(key, val);
        else if (key == "g") { cfg.g = to_double(key, val); cfg.g_explicit = true; }
        else if (key == "out_dir") cfg.out_dir = val;
        else if (key == "sbp_data_dir") cfg.sbp_data_dir = val;
        else if (key == "threads") cfg.threads = to_int(key, val);
        else if (key == "seed") cfg.seed = static_cast<unsigned>(to_int(key, val));
        else if (key == "sample_every") cfg.sample_every = to_int(key, val);
        else throw std::runtime_error("unknown config key '" + key + "'");
    }
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    RunConfig cfg;
    apply_config(cfg, parse_config(in));
    return cfg;
}

inline std::string describe_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "problem=" << problem_name(cfg.problem) << "\n"
        << "degree=" << cfg.degree << "\n"
        << "scheme=" << scheme_name(cfg.scheme) << "\n"
        << "penalty=" << penalty_name(cfg.penalty) << "\n"
        << "nx=" << cfg.nx << "\n"
        << "ny=" << cfg.ny << "\n"
        << "warp=" << cfg.warp << "\n"
        << "cfl=" << cfg.cfl << "\n"
        << "tfinal=" << cfg.tfinal << "\n"
        << "g=" << cfg.g << "\n"
        << "out_dir=" << cfg.out_dir << "\n"
        << "sbp_data_dir=" << cfg.sbp_data_dir << "\n"
        << "threads=" << cfg.threads << "\n"
        << "seed=" << cfg.seed << "\n"
        << "sample_every=" << cfg.sample_every << "\n";
    return out.str();
}

}  // namespace swedg
