// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "anmimo/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "anmimo/an_scheme.hpp"
#include "anmimo/channel.hpp"

namespace anmimo {

SweepVariable sweep_variable_from_string(const std::string &name) {
    static const std::map<std::string, SweepVariable> table{
        {"snr_db", SweepVariable::snr_db},   {"r_antennas", SweepVariable::r_antennas},
        {"d_bob", SweepVariable::d_bob},     {"d_eve", SweepVariable::d_eve},
        {"aoa_bob", SweepVariable::aoa_bob}, {"aoa_eve", SweepVariable::aoa_eve},
        {"ras_bob", SweepVariable::ras_bob}, {"ras_eve", SweepVariable::ras_eve}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown sweep variable: " + name);
    return it->second;
}

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::snr_db: return "snr_db";
        case SweepVariable::r_antennas: return "r_antennas";
        case SweepVariable::d_bob: return "d_bob";
        case SweepVariable::d_eve: return "d_eve";
        case SweepVariable::aoa_bob: return "aoa_bob";
        case SweepVariable::aoa_eve: return "aoa_eve";
        case SweepVariable::ras_bob: return "ras_bob";
        case SweepVariable::ras_eve: return "ras_eve";
    }
    return "unknown";
}

void SweepSpec::validate() const {
    if (grid.empty()) throw std::invalid_argument("SweepSpec: grid must be nonempty");
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("SweepSpec: grid must be strictly increasing");
    if (s1_values.empty()) throw std::invalid_argument("SweepSpec: s1_values must be nonempty");
    if (methods.empty()) throw std::invalid_argument("SweepSpec: methods must be nonempty");
    const bool has_mc =
        std::find(methods.begin(), methods.end(), RateMethod::monte_carlo) != methods.end();
    if (has_mc && trials < 1000)
        throw std::invalid_argument("SweepSpec: monte-carlo sweeps need trials >= 1000");
    quad.validate();
}

SystemConfig apply_sweep_value(const SweepSpec &spec, double value, int s1) {
    SystemConfig c = spec.base;
    switch (spec.variable) {
        case SweepVariable::snr_db: c = c.with_snr_db(value); break;
        case SweepVariable::r_antennas: c.r = static_cast<int>(std::lround(value)); break;
        case SweepVariable::d_bob: c.bob_corr.spacing = value; break;
        case SweepVariable::d_eve: c.eve_corr.spacing = value; break;
        case SweepVariable::aoa_bob: c.bob_corr.mean_aoa_deg = value; break;
        case SweepVariable::aoa_eve: c.eve_corr.mean_aoa_deg = value; break;
        case SweepVariable::ras_bob: c.bob_corr.ras_deg = value; break;
        case SweepVariable::ras_eve: c.eve_corr.ras_deg = value; break;
    }
    c.s1 = s1;
    c.s2 = c.t - s1;
    return c;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec, int jobs, bool timing) {
    spec.validate();

    struct Task {
        size_t row;
        size_t point_idx, s1_idx;
        double value;
        int s1;
        RateMethod method;
    };
    std::vector<Task> tasks;
    for (size_t p = 0; p < spec.grid.size(); ++p)
        for (size_t s = 0; s < spec.s1_values.size(); ++s)
            for (RateMethod m : spec.methods)
                tasks.push_back({tasks.size(), p, s, spec.grid[p], spec.s1_values[s], m});

    std::vector<SweepRow> rows(tasks.size());

    auto run_task = [&](const Task &task) {
        SweepRow row;
        row.value = task.value;
        row.s1 = task.s1;
        row.method = task.method;
        const auto start = std::chrono::steady_clock::now();
        try {
            const SystemConfig config = apply_sweep_value(spec, task.value, task.s1);
            switch (task.method) {
                case RateMethod::exact:
                    row.rate = exact_ergodic_secrecy_rate(config, spec.quad).secrecy_rate;
                    break;
                case RateMethod::approx:
                    row.rate = approx_ergodic_secrecy_rate(config).secrecy_rate;
                    break;
                case RateMethod::monte_carlo: {
                    RngStream rng(spec.seed, mix_stream(task.point_idx, task.s1_idx));
                    const MonteCarloResult mc = monte_carlo_secrecy(config, spec.trials, rng);
                    row.rate = mc.mean;
                    row.std_error = mc.std_error;
                    break;
                }
            }
        } catch (const std::exception &ex) {
            row.rate = std::numeric_limits<double>::quiet_NaN();
            row.std_error.reset();
            row.error = ex.what();
        }
        if (timing)
            row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        rows[task.row] = std::move(row);
    };

    if (jobs <= 1) {
        for (const Task &t : tasks) run_task(t);
    } else {
        std::atomic<size_t> next{0};
        const int workers = static_cast<int>(std::min<size_t>(jobs, tasks.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(tasks[i]);
            });
        for (auto &th : pool) th.join();
    }
    return rows;
}

namespace {

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Short machine-friendly tag from an exception message.
std::string error_tag(const std::string &msg) {
    std::string tag = "error:";
    for (char c : msg) {
        if (c == ',' || c == '\n') break;
        tag += (c == ' ') ? '_' : c;
        if (tag.size() >= 60) break;
    }
    return tag;
}

} // namespace

void write_csv(std::ostream &os, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    os << "variable,value,s1,method,rate_bits,stderr,wall_ms\n";
    const std::string var = to_string(spec.variable);
    for (const SweepRow &row : rows) {
        os << var << ',' << format_g9(row.value) << ',' << row.s1 << ','
           << to_string(row.method) << ',';
        if (!row.error.empty())
            os << "nan," << error_tag(row.error);
        else {
            os << format_g9(row.rate) << ',';
            if (row.std_error) os << format_g9(*row.std_error);
        }
        os << ',' << row.wall_ms << '\n';
    }
}

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// Grid syntax: either "v1,v2,..." or "start:step:stop" (stop inclusive up to
// half a step of slack).
std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument("grid range must be start:step:stop");
        const double start = std::stod(parts[0]), step = std::stod(parts[1]),
                     stop = std::stod(parts[2]);
        if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
        for (double v = start; v <= stop + 0.5 * step; v += step) grid.push_back(v);
    } else {
        for (const auto &p : split(text, ',')) grid.push_back(std::stod(p));
    }
    return grid;
}

bool parse_bool(const std::string &v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("expected a boolean, got: " + v);
}

} // namespace

SweepSpec parse_recipe(std::istream &in, const std::string &section) {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string current; // unnamed section is ""
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            current = trim(line.substr(1, line.size() - 2));
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("recipe line is not key=value: " + line);
        sections[current][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    const std::map<std::string, std::string> *kv = nullptr;
    if (!section.empty()) {
        auto it = sections.find(section);
        if (it == sections.end())
            throw std::invalid_argument("recipe has no section named " + section);
        kv = &it->second;
    } else if (sections.size() == 1) {
        kv = &sections.begin()->second;
    } else {
        throw std::invalid_argument("recipe has several sections; pick one with --section");
    }

    SweepSpec spec;
    bool have_variable = false, have_grid = false;
    for (const auto &[key, value] : *kv) {
        if (key == "variable") {
            spec.variable = sweep_variable_from_string(value);
            have_variable = true;
        } else if (key == "grid") {
            spec.grid = parse_grid(value);
            have_grid = true;
        } else if (key == "s1_values") {
            spec.s1_values.clear();
            for (const auto &p : split(value, ',')) spec.s1_values.push_back(std::stoi(p));
        } else if (key == "methods") {
            spec.methods.clear();
            for (const auto &p : split(value, ',')) {
                if (p == "exact") spec.methods.push_back(RateMethod::exact);
                else if (p == "approx") spec.methods.push_back(RateMethod::approx);
                else if (p == "monte-carlo") spec.methods.push_back(RateMethod::monte_carlo);
                else throw std::invalid_argument("unknown method: " + p);
            }
        } else if (key == "trials") {
            spec.trials = std::stol(value);
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else if (key == "tolerance") {
            spec.quad.tolerance = std::stod(value);
        } else if (key == "t") {
            spec.base.t = std::stoi(value);
        } else if (key == "r") {
            spec.base.r = std::stoi(value);
        } else if (key == "e") {
            spec.base.e = std::stoi(value);
        } else if (key == "snr_db") {
            spec.base = spec.base.with_snr_db(std::stod(value));
        } else if (key == "s1") {
            spec.base.s1 = std::stoi(value);
        } else if (key == "d_bob") {
            spec.base.bob_corr.spacing = std::stod(value);
        } else if (key == "aoa_bob") {
            spec.base.bob_corr.mean_aoa_deg = std::stod(value);
        } else if (key == "ras_bob") {
            spec.base.bob_corr.ras_deg = std::stod(value);
        } else if (key == "d_eve") {
            spec.base.eve_corr.spacing = std::stod(value);
        } else if (key == "aoa_eve") {
            spec.base.eve_corr.mean_aoa_deg = std::stod(value);
        } else if (key == "ras_eve") {
            spec.base.eve_corr.ras_deg = std::stod(value);
        } else if (key == "eve_corr_known") {
            spec.base.eve_corr_known = parse_bool(value);
        } else {
            throw std::invalid_argument("unknown recipe key: " + key);
        }
    }
    if (!have_variable) throw std::invalid_argument("recipe is missing `variable`");
    if (!have_grid) throw std::invalid_argument("recipe is missing `grid`");
    if (spec.s1_values.empty()) spec.s1_values = {spec.base.s1};
    spec.base.s2 = spec.base.t - spec.base.s1;
    return spec;
}

SweepSpec load_recipe(const std::string &path, const std::string &section) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open recipe file: " + path);
    return parse_recipe(in, section);
}

ValidationReport validate_config(const SystemConfig &config, long trials, uint64_t seed,
                                 const QuadratureSpec &quad, int jobs) {
    if (trials < 10000) throw std::invalid_argument("validate_config: trials must be >= 10000");
    config.validate();

    ValidationReport report;
    report.pass = true;
    const int n = std::min(config.t, config.r);
    for (int s1 = 1; s1 <= n; ++s1) {
        const SystemConfig c = config.with_s1(s1);
        ValidationEntry entry;
        entry.s1 = s1;
        entry.exact_rate = exact_ergodic_secrecy_rate(c, quad).unclamped();
        RngStream rng(seed, mix_stream(0x76616c6964ULL, static_cast<uint64_t>(s1)));
        const MonteCarloResult mc = monte_carlo_secrecy(c, trials, rng, jobs);
        entry.mc_mean = mc.unclamped_mean;
        entry.mc_std_error = mc.unclamped_std_error;
        entry.z = (entry.exact_rate - entry.mc_mean) / entry.mc_std_error;
        entry.pass = std::abs(entry.z) <= 3.0;
        report.pass = report.pass && entry.pass;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace anmimo
