// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_SWEEP_HPP
#define ANMIMO_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anmimo/rate.hpp"
#include "anmimo/system_config.hpp"

namespace anmimo {

enum class SweepVariable {
    snr_db,
    r_antennas,
    d_bob,
    d_eve,
    aoa_bob,
    aoa_eve,
    ras_bob,
    ras_eve,
};

SweepVariable sweep_variable_from_string(const std::string &name);
std::string to_string(SweepVariable v);

// One experiment: sweep a single scenario parameter over a grid, evaluating
// each requested method for each message-stream count. Everything needed to
// reproduce the run byte-for-byte is in here.
struct SweepSpec {
    SweepVariable variable = SweepVariable::snr_db;
    std::vector<double> grid;    // strictly increasing, nonempty
    std::vector<int> s1_values;  // nonempty
    SystemConfig base;
    std::vector<RateMethod> methods{RateMethod::exact};
    long trials = 100000;
    uint64_t seed = 1;
    QuadratureSpec quad;

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    int s1 = 1;
    RateMethod method = RateMethod::exact;
    double rate = 0.0;
    std::optional<double> std_error; // present only for monte-carlo
    long wall_ms = 0;
    std::string error; // empty on success; short tag otherwise
};

// The scenario at one grid point (grid value applied to the base config).
SystemConfig apply_sweep_value(const SweepSpec &spec, double value, int s1);

// One row per (grid point, s1, method), emitted in that nesting order. Rows
// whose evaluation throws carry the error tag and a NaN rate; the sweep
// continues. Monte Carlo streams derive from (seed, point and s1 indices),
// so identical specs reproduce identical rows regardless of `jobs`.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, int jobs = 1, bool timing = false);

// header: variable,value,s1,method,rate_bits,stderr,wall_ms
// 9 significant digits, LF line endings, stderr empty unless monte-carlo,
// error tags in the stderr column of NaN rows.
void write_csv(std::ostream &os, const SweepSpec &spec, const std::vector<SweepRow> &rows);

// INI-style key=value recipe, optionally with [section] headers; `section`
// empty selects the only/unnamed one.
SweepSpec parse_recipe(std::istream &in, const std::string &section = "");
SweepSpec load_recipe(const std::string &path, const std::string &section = "");

struct ValidationEntry {
    int s1 = 1;
    double exact_rate = 0.0;
    double mc_mean = 0.0;
    double mc_std_error = 0.0;
    double z = 0.0;
    bool pass = false; // |z| <= 3
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool pass = false;
};

// Exact-vs-simulation cross check on one scenario: for every s1 in
// 1..min(t, r), compares the exact unclamped rate against the Monte Carlo
// unclamped mean via the z-score.
ValidationReport validate_config(const SystemConfig &config, long trials, uint64_t seed,
                                 const QuadratureSpec &quad = {}, int jobs = 1);

} // namespace anmimo

#endif // ANMIMO_SWEEP_HPP
