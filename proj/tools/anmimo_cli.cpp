// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "anmimo/an_scheme.hpp"
#include "anmimo/rate.hpp"
#include "anmimo/sweep.hpp"
#include "anmimo/wishart.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRowError = 2;

struct CommonOpts {
    std::string recipe;
    std::string section;
    std::optional<uint64_t> seed;
    std::optional<long> trials;
    std::optional<double> tolerance;
    int jobs = 1;
    std::string out;
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_recipe = true) {
    if (with_recipe) {
        cmd->add_option("--recipe", o.recipe, "recipe file (key=value, optional [sections])")
            ->required();
        cmd->add_option("--section", o.section, "recipe section to use");
    }
    cmd->add_option("--seed", o.seed, "RNG seed (overrides recipe)");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials (overrides recipe)");
    cmd->add_option("--tolerance", o.tolerance, "quadrature tolerance (overrides recipe)");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "output path (default: stdout)");
}

anmimo::SweepSpec load_spec(const CommonOpts &o) {
    anmimo::SweepSpec spec = anmimo::load_recipe(o.recipe, o.section);
    if (o.seed) spec.seed = *o.seed;
    if (o.trials) spec.trials = *o.trials;
    if (o.tolerance) spec.quad.tolerance = *o.tolerance;
    return spec;
}

std::ostream &open_out(const std::string &path, std::ofstream &file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary); // LF endings exactly as written
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

int cmd_sweep(const CommonOpts &o, bool timing) {
    const anmimo::SweepSpec spec = load_spec(o);
    const auto rows = anmimo::run_sweep(spec, o.jobs, timing);
    std::ofstream file;
    anmimo::write_csv(open_out(o.out, file), spec, rows);
    for (const auto &row : rows)
        if (!row.error.empty()) {
            std::cerr << "row error at value=" << row.value << " s1=" << row.s1 << ": "
                      << row.error << "\n";
            return kExitRowError;
        }
    return kExitOk;
}

int cmd_validate(const CommonOpts &o) {
    anmimo::SweepSpec spec = load_spec(o);
    const long trials = spec.trials;
    const anmimo::ValidationReport report =
        anmimo::validate_config(spec.base, trials, spec.seed, spec.quad, o.jobs);

    std::ofstream file;
    std::ostream &os = open_out(o.out, file);
    os << "s1,exact_bits,mc_mean_bits,mc_stderr,z,pass\n";
    char buf[160];
    for (const auto &entry : report.entries) {
        std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g,%.9g,%.3f,%s\n", entry.s1, entry.exact_rate,
                      entry.mc_mean, entry.mc_std_error, entry.z, entry.pass ? "yes" : "no");
        os << buf;
    }
    os << (report.pass ? "# all s1 within 3 standard errors\n"
                       : "# MISMATCH: some s1 beyond 3 standard errors\n");
    return report.pass ? kExitOk : kExitRowError;
}

int cmd_search_s1(const CommonOpts &o, std::optional<double> snr_db) {
    anmimo::SweepSpec spec = load_spec(o);
    anmimo::SystemConfig base = spec.base;
    if (snr_db) base = base.with_snr_db(*snr_db);
    const anmimo::S1Search result = anmimo::search_best_s1(base, spec.quad);

    std::ofstream file;
    std::ostream &os = open_out(o.out, file);
    os << "s1,rate_bits\n";
    char buf[64];
    for (size_t i = 0; i < result.rates.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.9g\n", i + 1, result.rates[i]);
        os << buf;
    }
    os << "# best s1 = " << result.best_s1 << "\n";
    return kExitOk;
}

struct PdfDumpOpts {
    int antennas = 4;
    double spacing = 0.8;
    double aoa = 30.0;
    double ras = 10.0;
    int b = 6;
    int points = 400;
    double x_max = 0.0;
    std::string out_prefix = "pdf";
};

int cmd_pdf_dump(const PdfDumpOpts &o) {
    anmimo::CorrelationSpec spec{o.antennas, o.spacing, o.aoa, o.ras};
    const anmimo::CorrelationMatrix R = anmimo::build_correlation(spec);
    const anmimo::WishartParams params = anmimo::WishartParams::from_correlation(R, o.b);
    const double x_max = o.x_max > 0 ? o.x_max : anmimo::density_tail_bound(params);

    for (int k = 1; k <= params.n; ++k) {
        const std::string path = o.out_prefix + "_k" + std::to_string(k) + ".txt";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        anmimo::EigenvalueDensity density{params, k};
        char buf[80];
        for (int i = 0; i <= o.points; ++i) {
            const double x = x_max * i / o.points;
            std::snprintf(buf, sizeof(buf), "%.9g %.9g\n", x,
                          anmimo::eigenvalue_pdf(density, x));
            out << buf;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"ergodic secrecy rates of artificial-noise MIMO systems under receiver-side "
                 "correlated Rayleigh fading"};
    app.require_subcommand(1);

    CommonOpts sweep_opts;
    bool timing = false;
    auto *sweep = app.add_subcommand("sweep", "run a parameter sweep, emit CSV");
    add_common(sweep, sweep_opts);
    sweep->add_flag("--timing", timing, "fill wall_ms with real timings (breaks byte-stability)");

    CommonOpts validate_opts;
    auto *validate = app.add_subcommand("validate", "exact-vs-Monte-Carlo cross check");
    add_common(validate, validate_opts);

    CommonOpts search_opts;
    std::optional<double> search_snr;
    auto *search = app.add_subcommand("search-s1", "one-dimensional search over message streams");
    add_common(search, search_opts);
    search->add_option("--snr-db", search_snr, "override the recipe's transmit SNR");

    PdfDumpOpts pdf_opts;
    auto *pdf = app.add_subcommand("pdf-dump", "tabulate marginal eigenvalue densities");
    pdf->add_option("--antennas", pdf_opts.antennas, "correlated-side dimension a")
        ->check(CLI::PositiveNumber);
    pdf->add_option("--spacing", pdf_opts.spacing, "normalized antenna spacing d");
    pdf->add_option("--aoa", pdf_opts.aoa, "mean angle of arrival, degrees");
    pdf->add_option("--ras", pdf_opts.ras, "receive angle spread, degrees");
    pdf->add_option("--b", pdf_opts.b, "free-side dimension b")->check(CLI::PositiveNumber);
    pdf->add_option("--points", pdf_opts.points, "grid points per table")
        ->check(CLI::PositiveNumber);
    pdf->add_option("--x-max", pdf_opts.x_max, "table upper limit (default: tail bound)");
    pdf->add_option("--out", pdf_opts.out_prefix, "output file prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_opts, timing);
        if (validate->parsed()) return cmd_validate(validate_opts);
        if (search->parsed()) return cmd_search_s1(search_opts, search_snr);
        if (pdf->parsed()) return cmd_pdf_dump(pdf_opts);
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
