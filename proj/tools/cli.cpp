/*
   Copyright 2026 The falseclaim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>

#include "falseclaim/calibrate.hpp"
#include "falseclaim/clf_model.hpp"
#include "falseclaim/error.hpp"
#include "falseclaim/grid.hpp"
#include "falseclaim/io/audit.hpp"
#include "falseclaim/io/csv.hpp"
#include "falseclaim/io/grid_io.hpp"
#include "falseclaim/io/reference_csv.hpp"
#include "falseclaim/io/seed_variance.hpp"
#include "falseclaim/seg_model.hpp"
#include "falseclaim/task.hpp"

namespace falseclaim::cli {

namespace {

using io::format_fixed;

struct GlobalOptions {
    std::uint64_t seed = clf::kDefaultSeed;
    unsigned workers = 0;
};

/// --delta sets both methods; --delta-a / --delta-b override one side.
struct DeltaOptions {
    double both = 0.0;
    std::optional<double> a;
    std::optional<double> b;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--delta", both, "seed-variance SD for both methods")
            ->capture_default_str();
        cmd.add_option("--delta-a", a, "seed-variance SD of method A");
        cmd.add_option("--delta-b", b, "seed-variance SD of method B");
    }
    double delta_a() const { return a.value_or(both); }
    double delta_b() const { return b.value_or(both); }
};

struct SegOptions {
    double s = seg::kDefaultSpread;
    std::optional<double> s_a;
    std::optional<double> s_b;
    double r = seg::kDefaultCongruence;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--s", s, "per-case score SD of both methods")->capture_default_str();
        cmd.add_option("--s-a", s_a, "per-case score SD of method A");
        cmd.add_option("--s-b", s_b, "per-case score SD of method B");
        cmd.add_option("--r", r, "paired score correlation r_AB")->capture_default_str();
    }
    seg::SegParams params(const DeltaOptions& d) const {
        return {s_a.value_or(s), s_b.value_or(s), r, d.delta_a(), d.delta_b()};
    }
};

struct ClfOptions {
    double congruence = clf::kDefaultCongruence;
    std::vector<double> prior = {1.0, 1.0, 1.0, 1.0};
    std::int64_t mc_samples = clf::kDefaultMcSamples;
    std::int64_t outer_samples = clf::kDefaultOuterSamples;
    std::string inner = "exact";
    std::string counts = "expected";

    void add_to(CLI::App& cmd, bool with_congruence = true) {
        if (with_congruence) {
            cmd.add_option("--congruence", congruence, "P(both classifiers correct), p11")
                ->capture_default_str();
        }
        cmd.add_option("--prior", prior, "Dirichlet prior weights (11,10,01,00)")
            ->expected(4)
            ->delimiter(',')
            ->capture_default_str();
        cmd.add_option("--mc-samples", mc_samples, "Dirichlet draws for the MC inner path")
            ->capture_default_str();
        cmd.add_option("--outer-samples", outer_samples, "accuracy perturbation draws")
            ->capture_default_str();
        cmd.add_option("--inner", inner, "posterior evaluation: exact or mc")
            ->check(CLI::IsMember({"exact", "mc"}))
            ->capture_default_str();
        cmd.add_option("--counts", counts,
                       "posterior table: expected (real-valued) or rounded (integer)")
            ->check(CLI::IsMember({"expected", "rounded"}))
            ->capture_default_str();
    }
    clf::ClfParams params(const DeltaOptions& d, const GlobalOptions& g) const {
        clf::ClfParams p;
        p.congruence_p11 = congruence;
        p.prior = {prior[0], prior[1], prior[2], prior[3]};
        p.delta_a = d.delta_a();
        p.delta_b = d.delta_b();
        p.mc_samples = mc_samples;
        p.outer_samples = outer_samples;
        p.seed = g.seed;
        p.inner = inner == "mc" ? clf::InnerPath::MonteCarlo : clf::InnerPath::Exact;
        p.counts = counts == "rounded" ? clf::CountMode::Rounded : clf::CountMode::Expected;
        p.workers = g.workers;
        return p;
    }
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

void require_claim(double a, double b) {
    if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
        throw DomainError("observed scores must lie in [0, 1]");
    }
    if (a < b) throw DomainError("an outperformance claim requires A >= B");
}

void print_probability(std::ostream& out, double p) {
    out << "p_false = " << format_fixed(p, 4) << '\n';
    out << "verdict: " << verdict(p) << '\n';
}

std::string optional_fixed(const std::optional<double>& v) {
    return v ? format_fixed(*v, 4) : std::string("-");
}

// ---------------------------------------------------------------- prob

struct ProbSeg {
    double mu_a = 0.0, mu_b = 0.0;
    std::int64_t n = 0;
    SegOptions model;
    DeltaOptions delta;
};

struct ProbClf {
    double acc_a = 0.0, acc_b = 0.0;
    std::int64_t n = 0;
    ClfOptions model;
    DeltaOptions delta;
};

void run_prob_seg(const ProbSeg& o, std::ostream& out) {
    require_claim(o.mu_a, o.mu_b);
    const seg::SegComparison cmp{o.mu_a, o.mu_b, o.n};
    const auto params = o.model.params(o.delta);
    const auto est = seg::seg_false_claim_prob(cmp, params);
    print_probability(out, est.prob.value());
    if (est.degenerate) out << "note: zero standard error, boundary value returned\n";
    if (params.delta_a > 0.0 || params.delta_b > 0.0) {
        auto base = params;
        base.delta_a = base.delta_b = 0.0;
        out << "p_false (no seed variance) = "
            << format_fixed(seg::seg_false_claim_prob(cmp, base).prob.value(), 4) << '\n';
    }
}

void run_prob_clf(const ProbClf& o, const GlobalOptions& g, std::ostream& out) {
    require_claim(o.acc_a, o.acc_b);
    const clf::ClfComparison cmp{o.acc_a, o.acc_b, o.n};
    const auto params = o.model.params(o.delta, g);
    const auto est = clf::clf_false_claim_underspec(cmp, params);
    print_probability(out, est.prob.value());
    const auto table = clf::impute_table(o.acc_a, o.acc_b, params.congruence_p11, o.n);
    out << "table (n11,n10,n01,n00) = (" << table.n11 << ',' << table.n10 << ',' << table.n01
        << ',' << table.n00 << ")\n";
    if (params.delta_a > 0.0 || params.delta_b > 0.0) {
        auto base = params;
        base.delta_a = base.delta_b = 0.0;
        out << "p_false (no seed variance) = "
            << format_fixed(clf::clf_false_claim_underspec(cmp, base).prob.value(), 4) << '\n';
        out << "mc standard error = " << format_fixed(est.std_error, 4) << '\n';
    }
}

// ---------------------------------------------------------------- grid

struct GridOptions {
    std::string task;
    SegOptions seg_model;
    ClfOptions clf_model;
    DeltaOptions delta;
    double baseline = clf::kDefaultBaselineAccuracy;
    std::int64_t n_min = 10, n_max = 10000;
    std::size_t n_count = 30;
    double d_min = 0.0, d_max = 0.10;
    std::size_t d_count = 50;
    double threshold = kConcernThreshold;
    std::string out_path;
    std::string contour_path;
    std::string svg_path;
    std::string title;
    bool compare = false;
};

grid::GridSpec make_grid_spec(const GridOptions& o, const GlobalOptions& g) {
    grid::GridSpec spec;
    spec.task = parse_task(o.task);
    spec.n_values = grid::log_spaced_counts(o.n_min, o.n_max, o.n_count);
    spec.delta_values = grid::linear_values(o.d_min, o.d_max, o.d_count);
    spec.baseline = o.baseline;
    spec.seg_params = o.seg_model.params(o.delta);
    spec.clf_params = o.clf_model.params(o.delta, g);
    spec.clf_params.workers = 1;
    spec.threshold = o.threshold;
    spec.workers = g.workers;
    return spec;
}

void run_grid_cmd(const GridOptions& o, const GlobalOptions& g, std::ostream& out) {
    const auto spec = make_grid_spec(o, g);
    const auto result = grid::run_grid(spec);

    std::optional<grid::GridResult> baseline;
    if (o.compare) {
        auto base_spec = spec;
        base_spec.seg_params.delta_a = base_spec.seg_params.delta_b = 0.0;
        base_spec.clf_params.delta_a = base_spec.clf_params.delta_b = 0.0;
        baseline = grid::run_grid(base_spec);
    }

    {
        auto f = open_output(o.out_path);
        io::write_grid_csv(f, io::grid_records(result));
        finish_output(f, o.out_path);
    }
    if (!o.contour_path.empty()) {
        auto f = open_output(o.contour_path);
        io::write_contour_csv(f, io::contour_records(result));
        finish_output(f, o.contour_path);
    }
    if (!o.svg_path.empty()) {
        std::string title = o.title;
        if (title.empty()) {
            title = std::string(spec.task == Task::Segmentation ? "Segmentation" : "Classification") +
                    ", seed delta = " + io::format_double(spec.seed_delta());
        }
        auto f = open_output(o.svg_path);
        f << io::render_heatmap_svg(result, baseline ? &*baseline : nullptr, title);
        finish_output(f, o.svg_path);
    }

    out << "grid: " << task_name(spec.task) << ", " << spec.delta_values.size() << " x "
        << spec.n_values.size() << " cells, seed delta = " << format_fixed(spec.seed_delta(), 4)
        << '\n';
    if (baseline) {
        out << "n, contour_no_seed_variance, contour_with_seed_variance, shift\n";
        for (const auto& row : grid::compare_grids(*baseline, result)) {
            out << row.n << ", " << optional_fixed(row.baseline) << ", "
                << optional_fixed(row.underspec) << ", " << optional_fixed(row.shift) << '\n';
        }
    } else {
        out << "n, contour\n";
        for (std::size_t c = 0; c < result.n_values.size(); ++c) {
            out << result.n_values[c] << ", " << optional_fixed(result.contour[c]) << '\n';
        }
    }
}

// ----------------------------------------------------------- calibrate

struct CalibrateOptions {
    std::string task;
    std::string refs_path;
    std::string trace_path;
    double s_min = 0.05, s_max = 0.5;
    std::int64_t steps = 451;
    bool refine = false;
    double r = seg::kDefaultCongruence;
    ClfOptions clf_model;
    DeltaOptions delta;
};

void run_calibrate_cmd(const CalibrateOptions& o, const GlobalOptions& g, std::ostream& out) {
    calib::CalibrationSpec spec;
    spec.task = parse_task(o.task);
    spec.s_min = o.s_min;
    spec.s_max = o.s_max;
    spec.steps = o.steps;
    spec.refine = o.refine;
    spec.seg_fixed = seg::SegParams{seg::kDefaultSpread, seg::kDefaultSpread, o.r,
                                    o.delta.delta_a(), o.delta.delta_b()};
    spec.clf_fixed = o.clf_model.params(o.delta, g);
    spec.clf_fixed.workers = 1;
    spec.workers = g.workers;

    std::vector<calib::ReferencePoint> refs;
    {
        auto f = open_input(o.refs_path);
        refs = io::read_references(f);
    }
    const auto result = calib::calibrate_s(spec, refs);
    out << "s_best = " << format_fixed(result.s_best, 4) << '\n';
    char sse[32];
    std::snprintf(sse, sizeof sse, "%.4e", result.sse);
    out << "sse = " << sse << '\n';
    if (!o.trace_path.empty()) {
        auto f = open_output(o.trace_path);
        io::write_calibration_trace(f, result.trace);
        finish_output(f, o.trace_path);
    }
}

// --------------------------------------------------------------- audit

struct AuditCliOptions {
    std::string in_path;
    std::string out_path;
    double r = seg::kDefaultCongruence;
    ClfOptions clf_model;
};

int run_audit_cmd(const AuditCliOptions& o, const GlobalOptions& g, std::ostream& out,
                  std::ostream& err) {
    io::AuditOptions options;
    options.seg_congruence = o.r;
    options.clf = o.clf_model.params(DeltaOptions{}, g);
    options.clf.workers = 1;

    auto in = open_input(o.in_path);
    auto f = open_output(o.out_path);
    const auto report = io::run_audit(in, f, options);
    finish_output(f, o.out_path);

    for (const auto& e : report.errors) {
        err << o.in_path << ":" << e.line << ": " << e.message << '\n';
    }
    out << "audited " << report.rows << " rows, " << report.errors.size() << " invalid\n";
    return report.errors.empty() ? kExitOk : kExitPartial;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"False outperformance claim probabilities with seed variance", "falseclaim"};
    app.set_config("--config", "", "read options from a TOML/INI file (flags override)");
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for every stochastic path")
        ->capture_default_str();
    app.add_option("--workers", global.workers, "threads (0 = all cores); never changes results")
        ->capture_default_str();

    // prob
    auto* prob = app.add_subcommand("prob", "false-claim probability for one comparison");
    prob->require_subcommand(1);
    ProbSeg prob_seg;
    auto* prob_seg_cmd = prob->add_subcommand("seg", "segmentation (mean Dice) comparison");
    prob_seg_cmd->add_option("--mu-a", prob_seg.mu_a, "mean score of claimed-better A")->required();
    prob_seg_cmd->add_option("--mu-b", prob_seg.mu_b, "mean score of B")->required();
    prob_seg_cmd->add_option("--n", prob_seg.n, "test-set size")->required();
    prob_seg.model.add_to(*prob_seg_cmd);
    prob_seg.delta.add_to(*prob_seg_cmd);

    ProbClf prob_clf;
    auto* prob_clf_cmd = prob->add_subcommand("clf", "classification (accuracy) comparison");
    prob_clf_cmd->add_option("--acc-a", prob_clf.acc_a, "accuracy of claimed-better A")->required();
    prob_clf_cmd->add_option("--acc-b", prob_clf.acc_b, "accuracy of B")->required();
    prob_clf_cmd->add_option("--n", prob_clf.n, "test-set size")->required();
    prob_clf.model.add_to(*prob_clf_cmd);
    prob_clf.delta.add_to(*prob_clf_cmd);

    // grid
    GridOptions grid_opts;
    auto* grid_cmd = app.add_subcommand("grid", "sweep (n, delta) and extract the threshold contour");
    grid_cmd->add_option("--task", grid_opts.task, "seg or clf")->required();
    grid_opts.seg_model.add_to(*grid_cmd);
    grid_opts.clf_model.add_to(*grid_cmd);
    grid_opts.delta.add_to(*grid_cmd);
    grid_cmd->add_option("--baseline", grid_opts.baseline, "classification accuracy of B")
        ->capture_default_str();
    grid_cmd->add_option("--n-min", grid_opts.n_min)->capture_default_str();
    grid_cmd->add_option("--n-max", grid_opts.n_max)->capture_default_str();
    grid_cmd->add_option("--n-count", grid_opts.n_count, "log-spaced n values")
        ->capture_default_str();
    grid_cmd->add_option("--d-min", grid_opts.d_min)->capture_default_str();
    grid_cmd->add_option("--d-max", grid_opts.d_max)->capture_default_str();
    grid_cmd->add_option("--d-count", grid_opts.d_count, "linear delta values")
        ->capture_default_str();
    grid_cmd->add_option("--threshold", grid_opts.threshold, "contour level")
        ->capture_default_str();
    grid_cmd->add_option("--out", grid_opts.out_path, "grid CSV path")->required();
    grid_cmd->add_option("--contour-out", grid_opts.contour_path, "contour CSV path");
    grid_cmd->add_option("--svg", grid_opts.svg_path, "heatmap SVG path");
    grid_cmd->add_option("--title", grid_opts.title, "heatmap title");
    grid_cmd->add_flag("--compare", grid_opts.compare,
                       "also run the zero-seed-variance grid (dashed contour, shift table)");

    // calibrate
    CalibrateOptions cal;
    auto* cal_cmd = app.add_subcommand("calibrate", "grid-search the spread s against references");
    cal_cmd->add_option("--task", cal.task, "seg or clf")->required();
    cal_cmd->add_option("--refs", cal.refs_path, "reference CSV (n,delta,target_prob)")
        ->required();
    cal_cmd->add_option("--trace", cal.trace_path, "per-candidate SSE CSV");
    cal_cmd->add_option("--s-min", cal.s_min)->capture_default_str();
    cal_cmd->add_option("--s-max", cal.s_max)->capture_default_str();
    cal_cmd->add_option("--steps", cal.steps)->capture_default_str();
    cal_cmd->add_flag("--refine", cal.refine, "one half-step pass around the optimum");
    cal_cmd->add_option("--r", cal.r, "segmentation r_AB")->capture_default_str();
    cal.clf_model.add_to(*cal_cmd);
    cal.delta.add_to(*cal_cmd);

    // audit
    AuditCliOptions audit;
    auto* audit_cmd = app.add_subcommand("audit", "annotate a CSV of reported comparisons");
    audit_cmd->add_option("--in", audit.in_path, "input CSV")->required();
    audit_cmd->add_option("--out", audit.out_path, "output CSV")->required();
    audit_cmd->add_option("--r", audit.r, "segmentation r_AB")->capture_default_str();
    audit.clf_model.add_to(*audit_cmd, false);

    auto* deltas_cmd = app.add_subcommand("deltas", "print the built-in seed-variance records");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    try {
        if (*prob_seg_cmd) {
            run_prob_seg(prob_seg, out);
        } else if (*prob_clf_cmd) {
            run_prob_clf(prob_clf, global, out);
        } else if (*grid_cmd) {
            run_grid_cmd(grid_opts, global, out);
        } else if (*cal_cmd) {
            run_calibrate_cmd(cal, global, out);
        } else if (*audit_cmd) {
            return run_audit_cmd(audit, global, out, err);
        } else if (*deltas_cmd) {
            io::print_seed_variance(out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitPartial;
    }
    return kExitOk;
}

}  // namespace falseclaim::cli
