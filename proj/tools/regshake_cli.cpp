#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <regshake/regshake.hpp>

namespace rs = regshake;

namespace {

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    return file;
}

rs::Partition partition_arg(const std::string& text) { return rs::Partition::parse(text); }

void landmarks_json(std::ostream& os, const rs::ShakeLandmarks& lm) {
    nlohmann::ordered_json j;
    j["alpha"] = lm.alpha;
    j["a"] = lm.a;
    j["x_minus"] = lm.x_minus;
    j["x_plus"] = lm.x_plus;
    j["s_alpha"] = lm.s_alpha;
    j["u_alpha"] = lm.u_alpha;
    os << j.dump(2) << '\n';
}

template <class F>
void limitshape_dump(const F& base, double alpha, double lo, double hi, double step,
                     const std::string& curve_out, const std::string& landmarks_out) {
    const rs::Shaken<F> sh = rs::shake(base, alpha);
    {
        std::ofstream file;
        std::ostream& os = open_sink(file, curve_out);
        os << "x,f,sh_f\n";
        for (double x = lo; x <= hi + 0.5 * step; x += step)
            os << rs::fmt12(x) << ',' << rs::fmt12(base.value(x)) << ',' << rs::fmt12(sh.eval(x))
               << '\n';
    }
    std::ofstream file;
    landmarks_json(open_sink(file, landmarks_out), sh.landmarks());
}

} // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact partition regularisation, Plancherel sampling, and shaken limit shapes"};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "draw Plancherel-random partitions");
    long long sample_n = 100;
    std::uint64_t sample_seed = 1;
    long long sample_trials = 1;
    long long sample_e = 0;
    sample->add_option("--n", sample_n, "number of boxes")->required();
    sample->add_option("--seed", sample_seed, "base seed");
    sample->add_option("--trials", sample_trials, "how many partitions to draw");
    sample->add_option("--e", sample_e, "also print the e-regularisation of each draw");
    sample->callback([&] {
        for (long long t = 0; t < sample_trials; ++t) {
            const auto seed = rs::derive_seed(sample_seed, static_cast<std::uint64_t>(sample_n),
                                              static_cast<std::uint64_t>(t));
            const rs::Partition lam = rs::sample_plancherel(sample_n, seed);
            std::cout << lam.to_string() << '\n';
            if (sample_e >= 2) std::cout << rs::regularise(lam, sample_e).to_string() << '\n';
        }
    });

    // regularise
    auto* reg = app.add_subcommand("regularise", "e-regularise a partition");
    std::string reg_partition;
    long long reg_e = 2;
    reg->add_option("--partition", reg_partition, "comma-separated parts, e.g. 4,4,2,1")
        ->required();
    reg->add_option("--e", reg_e, "ladder modulus, at least 2")->required();
    reg->callback([&] {
        std::cout << rs::regularise(partition_arg(reg_partition), reg_e).to_string() << '\n';
    });

    // profile
    auto* prof_cmd = app.add_subcommand("profile", "border profile of a partition as CSV");
    std::string prof_partition, prof_out;
    bool prof_rescaled = false;
    prof_cmd->add_option("--partition", prof_partition, "comma-separated parts")->required();
    prof_cmd->add_flag("--rescaled", prof_rescaled, "rescale both axes by sqrt(n)");
    prof_cmd->add_option("--out", prof_out, "output file, default stdout");
    prof_cmd->callback([&] {
        std::ofstream file;
        rs::profile_to_csv(rs::Profile::of(partition_arg(prof_partition)),
                           open_sink(file, prof_out), prof_rescaled);
    });

    // limitshape
    auto* lim = app.add_subcommand("limitshape", "limit curve, its shake, and landmarks");
    long long lim_e = 0;
    double lim_alpha = -1, lim_lo = -2.5, lim_hi = 2.5, lim_step = 1e-2;
    std::string lim_base = "omega", lim_curve_out, lim_landmarks_out;
    lim->add_option("--e", lim_e, "ladder modulus; sets alpha = 1 - 2/e");
    lim->add_option("--alpha", lim_alpha, "shaking direction in [0,1), overrides --e");
    lim->add_option("--base", lim_base, "omega or sigma")
        ->check(CLI::IsMember({"omega", "sigma"}));
    lim->add_option("--lo", lim_lo, "grid start");
    lim->add_option("--hi", lim_hi, "grid end");
    lim->add_option("--step", lim_step, "grid step");
    lim->add_option("--curve-out", lim_curve_out, "curve CSV file, default stdout");
    lim->add_option("--landmarks-out", lim_landmarks_out, "landmark JSON file, default stdout");
    lim->callback([&] {
        const double alpha = lim_alpha >= 0 ? lim_alpha : rs::alpha_for(lim_e >= 2 ? lim_e : 2);
        if (lim_base == "omega")
            limitshape_dump(rs::Omega{}, alpha, lim_lo, lim_hi, lim_step, lim_curve_out,
                            lim_landmarks_out);
        else
            limitshape_dump(rs::Sigma{}, alpha, lim_lo, lim_hi, lim_step, lim_curve_out,
                            lim_landmarks_out);
    });

    // shake
    auto* shk = app.add_subcommand("shake", "discretely shake a profile or the limit curve");
    std::string shk_partition, shk_base, shk_out;
    long long shk_e = 2;
    double shk_step = 1e-2;
    bool shk_check = false;
    shk->add_option("--partition", shk_partition, "comma-separated parts");
    shk->add_option("--base", shk_base, "omega or sigma instead of a partition")
        ->check(CLI::IsMember({"omega", "sigma"}));
    shk->add_option("--e", shk_e, "ladder modulus; alpha = 1 - 2/e")->required();
    shk->add_option("--step", shk_step, "anchor grid step");
    shk->add_flag("--check", shk_check,
                  "report whether the partition and its regularisation shake identically");
    shk->add_option("--out", shk_out, "output file, default stdout");
    shk->callback([&] {
        std::ofstream file;
        std::ostream& os = open_sink(file, shk_out);
        if (shk_check) {
            if (shk_partition.empty())
                throw std::runtime_error("shake --check needs --partition");
            const rs::ShakeReport rep = rs::shake_equivalence_check(
                partition_arg(shk_partition), shk_e, rs::Rational(shk_step));
            nlohmann::ordered_json j;
            j["pass"] = rep.pass;
            j["worst_abs_discrepancy"] = rep.worst_abs_discrepancy;
            j["n_anchors"] = rep.n_anchors;
            os << j.dump(2) << '\n';
            return;
        }
        rs::PiecewiseLinear shaken;
        if (!shk_partition.empty()) {
            const auto pwl =
                rs::PiecewiseLinear::from_profile(rs::Profile::of(partition_arg(shk_partition)));
            shaken = rs::discrete_shake(pwl, rs::alpha_rational(shk_e), rs::Rational(shk_step));
        } else if (shk_base == "omega") {
            shaken = rs::discrete_shake_fn([f = rs::Omega{}](double x) { return f.value(x); },
                                           -2.0, rs::alpha_for(shk_e), shk_step);
        } else if (shk_base == "sigma") {
            shaken = rs::discrete_shake_fn([f = rs::Sigma{}](double x) { return f.value(x); },
                                           -1.0, rs::alpha_for(shk_e), shk_step);
        } else {
            throw std::runtime_error("shake needs --partition or --base");
        }
        shaken.to_csv(os);
    });

    // experiment
    auto* exp = app.add_subcommand("experiment", "Monte Carlo convergence runs");
    std::string exp_config, exp_outdir = ".";
    rs::ExperimentConfig cfg;
    std::vector<long long> exp_ns;
    exp->add_option("--config", exp_config, "JSON config file; flags below override it");
    exp->add_option("--n-values", exp_ns, "comma-separated list of n values")->delimiter(',');
    exp->add_option("--e", cfg.e, "ladder modulus");
    exp->add_option("--trials", cfg.trials, "trials per n");
    exp->add_option("--seed", cfg.seed, "base seed");
    exp->add_option("--threads", cfg.threads, "worker threads");
    exp->add_option("--window", cfg.window, "half-width of the sup-distance window");
    exp->add_option("--grid-step", cfg.grid_step, "sup-distance grid step");
    exp->add_flag("--record-timings", cfg.record_timings,
                  "fill wall_ms (breaks byte-identical reruns)");
    exp->add_option("--output-dir", exp_outdir, "directory for trials.csv and summary.json");
    exp->callback([&] {
        if (!exp_config.empty()) {
            std::ifstream in(exp_config);
            if (!in) throw std::runtime_error("cannot read config: " + exp_config);
            nlohmann::json j;
            in >> j;
            rs::ExperimentConfig file_cfg = rs::experiment_config_from_json(j);
            // flags given on the command line win over the file
            if (exp->get_option("--e")->count() == 0) cfg.e = file_cfg.e;
            if (exp->get_option("--trials")->count() == 0) cfg.trials = file_cfg.trials;
            if (exp->get_option("--seed")->count() == 0) cfg.seed = file_cfg.seed;
            if (exp->get_option("--threads")->count() == 0) cfg.threads = file_cfg.threads;
            if (exp->get_option("--window")->count() == 0) cfg.window = file_cfg.window;
            if (exp->get_option("--grid-step")->count() == 0) cfg.grid_step = file_cfg.grid_step;
            if (exp->get_option("--record-timings")->count() == 0)
                cfg.record_timings = file_cfg.record_timings;
            if (exp_ns.empty()) cfg.ns = file_cfg.ns;
        }
        if (!exp_ns.empty()) cfg.ns = exp_ns;
        if (cfg.ns.empty()) throw std::runtime_error("experiment needs --n-values or a config");
        rs::require_ladder_order(cfg.e);
        const auto records = rs::run_experiment(cfg);
        std::filesystem::create_directories(exp_outdir);
        const auto csv_path = std::filesystem::path(exp_outdir) / "trials.csv";
        const auto json_path = std::filesystem::path(exp_outdir) / "summary.json";
        {
            std::ofstream csv(csv_path);
            if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
            rs::write_trials_csv(csv, records);
        }
        {
            std::ofstream js(json_path);
            if (!js) throw std::runtime_error("cannot write " + json_path.string());
            js << rs::summary_json(cfg, records).dump(2) << '\n';
        }
        std::cout << csv_path.string() << '\n' << json_path.string() << '\n';
    });

    // figure
    auto* fig = app.add_subcommand("figure", "SVG overlay of a sampled diagram and the limits");
    long long fig_n = 1000, fig_e = 3;
    std::uint64_t fig_seed = 1;
    std::string fig_partition, fig_out = "figure.svg";
    fig->add_option("--n", fig_n, "boxes to sample");
    fig->add_option("--e", fig_e, "ladder modulus");
    fig->add_option("--seed", fig_seed, "seed");
    fig->add_option("--partition", fig_partition, "explicit partition instead of sampling");
    fig->add_option("--out", fig_out, "output SVG path");
    fig->callback([&] {
        const rs::Partition lam = fig_partition.empty()
                                      ? rs::sample_plancherel(fig_n, fig_seed)
                                      : partition_arg(fig_partition);
        const rs::Partition mu = rs::regularise(lam, fig_e);
        const rs::Profile prof = rs::Profile::of(mu);
        const rs::Shaken<rs::Omega> sh = rs::shake(rs::Omega{}, rs::alpha_for(fig_e));
        std::ofstream file;
        std::ostream& os = open_sink(file, fig_out);
        rs::write_figure_svg(
            os, prof, [f = rs::Omega{}](double x) { return f.value(x); },
            [&](double x) { return sh.eval(x); });
        if (&os != &std::cout) std::cout << fig_out << '\n';
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
} catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
}
