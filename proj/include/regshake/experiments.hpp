#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "format.hpp"
#include "partition.hpp"
#include "plancherel.hpp"
#include "profile.hpp"
#include "rng.hpp"
#include "shapes.hpp"

namespace regshake {

struct ExperimentConfig {
    std::vector<long long> ns{500, 2000, 5000};
    long long e = 3;
    long long trials = 20;
    std::uint64_t seed = 1;
    long long threads = 1;
    bool record_timings = false;   // off keeps exports byte-identical across runs
    double window = 3.0;           // sup distance taken over [-window, window]
    double grid_step = 1e-3;
};

inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    if (j.contains("n_values")) cfg.ns = j.at("n_values").get<std::vector<long long>>();
    else if (j.contains("ns")) cfg.ns = j.at("ns").get<std::vector<long long>>();
    if (j.contains("e")) cfg.e = j.at("e").get<long long>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<long long>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<long long>();
    if (j.contains("record_timings")) cfg.record_timings = j.at("record_timings").get<bool>();
    if (j.contains("window")) cfg.window = j.at("window").get<double>();
    if (j.contains("grid_step")) cfg.grid_step = j.at("grid_step").get<double>();
    if (cfg.ns.empty() || cfg.trials <= 0) throw std::invalid_argument("experiment config needs ns and trials");
    require_ladder_order(cfg.e);
    return cfg;
}

struct TrialRecord {
    long long n = 0;
    long long e = 0;
    long long trial = 0;
    std::uint64_t seed = 0;
    double sup_dist = 0;
    double support_left = 0;
    double support_right = 0;
    double first_row_scaled = 0;
    double first_col_scaled = 0;
    double wall_ms = 0;
};

// One sampled diagram: regularise, rescale, compare with the shaken limit.
template <class F>
TrialRecord run_trial(long long n, long long e, long long trial, std::uint64_t base_seed,
                      const Shaken<F>& limit, double window, double grid_step,
                      bool record_timing) {
    TrialRecord r;
    r.n = n;
    r.e = e;
    r.trial = trial;
    r.seed = derive_seed(base_seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
    const auto t0 = std::chrono::steady_clock::now();
    const Partition lam = sample_plancherel(n, r.seed);
    const Partition reg = regularise(lam, e);
    const Profile prof = Profile::of(reg);
    r.sup_dist = sup_distance(prof, [&](double s) { return limit.eval(s); }, -window, window, grid_step);
    const double root = std::sqrt(static_cast<double>(n));
    r.first_row_scaled = static_cast<double>(reg.part(1)) / root;
    r.first_col_scaled = static_cast<double>(reg.num_parts()) / root;
    r.support_left = -r.first_row_scaled;
    r.support_right = r.first_col_scaled;
    if (record_timing) {
        const auto t1 = std::chrono::steady_clock::now();
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return r;
}

// All trials for the config, ordered by (n, trial) regardless of how the
// worker threads are scheduled.
template <class F>
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg, const Shaken<F>& limit) {
    const std::size_t total = cfg.ns.size() * static_cast<std::size_t>(cfg.trials);
    std::vector<TrialRecord> records(total);
    auto work = [&](std::size_t k) {
        const long long n = cfg.ns[k / static_cast<std::size_t>(cfg.trials)];
        const long long trial = static_cast<long long>(k % static_cast<std::size_t>(cfg.trials));
        records[k] = run_trial(n, cfg.e, trial, cfg.seed, limit, cfg.window, cfg.grid_step,
                               cfg.record_timings);
    };
    const std::size_t nthreads =
        std::min<std::size_t>(std::max<long long>(cfg.threads, 1), total);
    if (nthreads <= 1) {
        for (std::size_t k = 0; k < total; ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) work(k);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

inline ExperimentConfig default_config_for(long long e) {
    ExperimentConfig cfg;
    cfg.e = e;
    return cfg;
}

inline std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
    const Shaken<Omega> limit = shake(Omega{}, alpha_for(cfg.e), 1e-12, true);
    return run_experiment(cfg, limit);
}

inline void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << "n,e,trial,seed,sup_dist,support_left,support_right,first_row_scaled,first_col_scaled,wall_ms\n";
    for (const auto& r : records) {
        os << r.n << ',' << r.e << ',' << r.trial << ',' << r.seed << ','
           << fmt12(r.sup_dist) << ',' << fmt12(r.support_left) << ',' << fmt12(r.support_right)
           << ',' << fmt12(r.first_row_scaled) << ',' << fmt12(r.first_col_scaled) << ','
           << fmt12(r.wall_ms) << '\n';
    }
}

struct SummaryStats {
    double mean = 0;
    double median = 0;
    double std = 0;   // sample standard deviation, 0 for a single value
};

inline SummaryStats summarise(std::vector<double> xs) {
    SummaryStats s;
    if (xs.empty()) return s;
    const double n = static_cast<double>(xs.size());
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / n;
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    s.median = (xs.size() % 2 == 1) ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
    if (xs.size() > 1) {
        double acc = 0;
        for (double x : xs) acc += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(acc / (n - 1));
    }
    return s;
}

inline nlohmann::ordered_json summary_json(const ExperimentConfig& cfg,
                                           const std::vector<TrialRecord>& records) {
    nlohmann::ordered_json out;
    out["e"] = cfg.e;
    out["alpha"] = alpha_for(cfg.e);
    out["trials"] = cfg.trials;
    out["seed"] = cfg.seed;
    nlohmann::ordered_json per_n = nlohmann::ordered_json::object();
    for (long long n : cfg.ns) {
        auto collect = [&](auto proj) {
            std::vector<double> xs;
            for (const auto& r : records)
                if (r.n == n) xs.push_back(proj(r));
            return summarise(std::move(xs));
        };
        auto put = [](nlohmann::ordered_json& j, const SummaryStats& s) {
            j["mean"] = s.mean;
            j["median"] = s.median;
            j["std"] = s.std;
        };
        nlohmann::ordered_json stats = nlohmann::ordered_json::object();
        put(stats["sup_dist"], collect([](const TrialRecord& r) { return r.sup_dist; }));
        put(stats["support_left"], collect([](const TrialRecord& r) { return r.support_left; }));
        put(stats["support_right"], collect([](const TrialRecord& r) { return r.support_right; }));
        put(stats["first_row_scaled"], collect([](const TrialRecord& r) { return r.first_row_scaled; }));
        put(stats["first_col_scaled"], collect([](const TrialRecord& r) { return r.first_col_scaled; }));
        per_n[std::to_string(n)] = std::move(stats);
    }
    out["per_n"] = std::move(per_n);
    return out;
}

} // namespace regshake
