#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "regshake/experiments.hpp"
#include "regshake/plancherel.hpp"
#include "regshake/profile.hpp"
#include "regshake/shapes.hpp"

using namespace regshake;

TEST_CASE("single trial fields are reproducible and self-consistent") {
    const Shaken<Omega> limit = shake(Omega{}, alpha_for(2), 1e-12, true);

    SECTION("one box") {
        const TrialRecord r = run_trial(1, 2, 0, 9, limit, 3.0, 1e-3, false);
        CHECK(r.n == 1);
        CHECK(r.e == 2);
        CHECK(r.trial == 0);
        CHECK(r.seed == derive_seed(9, 1, 0));
        CHECK(r.first_row_scaled == 1.0);
        CHECK(r.first_col_scaled == 1.0);
        CHECK(r.support_left == -1.0);
        CHECK(r.support_right == 1.0);
        CHECK(r.wall_ms == 0.0);
        // the rescaled diamond peaks at 2 over the limit's flat bottom
        CHECK(r.sup_dist > 0.4);
        CHECK(r.sup_dist < 0.9);
        const double direct = sup_distance(
            Profile::of(Partition(std::vector<long long>{1})),
            [&](double s) { return limit.eval(s); }, -3.0, 3.0, 1e-3);
        CHECK(r.sup_dist == direct);

        const TrialRecord again = run_trial(1, 2, 0, 9, limit, 3.0, 1e-3, false);
        CHECK(again.seed == r.seed);
        CHECK(again.sup_dist == r.sup_dist);
    }
    SECTION("a larger draw keeps the support identities") {
        const TrialRecord r = run_trial(50, 2, 3, 123, limit, 3.0, 1e-3, false);
        CHECK(r.support_left == -r.first_row_scaled);
        CHECK(r.support_right == r.first_col_scaled);
        CHECK(r.first_row_scaled > 1.0);
        CHECK(r.first_row_scaled < 4.0);
        CHECK(r.sup_dist > 0.0);
        CHECK(r.sup_dist < 1.5);
    }
    SECTION("timing is recorded only on request") {
        const TrialRecord r = run_trial(300, 2, 0, 9, limit, 3.0, 1e-3, true);
        CHECK(r.wall_ms > 0.0);
    }
}

TEST_CASE("experiment runs are ordered, deterministic and thread-agnostic") {
    ExperimentConfig cfg;
    cfg.ns = {1, 2, 3};
    cfg.e = 3;
    cfg.trials = 4;
    cfg.seed = 5;
    cfg.window = 2.5;
    cfg.grid_step = 5e-3;

    const Shaken<Omega> limit = shake(Omega{}, alpha_for(cfg.e), 1e-12, true);
    cfg.threads = 1;
    const auto serial = run_experiment(cfg, limit);
    REQUIRE(serial.size() == 12);
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].n == cfg.ns[k / 4]);
        CHECK(serial[k].trial == static_cast<long long>(k % 4));
        CHECK(serial[k].seed == derive_seed(5, serial[k].n, serial[k].trial));
    }

    cfg.threads = 4;
    const auto threaded = run_experiment(cfg, limit);
    REQUIRE(threaded.size() == serial.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(threaded[k].seed == serial[k].seed);
        CHECK(threaded[k].sup_dist == serial[k].sup_dist);
        CHECK(threaded[k].first_row_scaled == serial[k].first_row_scaled);
        CHECK(threaded[k].wall_ms == serial[k].wall_ms);
    }

    std::ostringstream a, b;
    write_trials_csv(a, serial);
    write_trials_csv(b, threaded);
    CHECK(a.str() == b.str());

    // the convenience overload builds the same limit curve internally
    cfg.threads = 1;
    std::ostringstream c;
    write_trials_csv(c, run_experiment(cfg));
    CHECK(c.str() == a.str());
}

TEST_CASE("trial table serialisation") {
    std::vector<TrialRecord> rs(2);
    rs[0] = {1, 2, 0, 42, 0.5, -1.0, 1.0, 1.0, 1.0, 0.0};
    rs[1] = {2, 3, 1, 18446744073709551615ULL, 1.0 / 3.0, -1.5, 0.5, 1.5, 0.5, 0.0};
    std::ostringstream os;
    write_trials_csv(os, rs);
    CHECK(os.str() ==
          "n,e,trial,seed,sup_dist,support_left,support_right,first_row_scaled,first_col_scaled,wall_ms\n"
          "1,2,0,42,0.5,-1,1,1,1,0\n"
          "2,3,1,18446744073709551615,0.333333333333,-1.5,0.5,1.5,0.5,0\n");
}

TEST_CASE("summary statistics") {
    const SummaryStats a = summarise({3.0, 1.0, 2.0});
    CHECK(a.mean == Catch::Approx(2.0));
    CHECK(a.median == Catch::Approx(2.0));
    CHECK(a.std == Catch::Approx(1.0));

    const SummaryStats b = summarise({1.0, 2.0, 3.0, 4.0});
    CHECK(b.mean == Catch::Approx(2.5));
    CHECK(b.median == Catch::Approx(2.5));
    CHECK(b.std == Catch::Approx(std::sqrt(5.0 / 3.0)));

    const SummaryStats c = summarise({});
    CHECK(c.mean == 0.0);
    CHECK(c.median == 0.0);
    CHECK(c.std == 0.0);

    const SummaryStats d = summarise({7.0});
    CHECK(d.mean == 7.0);
    CHECK(d.median == 7.0);
    CHECK(d.std == 0.0);
}

TEST_CASE("summary document layout") {
    ExperimentConfig cfg;
    cfg.ns = {10};
    cfg.e = 3;
    cfg.trials = 2;
    cfg.seed = 77;
    std::vector<TrialRecord> rs(2);
    rs[0] = {10, 3, 0, 1, 0.2, -1.0, 1.0, 1.0, 1.0, 0.0};
    rs[1] = {10, 3, 1, 2, 0.4, -2.0, 1.5, 2.0, 1.5, 0.0};

    const nlohmann::ordered_json j = summary_json(cfg, rs);
    CHECK(j.at("e") == 3);
    CHECK(j.at("alpha").get<double>() == Catch::Approx(alpha_for(3)));
    CHECK(j.at("trials") == 2);
    CHECK(j.at("seed") == 77);
    REQUIRE(j.at("per_n").contains("10"));
    const auto& s = j.at("per_n").at("10");
    for (const char* k : {"sup_dist", "support_left", "support_right",
                          "first_row_scaled", "first_col_scaled"}) {
        REQUIRE(s.contains(k));
        CHECK(s.at(k).contains("mean"));
        CHECK(s.at(k).contains("median"));
        CHECK(s.at(k).contains("std"));
    }
    CHECK(s.at("sup_dist").at("mean").get<double>() == Catch::Approx(0.3));
    CHECK(s.at("sup_dist").at("median").get<double>() == Catch::Approx(0.3));
    CHECK(s.at("support_left").at("mean").get<double>() == Catch::Approx(-1.5));
    // top-level keys keep their declaration order
    CHECK(j.dump().rfind("{\"e\":", 0) == 0);
}

TEST_CASE("experiment configuration parsing") {
    SECTION("all fields") {
        const auto cfg = experiment_config_from_json(nlohmann::json::parse(
            R"({"n_values":[10,20],"e":4,"trials":3,"seed":9,"threads":2,
                "window":2.5,"grid_step":0.01,"record_timings":true})"));
        CHECK(cfg.ns == std::vector<long long>{10, 20});
        CHECK(cfg.e == 4);
        CHECK(cfg.trials == 3);
        CHECK(cfg.seed == 9);
        CHECK(cfg.threads == 2);
        CHECK(cfg.window == 2.5);
        CHECK(cfg.grid_step == 0.01);
        CHECK(cfg.record_timings);
    }
    SECTION("defaults and the short list key") {
        const auto cfg = experiment_config_from_json(nlohmann::json::parse(R"({"ns":[5]})"));
        CHECK(cfg.ns == std::vector<long long>{5});
        CHECK(cfg.e == 3);
        CHECK(cfg.trials == 20);
        CHECK(cfg.seed == 1);
        CHECK(cfg.threads == 1);
        CHECK(cfg.window == 3.0);
        CHECK(cfg.grid_step == 1e-3);
        CHECK_FALSE(cfg.record_timings);
    }
    SECTION("long key wins over the short one") {
        const auto cfg = experiment_config_from_json(
            nlohmann::json::parse(R"({"n_values":[7],"ns":[9]})"));
        CHECK(cfg.ns == std::vector<long long>{7});
    }
    SECTION("rejects unusable configurations") {
        CHECK_THROWS_AS(experiment_config_from_json(nlohmann::json::parse(R"({"n_values":[]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(experiment_config_from_json(nlohmann::json::parse(R"({"trials":0})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(experiment_config_from_json(nlohmann::json::parse(R"({"e":1})")),
                        std::invalid_argument);
    }
    SECTION("defaults helper") {
        const ExperimentConfig cfg = default_config_for(4);
        CHECK(cfg.e == 4);
        CHECK(cfg.ns == std::vector<long long>{500, 2000, 5000});
    }
}
