#pragma once

#include "zeproc/params.hpp"
#include "zeproc/sampler.hpp"
#include "zeproc/stats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zeproc {

// Return/hitting-time experiment along one long sampled prefix. Experiment
// words are the prefixes x<n> at the n where the order g(x, n) first takes a
// new value: one representative per scale, the scales that drive the
// exponential limit.
struct ExperimentConfig {
    ProcessParams params = ProcessParams::preset("fast");
    std::uint64_t seed = 1;
    std::size_t prefix_len = 8'000'000;
    std::vector<std::size_t> n_list; // empty = choose representatives automatically
    double t_max = 5.0;
    double t_step = 0.05;
    double min_expected_gaps = 60; // stop the n-list when mu(x<n>) * prefix drops below
    std::size_t max_word_len = 4096;
};

struct WordExperiment {
    std::size_t n = 0;
    std::string word;
    BigInt order_g;
    std::size_t level_k = 0;
    Dyadic mu;
    double mu_d = 0;
    std::uint64_t n_gaps = 0;
    EmpiricalCdf ret;
    EmpiricalCdf hit;
    double ks_ret = 0;
    double ks_hit = 0;
    double mean_return_times_mu = 0; // Kac check value
    std::optional<BoundReport> bounds; // absent when depth cannot host k+2
    std::optional<double> divergence;
};

struct ExperimentResult {
    ExperimentConfig config;
    SampledPoint point;
    std::vector<std::size_t> n_list;
    std::vector<WordExperiment> words;
    std::vector<double> t_grid;
};

std::vector<std::size_t> choose_scale_representatives(const std::string& x,
                                                      const ProcessParams& pp,
                                                      std::size_t prefix_len,
                                                      double min_expected_gaps,
                                                      std::size_t max_word_len);

ExperimentResult run_return_experiment(const ExperimentConfig& cfg);

// Monte-Carlo slack folded into every statistical assertion:
// 3 * sqrt(F(1-F)/n_eff), with n_eff the number of independent gap samples.
double mc_slack(double f, std::uint64_t n_eff);

} // namespace zeproc
