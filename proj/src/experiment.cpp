#include "zeproc/experiment.hpp"

#include "zeproc/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace zeproc {

double mc_slack(double f, std::uint64_t n_eff) {
    if (n_eff == 0) return 1.0;
    return 3.0 * std::sqrt(std::max(f * (1.0 - f), 1e-12) / double(n_eff));
}

std::vector<std::size_t> choose_scale_representatives(const std::string& x,
                                                      const ProcessParams& pp,
                                                      std::size_t prefix_len,
                                                      double min_expected_gaps,
                                                      std::size_t max_word_len) {
    std::vector<std::size_t> out;
    BigInt last_g = 0;
    for (std::size_t n = 1; n <= std::min(x.size(), max_word_len); ++n) {
        CylinderMeasure cm = analyze_word(x.substr(0, n), pp);
        if (cm.status != WordStatus::in_language)
            throw std::logic_error("sampled prefix left the language; sampler is broken");
        if (cm.mu.to_double() * double(prefix_len) < min_expected_gaps) break;
        if (cm.progression.gap > last_g) {
            out.push_back(n);
            last_g = cm.progression.gap;
        }
    }
    return out;
}

ExperimentResult run_return_experiment(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.config = cfg;
    if (BigInt(std::uint64_t(cfg.prefix_len)) > cfg.params.a(cfg.params.depth()))
        throw std::invalid_argument("prefix_length exceeds a_K at configured depth");
    res.point = sample_point(cfg.params, cfg.prefix_len, cfg.seed);

    for (double t = cfg.t_step; t <= cfg.t_max + 1e-12; t += cfg.t_step)
        res.t_grid.push_back(t);

    res.n_list = cfg.n_list.empty()
                     ? choose_scale_representatives(res.point.prefix, cfg.params, cfg.prefix_len,
                                                    cfg.min_expected_gaps, cfg.max_word_len)
                     : cfg.n_list;

    for (std::size_t n : res.n_list) {
        if (n == 0 || n > res.point.prefix.size())
            throw std::invalid_argument("n-list entry out of range");
        WordExperiment we;
        we.n = n;
        we.word = res.point.prefix.substr(0, n);
        CylinderMeasure cm = analyze_word(we.word, cfg.params);
        if (cm.status != WordStatus::in_language)
            throw std::logic_error("experiment word not in language");
        we.order_g = cm.progression.gap;
        we.mu = cm.mu;
        we.mu_d = cm.mu.to_double();
        unsigned g_log2 = boost::multiprecision::lsb(we.order_g);
        std::size_t k = 0;
        while (k + 1 <= cfg.params.depth() && cfg.params.log2_p(0, k + 1) <= g_log2) ++k;
        we.level_k = k;

        auto occ = occurrences(we.word, res.point.prefix);
        if (occ.size() < 2) continue; // too rare to scan; leave out of the result
        we.n_gaps = occ.size() - 1;
        we.ret = return_cdf(occ, we.mu_d);
        we.hit = hitting_cdf(occ, we.mu_d);
        we.ks_ret = ks_to_exponential(we.ret);
        we.ks_hit = ks_to_exponential(we.hit);
        we.mean_return_times_mu = we.ret.mean();
        if (k + 2 <= cfg.params.depth()) {
            we.bounds = bound_report(we.word, cfg.params);
            we.divergence = divergence_diagnostic(we.word, cfg.params).to_double();
        }
        res.words.push_back(std::move(we));
    }
    return res;
}

} // namespace zeproc
