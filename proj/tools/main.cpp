#include "CLI11.hpp"
#include "json.hpp"

#include "zeproc/experiment.hpp"
#include "zeproc/family.hpp"
#include "zeproc/measure.hpp"
#include "zeproc/params.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/sampler.hpp"
#include "zeproc/stats.hpp"
#include "zeproc/verify.hpp"
#include "zeproc/word.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using namespace zeproc;

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string preset = "fast";
    std::vector<std::uint64_t> b_list;
    std::uint64_t seed = 1;
    std::size_t prefix_length = 8'000'000;
    double t_max = 5.0;
    double t_step = 0.05;
    std::string output = "-";
    unsigned cap_log2 = 20;

    ProcessParams params() const {
        ProcessParams pp =
            b_list.empty() ? ProcessParams::preset(preset) : ProcessParams::from_b(b_list);
        pp.set_enumeration_cap_log2(cap_log2);
        return pp;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--preset", o.preset, "parameter preset: tiny2|tiny|small|medium|fast");
    cmd->add_option("--b", o.b_list, "explicit b list (powers of two), overrides --preset")
        ->delimiter(',');
    cmd->add_option("--seed", o.seed, "64-bit sampling seed");
    cmd->add_option("--prefix-length", o.prefix_length, "sampled prefix length");
    cmd->add_option("--t-max", o.t_max, "rescaled-time grid upper end");
    cmd->add_option("--t-step", o.t_step, "rescaled-time grid step");
    cmd->add_option("--output", o.output, "output path, - for stdout");
    cmd->add_option("--cap", o.cap_log2, "log2 enumeration cap for word families");
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct OutFile {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutFile(const std::string& path) {
        if (path != "-") {
            file.open(path);
            if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

int cmd_verify(const CommonOpts&, const std::string& json_path, bool inject_fault) {
    VerifyOptions vo;
    vo.inject_negation_fault = inject_fault;
    auto cases = run_verify(vo);
    json report = json::array();
    bool all_pass = true;
    for (const auto& c : cases) {
        std::fprintf(stdout, "%-4s %s/%s (expected: %s, actual: %s)\n", c.pass ? "ok" : "FAIL",
                     c.suite.c_str(), c.name.c_str(), c.expected.c_str(), c.actual.c_str());
        report.push_back({{"suite", c.suite},
                          {"case", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"expected", c.expected},
                          {"actual", c.actual}});
        all_pass = all_pass && c.pass;
    }
    std::fprintf(stdout, "%s: %zu cases\n", all_pass ? "PASS" : "FAIL", cases.size());
    if (!json_path.empty()) {
        OutFile out(json_path);
        out.stream() << report.dump(2) << "\n";
    }
    return all_pass ? kExitOk : kExitInvariantFailure;
}

int cmd_measure(const CommonOpts& o, const std::string& word) {
    require_word(word);
    if (word.empty()) throw CLI::ValidationError("--word", "must be nonempty");
    ProcessParams pp = o.params();
    OutFile out(o.output);
    std::ostream& os = out.stream();
    CylinderMeasure cm = analyze_word(word, pp);
    os << "word " << word << "\n";
    os << "status " << to_string(cm.status) << "\n";
    if (all_zero(word)) {
        os << "rule zero-run\n";
        os << "theta 1 (1)\n";
        os << "mu " << cm.mu.to_fraction_string() << " (" << fmt_double(cm.mu.to_double())
           << ")\n";
        return kExitOk;
    }
    if (cm.status != WordStatus::in_language) {
        os << "mu 0 (0)\n";
        os << "reason " << to_string(cm.status) << "\n";
        return kExitOk;
    }
    os << "theta " << cm.theta.to_fraction_string() << " (" << fmt_double(cm.theta.to_double())
       << ")\n";
    os << "g " << cm.progression.gap.str() << "\n";
    os << "g0 " << cm.progression.least.str() << "\n";
    os << "mu " << cm.mu.to_fraction_string() << " (" << fmt_double(cm.mu.to_double()) << ")\n";
    try {
        if (word[0] != '0') {
            BoundReport br = bound_report(word, pp);
            os << "bound_zero_run " << br.zero_run_term.to_fraction_string() << " ("
               << fmt_double(br.zero_run_term.to_double()) << ")\n";
            os << "bound_two_theta " << br.two_theta.to_fraction_string() << " ("
               << fmt_double(br.two_theta.to_double()) << ")\n";
            os << "bound_theta " << br.theta_term.to_fraction_string() << " ("
               << fmt_double(br.theta_term.to_double()) << ")\n";
            os << "bound_combined " << br.combined.to_fraction_string() << " ("
               << fmt_double(br.combined.to_double()) << ")\n";
            os << "horizon " << br.horizon.to_fraction_string() << " ("
               << fmt_double(br.horizon.to_double()) << ")\n";
        }
    } catch (const std::exception& e) {
        os << "bound_combined unavailable (" << e.what() << ")\n";
    }
    return kExitOk;
}

int cmd_return_stats(const CommonOpts& o, const std::vector<std::size_t>& n_list) {
    ExperimentConfig cfg;
    cfg.params = o.params();
    cfg.seed = o.seed;
    cfg.prefix_len = o.prefix_length;
    cfg.n_list = n_list;
    cfg.t_max = o.t_max;
    cfg.t_step = o.t_step;
    ExperimentResult res = run_return_experiment(cfg);

    OutFile out(o.output);
    std::ostream& os = out.stream();
    os << "n,word,g,k,mu,mu_exact,t,F,F_tilde,exp1,ks_F,ks_Ftilde,bound_combined,"
          "bound_combined_exact,horizon_ok,n_gaps\n";
    for (const auto& we : res.words) {
        if (!we.bounds) {
            std::cerr << "note: skipping n=" << we.n << " (depth cannot host k+2)\n";
            continue;
        }
        double bound_d = we.bounds->combined.to_double();
        double horizon_d = we.bounds->horizon.to_double();
        for (double t : res.t_grid) {
            os << we.n << "," << we.word << "," << we.order_g.str() << "," << we.level_k << ","
               << fmt_double(we.mu_d) << "," << we.mu.to_fraction_string() << ","
               << fmt_double(t) << "," << fmt_double(we.hit.eval(t)) << ","
               << fmt_double(we.ret.eval(t)) << "," << fmt_double(1.0 - std::exp(-t)) << ","
               << fmt_double(we.ks_hit) << "," << fmt_double(we.ks_ret) << ","
               << fmt_double(bound_d) << "," << we.bounds->combined.to_fraction_string() << ","
               << (t <= horizon_d ? 1 : 0) << "," << we.n_gaps << "\n";
        }
        std::cerr << "word n=" << we.n << " g=" << we.order_g.str() << " k=" << we.level_k
                  << " mu=" << we.mu.to_fraction_string() << " gaps=" << we.n_gaps
                  << " kac=" << fmt_double(we.mean_return_times_mu)
                  << " divergence=" << fmt_double(we.divergence.value_or(0.0)) << "\n";
    }
    return kExitOk;
}

int cmd_complexity(const CommonOpts& o, std::size_t max_n) {
    ProcessParams pp = o.params();
    OutFile out(o.output);
    std::ostream& os = out.stream();
    os << "n,complexity,log2_complexity_over_n\n";
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::uint64_t c = complexity(n, pp);
        os << n << "," << c << "," << fmt_double(std::log2(double(c)) / double(n)) << "\n";
    }
    return kExitOk;
}

int cmd_mixing(const CommonOpts& o, const std::vector<std::string>& pairs,
               const std::vector<std::size_t>& lags) {
    ProcessParams pp = o.params();
    auto x = sample_point(pp, o.prefix_length, o.seed);
    OutFile out(o.output);
    std::ostream& os = out.stream();
    os << "u,v,n,alpha\n";
    for (const auto& pr : pairs) {
        auto colon = pr.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--pairs", "expected u:v, got " + pr);
        std::string u = pr.substr(0, colon), v = pr.substr(colon + 1);
        require_word(u);
        require_word(v);
        for (std::size_t n : lags)
            os << u << "," << v << "," << n << ","
               << fmt_double(correlation_average(u, v, n, x.prefix)) << "\n";
    }
    return kExitOk;
}

int cmd_sample(const CommonOpts& o, std::size_t length) {
    ProcessParams pp = o.params();
    auto x = sample_point(pp, length, o.seed);
    OutFile out(o.output);
    out.stream() << x.prefix << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-entropy process laboratory: exact cylinder measures and "
                 "return/hitting-time statistics"};
    app.set_config("--config", "", "key=value config file; flags override");
    app.require_subcommand(1);

    CommonOpts common;

    auto* verify = app.add_subcommand("verify", "run the exact invariant suites at tiny parameters");
    verify->fallthrough()->configurable();
    std::string verify_json;
    bool inject_fault = false;
    verify->add_option("--json", verify_json, "write the JSON report to this path, - for stdout");
    verify->add_flag("--inject-negation-fault", inject_fault,
                     "test hook: corrupt the negation to exercise the failure path");

    auto* measure = app.add_subcommand("measure", "exact theta/g/mu record for one word");
    measure->fallthrough()->configurable();
    std::string word;
    measure->add_option("--word", word, "word over {0,1,2}")->required();
    add_common(measure, common);

    auto* rstats = app.add_subcommand("return-stats", "return/hitting-time experiment CSV");
    rstats->fallthrough()->configurable();
    std::vector<std::size_t> n_list;
    rstats->add_option("--n-list", n_list, "explicit prefix lengths; default: one per scale")
        ->delimiter(',');
    add_common(rstats, common);

    auto* cplx = app.add_subcommand("complexity", "exact language complexity counts");
    cplx->fallthrough()->configurable();
    std::size_t max_n = 16;
    cplx->add_option("--max-n", max_n, "count lengths 1..max-n");
    add_common(cplx, common);

    auto* mixing = app.add_subcommand("mixing", "empirical correlation Cesaro averages");
    mixing->fallthrough()->configurable();
    std::vector<std::string> pairs = {"1:1", "1:2", "0:0"};
    std::vector<std::size_t> lags = {100, 1000, 10000};
    mixing->add_option("--pairs", pairs, "cylinder pairs u:v")->delimiter(',');
    mixing->add_option("--lags", lags, "Cesaro lags n")->delimiter(',');
    add_common(mixing, common);

    auto* sample = app.add_subcommand("sample", "emit one sampled prefix");
    sample->fallthrough()->configurable();
    std::size_t length = 1000;
    sample->add_option("--length", length, "prefix length");
    add_common(sample, common);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(common, verify_json, inject_fault);
        if (measure->parsed()) return cmd_measure(common, word);
        if (rstats->parsed()) return cmd_return_stats(common, n_list);
        if (cplx->parsed()) return cmd_complexity(common, max_n);
        if (mixing->parsed()) return cmd_mixing(common, pairs, lags);
        if (sample->parsed()) return cmd_sample(common, length);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
