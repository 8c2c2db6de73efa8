#include "zeproc/verify.hpp"

#include "zeproc/depend.hpp"
#include "zeproc/family.hpp"
#include "zeproc/measure.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/sampler.hpp"
#include "zeproc/stats.hpp"
#include "zeproc/word.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace zeproc {

namespace {

struct Recorder {
    std::vector<VerifyCase>& out;
    std::string suite;
    void check(const std::string& name, bool pass, const std::string& expected,
               const std::string& actual) {
        out.push_back({suite, name, pass, expected, actual});
    }
    void check_eq(const std::string& name, const std::string& expected, const std::string& actual) {
        check(name, expected == actual, expected, actual);
    }
};

// Minimal union-find; lives here only as the small-instance closure oracle
// against the arithmetic class computation.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void suite_ruler(std::vector<VerifyCase>& out) {
    Recorder r{out, "ruler"};
    bool eq1 = true, eq2 = true, eq3 = true;
    for (std::uint64_t n = 1; n <= 256 && eq1; ++n)
        for (std::uint64_t m = 1; m <= 256; ++m)
            if (omega_u64(n * m) != omega_u64(n) + omega_u64(m)) {
                eq1 = false;
                break;
            }
    r.check("omega-multiplicative", eq1, "omega(nm) = omega(n)+omega(m)", eq1 ? "holds" : "violated");
    for (unsigned n = 1; n <= 8 && eq2; ++n)
        for (std::uint64_t m = 1; m <= 64 && eq2; ++m)
            for (std::uint64_t i = 1; i < (std::uint64_t(1) << n); ++i)
                if (omega_u64((std::uint64_t(1) << n) * m + i) != omega_u64(i)) {
                    eq2 = false;
                    break;
                }
    r.check("omega-periodic-below-scale", eq2, "omega(2^n m + i) = omega(i)", eq2 ? "holds" : "violated");
    for (unsigned n = 0; n <= 12 && eq3; ++n) {
        std::uint64_t s = 0;
        for (std::uint64_t j = 1; j <= (std::uint64_t(1) << n); ++j) s += omega_u64(j);
        if (s != (std::uint64_t(1) << n) - 1) eq3 = false;
    }
    r.check("omega-prefix-sum", eq3, "sum_{j<=2^n} omega_j = 2^n - 1", eq3 ? "holds" : "violated");
    bool nov = nonoverlap_check(16, 1 << 12);
    r.check("nonoverlap", nov, "equal windows at distance >= n", nov ? "holds" : "violated");

    std::string w = skeleton_prefix(16);
    r.check_eq("skeleton-prefix-16", "1101100110110001", w);
}

void suite_family(std::vector<VerifyCase>& out, bool inject_fault) {
    Recorder r{out, "family"};
    auto pp = ProcessParams::preset("tiny");
    auto a1 = enumerate_family(1, pp);
    auto a2 = enumerate_family(2, pp);
    r.check_eq("cardinality-A1", "4", std::to_string(a1.size()));
    r.check_eq("cardinality-A2", "256", std::to_string(a2.size()));

    std::set<std::string> set2(a2.begin(), a2.end());
    bool closed = true;
    for (const auto& u : a2) {
        std::string neg = negate_word(u);
        if (inject_fault && !neg.empty()) neg[0] = '0'; // deliberately broken
        if (!set2.count(neg)) {
            closed = false;
            break;
        }
    }
    r.check("negation-closure", closed, "negation permutes A_k", closed ? "holds" : "violated");

    std::set<std::string> set1(a1.begin(), a1.end());
    bool parses = true;
    for (const auto& u : a2) {
        auto blocks = parse_family_blocks(u, 2, 1, pp);
        for (const auto& blk : blocks)
            if (!set1.count(blk)) parses = false;
    }
    r.check("parse-step-k-l", parses, "A_2 words split into A_1 blocks", parses ? "holds" : "violated");

    std::string wk = skeleton_prefix(static_cast<std::size_t>(pp.a(2)));
    bool pi_ok = true;
    for (const auto& u : a2)
        if (pi_project(u) != wk) pi_ok = false;
    r.check("pi-image", pi_ok, "pi(A_k) = w(k)", pi_ok ? "holds" : "violated");
}

void suite_depend(std::vector<VerifyCase>& out) {
    Recorder r{out, "depend"};
    auto pp = ProcessParams::preset("tiny");
    std::size_t a2 = static_cast<std::size_t>(pp.a(2));

    // classes via digits against union-find closure of the direct relation
    std::vector<BigInt> qpos;
    for (BigInt i = 0; z0(i) < a2; ++i) qpos.push_back(z0(i));
    UnionFind uf(qpos.size());
    for (std::size_t x = 0; x < qpos.size(); ++x)
        for (std::size_t y = x + 1; y < qpos.size(); ++y)
            if (direct_dependent(qpos[x], qpos[y], pp)) uf.unite(x, y);
    bool agree = true;
    for (std::size_t x = 0; x < qpos.size() && agree; ++x)
        for (std::size_t y = x + 1; y < qpos.size(); ++y) {
            bool same_uf = uf.find(x) == uf.find(y);
            bool same_cls = class_of(qpos[x], pp).same_class(class_of(qpos[y], pp));
            if (same_uf != same_cls) {
                agree = false;
                break;
            }
        }
    r.check("class-vs-unionfind", agree, "digit classes = closure of direct dependency",
            agree ? "holds" : "violated");

    bool block_formula = true;
    for (std::size_t k = 0; k <= 2 && block_formula; ++k)
        for (std::uint64_t m = 0; m < 8; ++m) {
            BigInt lo = z_coeff(k, m, pp), hi = z_coeff(k, m + 1, pp);
            if (d_count_interval(lo, hi, pp) != (pp.p(0, k) >> unsigned(k))) {
                block_formula = false;
                break;
            }
        }
    r.check("block-class-count", block_formula, "d(z_k(m), z_k(m+1)) = p(0,k)/2^k",
            block_formula ? "holds" : "violated");

    std::mt19937_64 rng(7);
    bool entropy_ok = true;
    for (int trial = 0; trial < 40 && entropy_ok; ++trial) {
        std::vector<BigInt> I;
        std::size_t sz = 1 + rng() % 6;
        for (std::size_t j = 0; j < sz; ++j) I.push_back(BigInt(rng() % a2));
        double h = partition_entropy_oracle(I, pp);
        if (h != d_count(I, pp).convert_to<double>()) entropy_ok = false;
    }
    r.check("entropy-equals-d", entropy_ok, "H(P(I), nu) = d(I)", entropy_ok ? "holds" : "violated");
}

void suite_measure(std::vector<VerifyCase>& out) {
    Recorder r{out, "measure"};
    auto pp = ProcessParams::preset("tiny");
    auto a2 = enumerate_family(2, pp);

    // engine values against enumeration counts on every prefix length
    bool engine_ok = true;
    for (std::size_t len = 1; len <= a2[0].size() && engine_ok; ++len) {
        std::map<std::string, std::size_t> counts;
        for (const auto& u : a2) ++counts[u.substr(0, len)];
        for (const auto& [v, c] : counts) {
            Dyadic expect = Dyadic(BigInt(std::uint64_t(c))) * Dyadic::pow2(-8); // /256
            if (nu_cylinder(v, 0, pp) != expect) {
                engine_ok = false;
                break;
            }
        }
    }
    r.check("nu-vs-enumeration", engine_ok, "2^-d formula = enumeration counts",
            engine_ok ? "holds" : "violated");

    bool inv_ok = true;
    for (unsigned n = 0; n <= 2 && inv_ok; ++n)
        for (std::uint64_t m = 0; m <= 4; ++m)
            if (!nu_invariance_check(n, m, pp)) {
                inv_ok = false;
                break;
            }
    r.check("nu-invariance", inv_ok, "T^{z_0(m 2^n)} nu = nu on P(z_0(2^n))",
            inv_ok ? "holds" : "violated");

    std::mt19937_64 rng(11);
    bool additive = true;
    for (int trial = 0; trial < 60 && additive; ++trial) {
        std::size_t len = 1 + rng() % 8;
        std::string u;
        for (std::size_t j = 0; j < len; ++j) u.push_back("012"[rng() % 3]);
        Dyadic total(0);
        for (char c : std::string("012")) {
            std::string v = u + c;
            total = total + (all_zero(v) ? mu_zero_run(v.size()) : mu_cylinder(v, pp));
        }
        Dyadic parent = all_zero(u) ? mu_zero_run(u.size()) : mu_cylinder(u, pp);
        if (total != parent) additive = false;
    }
    r.check("mu-additivity", additive, "mu([u]) = sum_a mu([ua])", additive ? "holds" : "violated");

    Dyadic one = mu_cylinder("1", pp) + mu_cylinder("2", pp) + mu_zero_run(1);
    r.check("mu-partition", one == Dyadic(1), "1", one.to_fraction_string());
}

void suite_occurrence(std::vector<VerifyCase>& out) {
    Recorder r{out, "occurrence"};
    auto pp = ProcessParams::preset("medium");
    auto x = sample_point(pp, 50'000, 20240601ull);
    std::string wpref = skeleton_prefix(x.prefix.size());

    bool sound = true;
    for (std::size_t n : {1, 2, 3, 5, 8}) {
        std::string u = x.prefix.substr(0, n);
        auto prog = occurrence_progression(u);
        std::set<std::size_t> xi_set;
        for (BigInt t = 0;; ++t) {
            BigInt pos = prog.xi(t);
            if (pos + BigInt(std::uint64_t(n)) > x.prefix.size()) break;
            xi_set.insert(pos.convert_to<std::size_t>());
        }
        auto pat_occ = occurrences(pi_project(u), wpref);
        std::set<std::size_t> pat_set(pat_occ.begin(), pat_occ.end());
        if (pat_set != xi_set) sound = false;       // pattern occurrences = Xi(u)
        for (std::size_t p : occurrences(u, x.prefix))
            if (!xi_set.count(p)) sound = false;    // word occurrences inside Xi(u)
    }
    r.check("occurrence-sound", sound, "occurrences confined to Xi(u)", sound ? "holds" : "violated");
}

} // namespace

std::vector<VerifyCase> run_verify(const VerifyOptions& opt) {
    std::vector<VerifyCase> out;
    suite_ruler(out);
    suite_family(out, opt.inject_negation_fault);
    suite_depend(out);
    suite_measure(out);
    suite_occurrence(out);
    return out;
}

} // namespace zeproc
