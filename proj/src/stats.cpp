#include "zeproc/stats.hpp"

#include "zeproc/depend.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/word.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace zeproc {

std::vector<std::size_t> occurrences(const std::string& u, const std::string& text) {
    if (u.empty()) throw std::invalid_argument("occurrences: empty pattern");
    std::vector<std::size_t> out;
    for (std::size_t pos = text.find(u); pos != std::string::npos; pos = text.find(u, pos + 1))
        out.push_back(pos);
    return out;
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<double, std::uint64_t>> jumps;
    for (double x : xs) {
        if (!jumps.empty() && jumps.back().first == x)
            ++jumps.back().second;
        else
            jumps.emplace_back(x, 1);
    }
    return from_weighted(std::move(jumps));
}

EmpiricalCdf EmpiricalCdf::from_weighted(std::vector<std::pair<double, std::uint64_t>> jumps) {
    std::sort(jumps.begin(), jumps.end());
    EmpiricalCdf c;
    for (auto& [v, n] : jumps) {
        if (n == 0) continue;
        if (!c.values_.empty() && c.values_.back() == v) {
            c.cum_.back() += n;
        } else {
            c.values_.push_back(v);
            c.cum_.push_back((c.cum_.empty() ? 0 : c.cum_.back()) + n);
        }
        c.total_ += n;
    }
    if (c.total_ == 0) throw std::invalid_argument("EmpiricalCdf: no samples");
    return c;
}

double EmpiricalCdf::eval(double t) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), t);
    if (it == values_.begin()) return 0.0;
    return double(cum_[std::size_t(it - values_.begin()) - 1]) / double(total_);
}

double EmpiricalCdf::mean() const {
    double acc = 0;
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        acc += values_[i] * double(cum_[i] - prev);
        prev = cum_[i];
    }
    return acc / double(total_);
}

double EmpiricalCdf::integral_survival(double t) const {
    // E[min(t, X)]
    double acc = 0;
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        acc += std::min(t, std::max(0.0, values_[i])) * double(cum_[i] - prev);
        prev = cum_[i];
    }
    return acc / double(total_);
}

EmpiricalCdf return_cdf(const std::vector<std::size_t>& occ, double mu_u) {
    if (occ.size() < 2) throw std::invalid_argument("return_cdf: need at least 2 occurrences");
    std::map<std::size_t, std::uint64_t> gaps;
    for (std::size_t i = 1; i < occ.size(); ++i) ++gaps[occ[i] - occ[i - 1]];
    std::vector<std::pair<double, std::uint64_t>> jumps;
    jumps.reserve(gaps.size());
    for (auto [g, n] : gaps) jumps.emplace_back(mu_u * double(g), n);
    return EmpiricalCdf::from_weighted(std::move(jumps));
}

EmpiricalCdf hitting_cdf(const std::vector<std::size_t>& occ, double mu_u) {
    if (occ.empty()) throw std::invalid_argument("hitting_cdf: need at least 1 occurrence");
    // Segment lengths: [0, first] plus the gaps. A segment of length L
    // contributes one hit at each distance 1..L, so the count at distance d
    // is the number of segments of length >= d.
    std::vector<std::size_t> segments;
    segments.reserve(occ.size());
    if (occ[0] > 0) segments.push_back(occ[0]);
    for (std::size_t i = 1; i < occ.size(); ++i) segments.push_back(occ[i] - occ[i - 1]);
    if (segments.empty())
        throw std::invalid_argument("hitting_cdf: no positions before the last occurrence");
    std::sort(segments.begin(), segments.end());
    std::size_t max_len = segments.back();
    std::vector<std::pair<double, std::uint64_t>> jumps;
    jumps.reserve(max_len);
    std::size_t seg_idx = 0;
    for (std::size_t d = 1; d <= max_len; ++d) {
        while (seg_idx < segments.size() && segments[seg_idx] < d) ++seg_idx;
        jumps.emplace_back(mu_u * double(d), segments.size() - seg_idx);
    }
    return EmpiricalCdf::from_weighted(std::move(jumps));
}

double ks_to_exponential(const EmpiricalCdf& cdf) {
    const auto& v = cdf.jump_values();
    const auto& c = cdf.cumulative();
    double n = double(cdf.size());
    double d = 0;
    double prev = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double g = 1.0 - std::exp(-std::max(0.0, v[i]));
        double after = double(c[i]) / n;
        d = std::max(d, std::max(std::abs(after - g), std::abs(prev - g)));
        prev = after;
    }
    return d;
}

BoundReport bound_report(const std::string& u, const ProcessParams& pp) {
    require_word(u);
    if (u.empty() || u[0] == '0')
        throw std::invalid_argument("bound_report: word must start with a nonzero symbol");
    CylinderMeasure cm = analyze_word(u, pp);
    if (cm.status != WordStatus::in_language)
        throw std::runtime_error("bound_report: word not in the language");

    BoundReport r;
    r.order_g = cm.progression.gap;
    unsigned g_log2 = boost::multiprecision::lsb(r.order_g);
    std::size_t k = 0;
    while (k + 1 <= pp.depth() && pp.log2_p(0, k + 1) <= g_log2) ++k;
    r.level_k = k;
    if (k + 2 > pp.depth())
        throw std::runtime_error("bound_report: depth insufficient for k+2 = " +
                                 std::to_string(k + 2));
    r.zero_run_term = mu_zero_run(g_log2); // mu([0^{omega_g}]), omega_g = log2 g
    r.theta_term = cm.theta;
    r.two_theta = cm.theta.shifted(1);
    r.combined = Dyadic(3) * cm.theta + r.zero_run_term;
    r.mu_u = cm.mu;
    r.ode_total = r.combined + cm.mu.shifted(1);
    r.horizon = cm.mu * Dyadic((pp.b(k + 2) - 1) * pp.a(k + 1));
    return r;
}

Dyadic divergence_diagnostic(const std::string& u, const ProcessParams& pp) {
    CylinderMeasure cm = analyze_word(u, pp);
    if (cm.status != WordStatus::in_language)
        throw std::runtime_error("divergence_diagnostic: word not in the language");
    unsigned g_log2 = boost::multiprecision::lsb(cm.progression.gap);
    std::size_t k = 0;
    while (k + 1 <= pp.depth() && pp.log2_p(0, k + 1) <= g_log2) ++k;
    if (k + 2 > pp.depth())
        throw std::runtime_error("divergence_diagnostic: depth insufficient");
    return cm.mu * Dyadic(pp.b(k + 2) * pp.a(k + 1));
}

bool divergence_lower_bound_holds(const std::string& u, const ProcessParams& pp) {
    CylinderMeasure cm = analyze_word(u, pp);
    if (cm.status != WordStatus::in_language) return false;
    unsigned g_log2 = boost::multiprecision::lsb(cm.progression.gap);
    std::size_t k = 0;
    while (k + 1 <= pp.depth() && pp.log2_p(0, k + 1) <= g_log2) ++k;
    if (k + 1 > pp.depth()) return false;
    // mu(u) >= 1 / (#A_{k+1} (a_{k+1} + 1)): compare via dyadic arithmetic,
    // i.e. mu(u) * #A_{k+1} * (a_{k+1} + 1) >= 1 with #A = 2^(b_1..b_{k+1}).
    long long log2_fam = pp.log2_family_size(k + 1).convert_to<long long>();
    Dyadic lhs = cm.mu.shifted(log2_fam) * Dyadic(pp.a(k + 1) + 1);
    return lhs >= Dyadic(1);
}

namespace {

struct BitVec {
    std::vector<std::uint64_t> w;
    std::size_t n = 0;
    explicit BitVec(std::size_t bits) : w((bits + 63) / 64, 0), n(bits) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
};

// #{i in [0, limit): a[i] && b[i + shift]}
std::uint64_t and_shift_count(const BitVec& a, const BitVec& b, std::size_t shift,
                              std::size_t limit) {
    std::uint64_t count = 0;
    std::size_t word_shift = shift >> 6, bit_shift = shift & 63;
    std::size_t nwords = (limit + 63) / 64;
    for (std::size_t i = 0; i < nwords; ++i) {
        std::uint64_t bw = 0;
        if (i + word_shift < b.w.size()) {
            bw = b.w[i + word_shift] >> bit_shift;
            if (bit_shift && i + word_shift + 1 < b.w.size())
                bw |= b.w[i + word_shift + 1] << (64 - bit_shift);
        }
        std::uint64_t m = a.w[i] & bw;
        if (i + 1 == nwords && (limit & 63)) m &= (std::uint64_t(1) << (limit & 63)) - 1;
        count += std::uint64_t(std::popcount(m));
    }
    return count;
}

} // namespace

double correlation_average(const std::string& u, const std::string& v, std::size_t n,
                           const std::string& text) {
    if (u.empty() || v.empty()) throw std::invalid_argument("correlation_average: empty word");
    if (text.size() < v.size() + n + 1)
        throw std::invalid_argument("correlation_average: text too short for requested lag");
    std::size_t mu_positions = text.size() - u.size() + 1;
    std::size_t mv_positions = text.size() - v.size() + 1;
    BitVec occ_u(mu_positions), occ_v(mv_positions);
    for (std::size_t p : occurrences(u, text)) occ_u.set(p);
    std::uint64_t cu = 0;
    for (auto w : occ_u.w) cu += std::uint64_t(std::popcount(w));
    for (std::size_t p : occurrences(v, text)) occ_v.set(p);
    std::uint64_t cv = 0;
    for (auto w : occ_v.w) cv += std::uint64_t(std::popcount(w));
    double fu = double(cu) / double(mu_positions);
    double fv = double(cv) / double(mv_positions);

    double acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t valid = std::min(mu_positions, mv_positions - j);
        std::uint64_t joint = and_shift_count(occ_u, occ_v, j, valid);
        acc += std::abs(double(joint) / double(valid) - fu * fv);
    }
    return acc / double(n);
}

namespace {

struct PatternProgression {
    std::size_t mod_log2 = 0;
    BigInt res = 0;
    BigInt min_elem = 0;
};

BigInt pattern_mod_pow2(const BigInt& v, std::size_t log2) {
    BigInt modulus = BigInt(1) << log2;
    BigInt r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

bool pattern_meet(PatternProgression& p, std::size_t s, const BigInt& r, const BigInt& mn) {
    std::size_t lo = std::min(s, p.mod_log2);
    if (pattern_mod_pow2(p.res - r, lo) != 0) return false;
    if (s > p.mod_log2) {
        p.mod_log2 = s;
        p.res = pattern_mod_pow2(r, s);
    }
    if (mn > p.min_elem) p.min_elem = mn;
    return true;
}

BigInt pattern_least(const PatternProgression& p) {
    BigInt modulus = BigInt(1) << p.mod_log2;
    BigInt r = p.res;
    if (r < p.min_elem) r += ((p.min_elem - r + modulus - 1) >> p.mod_log2) << p.mod_log2;
    return r;
}

std::uint64_t fillings_at(const BigInt& anchor, std::size_t q, const ProcessParams& pp) {
    std::unordered_set<std::string> keys;
    for (std::size_t j = 0; j < q; ++j)
        keys.insert(class_of_index(anchor + BigInt(std::uint64_t(j)), pp).key());
    if (keys.size() >= 63) throw std::runtime_error("complexity: class count overflow");
    return std::uint64_t(1) << keys.size();
}

// DFS over skeleton window patterns 0^{c0} 1 0^{m1} 1 ... 1 0^{cq} of total
// length n. The partial residue-class intersection is carried along; the
// next interior gap is forced unless the next index is aligned with the
// current modulus, in which case each admissible deeper value branches.
std::uint64_t count_patterns(std::size_t n, const ProcessParams& pp) {
    std::uint64_t total = 0;

    struct Rec {
        std::size_t n;
        const ProcessParams& pp;
        std::uint64_t& total;
        void walk(const PatternProgression& state, std::size_t consumed, std::size_t q) {
            // close the window with cq = n - consumed trailing zeros
            {
                std::size_t cq = n - consumed;
                PatternProgression st = state;
                BigInt r = pattern_mod_pow2(-BigInt(std::uint64_t(q)), cq);
                if (pattern_meet(st, cq, r, 0))
                    total += fillings_at(pattern_least(st), q, pp);
            }
            if (consumed >= n) return;
            std::size_t room = n - consumed - 1; // zeros available before the next one
            BigInt at = pattern_mod_pow2(state.res + BigInt(std::uint64_t(q)), state.mod_log2);
            if (at != 0) {
                // gap value forced by the residue class
                std::size_t v = boost::multiprecision::lsb(at);
                if (v <= room) walk(state, consumed + v + 1, q + 1);
            } else {
                for (std::size_t v = state.mod_log2; v <= room; ++v) {
                    PatternProgression st = state;
                    BigInt r = pattern_mod_pow2((BigInt(1) << v) - BigInt(std::uint64_t(q)), v + 1);
                    if (pattern_meet(st, v + 1, r, 0)) walk(st, consumed + v + 1, q + 1);
                }
            }
        }
    } rec{n, pp, total};

    for (std::size_t c0 = 0; c0 < n; ++c0) {
        PatternProgression st;
        if (!pattern_meet(st, c0, 0, c0 > 0 ? (BigInt(1) << c0) : BigInt(0))) continue;
        rec.walk(st, c0 + 1, 1);
    }
    return total;
}

} // namespace

std::uint64_t complexity(std::size_t n, const ProcessParams& pp) {
    if (n == 0) return 1;
    // Window index spans reach ~n/2; stay well inside the no-deep-merge zone.
    if (BigInt(std::uint64_t(n)) > 2 * pp.a(pp.depth()))
        throw std::invalid_argument("complexity: n beyond enumerable range at configured depth");
    return 1 + count_patterns(n, pp); // the all-zero word plus every pattern's fillings
}

} // namespace zeproc
