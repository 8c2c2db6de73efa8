#include "zeproc/measure.hpp"

#include "zeproc/depend.hpp"
#include "zeproc/family.hpp"
#include "zeproc/ruler.hpp"
#include "zeproc/word.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace zeproc {

BigInt OccurrenceProgression::xi(const BigInt& n) const {
    if (empty) throw std::logic_error("xi: empty occurrence set");
    return z0(least + n * gap) - BigInt(std::uint64_t(m0()));
}

namespace {

// Bitwise ops on negative cpp_int are not portable; reduce via %.
BigInt mod_pow2(const BigInt& v, std::size_t log2) {
    BigInt modulus = BigInt(1) << log2;
    BigInt r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

// One residue class i = res (mod 2^mod_log2) with elements >= min_elem.
struct Progression {
    std::size_t mod_log2 = 0;
    BigInt res = 0;
    BigInt min_elem = 0;

    // Intersect with i = r (mod 2^s), i >= mn. False when incompatible.
    bool meet(std::size_t s, const BigInt& r, const BigInt& mn) {
        std::size_t lo = std::min(s, mod_log2);
        if (mod_pow2(res - r, lo) != 0) return false;
        if (s > mod_log2) {
            mod_log2 = s;
            res = mod_pow2(r, s);
        }
        if (mn > min_elem) min_elem = mn;
        return true;
    }

    BigInt least() const {
        BigInt modulus = BigInt(1) << mod_log2;
        BigInt r = res;
        if (r < min_elem) {
            BigInt deficit = min_elem - r;
            r += ((deficit + modulus - 1) >> mod_log2) << mod_log2;
        }
        return r;
    }
};

} // namespace

OccurrenceProgression occurrence_progression(const std::string& u) {
    require_word(u);
    if (u.empty() || all_zero(u))
        throw std::invalid_argument(
            "occurrence_progression: zero words have no progression (see mu_zero_run)");

    OccurrenceProgression out;
    out.zero_runs.clear();
    std::size_t run = 0;
    for (char c : u) {
        if (c == '0') {
            ++run;
        } else {
            out.zero_runs.push_back(run);
            out.symbols.push_back(c);
            run = 0;
        }
    }
    out.zero_runs.push_back(run); // trailing m_q

    std::size_t q = out.symbols.size();
    Progression prog;

    // leading run: omega_i >= m_0, i.e. 2^{m0} | i with i >= 2^{m0} when m0 > 0
    std::size_t m0 = out.zero_runs[0];
    if (!prog.meet(m0, 0, m0 > 0 ? (BigInt(1) << m0) : BigInt(0))) return out;

    // interior runs: omega_{i+j} = m_j, i.e. i = 2^{m_j} - j (mod 2^{m_j+1})
    for (std::size_t j = 1; j < q; ++j) {
        std::size_t mj = out.zero_runs[j];
        BigInt r = mod_pow2((BigInt(1) << mj) - BigInt(std::uint64_t(j)), mj + 1);
        if (!prog.meet(mj + 1, r, 0)) return out;
    }

    // trailing run: omega_{i+q} >= m_q, i.e. i = -q (mod 2^{m_q})
    std::size_t mq = out.zero_runs[q];
    if (!prog.meet(mq, mod_pow2(-BigInt(std::uint64_t(q)), mq), 0)) return out;

    out.empty = false;
    out.gap = BigInt(1) << prog.mod_log2;
    out.least = prog.least();
    return out;
}

Dyadic nu_cylinder(const std::string& u, const BigInt& shift, const ProcessParams& pp) {
    require_word(u);
    if (shift < 0) throw std::invalid_argument("nu_cylinder: negative shift");
    if (u.empty()) return Dyadic(1);

    BigInt end = shift + BigInt(std::uint64_t(u.size()));
    BigInt i = skeleton_index_ceil(shift);
    BigInt i_end = skeleton_index_ceil(end);
    if (i_end - i >= (BigInt(2) << pp.log2_p(0, pp.depth())))
        throw std::runtime_error("nu_cylinder: window spans too many skeleton indices for depth " +
                                 std::to_string(pp.depth()));

    std::unordered_map<std::string, std::pair<char, unsigned>> classes; // key -> (rep symbol, rep parity)
    std::size_t t = 0;
    while (true) {
        BigInt pos = z0(i);
        std::size_t upto = pos >= end ? u.size() : static_cast<std::size_t>(pos - shift);
        for (; t < upto; ++t)
            if (u[t] != '0') return Dyadic(0); // nonzero symbol off the skeleton
        if (pos >= end) break;
        char sym = u[t];
        if (sym == '0') return Dyadic(0); // zero on a skeleton position
        DependencyClassId id = class_of_index(i, pp);
        auto [it, fresh] = classes.try_emplace(id.key(), sym, id.parity);
        if (!fresh) {
            char expected = ((id.parity ^ it->second.second) & 1u) ? negate_symbol(it->second.first)
                                                                   : it->second.first;
            if (sym != expected) return Dyadic(0);
        }
        ++t;
        ++i;
    }
    return Dyadic::pow2(-static_cast<long long>(classes.size()));
}

CylinderMeasure analyze_word(const std::string& u, const ProcessParams& pp) {
    require_word(u);
    if (u.empty()) throw std::invalid_argument("analyze_word: empty word");
    CylinderMeasure cm;
    cm.word = u;
    if (all_zero(u)) {
        cm.theta = Dyadic(1);
        cm.skeleton_density = mu_zero_run(u.size());
        cm.mu = cm.skeleton_density;
        return cm;
    }
    cm.progression = occurrence_progression(u);
    if (cm.progression.empty) {
        cm.status = WordStatus::empty_progression;
        return cm;
    }
    cm.theta = nu_cylinder(u, cm.progression.xi(0), pp);
    if (cm.theta.is_zero()) {
        cm.status = WordStatus::class_inconsistent;
        return cm;
    }
    // Cesaro density of Xi(u) is exactly 1/(2g).
    long long g_log2 = static_cast<long long>(boost::multiprecision::lsb(cm.progression.gap));
    cm.skeleton_density = Dyadic::pow2(-(g_log2 + 1));
    cm.mu = cm.theta * cm.skeleton_density;
    return cm;
}

const char* to_string(WordStatus s) {
    switch (s) {
        case WordStatus::in_language: return "in-language";
        case WordStatus::empty_progression: return "no-occurrence";
        case WordStatus::class_inconsistent: return "class-inconsistency";
    }
    return "?";
}

Dyadic theta(const std::string& u, const ProcessParams& pp) {
    CylinderMeasure cm = analyze_word(u, pp);
    if (cm.status != WordStatus::in_language)
        throw std::runtime_error("theta: word not in the language (" +
                                 std::string(to_string(cm.status)) + ")");
    return cm.theta;
}

Dyadic mu_cylinder(const std::string& u, const ProcessParams& pp) {
    require_word(u);
    if (all_zero(u))
        throw std::invalid_argument("mu_cylinder: all-zero word, use mu_zero_run");
    CylinderMeasure cm = analyze_word(u, pp);
    return cm.mu;
}

Dyadic mu_zero_run(std::size_t m) { return Dyadic::pow2(-static_cast<long long>(m)); }

bool nu_invariance_check(unsigned n, const BigInt& m, const ProcessParams& pp) {
    BigInt window_big = z0(BigInt(1) << n);
    BigInt shift = z0(m << n);
    std::size_t k = 0;
    while (k <= pp.depth() && (pp.a(k) < window_big || !pp.family_enumerable(k))) ++k;
    if (k > pp.depth())
        throw std::runtime_error("nu_invariance_check: window z_0(2^n) not enumerable");
    std::size_t window = window_big.convert_to<std::size_t>();

    std::unordered_set<std::string> words;
    for (const auto& w : enumerate_family(k, pp)) words.insert(w.substr(0, window));

    Dyadic mass_shifted(0);
    for (const auto& v : words) {
        Dyadic at_zero = nu_cylinder(v, 0, pp);
        Dyadic at_shift = nu_cylinder(v, shift, pp);
        if (at_zero != at_shift) return false;
        mass_shifted = mass_shifted + at_shift;
    }
    return mass_shifted == Dyadic(1);
}

} // namespace zeproc
