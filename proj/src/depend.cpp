#include "zeproc/depend.hpp"

#include "zeproc/family.hpp"
#include "zeproc/ruler.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace zeproc {

std::string DependencyClassId::key() const {
    std::string k = block.str();
    for (std::uint64_t d : reduced) {
        k += ':';
        k += std::to_string(d);
    }
    return k;
}

DependencyClassId class_of_index(const BigInt& index, const ProcessParams& pp) {
    if (index < 0) throw std::invalid_argument("class_of_index: negative index");
    DependencyClassId id;
    id.reduced.resize(pp.depth());
    BigInt rest = index;
    for (std::size_t t = 0; t < pp.depth(); ++t) {
        unsigned radix_log2 = pp.log2_b(t + 1) + 1;
        std::uint64_t digit = (rest & ((BigInt(1) << radix_log2) - 1)).convert_to<std::uint64_t>();
        rest >>= radix_log2;
        std::uint64_t half = std::uint64_t(1) << pp.log2_b(t + 1);
        id.reduced[t] = digit & (half - 1);
        id.parity ^= unsigned(digit >> pp.log2_b(t + 1));
    }
    id.block = rest;
    return id;
}

DependencyClassId class_of(const BigInt& position, const ProcessParams& pp) {
    auto idx = skeleton_index_at(position);
    if (!idx) throw std::invalid_argument("class_of: position is off the skeleton (w_j = 0)");
    return class_of_index(*idx, pp);
}

bool direct_dependent(const BigInt& pos_a, const BigInt& pos_b, const ProcessParams& pp) {
    if (pos_a == pos_b) return false;
    auto ia = skeleton_index_at(pos_a), ib = skeleton_index_at(pos_b);
    if (!ia || !ib) return false;
    BigInt dist = pos_a > pos_b ? pos_a - pos_b : pos_b - pos_a;
    for (std::size_t k = 1; k <= pp.depth(); ++k) {
        if (dist != (pp.a(k) - 1) / 2) continue;
        unsigned block_log2 = pp.log2_p(0, k);
        if ((*ia >> block_log2) == (*ib >> block_log2)) return true;
    }
    return false;
}

BigInt d_count(std::span<const BigInt> positions, const ProcessParams& pp) {
    std::unordered_set<std::string> keys;
    for (const BigInt& pos : positions) {
        auto idx = skeleton_index_at(pos);
        if (!idx) continue;
        keys.insert(class_of_index(*idx, pp).key());
    }
    return BigInt(keys.size());
}

namespace {

enum class DigitSet { low, high, free };

// #{i in [0, limit): digit_t(i) in allowed_t for all t}, limit <= p(0,K).
BigInt count_constrained(const BigInt& limit, const std::vector<DigitSet>& allowed,
                         const ProcessParams& pp) {
    std::size_t K = pp.depth();
    std::vector<std::uint64_t> digits(K);
    BigInt rest = limit;
    bool full_block = limit == (BigInt(1) << pp.log2_p(0, K));
    if (!full_block) {
        for (std::size_t t = 0; t < K; ++t) {
            unsigned radix_log2 = pp.log2_b(t + 1) + 1;
            digits[t] = (rest & ((BigInt(1) << radix_log2) - 1)).convert_to<std::uint64_t>();
            rest >>= radix_log2;
        }
        if (rest != 0) throw std::invalid_argument("count_constrained: limit beyond p(0,K)");
    }

    auto set_size = [&](std::size_t t) -> BigInt {
        std::uint64_t half = std::uint64_t(1) << pp.log2_b(t + 1);
        return allowed[t] == DigitSet::free ? BigInt(2 * half) : BigInt(half);
    };
    auto below = [&](std::size_t t, std::uint64_t d) -> BigInt {
        std::uint64_t half = std::uint64_t(1) << pp.log2_b(t + 1);
        switch (allowed[t]) {
            case DigitSet::low: return BigInt(std::min(d, half));
            case DigitSet::high: return BigInt(d > half ? d - half : 0);
            default: return BigInt(d);
        }
    };
    auto contains = [&](std::size_t t, std::uint64_t d) {
        std::uint64_t half = std::uint64_t(1) << pp.log2_b(t + 1);
        switch (allowed[t]) {
            case DigitSet::low: return d < half;
            case DigitSet::high: return d >= half;
            default: return true;
        }
    };

    std::vector<BigInt> prod_below(K + 1);
    prod_below[0] = 1;
    for (std::size_t t = 0; t < K; ++t) prod_below[t + 1] = prod_below[t] * set_size(t);
    if (full_block) return prod_below[K];

    BigInt count = 0;
    for (std::size_t t = K; t-- > 0;) {
        count += below(t, digits[t]) * prod_below[t];
        if (!contains(t, digits[t])) return count;
    }
    return count;
}

// Distinct reduced digit vectors over the index range [A, B) within one
// depth-K block. An index is counted iff it is the least member of its class
// inside the range: either all alpha bits are zero, or the nearest smaller
// class member falls below A. With t* the lowest set alpha bit, that member
// clears t* and raises every alpha bit below it, so its distance is
//   D(t*) = b_{t*+1} p(0,t*) - sum_{s<t*} b_{s+1} p(0,s)  (positive).
BigInt distinct_reduced_in_block(const BigInt& A, const BigInt& B, const ProcessParams& pp) {
    if (B <= A) return 0;
    std::size_t K = pp.depth();
    std::vector<DigitSet> allowed(K, DigitSet::low);
    BigInt total = count_constrained(B, allowed, pp) - count_constrained(A, allowed, pp);
    BigInt lower_sum = 0;
    for (std::size_t tstar = 0; tstar < K; ++tstar) {
        BigInt level_dist = BigInt(1) << (pp.log2_b(tstar + 1) + pp.log2_p(0, tstar));
        BigInt reach = A + level_dist - lower_sum;
        BigInt hi = std::min(B, reach);
        if (hi > A) {
            std::vector<DigitSet> c(K, DigitSet::free);
            for (std::size_t t = 0; t < tstar; ++t) c[t] = DigitSet::low;
            c[tstar] = DigitSet::high;
            total += count_constrained(hi, c, pp) - count_constrained(A, c, pp);
        }
        lower_sum += level_dist;
    }
    return total;
}

} // namespace

BigInt d_count_interval(const BigInt& lo, const BigInt& hi, const ProcessParams& pp) {
    if (hi <= lo || hi <= 0) return 0;
    BigInt iA = skeleton_index_ceil(std::max(BigInt(0), lo));
    BigInt iB = skeleton_index_ceil(hi);
    if (iB <= iA) return 0;
    unsigned block_log2 = pp.log2_p(0, pp.depth());
    BigInt block_size = BigInt(1) << block_log2;
    BigInt blockA = iA >> block_log2, blockB = (iB - 1) >> block_log2;
    if (blockA == blockB)
        return distinct_reduced_in_block(iA - (blockA << block_log2), iB - (blockA << block_log2), pp);
    BigInt total = distinct_reduced_in_block(iA - (blockA << block_log2), block_size, pp);
    total += distinct_reduced_in_block(0, iB - (blockB << block_log2), pp);
    // full blocks in between: p(0,K) / 2^K classes each, never shared
    total += (blockB - blockA - 1) * (BigInt(1) << (block_log2 - unsigned(pp.depth())));
    return total;
}

double partition_entropy_oracle(std::span<const BigInt> I, const ProcessParams& pp) {
    std::size_t k = 0;
    auto covers = [&](std::size_t lvl) {
        for (const BigInt& i : I)
            if (i < 0 || i >= pp.a(lvl)) return false;
        return true;
    };
    while (k <= pp.depth() && !(covers(k) && pp.family_enumerable(k))) ++k;
    if (k > pp.depth())
        throw std::runtime_error("partition_entropy_oracle: window not enumerable at configured depth");

    std::vector<std::size_t> coords;
    coords.reserve(I.size());
    for (const BigInt& i : I) coords.push_back(i.convert_to<std::size_t>());

    auto fam = enumerate_family(k, pp);
    std::unordered_map<std::string, std::uint64_t> counts;
    std::string restricted(coords.size(), '0');
    for (const auto& w : fam) {
        for (std::size_t t = 0; t < coords.size(); ++t) restricted[t] = w[coords[t]];
        ++counts[restricted];
    }
    // Cells of the restriction are equiprobable by construction; entropy is
    // the integer log2(#A_k / cell count), checked exactly.
    std::uint64_t cell = counts.begin()->second;
    for (const auto& [_, c] : counts)
        if (c != cell)
            throw std::runtime_error("partition_entropy_oracle: non-uniform restriction distribution");
    std::uint64_t total = fam.size();
    if ((cell & (cell - 1)) != 0 || (total & (total - 1)) != 0)
        throw std::runtime_error("partition_entropy_oracle: cell counts not powers of two");
    auto log2u = [](std::uint64_t v) {
        unsigned r = 0;
        while (v > 1) v >>= 1, ++r;
        return r;
    };
    return double(log2u(total) - log2u(cell));
}

} // namespace zeproc
