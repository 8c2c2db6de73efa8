#pragma once

#include "zeproc/dyadic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zeproc {

// Parameters of the process: the tower b_1..b_K of power-of-two branching
// factors and the derived block lengths a_0..a_K with
//
//   a_0 = 1,   a_{k+1} = 2 b_{k+1} a_k + 2 b_{k+1} - 1.
//
// The level-k word family has 2^(b_1 b_2 ... b_k) elements; enumeration of a
// family is refused above the configured cap. The growth ratio
// b_{k+1} / (b_1 ... b_k) is reported as a diagnostic only; all finite-depth
// identities hold for any power-of-two b.
class ProcessParams {
public:
    static ProcessParams from_b(const std::vector<std::uint64_t>& b);
    static ProcessParams from_log2(std::vector<unsigned> log2b);

    // Named presets:
    //   tiny2  b = (2)               smallest oracle instance
    //   tiny   b = (2, 4)            exhaustive-enumeration instance
    //   small  b = (2, 4, 8)         three-level exact suites
    //   medium b = (4, 16, 256)      mid-size statistics
    //   fast   b = (8, 512, 2^27)    default statistics preset
    static ProcessParams preset(std::string_view name);

    std::size_t depth() const { return log2b_.size(); }

    unsigned log2_b(std::size_t k) const; // k in 1..K
    BigInt b(std::size_t k) const { return BigInt(1) << log2_b(k); }

    const BigInt& a(std::size_t k) const; // k in 0..K
    const std::vector<BigInt>& a_all() const { return a_; }

    // p(k, l) = prod_{i=1..l} 2 b_{k+i}; always a power of two.
    unsigned log2_p(std::size_t k, std::size_t l) const;
    BigInt p(std::size_t k, std::size_t l) const { return BigInt(1) << log2_p(k, l); }

    // log2 #A_k = b_1 b_2 ... b_k
    BigInt log2_family_size(std::size_t k) const;
    bool family_enumerable(std::size_t k) const;

    unsigned enumeration_cap_log2() const { return cap_log2_; }
    void set_enumeration_cap_log2(unsigned cap) { cap_log2_ = cap; }

    // log2(b_{k+1}) - log2(b_1...b_k) for k = 1..K-1; positive and growing
    // values indicate the fast-growth regime the exponential limit needs.
    std::vector<long long> growth_diagnostic() const;

    std::string describe() const; // "b=(2,4,8)"

private:
    std::vector<unsigned> log2b_;
    std::vector<BigInt> a_;
    std::vector<unsigned> cum_log2_p_; // cum_log2_p_[k] = log2 p(0,k), k in 0..K
    unsigned cap_log2_ = 20;
};

} // namespace zeproc
