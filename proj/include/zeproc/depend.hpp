#pragma once

#include "zeproc/params.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zeproc {

// Dependency structure on coordinates. A skeleton position j = z_0(i) is
// identified by the mixed-radix digits of its index i in bases
// 2b_1, 2b_2, ..., 2b_K:
//
//   i = sum_t gamma_t p(0,t),   0 <= gamma_t < 2 b_{t+1}.
//
// Two skeleton positions carry mutually determined symbols exactly when the
// per-digit reductions gamma_t mod b_{t+1} all agree, and the symbols then
// differ by the negation applied (parity difference) times, where
// parity = sum_t floor(gamma_t / b_{t+1}) mod 2.
//
// Indices at or beyond p(0,K) keep their digits below level K plus the
// remaining quotient as a block tag. Positions in different blocks are
// treated as independent: any extension of the b-tower by factors >= 2 puts
// the nearest cross-block class sibling at distance >= 2 p(0,K), so the
// within-window relations computed here do not depend on the extension as
// long as the window spans fewer than 2 p(0,K) indices.
struct DependencyClassId {
    BigInt block;                       // index div p(0,K)
    std::vector<std::uint64_t> reduced; // gamma_t mod b_{t+1}, t = 0..K-1
    unsigned parity = 0;                // negation count mod 2 (not part of identity)

    bool same_class(const DependencyClassId& o) const {
        return block == o.block && reduced == o.reduced;
    }
    std::string key() const; // identity as a hashable string (parity excluded)
};

DependencyClassId class_of_index(const BigInt& index, const ProcessParams& pp);

// class_of on a position; rejects positions off the skeleton (w_j = 0).
DependencyClassId class_of(const BigInt& position, const ProcessParams& pp);

// Direct dependency: both positions on the skeleton, both inside one level-k
// window [z_k(m), z_k(m) + a_k), at distance exactly (a_k - 1) / 2.
bool direct_dependent(const BigInt& pos_a, const BigInt& pos_b, const ProcessParams& pp);

// Number of distinct classes meeting the given positions.
BigInt d_count(std::span<const BigInt> positions, const ProcessParams& pp);

// Number of distinct classes meeting [lo, hi) (positions). Counted per level
// from the digit structure: full depth-K blocks contribute p(0,K)/2^K each
// and never share classes, partial blocks are resolved by counting, for each
// lowest flipped level t*, the indices whose nearest smaller class sibling
// (distance b_{t*+1} p(0,t*)) falls below the range.
BigInt d_count_interval(const BigInt& lo, const BigInt& hi, const ProcessParams& pp);

// Shannon entropy (bits) of the exact distribution of A_k words restricted
// to the coordinates I, computed from the smallest enumerable family that
// covers I. Equals d_count(I) by construction of the measure; kept as the
// independent enumeration-side route.
double partition_entropy_oracle(std::span<const BigInt> I, const ProcessParams& pp);

} // namespace zeproc
