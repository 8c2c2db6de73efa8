#pragma once

#include "zeproc/dyadic.hpp"
#include "zeproc/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zeproc {

// The ruler sequence omega_n = max{k : 2^k divides n}, n >= 1, and the
// position coefficients z_k(i) = i a_k + sum_{j<=i} omega_j built on it.
// Prefix sums of omega are evaluated in closed form (Legendre):
// sum_{j=1..n} omega_j = n - popcount(n), so every query is O(log n).

unsigned omega_u64(std::uint64_t n);
unsigned omega(const BigInt& n); // rejects n = 0

// sum_{j=1..n} omega_j = n - popcount(n)
BigInt omega_prefix_sum(const BigInt& n);

BigInt z_coeff(std::size_t k, const BigInt& i, const ProcessParams& pp);

// z_0 needs no parameters (a_0 = 1): z_0(i) = 2i - popcount(i).
BigInt z0(const BigInt& i);

// Inverse lookups on the strictly increasing z_0.
std::optional<BigInt> skeleton_index_at(const BigInt& pos); // i with z_0(i) == pos
BigInt skeleton_index_ceil(const BigInt& pos);              // least i with z_0(i) >= pos

// Prefix of the 0/1 skeleton w = 1 0^{omega_1} 1 0^{omega_2} ...
// Ones sit exactly at the positions z_0(i).
std::string skeleton_prefix(std::size_t n);

// Longest run of indices i with omega_i == omega_{i+d}, for d = 1..max_d,
// scanning i + d <= horizon. Two equal length-n windows of omega at distance
// d < n exist iff such a run reaches n.
std::vector<std::size_t> nonoverlap_max_runs(std::size_t max_d, std::size_t horizon);

// True iff every pair of equal length-n windows of omega within the horizon
// sits at distance >= n.
bool nonoverlap_check(std::size_t n, std::size_t horizon);

} // namespace zeproc
