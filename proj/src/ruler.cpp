#include "zeproc/ruler.hpp"

#include <bit>
#include <stdexcept>

namespace zeproc {

unsigned omega_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("omega: n must be >= 1");
    return static_cast<unsigned>(std::countr_zero(n));
}

unsigned omega(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("omega: n must be >= 1");
    return boost::multiprecision::lsb(n);
}

BigInt omega_prefix_sum(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("omega_prefix_sum: n must be >= 0");
    if (n == 0) return 0;
    return n - popcount_big(n);
}

BigInt z_coeff(std::size_t k, const BigInt& i, const ProcessParams& pp) {
    if (i < 0) throw std::invalid_argument("z_k(i): i must be >= 0");
    return i * pp.a(k) + omega_prefix_sum(i);
}

BigInt z0(const BigInt& i) {
    if (i < 0) throw std::invalid_argument("z_0(i): i must be >= 0");
    if (i == 0) return 0;
    return 2 * i - popcount_big(i);
}

BigInt skeleton_index_ceil(const BigInt& pos) {
    if (pos <= 0) return 0;
    // z_0(i) in [2i - msb-1, 2i], so the answer lies in a narrow band above pos/2.
    BigInt lo = pos >> 1;
    BigInt hi = (pos >> 1) + static_cast<unsigned>(boost::multiprecision::msb(pos)) + 2;
    while (lo < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (z0(mid) >= pos)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::optional<BigInt> skeleton_index_at(const BigInt& pos) {
    if (pos < 0) return std::nullopt;
    BigInt i = skeleton_index_ceil(pos);
    if (z0(i) == pos) return i;
    return std::nullopt;
}

std::string skeleton_prefix(std::size_t n) {
    std::string w(n, '0');
    BigInt i = 0;
    for (BigInt pos = 0; pos < n; pos = z0(++i)) w[static_cast<std::size_t>(pos)] = '1';
    return w;
}

std::vector<std::size_t> nonoverlap_max_runs(std::size_t max_d, std::size_t horizon) {
    std::vector<std::size_t> runs(max_d + 1, 0);
    std::vector<unsigned> om(horizon + 1);
    for (std::size_t i = 1; i <= horizon; ++i) om[i] = omega_u64(i);
    for (std::size_t d = 1; d <= max_d; ++d) {
        std::size_t cur = 0;
        for (std::size_t i = 1; i + d <= horizon; ++i) {
            if (om[i] == om[i + d]) {
                ++cur;
                if (cur > runs[d]) runs[d] = cur;
            } else {
                cur = 0;
            }
        }
    }
    return runs;
}

bool nonoverlap_check(std::size_t n, std::size_t horizon) {
    if (n < 1 || n > horizon) throw std::invalid_argument("nonoverlap_check: need 1 <= n <= horizon");
    auto runs = nonoverlap_max_runs(n > 0 ? n - 1 : 0, horizon);
    for (std::size_t d = 1; d < n; ++d)
        if (runs[d] >= n) return false;
    return true;
}

} // namespace zeproc
