#include "zeproc/sampler.hpp"

#include "zeproc/ruler.hpp"
#include "zeproc/word.hpp"

#include <stdexcept>

namespace zeproc {

namespace {

struct BitSource {
    std::mt19937_64& rng;
    std::uint64_t buf = 0;
    unsigned left = 0;
    bool next() {
        if (left == 0) {
            buf = rng();
            left = 64;
        }
        bool b = buf & 1;
        buf >>= 1;
        --left;
        return b;
    }
};

// Writes the prefix of one uniformly drawn A_level word starting at `start`,
// clipped to out.size(). `out` is pre-filled with '0', so spacers are skips.
void fill_block(std::string& out, std::size_t level, std::size_t start, const ProcessParams& pp,
                BitSource& bits) {
    if (start >= out.size()) return;
    if (level == 0) {
        out[start] = bits.next() ? '2' : '1';
        return;
    }
    std::uint64_t b = std::uint64_t(1) << pp.log2_b(level);
    std::size_t sub_len = static_cast<std::size_t>(pp.a(level - 1));
    std::size_t cursor = start;
    std::vector<std::size_t> first_half;
    for (std::uint64_t i = 1; i <= b && cursor < out.size(); ++i) {
        first_half.push_back(cursor);
        fill_block(out, level - 1, cursor, pp, bits);
        cursor += sub_len + omega_u64(i);
    }
    for (std::uint64_t i = 1; i <= b && cursor < out.size(); ++i) {
        std::size_t src = first_half[static_cast<std::size_t>(i - 1)];
        for (std::size_t t = 0; t < sub_len && cursor < out.size(); ++t, ++cursor)
            out[cursor] = negate_symbol(out[src + t]);
        cursor += omega_u64(b + i);
    }
}

} // namespace

SampledPoint sample_point(const ProcessParams& pp, std::size_t length, std::mt19937_64& rng) {
    if (length == 0) return {"", 0, 0};
    std::size_t level = 0;
    while (level <= pp.depth() && pp.a(level) < length) ++level;
    if (level > pp.depth())
        throw std::runtime_error("sample_point: no a_k >= " + std::to_string(length) +
                                 " within depth, max a_K = " + pp.a(pp.depth()).str());
    SampledPoint s;
    s.level = level;
    s.prefix.assign(length, '0');
    BitSource bits{rng};
    fill_block(s.prefix, level, 0, pp, bits);
    return s;
}

std::pair<std::size_t, std::string> shift_to_nonzero(const std::string& prefix) {
    std::size_t off = prefix.find_first_not_of('0');
    if (off == std::string::npos)
        throw std::invalid_argument("shift_to_nonzero: prefix contains no nonzero symbol");
    return {off, prefix.substr(off)};
}

} // namespace zeproc
