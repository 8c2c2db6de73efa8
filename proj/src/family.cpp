#include "zeproc/family.hpp"

#include "zeproc/ruler.hpp"
#include "zeproc/word.hpp"

#include <stdexcept>

namespace zeproc {

std::string compose_family_word(std::size_t level, const std::vector<std::string>& parts,
                                const ProcessParams& pp) {
    if (level < 1 || level > pp.depth())
        throw std::out_of_range("compose_family_word: level out of range");
    std::uint64_t b = std::uint64_t(1) << pp.log2_b(level);
    if (parts.size() != b)
        throw std::invalid_argument("compose_family_word: expected b_k parts");
    std::string out;
    out.reserve(static_cast<std::size_t>(pp.a(level)));
    for (std::uint64_t i = 1; i <= b; ++i) {
        out += parts[static_cast<std::size_t>(i - 1)];
        out.append(omega_u64(i), '0');
    }
    for (std::uint64_t i = 1; i <= b; ++i) {
        out += negate_word(parts[static_cast<std::size_t>(i - 1)]);
        out.append(omega_u64(b + i), '0');
    }
    return out;
}

std::vector<std::string> enumerate_family(std::size_t k, const ProcessParams& pp) {
    if (k >= pp.a_all().size())
        throw std::out_of_range("enumerate_family: level beyond configured depth");
    if (!pp.family_enumerable(k))
        throw std::runtime_error("enumerate_family: A_" + std::to_string(k) + " has 2^" +
                                 pp.log2_family_size(k).str() + " elements, above cap 2^" +
                                 std::to_string(pp.enumeration_cap_log2()));
    std::vector<std::string> fam = {"1", "2"};
    for (std::size_t level = 1; level <= k; ++level) {
        std::uint64_t b = std::uint64_t(1) << pp.log2_b(level);
        std::vector<std::string> next;
        next.reserve(static_cast<std::size_t>(1)
                     << static_cast<unsigned>(pp.log2_family_size(level)));
        std::vector<std::size_t> idx(static_cast<std::size_t>(b), 0);
        std::vector<std::string> parts(static_cast<std::size_t>(b));
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i) parts[i] = fam[idx[i]];
            next.push_back(compose_family_word(level, parts, pp));
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == fam.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        fam = std::move(next);
    }
    return fam;
}

std::vector<std::string> parse_family_blocks(const std::string& u, std::size_t from_level,
                                             std::size_t sub_level, const ProcessParams& pp) {
    if (sub_level > from_level || from_level > pp.depth())
        throw std::out_of_range("parse_family_blocks: bad levels");
    if (u.size() != pp.a(from_level))
        throw std::invalid_argument("parse_family_blocks: wrong word length");
    std::uint64_t nblocks = std::uint64_t(1) << pp.log2_p(sub_level, from_level - sub_level);
    std::size_t block_len = static_cast<std::size_t>(pp.a(sub_level));
    std::vector<std::string> blocks;
    blocks.reserve(static_cast<std::size_t>(nblocks));
    std::size_t cursor = 0;
    for (std::uint64_t i = 1; i <= nblocks; ++i) {
        blocks.push_back(u.substr(cursor, block_len));
        cursor += block_len;
        unsigned spacer = omega_u64(i);
        for (unsigned s = 0; s < spacer; ++s, ++cursor)
            if (cursor >= u.size() || u[cursor] != '0')
                throw std::invalid_argument("parse_family_blocks: nonzero symbol in spacer");
    }
    if (cursor != u.size())
        throw std::invalid_argument("parse_family_blocks: length mismatch after parse");
    return blocks;
}

} // namespace zeproc
