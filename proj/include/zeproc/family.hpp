#pragma once

#include "zeproc/params.hpp"

#include <string>
#include <vector>

namespace zeproc {

// The recursive word families A_k. A_0 = {"1", "2"}; a word of A_{k+1}
// is assembled from b_{k+1} free choices u(1)..u(b) in A_k as
//
//   u(1) 0^{w1} u(2) 0^{w2} ... u(b) 0^{wb} u(1)' 0^{w(b+1)} ... u(b)' 0^{w(2b)}
//
// where wi = omega_i and ' is the negation.

// Assemble one A_{level} word from its level-(level-1) parts.
std::string compose_family_word(std::size_t level, const std::vector<std::string>& parts,
                                const ProcessParams& pp);

// All of A_k, each word of length a_k. Throws when 2^(b_1...b_k) exceeds the
// enumeration cap; the message carries the exact cardinality.
std::vector<std::string> enumerate_family(std::size_t k, const ProcessParams& pp);

// Split u in A_{from_level} into its p(sub_level, from_level - sub_level)
// constituent blocks of length a_{sub_level}, checking the zero spacers.
std::vector<std::string> parse_family_blocks(const std::string& u, std::size_t from_level,
                                             std::size_t sub_level, const ProcessParams& pp);

} // namespace zeproc
