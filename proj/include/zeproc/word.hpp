#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeproc {

// Words are plain strings over '0', '1', '2'. The negation swaps 1 and 2
// and fixes 0; the projection pi collapses 1 and 2 onto 1.

inline bool is_word(std::string_view u) {
    for (char c : u)
        if (c != '0' && c != '1' && c != '2') return false;
    return true;
}

inline void require_word(std::string_view u) {
    if (!is_word(u)) throw std::invalid_argument("word must use symbols 0, 1, 2 only");
}

inline char negate_symbol(char c) {
    if (c == '1') return '2';
    if (c == '2') return '1';
    return c;
}

inline std::string negate_word(std::string u) {
    for (char& c : u) c = negate_symbol(c);
    return u;
}

inline std::string pi_project(std::string u) {
    for (char& c : u)
        if (c == '2') c = '1';
    return u;
}

inline bool all_zero(std::string_view u) {
    return u.find_first_not_of('0') == std::string_view::npos;
}

} // namespace zeproc
