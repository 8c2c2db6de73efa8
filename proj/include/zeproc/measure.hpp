#pragma once

#include "zeproc/dyadic.hpp"
#include "zeproc/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zeproc {

// Occurrence structure of a word u = 0^{m0} u(1) 0^{m1} ... u(q) 0^{mq} with
// nonzero u(i). The admissible skeleton anchors
//
//   Omega(u) = {i : omega_{i+j} = m_j for 1 <= j < q,
//                   omega_i >= m_0, omega_{i+q} >= m_q}
//
// form an arithmetic progression {g0 + n g} (or are empty), obtained as the
// exact intersection of one residue class mod a power of two per constraint.
// The position image is Xi(u) = {z_0(i) - m0 : i in Omega(u)}.
struct OccurrenceProgression {
    bool empty = true;
    BigInt gap;   // g, a power of two
    BigInt least; // g0, the least element of Omega(u)
    std::vector<std::size_t> zero_runs; // m_0..m_q
    std::string symbols;                // u(1)..u(q)

    std::size_t q() const { return symbols.size(); }
    std::size_t m0() const { return zero_runs.front(); }
    BigInt xi(const BigInt& n) const; // position of the n-th occurrence
};

// Throws on all-zero or empty words (their occurrence sets are not
// progressions; see mu_zero_run).
OccurrenceProgression occurrence_progression(const std::string& u);

enum class WordStatus {
    in_language,       // positive measure
    empty_progression, // skeleton pattern never occurs
    class_inconsistent // pattern occurs but symbols contradict a dependency class
};

const char* to_string(WordStatus s);

// theta, order and measure of a cylinder in one bundle:
//   theta(u)  = T^{xi(0)} nu([u]),   mu([u]) = theta(u) / (2g).
// The skeleton density 1/(2g) is exact (z_0(m)/m -> 2); the occurrence
// counting oracle in the tests validates it rather than defines it.
struct CylinderMeasure {
    std::string word;
    WordStatus status = WordStatus::in_language;
    OccurrenceProgression progression; // empty-flag set for all-zero words
    Dyadic theta;
    Dyadic skeleton_density;
    Dyadic mu;
};

// Handles every nonempty word: all-zero words get theta = 1 and
// mu = 2^{-|u|}; words off the language get mu = 0 with the reason in
// `status` (empty progression and class inconsistency are kept distinct).
CylinderMeasure analyze_word(const std::string& u, const ProcessParams& pp);

// T^shift nu([u]) computed exactly: 0 on any skeleton or class mismatch,
// otherwise 2^-c with c the number of dependency classes met by the window.
Dyadic nu_cylinder(const std::string& u, const BigInt& shift, const ProcessParams& pp);

// theta(u); throws when u is not in the language. All-zero words yield 1.
Dyadic theta(const std::string& u, const ProcessParams& pp);

// mu([u]) for words with at least one nonzero symbol; 0 when u is not in
// the language. All-zero words are rejected (use mu_zero_run).
Dyadic mu_cylinder(const std::string& u, const ProcessParams& pp);

// mu([0^m]) = 2^-m.
Dyadic mu_zero_run(std::size_t m);

// Checks T^{z_0(m 2^n)} nu = nu on all length-z_0(2^n) words occurring in
// the enumeration (plus a total-mass check, so no mass hides elsewhere).
bool nu_invariance_check(unsigned n, const BigInt& m, const ProcessParams& pp);

} // namespace zeproc
