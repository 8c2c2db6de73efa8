#pragma once

#include "zeproc/dyadic.hpp"
#include "zeproc/measure.hpp"
#include "zeproc/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zeproc {

// All start positions of u in text (overlapping), linear scan.
std::vector<std::size_t> occurrences(const std::string& u, const std::string& text);

// Right-continuous empirical step CDF over weighted jump points.
class EmpiricalCdf {
public:
    static EmpiricalCdf from_samples(std::vector<double> xs);
    static EmpiricalCdf from_weighted(std::vector<std::pair<double, std::uint64_t>> jumps);

    double eval(double t) const; // fraction of mass <= t
    double mean() const;
    // integral_0^t (1 - F(s)) ds = E[min(t, X)]
    double integral_survival(double t) const;
    std::uint64_t size() const { return total_; }
    const std::vector<double>& jump_values() const { return values_; }
    const std::vector<std::uint64_t>& cumulative() const { return cum_; }

private:
    std::vector<double> values_;      // ascending
    std::vector<std::uint64_t> cum_;  // cumulative counts
    std::uint64_t total_ = 0;
};

// CDF of {mu(u) * (gap between consecutive occurrences)}; needs >= 2
// occurrences. Occurrence gaps along one long prefix sample the conditional
// (return-time) law.
EmpiricalCdf return_cdf(const std::vector<std::size_t>& occ, double mu_u);

// CDF of {mu(u) * (steps from j to the next occurrence strictly after j)}
// over all positions j in [0, last occurrence); needs >= 1 occurrence.
// Position-uniform sampling realizes the stationary (hitting-time) law.
EmpiricalCdf hitting_cdf(const std::vector<std::size_t>& occ, double mu_u);

// sup_t |F(t) - (1 - e^-t)|, evaluated at the jump points and their left
// limits (exact for a step CDF against a continuous target).
double ks_to_exponential(const EmpiricalCdf& cdf);

// The explicit deviation bound between hitting and return laws, assembled
// from the three partial bounds plus the final exponential-proximity slack:
//   |F(t) - Ftilde(t)| <= 3 theta(u) + mu([0^{omega_g}])  for t within the
//   horizon t <= mu(u) (b_{k+2} - 1) a_{k+1}, k the largest level with
//   p(0,k) <= g, and
//   |F(t) - (1 - e^-t)| <= sup|F - Ftilde| + 2 mu(u).
struct BoundReport {
    BigInt order_g;
    std::size_t level_k = 0;
    Dyadic zero_run_term; // mu([0^{omega_g}]) = 1/g
    Dyadic theta_term;    // theta(u)
    Dyadic two_theta;     // 2 theta(u)
    Dyadic combined;      // 3 theta(u) + zero_run_term
    Dyadic mu_u;
    Dyadic ode_total;     // combined + 2 mu(u)
    Dyadic horizon;       // rescaled-time validity horizon
};

// Requires u in the language with nonzero first symbol and k+2 within depth.
BoundReport bound_report(const std::string& u, const ProcessParams& pp);

// mu(u) * b_{k+2} * a_{k+1}; diverges along x<n> when the b-tower grows fast
// enough. Reported, never asserted.
Dyadic divergence_diagnostic(const std::string& u, const ProcessParams& pp);

// Lower bound mu(u) >= 1 / (#A_{k+1} (a_{k+1} + 1)) as (log2-exponent) pair,
// for diagnostics at depths where doubles underflow.
bool divergence_lower_bound_holds(const std::string& u, const ProcessParams& pp);

// Empirical Cesaro correlation average
//   alpha(n, [u], [v]) = 1/n sum_{j=1..n} |mu(u cap T^-j v) - mu(u) mu(v)|
// with occurrence-frequency estimates along the prefix.
double correlation_average(const std::string& u, const std::string& v, std::size_t n,
                           const std::string& text);

// Exact number of distinct length-n words of the language. Skeleton window
// patterns are enumerated by a pruned DFS over run-length tuples (each
// pattern is one residue-class intersection), and each pattern contributes
// 2^c words, c the number of dependency classes its window meets.
std::uint64_t complexity(std::size_t n, const ProcessParams& pp);

} // namespace zeproc
