#include "zeproc/params.hpp"

#include <bit>
#include <stdexcept>

namespace zeproc {

ProcessParams ProcessParams::from_b(const std::vector<std::uint64_t>& b) {
    std::vector<unsigned> log2b;
    log2b.reserve(b.size());
    for (std::uint64_t v : b) {
        if (v < 2 || !std::has_single_bit(v))
            throw std::invalid_argument("ProcessParams: every b_k must be a power of two >= 2, got " +
                                        std::to_string(v));
        log2b.push_back(static_cast<unsigned>(std::countr_zero(v)));
    }
    return from_log2(std::move(log2b));
}

ProcessParams ProcessParams::from_log2(std::vector<unsigned> log2b) {
    if (log2b.empty()) throw std::invalid_argument("ProcessParams: depth must be at least 1");
    for (unsigned e : log2b)
        if (e == 0 || e > 62)
            throw std::invalid_argument("ProcessParams: b_k out of supported range");
    ProcessParams pp;
    pp.log2b_ = std::move(log2b);
    pp.a_.assign(1, BigInt(1));
    pp.cum_log2_p_.assign(1, 0u);
    for (std::size_t k = 0; k < pp.log2b_.size(); ++k) {
        BigInt two_b = BigInt(1) << (pp.log2b_[k] + 1);
        pp.a_.push_back(two_b * pp.a_.back() + two_b - 1);
        pp.cum_log2_p_.push_back(pp.cum_log2_p_.back() + pp.log2b_[k] + 1);
    }
    return pp;
}

ProcessParams ProcessParams::preset(std::string_view name) {
    if (name == "tiny2") return from_b({2});
    if (name == "tiny") return from_b({2, 4});
    if (name == "small") return from_b({2, 4, 8});
    if (name == "medium") return from_b({4, 16, 256});
    if (name == "fast") return from_b({8, 512, std::uint64_t(1) << 27});
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

unsigned ProcessParams::log2_b(std::size_t k) const {
    if (k < 1 || k > log2b_.size())
        throw std::out_of_range("b_k requested beyond configured depth");
    return log2b_[k - 1];
}

const BigInt& ProcessParams::a(std::size_t k) const {
    if (k >= a_.size()) throw std::out_of_range("a_k requested beyond configured depth");
    return a_[k];
}

unsigned ProcessParams::log2_p(std::size_t k, std::size_t l) const {
    if (k + l > log2b_.size())
        throw std::out_of_range("p(k,l) requested beyond configured depth");
    return cum_log2_p_[k + l] - cum_log2_p_[k];
}

BigInt ProcessParams::log2_family_size(std::size_t k) const {
    if (k >= a_.size()) throw std::out_of_range("family level beyond configured depth");
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r <<= log2b_[i];
    return r;
}

bool ProcessParams::family_enumerable(std::size_t k) const {
    return log2_family_size(k) <= cap_log2_;
}

std::vector<long long> ProcessParams::growth_diagnostic() const {
    std::vector<long long> out;
    long long acc = log2b_[0];
    for (std::size_t k = 1; k < log2b_.size(); ++k) {
        out.push_back(static_cast<long long>(log2b_[k]) - acc);
        acc += log2b_[k];
    }
    return out;
}

std::string ProcessParams::describe() const {
    std::string s = "b=(";
    for (std::size_t i = 0; i < log2b_.size(); ++i) {
        if (i) s += ",";
        s += (BigInt(1) << log2b_[i]).str();
    }
    return s + ")";
}

} // namespace zeproc
