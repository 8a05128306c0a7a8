#pragma once

// Shared plumbing: work caps, the cap-exceeded error, exact integer helpers
// and deterministic combinatorial / random primitives used across the library.
//
// Everything here is branch-for-branch deterministic: same inputs (and same
// 64-bit seed where one is taken) give the same results on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// Thrown when an exact check would exceed its enumeration budget.  Callers
// can retry with a larger cap; distinct from std::invalid_argument, which
// signals a violated precondition.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budgets for the exact verifiers.  Defaults are sized so every
// desk-scale fixture passes; raise them explicitly for bigger jobs.
struct WorkCaps {
    std::uint64_t codewords = std::uint64_t{1} << 24;  // full codeword sweeps
    std::uint64_t subsets = 100'000'000;               // column-subset rank tests
    std::uint64_t enumeration = 5'000'000;             // hypergraph edge candidates
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

// Binomial coefficient, saturating at 2^63-1 so cap comparisons stay safe.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    const std::uint64_t lim = std::uint64_t{1} << 63;
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n-k+i) / i is integral at every step
        std::uint64_t num = n - k + i;
        if (acc > lim / num) return lim;
        acc = acc * num / i;
    }
    return acc;
}

// Visits k-subsets of {0..n-1} in lexicographic order as sorted index
// vectors.  fn returns false to stop early; the return value says whether
// the sweep ran to completion.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        // advance: find rightmost index that can move
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Uniform draw from [0, n) by rejection; unbiased and identical on every
// platform, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t u;
    do {
        u = rng();
    } while (u >= limit && limit != 0);
    return u % n;
}

// Fisher-Yates with the deterministic draw above (std::shuffle leaves the
// permutation unspecified by the standard).
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Bernoulli(p) as a fixed threshold test on one rng draw.  The threshold is
// computed once from the double p, so identical p and seed give identical
// accept/reject sequences everywhere.
class BernoulliGate {
public:
    explicit BernoulliGate(double p) {
        if (p >= 1.0) {
            always_ = true;
        } else if (p > 0.0) {
            // long double keeps the product exact enough that p just below 1
            // cannot round up to 2^64 and overflow the cast
            const long double t = static_cast<long double>(p) * 18446744073709551616.0L;
            if (t >= 18446744073709551616.0L) always_ = true;
            else threshold_ = static_cast<std::uint64_t>(t);
        }
    }
    bool operator()(std::mt19937_64& rng) const {
        std::uint64_t u = rng();  // always consume one draw, keeps streams aligned
        if (always_) return true;
        return u < threshold_;
    }

private:
    bool always_ = false;
    std::uint64_t threshold_ = 0;
};

}  // namespace lrc
