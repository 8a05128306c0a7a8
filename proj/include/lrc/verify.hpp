#pragma once

// Exact certification of constructed codes: minimum distance by two
// independent methods, (r, delta)-locality of every block, the
// Singleton-type bound with its sharpened variant, the optimal-redundancy
// identity, and erasure-pattern recoverability (both the direct rank test
// and the sufficient set-combinatorial conditions).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/common.hpp"
#include "lrc/construct.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

enum class DistanceMethod { codewords, columns };
enum class MethodChoice { automatic, codewords, columns };

struct DistanceReport {
    std::size_t d = 0;
    DistanceMethod method = DistanceMethod::columns;
    std::uint64_t work = 0;  // codewords enumerated or column subsets tested
};

// Smallest w such that some w columns of the parity-check matrix are
// linearly dependent.  Levels are scanned in increasing w, so the first
// dependence found is the minimum distance.  Work is counted per subset
// against caps.subsets.
inline DistanceReport min_distance_columns(const MatrixGF& parity, const WorkCaps& caps = {}) {
    const std::size_t n = parity.cols();
    std::uint64_t work = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> hit;
        for_each_subset(n, w, [&](const std::vector<std::size_t>& idx) {
            if (++work > caps.subsets)
                throw cap_exceeded("column search exceeded the subset cap at weight " + std::to_string(w) +
                                   "; raise the cap or use codeword enumeration");
            if (!parity.columns_independent(idx)) {
                hit = idx;
                return false;
            }
            return true;
        });
        if (!hit.empty()) return {w, DistanceMethod::columns, work};
    }
    // all columns independent: the code is {0} and has no distance
    throw std::invalid_argument("min_distance: code has dimension 0");
}

// Minimum weight over all q^k - 1 nonzero codewords, enumerated from the
// generator matrix with a base-q odometer.  Each digit step adds
// (new - old) times one generator row, so the running codeword is updated
// in O(n); q steps of one digit sum to q * row = 0 in characteristic p.
inline DistanceReport min_distance_codewords(const MatrixGF& generator, const WorkCaps& caps = {}) {
    const std::size_t k = generator.rows(), n = generator.cols();
    if (k == 0) throw std::invalid_argument("min_distance: code has dimension 0");
    const Field& f = generator.field();
    const std::uint32_t q = f.q();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > caps.codewords / q)
            throw cap_exceeded("codeword enumeration would exceed the cap (q^k too large); use column search");
        total *= q;
    }

    std::vector<std::uint32_t> digits(k, 0), cur(n, 0);
    auto step_digit = [&](std::size_t i, std::uint32_t from, std::uint32_t to) {
        const std::uint32_t s = f.sub_v(to, from);
        if (s == 0) return;
        for (std::size_t j = 0; j < n; ++j) cur[j] = f.add_v(cur[j], f.mul_v(s, generator.vget(i, j)));
    };
    std::size_t best = n + 1;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::size_t i = 0;
        while (digits[i] == q - 1) {
            step_digit(i, q - 1, 0);
            digits[i] = 0;
            ++i;
        }
        step_digit(i, digits[i], digits[i] + 1);
        digits[i] += 1;
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += (cur[j] != 0);
        if (w < best) {
            best = w;
            if (best == 1) break;  // cannot improve
        }
    }
    return {best, DistanceMethod::codewords, total - 1};
}

inline DistanceReport min_distance(const LrcCode& code, MethodChoice choice = MethodChoice::automatic,
                                   const WorkCaps& caps = {}) {
    if (code.k == 0) throw std::invalid_argument("min_distance: code has dimension 0");
    switch (choice) {
        case MethodChoice::codewords:
            return min_distance_codewords(code.parity.nullspace(), caps);
        case MethodChoice::columns:
            return min_distance_columns(code.parity, caps);
        case MethodChoice::automatic: {
            std::uint64_t words = 1;
            bool small = true;
            for (std::size_t i = 0; i < code.k && small; ++i) {
                if (words > caps.codewords / code.field.q()) small = false;
                else words *= code.field.q();
            }
            if (small) return min_distance_codewords(code.parity.nullspace(), caps);
            std::uint64_t est = 0;
            for (std::size_t w = 1; w <= std::max<std::size_t>(code.d_target, 1); ++w) {
                std::uint64_t c = binomial(code.n, w);
                est = (est > caps.subsets - std::min(c, caps.subsets)) ? caps.subsets + 1 : est + c;
            }
            if (est <= caps.subsets) return min_distance_columns(code.parity, caps);
            throw cap_exceeded("min_distance: both methods exceed their work caps; raise --cap-codewords or "
                               "--cap-subsets");
        }
    }
    throw std::logic_error("min_distance: bad method");
}

// Distance of the code spanned by the rows of g, by column search on its
// parity-check (the nullspace of g).  nullopt means the zero code, whose
// distance is unbounded.
inline std::optional<std::size_t> rowspace_distance(const MatrixGF& g, const WorkCaps& caps = {}) {
    MatrixGF h = g.nullspace();
    const std::size_t len = g.cols();
    if (h.rows() == len) {
        // nullspace is everything: the row space is {0}
        return std::nullopt;
    }
    std::uint64_t work = 0;
    for (std::size_t w = 1; w <= len; ++w) {
        bool dep = false;
        for_each_subset(len, w, [&](const std::vector<std::size_t>& idx) {
            if (++work > caps.subsets) throw cap_exceeded("punctured-distance search exceeded the subset cap");
            if (!h.columns_independent(idx)) {
                dep = true;
                return false;
            }
            return true;
        });
        if (dep) return w;
    }
    return std::nullopt;  // unreachable for a nonzero row space
}

struct BlockLocality {
    std::size_t block = 0;
    std::size_t span_size = 0;
    std::size_t punctured_dim = 0;
    std::optional<std::size_t> punctured_distance;  // nullopt: zero punctured code, no constraint
    bool pass = false;
};

struct LocalityReport {
    bool pass = false;
    unsigned r = 0, delta = 0;
    std::size_t covered_columns = 0;  // columns inside some block span
    bool all_symbol = false;          // every column of the code is covered
    std::vector<BlockLocality> blocks;
};

// Every block span must have size <= r+delta-1 and a punctured code of
// minimum distance >= delta.  Columns outside every span (the global
// columns of family B) are exempt: they carry no locality promise.
inline LocalityReport verify_locality(const LrcCode& code, unsigned r, unsigned delta,
                                      const WorkCaps& caps = {}) {
    LocalityReport rep;
    rep.r = r;
    rep.delta = delta;
    rep.pass = true;
    MatrixGF gen = code.parity.nullspace();
    for (std::size_t b = 0; b < code.spans.size(); ++b) {
        const auto [start, len] = code.spans[b];
        rep.covered_columns += len;
        BlockLocality bl;
        bl.block = b;
        bl.span_size = len;
        std::vector<std::size_t> idx(len);
        for (std::size_t j = 0; j < len; ++j) idx[j] = start + j;
        MatrixGF gspan = gen.select_columns(idx);
        bl.punctured_dim = gspan.rank();
        bl.punctured_distance = rowspace_distance(gspan, caps);
        bl.pass = len <= std::size_t{r} + delta - 1 &&
                  (!bl.punctured_distance || *bl.punctured_distance >= delta);
        rep.pass = rep.pass && bl.pass;
        rep.blocks.push_back(std::move(bl));
    }
    rep.all_symbol = rep.covered_columns == code.n;
    return rep;
}

inline LocalityReport verify_locality(const LrcCode& code, const WorkCaps& caps = {}) {
    return verify_locality(code, code.r, code.delta, caps);
}

// d <= n-k+1-(ceil(k/r)-1)(delta-1), the bound every (r,delta)-local code
// obeys.
inline std::int64_t singleton_bound(std::size_t n, std::size_t k, unsigned r, unsigned delta) {
    if (k == 0 || r == 0) throw std::invalid_argument("singleton_bound: k and r must be positive");
    const std::int64_t ck = ceil_div(static_cast<std::int64_t>(k), r);
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) + 1 -
           (ck - 1) * (static_cast<std::int64_t>(delta) - 1);
}

// The sharper variant d <= n-k+1-ceil(k/r)(delta-1), valid exactly when
// r = d-delta and (r+delta-1) | n.
inline std::int64_t singleton_bound_sharp(std::size_t n, std::size_t k, unsigned r, unsigned delta) {
    if (k == 0 || r == 0) throw std::invalid_argument("singleton_bound: k and r must be positive");
    const std::int64_t ck = ceil_div(static_cast<std::int64_t>(k), r);
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) + 1 -
           ck * (static_cast<std::int64_t>(delta) - 1);
}

inline bool sharp_bound_applies(std::size_t n, std::size_t d_measured, unsigned r, unsigned delta) {
    return static_cast<std::int64_t>(r) == static_cast<std::int64_t>(d_measured) - delta &&
           n % (std::size_t{r} + delta - 1) == 0;
}

struct OptimalityReport {
    std::size_t n = 0, k = 0;
    unsigned r = 0, delta = 0;
    std::size_t d_measured = 0;
    int bound_used = 1;  // 1 = plain Singleton-type, 3 = sharpened r = d-delta variant
    std::int64_t bound = 0;
    std::int64_t defect = 0;  // bound - d_measured
    bool locality_ok = false;
    bool optimal = false;
};

inline OptimalityReport singleton_report(const LrcCode& code, std::size_t d_measured, bool locality_ok) {
    OptimalityReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.r = code.r;
    rep.delta = code.delta;
    rep.d_measured = d_measured;
    rep.locality_ok = locality_ok;
    if (sharp_bound_applies(code.n, d_measured, code.r, code.delta)) {
        rep.bound_used = 3;
        rep.bound = singleton_bound_sharp(code.n, code.k, code.r, code.delta);
    } else {
        rep.bound_used = 1;
        rep.bound = singleton_bound(code.n, code.k, code.r, code.delta);
    }
    rep.defect = rep.bound - static_cast<std::int64_t>(d_measured);
    rep.optimal = rep.defect == 0 && locality_ok;
    return rep;
}

struct RedundancyReport {
    std::int64_t nk = 0;  // the redundancy n-k an optimal code must have
    std::int64_t k = 0;   // n - nk
    bool consistent = false;
};

// The redundancy forced on any code meeting the Singleton-type bound with
// equality.  The identity is one-directional: the returned k may fail to
// reproduce the bound (or even be nonpositive), and `consistent` records
// whether back-substitution really yields equality.
inline RedundancyReport optimal_redundancy(std::size_t n, unsigned r, unsigned delta, std::size_t d) {
    const std::int64_t R = std::int64_t{r} + delta - 1;
    if (r == 0 || delta < 2) throw std::invalid_argument("optimal_redundancy: need r >= 1 and delta >= 2");
    if (R == 0 || static_cast<std::int64_t>(n) % R != 0)
        throw std::invalid_argument("optimal_redundancy: r+delta-1 must divide n");
    RedundancyReport rep;
    const std::int64_t dmd = static_cast<std::int64_t>(d) - delta;
    rep.nk = (std::int64_t{delta} - 1) * (static_cast<std::int64_t>(n) / R) + dmd -
             (std::int64_t{delta} - 1) * floor_div(dmd, R);
    rep.k = static_cast<std::int64_t>(n) - rep.nk;
    rep.consistent = rep.k >= 1 && singleton_bound(n, static_cast<std::size_t>(rep.k), r, delta) ==
                                       static_cast<std::int64_t>(d);
    return rep;
}

// Erasures named by generating element, block by block; global names the
// erased extra columns of a family-B code.
struct ErasurePattern {
    std::vector<std::vector<std::uint32_t>> per_block;
    std::vector<std::uint32_t> global;
};

inline std::vector<std::size_t> pattern_columns(const LrcCode& code, const ErasurePattern& pat) {
    if (pat.per_block.size() != code.groups.size())
        throw std::invalid_argument("pattern: expected one erasure set per block (" +
                                    std::to_string(code.groups.size()) + " blocks)");
    if (!pat.global.empty() && code.family != Family::B)
        throw std::invalid_argument("pattern: global erasures only exist for family-B codes");
    std::vector<std::size_t> cols;
    for (std::size_t b = 0; b < pat.per_block.size(); ++b)
        for (std::uint32_t e : pat.per_block[b]) cols.push_back(column_of(code, b, e));
    for (std::uint32_t e : pat.global) cols.push_back(global_column_of(code, e));
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw std::invalid_argument("pattern: repeated erasure");
    return cols;
}

inline ErasurePattern pattern_from_columns(const LrcCode& code, const std::vector<std::size_t>& cols) {
    ErasurePattern pat;
    pat.per_block.resize(code.groups.size());
    for (std::size_t c : cols) {
        if (c >= code.n) throw std::invalid_argument("pattern: column out of range");
        if (code.global_span && c >= code.global_span->first) {
            pat.global.push_back(code.global[c - code.global_span->first]);
            continue;
        }
        bool placed = false;
        for (std::size_t b = 0; b < code.spans.size() && !placed; ++b) {
            const auto [start, len] = code.spans[b];
            if (c >= start && c < start + len) {
                pat.per_block[b].push_back(code.groups[b][c - start]);
                placed = true;
            }
        }
        if (!placed) throw std::invalid_argument("pattern: column not covered by any block");
    }
    return pat;
}

inline bool recoverable_columns(const LrcCode& code, const std::vector<std::size_t>& cols) {
    return code.parity.columns_independent(cols);
}

// A pattern is recoverable exactly when the parity-check restricted to the
// erased columns has full column rank.
inline bool recoverable(const LrcCode& code, const ErasurePattern& pat) {
    return recoverable_columns(code, pattern_columns(code, pat));
}

// The sufficient conditions under which a family-B erasure pattern is
// guaranteed recoverable.  With S = {blocks holding >= delta erasures}:
//   (a) |union of E_i over S| + |E_global| <= h+delta-1, and
//   (b) 2|union of G_i over S| >= (2r+delta-2)|S| + delta, lowered by
//       2(r-v) when the short block is in S (doubled form, so half-integer
//       thresholds stay exact).
// Independent of the rank test by design; the two are cross-checked in the
// test suite.
inline bool pattern_certified_recoverable(const LrcCode& code, const ErasurePattern& pat) {
    if (code.family != Family::B)
        throw std::invalid_argument("pattern_certified_recoverable: family-B codes only");
    if (pat.per_block.size() != code.groups.size())
        throw std::invalid_argument("pattern: expected one erasure set per block");
    pattern_columns(code, pat);  // validates membership
    std::vector<std::size_t> S;
    for (std::size_t b = 0; b < pat.per_block.size(); ++b)
        if (pat.per_block[b].size() >= code.delta) S.push_back(b);

    std::set<std::uint32_t> erased_union;
    for (std::size_t b : S) erased_union.insert(pat.per_block[b].begin(), pat.per_block[b].end());
    if (erased_union.size() + pat.global.size() > std::size_t{code.h} + code.delta - 1) return false;

    if (S.empty()) return true;
    std::set<std::uint32_t> gen_union;
    for (std::size_t b : S) gen_union.insert(code.groups[b].begin(), code.groups[b].end());
    std::int64_t need2 = (2 * std::int64_t{code.r} + code.delta - 2) * static_cast<std::int64_t>(S.size()) +
                         code.delta;
    if (S.back() == code.groups.size() - 1) need2 += 2 * (std::int64_t{code.v} - code.r);
    return 2 * static_cast<std::int64_t>(gen_union.size()) >= need2;
}

}  // namespace lrc
