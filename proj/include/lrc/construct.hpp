#pragma once

// Parity-check-matrix constructions for locally repairable codes with
// (r, delta)-locality.
//
// Family A: m disjoint-row local blocks.  Block i contributes delta-1 rows
// of a Vandermonde on its generator group G_i (powers 0..delta-2, block
// diagonal), and all blocks share a global strip of d-delta rows (powers
// delta-1..d-2).  n = m(r+delta-1), k = n - rank, every symbol sits in a
// local block, and the target distance is d.
//
// Family B: l full groups of size r+delta-1, one shortened group of size
// v+delta-1, and h extra global columns.  With f(x) the monic polynomial
// vanishing on the global set, block i contributes delta-1 rows of the
// f-scaled Vandermonde g^j f(g) plus h plain Vandermonde rows (powers
// 0..h-1); the global columns carry only the plain rows.  n counts all
// columns; n_local = n - h counts the locally protected ones.  k = lr + v,
// and the target distance is h + delta.
//
// Groups are stored sorted ascending; column order inside a block follows
// that order, and block spans are recorded for the codec and verifiers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/galois.hpp"
#include "lrc/hypergraph.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

enum class Family { A, B };

struct LrcCode {
    Field field;
    Family family = Family::A;
    unsigned r = 0, delta = 0;
    unsigned d_target = 0;
    std::size_t n = 0, k = 0;
    std::size_t n_local = 0;  // columns covered by a local block (= n for family A)

    std::vector<std::vector<std::uint32_t>> groups;  // family A: m groups; family B: l+1 groups
    std::vector<std::uint32_t> global;               // family B only, sorted, size h
    unsigned v = 0, h = 0;                           // family B only
    std::vector<std::uint32_t> f_coeffs;             // family B: monic prod (x - s) over the global set

    MatrixGF parity;
    std::vector<std::pair<std::size_t, std::size_t>> spans;    // (start, length) per group
    std::optional<std::pair<std::size_t, std::size_t>> global_span;

    bool certified = false;  // distance d_target is guaranteed by the construction's theory

    explicit LrcCode(const Field& f) : field(f), parity(f, 0, 0) {}
};

namespace detail {

inline std::vector<std::vector<std::uint32_t>> normalize_groups(
    const Field& f, std::vector<std::vector<std::uint32_t>> groups) {
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] >= f.q()) throw std::invalid_argument("construct: group element out of field range");
            if (i && g[i] == g[i - 1])
                throw std::invalid_argument("construct: repeated generator " + std::to_string(g[i]) +
                                            " inside a group");
        }
    }
    return groups;
}

}  // namespace detail

// Family A.  Preconditions: delta >= 2, d >= delta+1, r >= d-delta, every
// group has exactly r+delta-1 distinct elements.  Groups may overlap across
// blocks; the construction does not certify the distance (use the
// hypergraph path or the repeated-group special case for that).
inline LrcCode construct_a(const Field& f, std::vector<std::vector<std::uint32_t>> groups_in, unsigned r,
                           unsigned delta, unsigned d) {
    if (delta < 2) throw std::invalid_argument("construct_a: delta must be >= 2");
    if (d < delta + 1) throw std::invalid_argument("construct_a: d must be >= delta+1");
    if (r + delta < d)
        throw std::invalid_argument("construct_a: r must be >= d - delta (got r = " + std::to_string(r) +
                                    ", d - delta = " + std::to_string(d - delta) + ")");
    if (groups_in.empty()) throw std::invalid_argument("construct_a: need at least one group");
    const std::size_t R = std::size_t{r} + delta - 1;
    auto groups = detail::normalize_groups(f, std::move(groups_in));
    for (const auto& g : groups)
        if (g.size() != R)
            throw std::invalid_argument("construct_a: every group must have r+delta-1 = " + std::to_string(R) +
                                        " elements");

    const std::size_t m = groups.size();
    const std::size_t n = m * R;
    const std::size_t rows = m * (delta - 1) + (d - delta);
    LrcCode code(f);
    code.family = Family::A;
    code.r = r;
    code.delta = delta;
    code.d_target = d;
    code.groups = groups;
    code.parity = MatrixGF(f, rows, n);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t c0 = i * R;
        code.spans.emplace_back(c0, R);
        code.parity.paste(i * (delta - 1), c0, MatrixGF::vandermonde(f, groups[i], 0, delta - 1));
        code.parity.paste(m * (delta - 1), c0, MatrixGF::vandermonde(f, groups[i], delta - 1, d - delta));
    }
    code.n = n;
    code.n_local = n;
    code.k = n - code.parity.rank();
    return code;
}

// Family A with one group repeated m times.  In this narrow window
// (delta+1 <= d <= 2*delta) the repeated-group code is optimal, so the
// result is certified.
inline LrcCode construct_a_repeated(const Field& f, const std::vector<std::uint32_t>& group, std::size_t m,
                                    unsigned r, unsigned delta, unsigned d) {
    if (m < 1) throw std::invalid_argument("construct_a_repeated: m must be >= 1");
    if (d > 2 * delta)
        throw std::invalid_argument("construct_a_repeated: requires d <= 2*delta; use the hypergraph path");
    LrcCode code = construct_a(f, std::vector<std::vector<std::uint32_t>>(m, group), r, delta, d);
    code.certified = true;
    return code;
}

// Family B.  groups_in holds l+1 groups: the first l of size r+delta-1 and
// the last shortened to v+delta-1; global is the h-element set the scaling
// polynomial vanishes on.  Preconditions: delta >= 2, 1 <= v <= r, h >= 0,
// global disjoint from every group.
inline LrcCode construct_b(const Field& f, std::vector<std::vector<std::uint32_t>> groups_in,
                           std::vector<std::uint32_t> global, unsigned r, unsigned delta, unsigned v,
                           unsigned h) {
    if (delta < 2) throw std::invalid_argument("construct_b: delta must be >= 2");
    if (v < 1 || v > r) throw std::invalid_argument("construct_b: need 1 <= v <= r");
    if (groups_in.empty()) throw std::invalid_argument("construct_b: need at least one group");
    const std::size_t R = std::size_t{r} + delta - 1;
    auto groups = detail::normalize_groups(f, std::move(groups_in));
    const std::size_t l = groups.size() - 1;
    for (std::size_t i = 0; i < l; ++i)
        if (groups[i].size() != R)
            throw std::invalid_argument("construct_b: full groups must have r+delta-1 = " + std::to_string(R) +
                                        " elements");
    if (groups[l].size() != std::size_t{v} + delta - 1)
        throw std::invalid_argument("construct_b: the last group must have v+delta-1 = " +
                                    std::to_string(std::size_t{v} + delta - 1) + " elements");

    std::sort(global.begin(), global.end());
    for (std::size_t i = 0; i < global.size(); ++i) {
        if (global[i] >= f.q()) throw std::invalid_argument("construct_b: global element out of field range");
        if (i && global[i] == global[i - 1]) throw std::invalid_argument("construct_b: repeated global element");
    }
    if (global.size() != h) throw std::invalid_argument("construct_b: global set must have h elements");
    for (const auto& g : groups)
        for (std::uint32_t x : g)
            if (std::binary_search(global.begin(), global.end(), x))
                throw std::invalid_argument("construct_b: element " + std::to_string(x) +
                                            " appears in both a group and the global set");

    LrcCode code(f);
    code.family = Family::B;
    code.r = r;
    code.delta = delta;
    code.v = v;
    code.h = h;
    code.d_target = h + delta;
    code.groups = groups;
    code.global = global;
    code.f_coeffs = poly_from_roots(f, global);

    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    code.n_local = n;
    n += h;
    code.n = n;

    const std::size_t rows = (l + 1) * (delta - 1) + h;
    code.parity = MatrixGF(f, rows, n);
    std::size_t c0 = 0;
    for (std::size_t i = 0; i <= l; ++i) {
        std::vector<std::uint32_t> fvals;
        fvals.reserve(groups[i].size());
        for (std::uint32_t g : groups[i]) fvals.push_back(eval_root_product(f, global, g));
        code.spans.emplace_back(c0, groups[i].size());
        code.parity.paste(i * (delta - 1), c0, MatrixGF::vandermonde(f, groups[i], 0, delta - 1, &fvals));
        code.parity.paste((l + 1) * (delta - 1), c0, MatrixGF::vandermonde(f, groups[i], 0, h));
        c0 += groups[i].size();
    }
    code.global_span = std::make_pair(c0, static_cast<std::size_t>(h));
    code.parity.paste((l + 1) * (delta - 1), c0, MatrixGF::vandermonde(f, global, 0, h));

    code.k = n - code.parity.rank();
    if (code.k != l * std::size_t{r} + v)
        throw std::logic_error("construct_b: rank does not match lr+v");  // unreachable for valid inputs
    return code;
}

// Hypergraph route into family A: every edge of a certified span-free
// R-uniform hypergraph becomes a generator group.  Requires d >= 2*delta+1
// (the repeated-group builder covers smaller d) and certifies freeness for
// mu = floor((d-1)/delta) before building, so the result is certified.
inline LrcCode from_hypergraph_a(const Hypergraph& hg, unsigned r, unsigned delta, unsigned d,
                                 const WorkCaps& caps = {}) {
    if (delta < 2) throw std::invalid_argument("from_hypergraph_a: delta must be >= 2");
    if (d < 2 * delta + 1)
        throw std::invalid_argument("from_hypergraph_a: requires d >= 2*delta+1; use construct_a_repeated");
    if (hg.R != r + delta - 1)
        throw std::invalid_argument("from_hypergraph_a: hypergraph uniformity " + std::to_string(hg.R) +
                                    " does not match r+delta-1 = " + std::to_string(r + delta - 1));
    if (hg.edges.empty()) throw std::invalid_argument("from_hypergraph_a: hypergraph has no edges");
    const unsigned mu = (d - 1) / delta;
    FreenessSpec spec(hg.R, delta, mu);
    SimultaneousFreeCheck cert = is_simultaneously_free(hg, spec, caps);
    if (!cert.free)
        throw std::invalid_argument("from_hypergraph_a: hypergraph is not simultaneously free (violation at " +
                                    std::to_string(cert.failed_size) + " edges)");
    LrcCode code = construct_a(hg.field, hg.edges, r, delta, d);
    code.certified = true;
    return code;
}

// Hypergraph route into family B: the first |E|-1 edges become full groups,
// the last is truncated to its v+delta-1 smallest elements (ascending
// element encoding), and `global` supplies the h extra columns.  Freeness
// for mu = floor((h+delta-1)/delta) is certified when mu >= 2; smaller mu
// needs no hypergraph condition.  The result is certified.
inline LrcCode from_hypergraph_b(const Hypergraph& hg, const std::vector<std::uint32_t>& global, unsigned r,
                                 unsigned delta, unsigned v, unsigned h, const WorkCaps& caps = {}) {
    if (delta < 2) throw std::invalid_argument("from_hypergraph_b: delta must be >= 2");
    if (hg.R != r + delta - 1)
        throw std::invalid_argument("from_hypergraph_b: hypergraph uniformity " + std::to_string(hg.R) +
                                    " does not match r+delta-1 = " + std::to_string(r + delta - 1));
    if (hg.edges.empty()) throw std::invalid_argument("from_hypergraph_b: hypergraph has no edges");
    if (global.size() != h) throw std::invalid_argument("from_hypergraph_b: global set must have h elements");
    for (std::uint32_t s : global)
        if (std::binary_search(hg.vertices.begin(), hg.vertices.end(), s))
            throw std::invalid_argument("from_hypergraph_b: global element " + std::to_string(s) +
                                        " is a hypergraph vertex");
    const unsigned mu = (h + delta - 1) / delta;
    if (mu >= 2) {
        FreenessSpec spec(hg.R, delta, mu);
        SimultaneousFreeCheck cert = is_simultaneously_free(hg, spec, caps);
        if (!cert.free)
            throw std::invalid_argument(
                "from_hypergraph_b: hypergraph is not simultaneously free (violation at " +
                std::to_string(cert.failed_size) + " edges)");
    }
    std::vector<std::vector<std::uint32_t>> groups = hg.edges;
    std::vector<std::uint32_t>& last = groups.back();
    std::sort(last.begin(), last.end());
    if (last.size() < std::size_t{v} + delta - 1)
        throw std::invalid_argument("from_hypergraph_b: edge too small to truncate to v+delta-1");
    last.resize(std::size_t{v} + delta - 1);
    LrcCode code = construct_b(hg.field, std::move(groups), global, r, delta, v, h);
    code.certified = true;
    return code;
}

// Column index of a generator element within a code block, or the global
// element's column for family B.
inline std::size_t column_of(const LrcCode& code, std::size_t block, std::uint32_t element) {
    if (block >= code.groups.size()) throw std::invalid_argument("column_of: block index out of range");
    const auto& g = code.groups[block];
    auto it = std::lower_bound(g.begin(), g.end(), element);
    if (it == g.end() || *it != element)
        throw std::invalid_argument("column_of: element " + std::to_string(element) + " is not in block " +
                                    std::to_string(block));
    return code.spans[block].first + static_cast<std::size_t>(it - g.begin());
}

inline std::size_t global_column_of(const LrcCode& code, std::uint32_t element) {
    if (!code.global_span) throw std::invalid_argument("column_of: code has no global columns");
    auto it = std::lower_bound(code.global.begin(), code.global.end(), element);
    if (it == code.global.end() || *it != element)
        throw std::invalid_argument("column_of: element " + std::to_string(element) + " is not global");
    return code.global_span->first + static_cast<std::size_t>(it - code.global.begin());
}

}  // namespace lrc
