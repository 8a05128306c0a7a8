#pragma once

// Two derived code families built on the base constructions:
//
//  - Hierarchical codes: m1 block-diagonal copies of a family-A middle code
//    give two nested locality tiers, (r1, delta1) outside and (r2, delta2)
//    inside, with delta1 equal to the middle code's distance.  A window
//    condition on (m1, r1) pins the ceiling terms of the two-tier bound so
//    the stacked code meets it with equality.
//
//  - Sector-disjoint array codes: the symbols of a family-B code are laid
//    out in a b x a array so that erasing whole columns plus scattered
//    sectors stays within the erasure patterns the base code provably
//    corrects.  Each built array carries its claim list (gamma columns plus
//    s sectors); claims whose total exceeds the base distance minus one are
//    flagged, since they outrun what distance alone would promise.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/common.hpp"
#include "lrc/construct.hpp"
#include "lrc/hypergraph.hpp"
#include "lrc/matrix.hpp"
#include "lrc/verify.hpp"

namespace lrc {

struct HlrcCode {
    LrcCode middle;
    unsigned m1 = 0;
    unsigned r1 = 0;
    unsigned delta1 = 0;  // = the middle code's distance
    MatrixGF parity;
    std::size_t n = 0, k = 0;
    std::size_t d_target = 0;

    explicit HlrcCode(const Field& f) : middle(f), parity(f, 0, 0) {}
};

// Stack m1 copies of a family-A middle code block-diagonally.  The middle
// code must be optimal so its distance is exactly d2; the window
//     r1 (m1 - 1) < m1 k2   and   k2 <= r1,   k2 = m2 r2 - d2 + delta2,
// together with m1 (d2 - delta2) < r2 makes the stacked code meet the
// two-tier bound with equality.
inline HlrcCode hlrc_construct(const Field& f, std::vector<std::vector<std::uint32_t>> groups, unsigned r2,
                               unsigned delta2, unsigned d2, unsigned m1, unsigned r1,
                               const WorkCaps& caps = {}) {
    if (delta2 < 2) throw std::invalid_argument("hlrc: delta2 must be >= 2");
    if (d2 <= delta2)
        throw std::invalid_argument("hlrc: the outer locality delta1 = d2 must exceed delta2 (got d2 = " +
                                    std::to_string(d2) + ", delta2 = " + std::to_string(delta2) + ")");
    if (d2 >= r2 + delta2)
        throw std::invalid_argument("hlrc: need d2 < r2 + delta2 so each middle block keeps r2 data symbols");
    if (m1 < 1) throw std::invalid_argument("hlrc: m1 must be >= 1");
    if (std::uint64_t{m1} * (d2 - delta2) >= r2)
        throw std::invalid_argument("hlrc: need m1 (d2 - delta2) < r2 (got m1 = " + std::to_string(m1) +
                                    ", d2 - delta2 = " + std::to_string(d2 - delta2) +
                                    ", r2 = " + std::to_string(r2) + ")");
    const std::size_t m2 = groups.size();
    const std::int64_t k2 = static_cast<std::int64_t>(m2) * r2 - d2 + delta2;
    if (k2 > r1)
        throw std::invalid_argument("hlrc: window violated, need m2 r2 - d2 + delta2 <= r1 (got k2 = " +
                                    std::to_string(k2) + ", r1 = " + std::to_string(r1) + ")");
    if (std::int64_t{r1} * (std::int64_t{m1} - 1) >= std::int64_t{m1} * k2)
        throw std::invalid_argument("hlrc: window violated, need r1 (m1 - 1) < m1 (m2 r2 - d2 + delta2)");

    const unsigned mu = (d2 - 1) / delta2;
    auto norm = detail::normalize_groups(f, std::move(groups));
    GenSystemReport gs = check_generating_system(norm, r2, delta2, mu, std::nullopt, 0, caps);
    if (!gs.pass)
        throw std::invalid_argument("hlrc: middle groups fail the generating-set condition (worst margin " +
                                    std::to_string(gs.margin2) + "/2)");

    HlrcCode code(f);
    code.middle = construct_a(f, norm, r2, delta2, d2);
    if (code.middle.k != static_cast<std::size_t>(k2))
        throw std::logic_error("hlrc: middle rank disagrees with m2 r2 - d2 + delta2");
    bool identical = true;
    for (std::size_t i = 1; i < norm.size(); ++i) identical = identical && norm[i] == norm[0];
    code.middle.certified = (d2 >= 2 * delta2 + 1) ? !gs.vacuous : identical;

    code.m1 = m1;
    code.r1 = r1;
    code.delta1 = d2;
    code.n = std::size_t{m1} * code.middle.n;
    code.k = std::size_t{m1} * code.middle.k;
    code.d_target = d2;
    code.parity = MatrixGF(f, std::size_t{m1} * code.middle.parity.rows(), code.n);
    for (unsigned c = 0; c < m1; ++c)
        code.parity.paste(std::size_t{c} * code.middle.parity.rows(), std::size_t{c} * code.middle.n,
                          code.middle.parity);
    return code;
}

// Distance bound for a code with two nested locality tiers:
//   d <= n-k+1 - (ceil(k/r2)-1)(delta2-1) - (ceil(k/r1)-1)(delta1-delta2).
// Returns bound - d (zero means the bound is met with equality).
inline std::int64_t hlrc_bound_check(std::size_t n, std::size_t k, std::size_t d, unsigned r1, unsigned delta1,
                                     unsigned r2, unsigned delta2) {
    if (k == 0 || r1 == 0 || r2 == 0) throw std::invalid_argument("hlrc bound: k, r1, r2 must be positive");
    if (r2 > r1) throw std::invalid_argument("hlrc bound: the inner radius r2 cannot exceed r1");
    if (delta2 < 2 || delta2 >= delta1)
        throw std::invalid_argument("hlrc bound: need 2 <= delta2 < delta1");
    const std::int64_t c2 = ceil_div(static_cast<std::int64_t>(k), r2);
    const std::int64_t c1 = ceil_div(static_cast<std::int64_t>(k), r1);
    const std::int64_t bound = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) + 1 -
                               (c2 - 1) * (std::int64_t{delta2} - 1) -
                               (c1 - 1) * (std::int64_t{delta1} - delta2);
    return bound - static_cast<std::int64_t>(d);
}

enum class GsdConstruction { C, D };

struct GsdClaim {
    unsigned gamma = 0;  // whole array columns erased
    unsigned s = 0;      // further single sectors erased
    bool beyond = false; // gamma*b + s > d-1: more erasures than distance alone covers
};

struct GsdCode {
    LrcCode base;
    GsdConstruction construction = GsdConstruction::C;
    std::size_t b = 0, a = 0;  // array is b rows by a columns
    // placement[row][col] = base code column stored in that sector, or
    // nullopt for a zero sector (erasing it loses nothing)
    std::vector<std::vector<std::optional<std::size_t>>> placement;
    std::vector<GsdClaim> claims;
    unsigned t = 0;  // vertex regularity of the generating hypergraph (construction D only)

    explicit GsdCode(const Field& f) : base(f) {}
};

namespace detail {

inline std::vector<GsdClaim> gsd_claims(unsigned h, unsigned delta, std::size_t b, unsigned d) {
    std::vector<GsdClaim> out;
    auto add = [&](unsigned gamma, std::int64_t s) {
        if (s < 0) return;
        GsdClaim c;
        c.gamma = gamma;
        c.s = static_cast<unsigned>(s);
        c.beyond = static_cast<std::int64_t>(gamma) * static_cast<std::int64_t>(b) + s >
                   static_cast<std::int64_t>(d) - 1;
        out.push_back(c);
    };
    for (unsigned g = 0; g <= h; ++g) add(g, std::int64_t{h} + delta - 1 - 2 * std::int64_t{g});
    for (unsigned g = h + 1; g + 1 < delta; ++g) add(g, std::int64_t{delta} - 1 - g);
    return out;
}

}  // namespace detail

// Sector-disjoint array from a family-B code whose l+1 groups are all the
// same R-set G.  Column j of the array stacks the l+1 block symbols of
// G[j], and the bottom row carries global symbol j for j < h (zero sectors
// fill the rest).  Any gamma columns plus s sectors from the claim list are
// recoverable.
inline GsdCode gsd_construct_c(const Field& f, unsigned r, unsigned delta, unsigned h, unsigned l,
                               std::vector<std::uint32_t> S, std::vector<std::uint32_t> G) {
    if (h < 1 || h > delta)
        throw std::invalid_argument("gsd_construct_c: need 1 <= h <= delta (got h = " + std::to_string(h) +
                                    ", delta = " + std::to_string(delta) + ")");
    if (l < 1) throw std::invalid_argument("gsd_construct_c: need at least l = 1 full groups");
    const std::size_t R = std::size_t{r} + delta - 1;
    std::sort(G.begin(), G.end());
    if (G.size() != R)
        throw std::invalid_argument("gsd_construct_c: the shared group must have r+delta-1 elements");

    GsdCode gsd(f);
    gsd.construction = GsdConstruction::C;
    gsd.base = construct_b(f, std::vector<std::vector<std::uint32_t>>(l + 1, G), std::move(S), r, delta, r, h);
    gsd.base.certified = true;  // identical groups with h <= delta correct any h+delta-1 erasures
    gsd.b = std::size_t{l} + 2;
    gsd.a = R;
    gsd.placement.assign(gsd.b, std::vector<std::optional<std::size_t>>(gsd.a, std::nullopt));
    for (std::size_t i = 0; i <= l; ++i)
        for (std::size_t j = 0; j < R; ++j) gsd.placement[i][j] = gsd.base.spans[i].first + j;
    for (std::size_t j = 0; j < h; ++j) gsd.placement[l + 1][j] = gsd.base.global_span->first + j;
    gsd.claims = detail::gsd_claims(h, delta, gsd.b, gsd.base.d_target);
    return gsd;
}

// Sector-disjoint array from a t-regular R-uniform hypergraph on all of
// F_q minus the r-v global symbols S.  Each vertex becomes an array column
// holding its t block symbols in block order; the vertices truncated away
// from the last edge come first, each with its positionally paired global
// symbol in the bottom sector.  Every sector is occupied (t-regularity
// makes the counts match exactly).
inline GsdCode gsd_construct_d(const Field& f, unsigned r, unsigned delta, unsigned v, unsigned t,
                               const Hypergraph& hg, std::vector<std::uint32_t> S,
                               const WorkCaps& caps = {}) {
    if (v < 1 || v >= r) throw std::invalid_argument("gsd_construct_d: need 1 <= v < r");
    if (t < 2) throw std::invalid_argument("gsd_construct_d: need regularity t >= 2");
    const unsigned h = r - v;
    std::sort(S.begin(), S.end());
    if (S.size() != h)
        throw std::invalid_argument("gsd_construct_d: the global set must have r-v = " + std::to_string(h) +
                                    " elements");
    std::vector<std::uint32_t> expect;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (!std::binary_search(S.begin(), S.end(), x)) expect.push_back(x);
    if (hg.vertices != expect)
        throw std::invalid_argument("gsd_construct_d: hypergraph vertices must be exactly the field minus the "
                                    "global set");

    std::map<std::uint32_t, std::vector<std::size_t>> edges_of;  // vertex -> edge indices, ascending
    for (std::size_t e = 0; e < hg.edges.size(); ++e)
        for (std::uint32_t x : hg.edges[e]) edges_of[x].push_back(e);
    for (std::uint32_t x : hg.vertices)
        if (edges_of[x].size() != t)
            throw std::invalid_argument("gsd_construct_d: vertex " + std::to_string(x) + " lies in " +
                                        std::to_string(edges_of[x].size()) + " edges, not t = " +
                                        std::to_string(t));

    // stronger freeness range than the base construction checks itself;
    // vacuous when it tops out below two or the hypergraph has one edge
    const std::uint64_t mu_d = binomial(std::uint64_t{h} + delta - 1, delta);
    if (mu_d >= 2 && hg.edges.size() >= 2) {
        FreenessSpec spec(hg.R, delta, static_cast<unsigned>(std::min<std::uint64_t>(mu_d, hg.edges.size())));
        SimultaneousFreeCheck cert = is_simultaneously_free(hg, spec, caps);
        if (!cert.free)
            throw std::invalid_argument("gsd_construct_d: hypergraph is not simultaneously free (violation at " +
                                        std::to_string(cert.failed_size) + " edges)");
    }

    GsdCode gsd(f);
    gsd.construction = GsdConstruction::D;
    gsd.t = t;
    gsd.base = from_hypergraph_b(hg, S, r, delta, v, h, caps);

    // the truncation kept the v+delta-1 smallest of the last edge
    std::vector<std::uint32_t> last = hg.edges.back();
    std::sort(last.begin(), last.end());
    std::vector<std::uint32_t> cut(last.begin() + (std::size_t{v} + delta - 1), last.end());
    const std::size_t last_edge = hg.edges.size() - 1;

    std::vector<std::uint32_t> order = cut;
    for (std::uint32_t x : hg.vertices)
        if (!std::binary_search(cut.begin(), cut.end(), x)) order.push_back(x);

    gsd.b = t;
    gsd.a = hg.vertices.size();
    gsd.placement.assign(gsd.b, std::vector<std::optional<std::size_t>>(gsd.a, std::nullopt));
    for (std::size_t j = 0; j < order.size(); ++j) {
        const std::uint32_t x = order[j];
        std::size_t row = 0;
        for (std::size_t e : edges_of[x]) {
            if (e == last_edge && j < cut.size()) continue;  // this appearance was truncated away
            gsd.placement[row++][j] = column_of(gsd.base, e, x);
        }
        if (j < cut.size()) gsd.placement[t - 1][j] = gsd.base.global_span->first + j;
        if (row + (j < cut.size() ? 1 : 0) != t)
            throw std::logic_error("gsd_construct_d: sector count mismatch in column " + std::to_string(j));
    }
    gsd.claims = detail::gsd_claims(h, delta, gsd.b, gsd.base.d_target);
    return gsd;
}

struct GsdCounterexample {
    std::vector<std::size_t> columns;                         // fully erased array columns
    std::vector<std::pair<std::size_t, std::size_t>> sectors; // (row, col) of further erased sectors
};

struct GsdVerifyReport {
    bool pass = false;
    unsigned gamma = 0, s = 0;
    bool beyond = false;
    std::uint64_t patterns = 0;
    std::optional<GsdCounterexample> counterexample;
};

// Exhaustively test one (gamma, s) claim: every choice of gamma whole
// columns and s sectors among the remaining cells must leave the erased
// base columns independent in the parity-check.  Zero sectors erase
// nothing.  Stops at the first counterexample.
inline GsdVerifyReport gsd_verify(const GsdCode& gsd, unsigned gamma, unsigned s, const WorkCaps& caps = {}) {
    GsdVerifyReport rep;
    rep.gamma = gamma;
    rep.s = s;
    rep.beyond = static_cast<std::int64_t>(gamma) * static_cast<std::int64_t>(gsd.b) + s >
                 static_cast<std::int64_t>(gsd.base.d_target) - 1;
    if (gamma > gsd.a) throw std::invalid_argument("gsd_verify: more columns than the array has");
    const std::size_t rest = gsd.b * (gsd.a - gamma);
    if (s > rest) throw std::invalid_argument("gsd_verify: more sectors than remain outside the columns");
    const std::uint64_t total = binomial(gsd.a, gamma) * binomial(rest, s);
    if (total > caps.enumeration)
        throw cap_exceeded("gsd_verify: " + std::to_string(total) + " patterns exceed the enumeration cap");

    rep.pass = true;
    for_each_subset(gsd.a, gamma, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::pair<std::size_t, std::size_t>> others;  // sectors outside the chosen columns
        for (std::size_t row = 0; row < gsd.b; ++row)
            for (std::size_t col = 0; col < gsd.a; ++col)
                if (!std::binary_search(cols.begin(), cols.end(), col)) others.emplace_back(row, col);
        bool keep_going = true;
        for_each_subset(others.size(), s, [&](const std::vector<std::size_t>& pick) {
            ++rep.patterns;
            std::vector<std::size_t> erased;
            for (std::size_t col : cols)
                for (std::size_t row = 0; row < gsd.b; ++row)
                    if (gsd.placement[row][col]) erased.push_back(*gsd.placement[row][col]);
            for (std::size_t pi : pick) {
                const auto [row, col] = others[pi];
                if (gsd.placement[row][col]) erased.push_back(*gsd.placement[row][col]);
            }
            std::sort(erased.begin(), erased.end());
            if (!gsd.base.parity.columns_independent(erased)) {
                rep.pass = false;
                GsdCounterexample ce;
                ce.columns = cols;
                for (std::size_t pi : pick) ce.sectors.push_back(others[pi]);
                rep.counterexample = std::move(ce);
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return rep;
}

}  // namespace lrc
