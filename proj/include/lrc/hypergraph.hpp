#pragma once

// R-uniform hypergraphs over field elements, forbidden-configuration
// ("span-freeness") certification, and two deterministic sparse generators.
//
// A hypergraph is (v, e)-span-free when no e of its edges together span v or
// fewer vertices.  FreenessSpec packages the family of such constraints,
// indexed by subset size i = 2..mu with threshold
//     v_i = i*R - floor((i-1)*delta/2) - 1,
// that makes edge systems usable as generating-set systems for the code
// constructions: the doubled-integer condition checked by
// check_generating_system follows for every subset of at most mu edges.
//
// All generation is reproducible from a 64-bit seed; identical inputs give
// identical hypergraphs on every platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/common.hpp"
#include "lrc/galois.hpp"

namespace lrc {

struct Hypergraph {
    Field field;
    unsigned R = 0;
    std::vector<std::uint32_t> vertices;            // sorted ascending, distinct
    std::vector<std::vector<std::uint32_t>> edges;  // each sorted ascending, |edge| = R
};

/// Validates and normalizes: vertices and edges are sorted, edge members must
// be vertices, edges must be R-sets, no duplicate edges.
inline Hypergraph make_hypergraph(const Field& f, unsigned R, std::vector<std::uint32_t> vertices,
                                  std::vector<std::vector<std::uint32_t>> edges) {
    if (R < 1) throw std::invalid_argument("hypergraph: uniformity R must be >= 1");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= f.q()) throw std::invalid_argument("hypergraph: vertex out of field range");
        if (i && vertices[i] == vertices[i - 1]) throw std::invalid_argument("hypergraph: repeated vertex");
    }
    if (vertices.size() < R) throw std::invalid_argument("hypergraph: fewer than R vertices");
    std::set<std::vector<std::uint32_t>> seen;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e.size() != R) throw std::invalid_argument("hypergraph: edge is not an R-set");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i && e[i] == e[i - 1]) throw std::invalid_argument("hypergraph: repeated vertex inside an edge");
            if (!std::binary_search(vertices.begin(), vertices.end(), e[i]))
                throw std::invalid_argument("hypergraph: edge uses a non-vertex value " + std::to_string(e[i]));
        }
        if (!seen.insert(e).second) throw std::invalid_argument("hypergraph: duplicate edge");
    }
    return Hypergraph{f, R, std::move(vertices), std::move(edges)};
}

// The family of span-freeness constraints for uniformity R, locality
// parameter delta >= 2 and maximum subset size mu >= 2.  Thresholds that
// cannot bind (v_i <= R: even two distinct R-edges span more) are dropped
// and remembered in `dropped` so callers can surface a warning.
struct FreenessSpec {
    unsigned R = 0, delta = 0, mu = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> forbidden;  // (v_i, i), i ascending
    std::vector<unsigned> dropped;

    FreenessSpec(unsigned R_, unsigned delta_, unsigned mu_) : R(R_), delta(delta_), mu(mu_) {
        if (R < 1) throw std::invalid_argument("freeness: R must be >= 1");
        if (delta < 2) throw std::invalid_argument("freeness: delta must be >= 2");
        if (mu < 2) throw std::invalid_argument("freeness: mu must be >= 2");
        for (unsigned i = 2; i <= mu; ++i) {
            const std::int64_t v =
                std::int64_t{i} * R - static_cast<std::int64_t>((std::uint64_t{i - 1} * delta) / 2) - 1;
            if (v <= static_cast<std::int64_t>(R))
                dropped.push_back(i);
            else
                forbidden.emplace_back(static_cast<std::uint64_t>(v), i);
        }
    }
};

struct FreeCheck {
    bool free = true;
    std::vector<std::size_t> witness;        // violating edge indices (empty when free)
    std::uint64_t violating_threshold = 0;   // the v that was met or undershot
};

namespace detail {

// Union size of the edges named by idx.  Edges are sorted, so a k-way merge
// over small vectors suffices at desk scale.
inline std::size_t union_size(const std::vector<std::vector<std::uint32_t>>& edges,
                              const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> acc;
    for (std::size_t i : idx) acc.insert(acc.end(), edges[i].begin(), edges[i].end());
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc.size();
}

}  // namespace detail

// Exhaustive (v, e)-span-freeness check over all e-subsets of edges, in
// lexicographic order; the first violation is returned as the witness.
inline FreeCheck is_free(const Hypergraph& h, std::uint64_t v, unsigned e,
                         const WorkCaps& caps = {}) {
    if (e < 1) throw std::invalid_argument("is_free: subset size must be >= 1");
    if (binomial(h.edges.size(), e) > caps.enumeration)
        throw cap_exceeded("is_free: C(" + std::to_string(h.edges.size()) + "," + std::to_string(e) +
                           ") exceeds the enumeration cap");
    FreeCheck out;
    for_each_subset(h.edges.size(), e, [&](const std::vector<std::size_t>& idx) {
        if (detail::union_size(h.edges, idx) <= v) {
            out.free = false;
            out.witness = idx;
            out.violating_threshold = v;
            return false;
        }
        return true;
    });
    return out;
}

struct SimultaneousFreeCheck {
    bool free = true;
    unsigned failed_size = 0;  // the i whose constraint failed
    FreeCheck detail;
};

// Conjunction of is_free over the forbidden list, ascending i;
// short-circuits on the first violated constraint.
inline SimultaneousFreeCheck is_simultaneously_free(const Hypergraph& h, const FreenessSpec& spec,
                                                    const WorkCaps& caps = {}) {
    if (spec.R != h.R) throw std::invalid_argument("freeness: spec uniformity does not match hypergraph");
    SimultaneousFreeCheck out;
    for (const auto& [v, i] : spec.forbidden) {
        FreeCheck c = is_free(h, v, i, caps);
        if (!c.free) {
            out.free = false;
            out.failed_size = i;
            out.detail = std::move(c);
            return out;
        }
    }
    return out;
}

struct SparseResult {
    Hypergraph hg;
    std::uint64_t sampled = 0;  // edges kept by the coin flips
    std::uint64_t deleted = 0;  // edges removed by the repair pass
    double p_used = 0.0;
};

// The asymptotic sampling probability for the random generator: epsilon *
// n^kappa with epsilon = (mu R)^(-3R) and kappa = delta/2 - R plus a
// correction of 1/(mu-1) for even delta, 1/(2(mu-1)) for odd delta and even
// mu, and 1/(2(mu-2)) when both are odd.  Astronomically small at desk
// scale; meant for large vertex sets.
inline double auto_sample_probability(std::size_t n_vertices, unsigned R, unsigned delta, unsigned mu) {
    if (mu < 2) throw std::invalid_argument("auto probability: mu must be >= 2");
    double kappa = delta / 2.0 - static_cast<double>(R);
    if (delta % 2 == 0)
        kappa += 1.0 / (mu - 1);
    else if (mu % 2 == 0)
        kappa += 1.0 / (2.0 * (mu - 1));
    else
        kappa += 1.0 / (2.0 * (mu - 2));
    const double eps = std::pow(static_cast<double>(mu) * R, -3.0 * static_cast<double>(R));
    const double p = eps * std::pow(static_cast<double>(n_vertices), kappa);
    return std::min(1.0, std::max(0.0, p));
}

// Random sparse generator: every R-subset of the vertices is kept
// independently with probability p (in lexicographic subset order, one rng
// draw each), then a deterministic repair pass walks subset sizes i = 2..mu
// in increasing order and deletes the lexicographically last edge of every
// still-violating i-subset.  The survivor is certified before returning.
inline SparseResult random_sparse(const Field& f, std::vector<std::uint32_t> vertices, unsigned R,
                                  const FreenessSpec& spec, std::optional<double> p, std::uint64_t seed,
                                  const WorkCaps& caps = {}) {
    Hypergraph base = make_hypergraph(f, R, std::move(vertices), {});
    if (spec.R != R) throw std::invalid_argument("random generator: spec uniformity mismatch");
    if (binomial(base.vertices.size(), R) > caps.enumeration)
        throw cap_exceeded("random generator: C(|V|, R) exceeds the enumeration cap");

    SparseResult out{base, 0, 0, 0.0};
    out.p_used = p ? *p : auto_sample_probability(base.vertices.size(), R, spec.delta, spec.mu);
    if (out.p_used < 0.0 || out.p_used > 1.0)
        throw std::invalid_argument("random generator: p must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    const BernoulliGate keep(out.p_used);
    std::vector<std::vector<std::uint32_t>> picked;
    for_each_subset(base.vertices.size(), R, [&](const std::vector<std::size_t>& idx) {
        if (keep(rng)) {
            std::vector<std::uint32_t> edge;
            edge.reserve(R);
            for (std::size_t i : idx) edge.push_back(base.vertices[i]);
            picked.push_back(std::move(edge));
        }
        return true;
    });
    out.sampled = picked.size();

    std::vector<bool> dead(picked.size(), false);
    for (const auto& [v, i] : spec.forbidden) {
        if (i > picked.size()) continue;
        if (binomial(picked.size(), i) > caps.enumeration)
            throw cap_exceeded("random generator: repair pass exceeds the enumeration cap");
        for_each_subset(picked.size(), i, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t e : idx)
                if (dead[e]) return true;
            if (detail::union_size(picked, idx) <= v) {
                dead[idx.back()] = true;
                ++out.deleted;
            }
            return true;
        });
    }

    std::vector<std::vector<std::uint32_t>> kept;
    for (std::size_t e = 0; e < picked.size(); ++e)
        if (!dead[e]) kept.push_back(picked[e]);
    out.hg = make_hypergraph(f, R, base.vertices, std::move(kept));

    SimultaneousFreeCheck cert = is_simultaneously_free(out.hg, spec, caps);
    if (!cert.free) throw std::logic_error("random generator: repair pass left a violation");  // unreachable
    return out;
}

// Greedy generator: a seeded permutation of all R-subsets, each accepted iff
// the hypergraph stays simultaneously free with it added.  The result is
// maximal with respect to the permutation order.
inline SparseResult greedy_sparse(const Field& f, std::vector<std::uint32_t> vertices, unsigned R,
                                  const FreenessSpec& spec, std::uint64_t seed, const WorkCaps& caps = {}) {
    Hypergraph base = make_hypergraph(f, R, std::move(vertices), {});
    if (spec.R != R) throw std::invalid_argument("greedy generator: spec uniformity mismatch");
    if (binomial(base.vertices.size(), R) > caps.enumeration)
        throw cap_exceeded("greedy generator: C(|V|, R) exceeds the enumeration cap");

    std::vector<std::vector<std::uint32_t>> candidates;
    for_each_subset(base.vertices.size(), R, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::uint32_t> edge;
        edge.reserve(R);
        for (std::size_t i : idx) edge.push_back(base.vertices[i]);
        candidates.push_back(std::move(edge));
        return true;
    });
    std::mt19937_64 rng(seed);
    deterministic_shuffle(candidates, rng);

    std::vector<std::vector<std::uint32_t>> accepted;
    std::vector<std::size_t> scratch;
    for (auto& cand : candidates) {
        bool ok = true;
        // Only subsets containing the candidate need rechecking.
        for (const auto& [v, i] : spec.forbidden) {
            if (!ok) break;
            if (i - 1 > accepted.size()) continue;
            accepted.push_back(cand);  // temporarily, as the last index
            const std::size_t last = accepted.size() - 1;
            for_each_subset(last, i - 1, [&](const std::vector<std::size_t>& idx) {
                scratch = idx;
                scratch.push_back(last);
                if (detail::union_size(accepted, scratch) <= v) {
                    ok = false;
                    return false;
                }
                return true;
            });
            accepted.pop_back();
        }
        if (ok) accepted.push_back(std::move(cand));
    }

    SparseResult out{make_hypergraph(f, R, base.vertices, std::move(accepted)), 0, 0, 1.0};
    out.sampled = out.hg.edges.size();
    SimultaneousFreeCheck cert = is_simultaneously_free(out.hg, spec, caps);
    if (!cert.free) throw std::logic_error("greedy generator: accepted set is not free");  // unreachable
    return out;
}

struct GenSystemReport {
    bool pass = true;
    std::vector<std::size_t> worst;  // subset of group indices with the smallest margin
    std::int64_t margin2 = 0;        // doubled-integer margin of that subset (>= 0 iff pass contributes)
    bool vacuous = false;            // no subset sizes in range
};

/// The generating-set condition on a family of element groups: for every
// index subset S with 2 <= |S| <= mu,
//     2 * |union of the groups in S|  >=  (2r + delta - 2) * |S| + delta,
// with an extra 2*special_shift on the right when special_index is in S
// (used for the shortened group in the two-tier construction, shift = v-r).
// Doubled-integer form keeps half-integer thresholds exact.
inline GenSystemReport check_generating_system(const std::vector<std::vector<std::uint32_t>>& groups,
                                               unsigned r, unsigned delta, unsigned mu,
                                               std::optional<std::size_t> special_index = std::nullopt,
                                               std::int64_t special_shift = 0,
                                               const WorkCaps& caps = {}) {
    if (delta < 2) throw std::invalid_argument("generating-set check: delta must be >= 2");
    if (special_index && *special_index >= groups.size())
        throw std::invalid_argument("generating-set check: special index out of range");
    GenSystemReport out;
    if (groups.size() < 2 || mu < 2) {
        out.vacuous = true;
        return out;
    }
    std::uint64_t total = 0;
    const std::size_t top = std::min<std::size_t>(mu, groups.size());
    for (std::size_t s = 2; s <= top; ++s) total += binomial(groups.size(), s);
    if (total > caps.enumeration)
        throw cap_exceeded("generating-set check: subset count exceeds the enumeration cap");

    bool first = true;
    for (std::size_t s = 2; s <= top; ++s) {
        for_each_subset(groups.size(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::uint32_t> acc;
            for (std::size_t i : idx) acc.insert(acc.end(), groups[i].begin(), groups[i].end());
            std::sort(acc.begin(), acc.end());
            acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
            std::int64_t need2 = (std::int64_t{2} * r + delta - 2) * static_cast<std::int64_t>(s) + delta;
            if (special_index && std::binary_search(idx.begin(), idx.end(), *special_index))
                need2 += 2 * special_shift;
            const std::int64_t margin2 = 2 * static_cast<std::int64_t>(acc.size()) - need2;
            if (first || margin2 < out.margin2) {
                out.margin2 = margin2;
                out.worst = idx;
                first = false;
            }
            return true;
        });
    }
    out.pass = out.margin2 >= 0;
    return out;
}

}  // namespace lrc
