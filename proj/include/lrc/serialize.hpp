#pragma once

// JSON round-trips for every on-disk artifact: fields, matrices,
// hypergraphs, code descriptors, codewords, verification reports and the
// derived-family descriptors.  All output goes through canonical_dump
// (sorted keys, two-space indent, trailing newline, integers only), so
// identical objects serialize byte-identically.
//
// Code descriptors do not store the parity-check matrix; loading rebuilds
// it through the construction, which is deterministic in the descriptor
// fields.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/codec.hpp"
#include "lrc/construct.hpp"
#include "lrc/extend.hpp"
#include "lrc/galois.hpp"
#include "lrc/hypergraph.hpp"
#include "lrc/matrix.hpp"
#include "lrc/verify.hpp"

namespace lrc {

using json = nlohmann::json;

// nlohmann::json already stores object keys sorted; dump(2) therefore
// emits a canonical form.  The trailing newline makes files diff-friendly.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.e();
    if (f.e() > 1) j["modulus"] = f.modulus();
    return j;
}

inline Field field_from_json(const json& j) {
    const std::uint32_t p = j.at("p").get<std::uint32_t>();
    const unsigned e = j.value("e", 1u);
    if (j.contains("modulus")) return Field(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
    return Field(p, e);
}

inline json matrix_to_json(const MatrixGF& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.vget(i, j));
        rows.push_back(std::move(row));
    }
    json j;
    j["field"] = field_to_json(m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

inline MatrixGF matrix_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    MatrixGF m(f, rows, cols);
    const json& e = j.at("entries");
    if (e.size() != rows) throw std::invalid_argument("matrix json: row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (e[i].size() != cols) throw std::invalid_argument("matrix json: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.vset(i, c, f.check_v(e[i][c].get<std::uint32_t>()));
    }
    return m;
}

inline json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["field"] = field_to_json(h.field);
    j["R"] = h.R;
    j["vertices"] = h.vertices;
    j["edges"] = h.edges;
    return j;
}

inline Hypergraph hypergraph_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    return make_hypergraph(f, j.at("R").get<unsigned>(), j.at("vertices").get<std::vector<std::uint32_t>>(),
                           j.at("edges").get<std::vector<std::vector<std::uint32_t>>>());
}

inline json code_to_json(const LrcCode& code) {
    json j;
    j["field"] = field_to_json(code.field);
    j["family"] = code.family == Family::A ? "A" : "B";
    j["r"] = code.r;
    j["delta"] = code.delta;
    j["d_target"] = code.d_target;
    j["n"] = code.n;
    j["k"] = code.k;
    j["n_local"] = code.n_local;
    j["groups"] = code.groups;
    j["certified"] = code.certified;
    if (code.family == Family::B) {
        j["global"] = code.global;
        j["v"] = code.v;
        j["h"] = code.h;
        j["f_coeffs"] = code.f_coeffs;
    }
    return j;
}

inline LrcCode code_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    const std::string fam = j.at("family").get<std::string>();
    auto groups = j.at("groups").get<std::vector<std::vector<std::uint32_t>>>();
    LrcCode code(f);
    if (fam == "A") {
        code = construct_a(f, std::move(groups), j.at("r").get<unsigned>(), j.at("delta").get<unsigned>(),
                           j.at("d_target").get<unsigned>());
    } else if (fam == "B") {
        code = construct_b(f, std::move(groups), j.at("global").get<std::vector<std::uint32_t>>(),
                           j.at("r").get<unsigned>(), j.at("delta").get<unsigned>(), j.at("v").get<unsigned>(),
                           j.at("h").get<unsigned>());
    } else {
        throw std::invalid_argument("code json: unknown family '" + fam + "'");
    }
    code.certified = j.value("certified", false);
    // descriptor and rebuild must agree on the derived sizes
    if (code.n != j.at("n").get<std::size_t>() || code.k != j.at("k").get<std::size_t>())
        throw std::invalid_argument("code json: stored n/k disagree with the rebuilt code");
    return code;
}

inline json codeword_to_json(const Codeword& w) {
    json arr = json::array();
    for (const auto& s : w.symbols) {
        if (s) arr.push_back(*s);
        else arr.push_back(nullptr);
    }
    return arr;
}

inline Codeword codeword_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("codeword json: expected an array");
    Codeword w;
    for (const auto& x : j) {
        if (x.is_null()) w.symbols.push_back(std::nullopt);
        else w.symbols.push_back(x.get<std::uint32_t>());
    }
    return w;
}

inline json report_to_json(const OptimalityReport& rep, const DistanceReport& dist) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d_measured"] = rep.d_measured;
    j["bound_used"] = rep.bound_used;
    j["bound"] = rep.bound;
    j["defect"] = rep.defect;
    j["locality_ok"] = rep.locality_ok;
    j["optimal"] = rep.optimal;
    j["method"] = dist.method == DistanceMethod::codewords ? "codewords" : "columns";
    j["work_performed"] = dist.work;
    return j;
}

inline json hlrc_to_json(const HlrcCode& code) {
    json j;
    j["middle"] = code_to_json(code.middle);
    j["m1"] = code.m1;
    j["r1"] = code.r1;
    j["delta1"] = code.delta1;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d_target"] = code.d_target;
    return j;
}

inline HlrcCode hlrc_from_json(const json& j, const WorkCaps& caps = {}) {
    LrcCode middle = code_from_json(j.at("middle"));
    HlrcCode code = hlrc_construct(middle.field, middle.groups, middle.r, middle.delta, middle.d_target,
                                   j.at("m1").get<unsigned>(), j.at("r1").get<unsigned>(), caps);
    if (code.n != j.at("n").get<std::size_t>() || code.k != j.at("k").get<std::size_t>())
        throw std::invalid_argument("hlrc json: stored n/k disagree with the rebuilt code");
    return code;
}

inline json gsd_to_json(const GsdCode& gsd) {
    json j;
    j["base"] = code_to_json(gsd.base);
    j["construction"] = gsd.construction == GsdConstruction::C ? "C" : "D";
    j["b"] = gsd.b;
    j["a"] = gsd.a;
    json placement = json::array();
    for (const auto& row : gsd.placement) {
        json jr = json::array();
        for (const auto& cell : row) {
            if (cell) jr.push_back(*cell);
            else jr.push_back(nullptr);
        }
        placement.push_back(std::move(jr));
    }
    j["placement"] = std::move(placement);
    json claims = json::array();
    for (const auto& c : gsd.claims) {
        json jc;
        jc["gamma"] = c.gamma;
        jc["s"] = c.s;
        jc["beyond"] = c.beyond;
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    j["t"] = gsd.t;
    return j;
}

inline GsdCode gsd_from_json(const json& j) {
    GsdCode gsd(field_from_json(j.at("base").at("field")));
    gsd.base = code_from_json(j.at("base"));
    const std::string c = j.at("construction").get<std::string>();
    if (c == "C") gsd.construction = GsdConstruction::C;
    else if (c == "D") gsd.construction = GsdConstruction::D;
    else throw std::invalid_argument("gsd json: unknown construction '" + c + "'");
    gsd.b = j.at("b").get<std::size_t>();
    gsd.a = j.at("a").get<std::size_t>();
    for (const auto& row : j.at("placement")) {
        std::vector<std::optional<std::size_t>> r;
        for (const auto& cell : row) {
            if (cell.is_null()) r.push_back(std::nullopt);
            else r.push_back(cell.get<std::size_t>());
        }
        gsd.placement.push_back(std::move(r));
    }
    if (gsd.placement.size() != gsd.b) throw std::invalid_argument("gsd json: placement row count mismatch");
    for (const auto& row : gsd.placement) {
        if (row.size() != gsd.a) throw std::invalid_argument("gsd json: placement column count mismatch");
        for (const auto& cell : row)
            if (cell && *cell >= gsd.base.n) throw std::invalid_argument("gsd json: placement cell out of range");
    }
    for (const auto& jc : j.at("claims")) {
        GsdClaim claim;
        claim.gamma = jc.at("gamma").get<unsigned>();
        claim.s = jc.at("s").get<unsigned>();
        claim.beyond = jc.at("beyond").get<bool>();
        gsd.claims.push_back(claim);
    }
    gsd.t = j.value("t", 0u);
    return gsd;
}

}  // namespace lrc
