#pragma once

// Encoding and erasure decoding against a constructed code, plus the local
// repair path that reads only one block's worth of symbols.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/construct.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

// Row-reduced generator with its pivot columns; message symbol i lands
// verbatim in column pivots[i] of the codeword.
struct SystematicGenerator {
    MatrixGF G;
    std::vector<std::size_t> pivots;
};

inline SystematicGenerator systematic_generator(const LrcCode& code) {
    MatrixGF gen = code.parity.nullspace();
    auto rr = gen.rref();
    return {std::move(rr.mat), std::move(rr.pivots)};
}

// A received word: nullopt marks an erased position.
struct Codeword {
    std::vector<std::optional<std::uint32_t>> symbols;
};

inline Codeword encode(const LrcCode& code, const std::vector<std::uint32_t>& message) {
    if (message.size() != code.k)
        throw std::invalid_argument("encode: message length " + std::to_string(message.size()) +
                                    ", expected k = " + std::to_string(code.k));
    SystematicGenerator sg = systematic_generator(code);
    const Field& f = code.field;
    Codeword w;
    w.symbols.assign(code.n, std::uint32_t{0});
    for (std::size_t j = 0; j < code.n; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < code.k; ++i)
            acc = f.add_v(acc, f.mul_v(f.check_v(message[i]), sg.G.vget(i, j)));
        w.symbols[j] = acc;
    }
    return w;
}

enum class DecodeStatus {
    recovered,   // unique fill-in found (or nothing was erased and parity holds)
    ambiguous,   // erased columns dependent: several codewords match
    corrupt      // known symbols already violate a parity check
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::corrupt;
    Codeword word;  // fully filled on recovered, unchanged otherwise
};

// Solve H_E x = -H_K c_K for the erased symbols.  The constructions make
// every pattern below the distance uniquely solvable; beyond it the system
// turns underdetermined (ambiguous) or, for corrupted known symbols,
// inconsistent.
inline DecodeResult decode_erasures(const LrcCode& code, const Codeword& received) {
    if (received.symbols.size() != code.n)
        throw std::invalid_argument("decode: word length " + std::to_string(received.symbols.size()) +
                                    ", expected n = " + std::to_string(code.n));
    const Field& f = code.field;
    std::vector<std::size_t> erased;
    for (std::size_t j = 0; j < code.n; ++j)
        if (!received.symbols[j]) erased.push_back(j);

    // syndrome of the known part, negated
    std::vector<std::uint32_t> rhs(code.parity.rows(), 0);
    for (std::size_t i = 0; i < code.parity.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < code.n; ++j)
            if (received.symbols[j]) acc = f.add_v(acc, f.mul_v(code.parity.vget(i, j), f.check_v(*received.symbols[j])));
        rhs[i] = f.sub_v(0, acc);
    }
    if (erased.empty()) {
        bool clean = std::all_of(rhs.begin(), rhs.end(), [](std::uint32_t v) { return v == 0; });
        return {clean ? DecodeStatus::recovered : DecodeStatus::corrupt, received};
    }
    MatrixGF he = code.parity.select_columns(erased);
    SolveResult sol = he.solve(rhs);
    if (sol.kind == SolveKind::none) return {DecodeStatus::corrupt, received};
    if (sol.kind == SolveKind::underdetermined) return {DecodeStatus::ambiguous, received};
    DecodeResult out{DecodeStatus::recovered, received};
    for (std::size_t t = 0; t < erased.size(); ++t) out.word.symbols[erased[t]] = sol.witness[t];
    return out;
}

struct RepairResult {
    std::vector<std::pair<std::size_t, std::uint32_t>> repaired;  // column -> symbol
    std::vector<std::size_t> accessed;                            // columns read
};

// Repair up to delta-1 erasures inside one block using only that block's
// parity rows and columns.  The local rows of block b are the delta-1
// consecutive rows starting at b*(delta-1); they are zero outside the
// block's span, so the repair provably touches nothing else.
inline RepairResult local_repair(const LrcCode& code, const Codeword& received, std::size_t block) {
    if (block >= code.spans.size()) throw std::invalid_argument("local_repair: no such block");
    if (received.symbols.size() != code.n) throw std::invalid_argument("local_repair: word length mismatch");
    const auto [start, len] = code.spans[block];
    const Field& f = code.field;

    std::vector<std::size_t> erased, known;
    for (std::size_t j = start; j < start + len; ++j)
        (received.symbols[j] ? known : erased).push_back(j);
    if (erased.size() > std::size_t{code.delta} - 1)
        throw std::invalid_argument("local_repair: " + std::to_string(erased.size()) +
                                    " erasures in block, local rows handle at most delta-1 = " +
                                    std::to_string(code.delta - 1));

    MatrixGF local = code.parity.select_rows(block * (code.delta - 1), code.delta - 1);

    std::vector<std::uint32_t> rhs(local.rows(), 0);
    for (std::size_t i = 0; i < local.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j : known) acc = f.add_v(acc, f.mul_v(local.vget(i, j), f.check_v(*received.symbols[j])));
        rhs[i] = f.sub_v(0, acc);
    }
    RepairResult out;
    out.accessed = known;
    if (erased.empty()) return out;
    SolveResult sol = local.select_columns(erased).solve(rhs);
    if (sol.kind != SolveKind::unique)
        throw std::logic_error("local_repair: block system not uniquely solvable; code violates its locality");
    for (std::size_t t = 0; t < erased.size(); ++t) out.repaired.emplace_back(erased[t], sol.witness[t]);
    return out;
}

}  // namespace lrc
