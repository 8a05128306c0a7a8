#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "lrc/construct.hpp"
#include "lrc/galois.hpp"
#include "lrc/matrix.hpp"
#include "lrc/verify.hpp"

using lrc::Field;
using lrc::LrcCode;
using lrc::MatrixGF;

namespace {

LrcCode fixture_a() {
    return lrc::construct_a(Field(11), {{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8}}, 4, 2, 5);
}

LrcCode fixture_b() {
    return lrc::construct_b(Field(13), {{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8}}, {10, 11, 12}, 3, 2, 2, 3);
}

MatrixGF from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    MatrixGF m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.vset(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("hand-checkable codes have the textbook distances", "[verify]") {
    Field f(7);
    // Single parity check: distance 2.
    MatrixGF spc = from_rows(f, {{1, 1, 1, 1}});
    REQUIRE(lrc::min_distance_columns(spc).d == 2);
    REQUIRE(lrc::min_distance_codewords(spc.nullspace()).d == 2);

    // Length-4 repetition: distance 4, and the enumerator touches q^k - 1 words.
    MatrixGF rep = from_rows(f, {{1, 1, 1, 1}});
    auto by_words = lrc::min_distance_codewords(rep);
    REQUIRE(by_words.d == 4);
    REQUIRE(by_words.work == 6);
    REQUIRE(lrc::min_distance_columns(rep.nullspace()).d == 4);
}

TEST_CASE("both distance methods agree on the two-block fixture", "[verify]") {
    LrcCode code = fixture_a();
    auto words = lrc::min_distance(code, lrc::MethodChoice::codewords);
    auto cols = lrc::min_distance(code, lrc::MethodChoice::columns);
    REQUIRE(words.d == 5);
    REQUIRE(cols.d == 5);
    REQUIRE(words.method == lrc::DistanceMethod::codewords);
    REQUIRE(cols.method == lrc::DistanceMethod::columns);
    REQUIRE(words.work == 161050);  // 11^5 - 1
    REQUIRE(cols.work > 0);

    // 11^5 fits the codeword budget, so that method is chosen automatically.
    REQUIRE(lrc::min_distance(code).method == lrc::DistanceMethod::codewords);
    // 13^8 does not; the shortened fixture falls through to column search.
    REQUIRE(lrc::min_distance(fixture_b()).method == lrc::DistanceMethod::columns);
}

TEST_CASE("distance search honors its work caps", "[verify]") {
    LrcCode code = fixture_a();
    lrc::WorkCaps caps;
    caps.subsets = 10;
    REQUIRE_THROWS_AS(lrc::min_distance(code, lrc::MethodChoice::columns, caps), lrc::cap_exceeded);
    caps = {};
    caps.codewords = 100;
    REQUIRE_THROWS_AS(lrc::min_distance(code, lrc::MethodChoice::codewords, caps), lrc::cap_exceeded);
    // automatic falls back to column search under the same codeword cap
    REQUIRE(lrc::min_distance(code, lrc::MethodChoice::automatic, caps).method ==
            lrc::DistanceMethod::columns);
    caps.subsets = 10;
    REQUIRE_THROWS_AS(lrc::min_distance(code, lrc::MethodChoice::automatic, caps), lrc::cap_exceeded);
}

TEST_CASE("dimension-zero codes have no distance", "[verify]") {
    // r = d - delta with one block leaves no information symbols.
    LrcCode zero = lrc::construct_a_repeated(Field(7), {0, 1, 2}, 1, 2, 2, 4);
    REQUIRE(zero.k == 0);
    REQUIRE_THROWS_AS(lrc::min_distance(zero), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::min_distance_columns(zero.parity), std::invalid_argument);
}

TEST_CASE("row-space distance distinguishes zero and full spaces", "[verify]") {
    Field f(7);
    REQUIRE(lrc::rowspace_distance(from_rows(f, {{1, 1, 1, 1}})) == 4);
    REQUIRE(lrc::rowspace_distance(from_rows(f, {{1, 0}, {0, 1}})) == 1);
    REQUIRE_FALSE(lrc::rowspace_distance(MatrixGF(f, 1, 3)).has_value());  // zero row space
}

TEST_CASE("locality verification passes the constructed fixtures", "[verify]") {
    auto rep = lrc::verify_locality(fixture_a());
    REQUIRE(rep.pass);
    REQUIRE(rep.all_symbol);
    REQUIRE(rep.covered_columns == 10);
    REQUIRE(rep.blocks.size() == 2);
    for (const auto& b : rep.blocks) {
        REQUIRE(b.pass);
        REQUIRE(b.span_size == 5);
        REQUIRE(b.punctured_distance.value() >= 2);
    }

    auto repb = lrc::verify_locality(fixture_b());
    REQUIRE(repb.pass);
    REQUIRE_FALSE(repb.all_symbol);  // global columns carry no locality promise
    REQUIRE(repb.covered_columns == 11);
    REQUIRE(repb.blocks[2].span_size == 3);
}

TEST_CASE("a block whose punctured code is too weak fails locality", "[verify]") {
    Field f(7);
    LrcCode fake(f);
    fake.n = fake.n_local = 4;
    fake.r = 1;
    fake.delta = 2;
    fake.parity = from_rows(f, {{0, 0, 1, 1}});
    fake.k = 3;
    fake.spans = {{0, 2}, {2, 2}};
    fake.groups = {{0, 1}, {2, 3}};
    auto rep = lrc::verify_locality(fake);
    REQUIRE_FALSE(rep.pass);
    REQUIRE_FALSE(rep.blocks[0].pass);  // punctured distance 1 < delta
    REQUIRE(rep.blocks[0].punctured_distance == 1);
    REQUIRE(rep.blocks[1].pass);
    REQUIRE(rep.blocks[1].punctured_distance == 2);
}

TEST_CASE("bound selection keys on the measured distance", "[verify]") {
    REQUIRE(lrc::singleton_bound(10, 5, 4, 2) == 5);
    REQUIRE(lrc::singleton_bound_sharp(12, 6, 3, 2) == 5);
    REQUIRE(lrc::sharp_bound_applies(12, 5, 3, 2));
    REQUIRE_FALSE(lrc::sharp_bound_applies(13, 5, 3, 2));  // block size must divide n
    REQUIRE_FALSE(lrc::sharp_bound_applies(12, 6, 3, 2));  // r != d - delta
    REQUIRE_THROWS_AS(lrc::singleton_bound(10, 0, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::singleton_bound(10, 5, 0, 2), std::invalid_argument);

    auto rep = lrc::singleton_report(fixture_a(), 5, true);
    REQUIRE(rep.bound_used == 1);
    REQUIRE(rep.bound == 5);
    REQUIRE(rep.defect == 0);
    REQUIRE(rep.optimal);

    LrcCode shell{Field(13)};
    shell.n = 12;
    shell.k = 6;
    shell.r = 3;
    shell.delta = 2;
    auto sharp = lrc::singleton_report(shell, 5, true);
    REQUIRE(sharp.bound_used == 3);
    REQUIRE(sharp.bound == 5);
    REQUIRE(sharp.optimal);
    REQUIRE_FALSE(lrc::singleton_report(shell, 5, false).optimal);
}

TEST_CASE("the redundancy identity reproduces its worked examples", "[verify]") {
    auto a = lrc::optimal_redundancy(12, 2, 2, 5);
    REQUIRE(a.nk == 6);
    REQUIRE(a.k == 6);
    REQUIRE(a.consistent);

    auto b = lrc::optimal_redundancy(10, 3, 3, 8);
    REQUIRE(b.nk == 7);
    REQUIRE(b.consistent);

    auto c = lrc::optimal_redundancy(12, 2, 2, 4);
    REQUIRE(c.nk == 6);
    REQUIRE_FALSE(c.consistent);  // back-substituted bound is 5, not 4

    // d below delta drives the floor through zero; the identity stays exact.
    auto tiny = lrc::optimal_redundancy(8, 2, 3, 2);
    REQUIRE(tiny.nk == 5);
    REQUIRE_FALSE(tiny.consistent);

    REQUIRE_THROWS_AS(lrc::optimal_redundancy(13, 2, 2, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::optimal_redundancy(12, 0, 2, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::optimal_redundancy(12, 2, 1, 5), std::invalid_argument);
}

TEST_CASE("erasure patterns map to columns and back", "[verify]") {
    LrcCode code = fixture_b();
    lrc::ErasurePattern pat;
    pat.per_block = {{0}, {4}, {6}};
    pat.global = {10};
    auto cols = lrc::pattern_columns(code, pat);
    REQUIRE(cols == std::vector<std::size_t>{0, 5, 8, 11});
    auto back = lrc::pattern_from_columns(code, cols);
    REQUIRE(back.per_block == pat.per_block);
    REQUIRE(back.global == pat.global);

    // A shared generator element names different columns in each block.
    LrcCode overlap = fixture_a();
    auto two = lrc::pattern_from_columns(overlap, {4, 5});
    REQUIRE(two.per_block == std::vector<std::vector<std::uint32_t>>{{4}, {4}});
    REQUIRE(lrc::pattern_columns(overlap, two) == std::vector<std::size_t>{4, 5});

    lrc::ErasurePattern bad;
    bad.per_block = {{0}, {}};
    bad.global = {9};
    REQUIRE_THROWS_AS(lrc::pattern_columns(overlap, bad), std::invalid_argument);  // no global columns
    lrc::ErasurePattern dup;
    dup.per_block = {{0, 0}, {}, {}};
    REQUIRE_THROWS_AS(lrc::pattern_columns(code, dup), std::invalid_argument);
    lrc::ErasurePattern wrong;
    wrong.per_block = {{0}};
    REQUIRE_THROWS_AS(lrc::pattern_columns(code, wrong), std::invalid_argument);
}

TEST_CASE("the combinatorial recoverability certificate matches its cases", "[verify]") {
    LrcCode code = fixture_b();

    // Erasing a whole block plus a global column exceeds h+delta-1.
    lrc::ErasurePattern whole;
    whole.per_block = {{0, 1, 2, 3}, {}, {}};
    whole.global = {10};
    REQUIRE_FALSE(lrc::pattern_certified_recoverable(code, whole));

    // Two busy blocks within both conditions.
    lrc::ErasurePattern two;
    two.per_block = {{0, 1}, {3, 4}, {}};
    REQUIRE(lrc::pattern_certified_recoverable(code, two));
    REQUIRE(lrc::recoverable(code, two));

    // The shortened block lowers its own requirement.
    lrc::ErasurePattern shortb;
    shortb.per_block = {{}, {3, 4}, {6, 7}};
    REQUIRE(lrc::pattern_certified_recoverable(code, shortb));
    REQUIRE(lrc::recoverable(code, shortb));

    // No block reaches delta erasures: only the union condition applies.
    lrc::ErasurePattern spread;
    spread.per_block = {{0}, {4}, {6}};
    spread.global = {10, 11, 12};
    REQUIRE(lrc::pattern_certified_recoverable(code, spread));
    REQUIRE(lrc::recoverable(code, spread));

    REQUIRE_THROWS_AS(lrc::pattern_certified_recoverable(fixture_a(), two), std::invalid_argument);
}

TEST_CASE("certified patterns are recoverable on every small pattern", "[verify]") {
    LrcCode code = fixture_b();
    for (std::size_t w = 1; w <= 3; ++w) {
        lrc::for_each_subset(code.n, w, [&](const std::vector<std::size_t>& idx) {
            auto pat = lrc::pattern_from_columns(code, idx);
            if (lrc::pattern_certified_recoverable(code, pat)) REQUIRE(lrc::recoverable(code, pat));
            return true;
        });
    }
}
