#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <tuple>
#include <vector>

#include "lrc/extend.hpp"
#include "lrc/galois.hpp"
#include "lrc/hypergraph.hpp"

using lrc::Field;
using lrc::GsdCode;
using lrc::GsdConstruction;
using lrc::HlrcCode;

namespace {

using Groups = std::vector<std::vector<std::uint32_t>>;

const Groups kTier = {{0, 1, 2, 3, 4, 5, 6, 7}, {7, 8, 9, 10, 11, 12, 13, 14}};

HlrcCode tier_fixture() { return lrc::hlrc_construct(Field(17), kTier, 7, 2, 5, 2, 11); }

GsdCode array_c() { return lrc::gsd_construct_c(Field(11), 2, 3, 2, 2, {9, 10}, {0, 1, 2, 3}); }

lrc::Hypergraph pencil2() {
    return lrc::make_hypergraph(Field(7), 3, {0, 1, 2, 3, 4, 5},
                                {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {1, 3, 5}});
}

lrc::Hypergraph pencil3() {
    return lrc::make_hypergraph(Field(7), 3, {0, 1, 2, 3, 4, 5},
                                {{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}});
}

void require_claims(const std::vector<lrc::GsdClaim>& got,
                    const std::vector<std::tuple<unsigned, unsigned, bool>>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].gamma == std::get<0>(want[i]));
        REQUIRE(got[i].s == std::get<1>(want[i]));
        REQUIRE(got[i].beyond == std::get<2>(want[i]));
    }
}

}  // namespace

TEST_CASE("stacked copies form the two-tier code with the documented shape", "[extend]") {
    HlrcCode code = tier_fixture();
    REQUIRE(code.n == 32);
    REQUIRE(code.k == 22);
    REQUIRE(code.d_target == 5);
    REQUIRE(code.delta1 == 5);
    REQUIRE(code.m1 == 2);
    REQUIRE(code.r1 == 11);
    REQUIRE(code.middle.n == 16);
    REQUIRE(code.middle.k == 11);
    REQUIRE(code.middle.certified);  // generating-set condition held with d2 >= 2*delta2+1
    REQUIRE(code.parity.rows() == 10);
    REQUIRE(code.parity.cols() == 32);

    // block-diagonal layout: the second copy repeats the middle parity
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(code.parity.vget(i, 16) == 0);
        REQUIRE(code.parity.vget(i + 5, 0) == 0);
        for (std::size_t j = 0; j < 16; ++j)
            REQUIRE(code.parity.vget(i + 5, 16 + j) == code.middle.parity.vget(i, j));
    }
}

TEST_CASE("every window condition rejects by name", "[extend]") {
    Field f(17);
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, kTier, 7, 2, 2, 2, 11),
                        Catch::Matchers::ContainsSubstring("must exceed delta2"));
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, kTier, 3, 2, 5, 2, 11),
                        Catch::Matchers::ContainsSubstring("d2 < r2 + delta2"));
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, kTier, 7, 2, 5, 3, 11),
                        Catch::Matchers::ContainsSubstring("m1 (d2 - delta2) < r2"));
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, kTier, 7, 2, 5, 2, 10),
                        Catch::Matchers::ContainsSubstring("<= r1"));
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, kTier, 7, 2, 5, 2, 22),
                        Catch::Matchers::ContainsSubstring("r1 (m1 - 1)"));
    REQUIRE_THROWS_AS(lrc::hlrc_construct(f, kTier, 7, 1, 5, 2, 11), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::hlrc_construct(f, kTier, 7, 2, 5, 0, 11), std::invalid_argument);

    Groups overlapping = {{0, 1, 2, 3, 4, 5, 6, 7}, {4, 5, 6, 7, 8, 9, 10, 11}};
    REQUIRE_THROWS_WITH(lrc::hlrc_construct(f, overlapping, 7, 2, 5, 2, 11),
                        Catch::Matchers::ContainsSubstring("generating-set"));
}

TEST_CASE("certification of the middle code follows its distance regime", "[extend]") {
    // d2 <= 2*delta2 with identical groups: certified by the repetition argument.
    HlrcCode same = lrc::hlrc_construct(Field(17), {{0, 1, 2, 3, 4, 5, 6, 7, 8},
                                                    {0, 1, 2, 3, 4, 5, 6, 7, 8}},
                                        7, 3, 4, 2, 13);
    REQUIRE(same.middle.certified);
    REQUIRE(same.delta1 == 4);
    REQUIRE(same.k == 26);

    // same regime but distinct groups: nothing certifies the distance.
    HlrcCode mixed = lrc::hlrc_construct(Field(17), kTier, 7, 2, 4, 2, 12);
    REQUIRE_FALSE(mixed.middle.certified);
}

TEST_CASE("the two-tier bound subtracts both ceiling terms", "[extend]") {
    REQUIRE(lrc::hlrc_bound_check(32, 22, 5, 11, 5, 7, 2) == 0);
    REQUIRE(lrc::hlrc_bound_check(32, 22, 4, 11, 5, 7, 2) == 1);
    REQUIRE_THROWS_AS(lrc::hlrc_bound_check(32, 22, 5, 11, 2, 7, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::hlrc_bound_check(32, 22, 5, 7, 5, 11, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::hlrc_bound_check(32, 0, 5, 11, 5, 7, 2), std::invalid_argument);
}

TEST_CASE("the repeated-group array has stacked placement and claims", "[extend]") {
    GsdCode gsd = array_c();
    REQUIRE(gsd.construction == GsdConstruction::C);
    REQUIRE(gsd.base.n == 14);
    REQUIRE(gsd.base.k == 6);
    REQUIRE(gsd.base.d_target == 5);
    REQUIRE(gsd.base.certified);
    REQUIRE(gsd.b == 4);
    REQUIRE(gsd.a == 4);

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(gsd.placement[i][j] == 4 * i + j);
    REQUIRE(gsd.placement[3][0] == 12);
    REQUIRE(gsd.placement[3][1] == 13);
    REQUIRE_FALSE(gsd.placement[3][2].has_value());  // zero sector
    REQUIRE_FALSE(gsd.placement[3][3].has_value());

    require_claims(gsd.claims, {{0, 4, false}, {1, 2, true}, {2, 0, true}});

    REQUIRE_THROWS_AS(lrc::gsd_construct_c(Field(11), 2, 3, 4, 2, {9, 10, 7, 8}, {0, 1, 2, 3}),
                      std::invalid_argument);  // h > delta
    REQUIRE_THROWS_AS(lrc::gsd_construct_c(Field(11), 2, 3, 2, 0, {9, 10}, {0, 1, 2, 3}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::gsd_construct_c(Field(11), 2, 3, 2, 2, {9, 10}, {0, 1, 2}),
                      std::invalid_argument);
}

TEST_CASE("array claims verify inside the list and break just outside it", "[extend]") {
    GsdCode gsd = array_c();

    auto cols2 = lrc::gsd_verify(gsd, 2, 0);
    REQUIRE(cols2.pass);
    REQUIRE(cols2.beyond);  // 2*4 > 4: structure carries past the distance
    REQUIRE(cols2.patterns == 6);

    auto listed = lrc::gsd_verify(gsd, 1, 2);
    REQUIRE(listed.pass);
    REQUIRE(listed.patterns == 264);  // 4 * C(12,2)

    auto over = lrc::gsd_verify(gsd, 1, 3);
    REQUIRE_FALSE(over.pass);
    REQUIRE(over.counterexample.has_value());
    REQUIRE(over.counterexample->columns.size() == 1);
    REQUIRE(over.counterexample->sectors.size() == 3);

    REQUIRE_THROWS_AS(lrc::gsd_verify(gsd, 5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::gsd_verify(gsd, 4, 1), std::invalid_argument);
    lrc::WorkCaps caps;
    caps.enumeration = 5;
    REQUIRE_THROWS_AS(lrc::gsd_verify(gsd, 2, 0, caps), lrc::cap_exceeded);
}

TEST_CASE("the regular-hypergraph array places every sector", "[extend]") {
    lrc::Hypergraph hg = pencil2();
    GsdCode gsd = lrc::gsd_construct_d(Field(7), 2, 2, 1, 2, hg, {6});
    REQUIRE(gsd.construction == GsdConstruction::D);
    REQUIRE(gsd.t == 2);
    REQUIRE(gsd.base.n == 12);
    REQUIRE(gsd.base.k == 7);
    REQUIRE(gsd.base.d_target == 3);
    REQUIRE(gsd.b == 2);
    REQUIRE(gsd.a == 6);

    // column order: the vertex truncated from the last edge first, then the rest
    REQUIRE(gsd.placement[0][0] == lrc::column_of(gsd.base, 2, 5));
    REQUIRE(gsd.placement[1][0] == gsd.base.global_span->first);
    REQUIRE(gsd.placement[0][1] == lrc::column_of(gsd.base, 0, 0));
    REQUIRE(gsd.placement[1][1] == lrc::column_of(gsd.base, 2, 0));
    REQUIRE(gsd.placement[0][4] == lrc::column_of(gsd.base, 1, 3));
    REQUIRE(gsd.placement[1][4] == lrc::column_of(gsd.base, 3, 3));
    for (const auto& row : gsd.placement)
        for (const auto& cell : row) REQUIRE(cell.has_value());  // t-regularity fills the array

    require_claims(gsd.claims, {{0, 2, false}, {1, 0, false}});
    REQUIRE(lrc::gsd_verify(gsd, 0, 2).pass);
    REQUIRE(lrc::gsd_verify(gsd, 1, 0).pass);
}

TEST_CASE("higher regularity pushes a claim beyond the distance", "[extend]") {
    GsdCode gsd = lrc::gsd_construct_d(Field(7), 2, 2, 1, 3, pencil3(), {6});
    REQUIRE(gsd.base.n == 18);
    REQUIRE(gsd.base.k == 11);
    REQUIRE(gsd.b == 3);
    REQUIRE(gsd.a == 6);

    require_claims(gsd.claims, {{0, 2, false}, {1, 0, true}});
    auto whole_column = lrc::gsd_verify(gsd, 1, 0);
    REQUIRE(whole_column.pass);  // three sectors at once, saved by the layout
    REQUIRE(whole_column.beyond);
    REQUIRE(lrc::gsd_verify(gsd, 0, 2).pass);
}

TEST_CASE("the regular-hypergraph route rejects structural mismatches", "[extend]") {
    Field f(7);
    REQUIRE_THROWS_AS(lrc::gsd_construct_d(f, 2, 2, 2, 2, pencil2(), {6}), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::gsd_construct_d(f, 2, 2, 1, 1, pencil2(), {6}), std::invalid_argument);
    REQUIRE_THROWS_AS(lrc::gsd_construct_d(f, 2, 2, 1, 2, pencil2(), {5, 6}), std::invalid_argument);
    REQUIRE_THROWS_WITH(lrc::gsd_construct_d(f, 2, 2, 1, 2, pencil2(), {5}),
                        Catch::Matchers::ContainsSubstring("exactly the field"));

    auto short_edges = pencil2().edges;
    short_edges.pop_back();
    lrc::Hypergraph uneven = lrc::make_hypergraph(f, 3, {0, 1, 2, 3, 4, 5}, short_edges);
    REQUIRE_THROWS_WITH(lrc::gsd_construct_d(f, 2, 2, 1, 2, uneven, {6}),
                        Catch::Matchers::ContainsSubstring("vertex"));
}
