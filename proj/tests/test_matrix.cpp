#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "lrc/galois.hpp"
#include "lrc/matrix.hpp"

using lrc::Field;
using lrc::MatrixGF;

namespace {

MatrixGF from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    MatrixGF m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.vset(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("vandermonde powers run down the rows", "[matrix]") {
    Field f(7);
    MatrixGF m = MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 2, 4}, 0, 3);
    REQUIRE(m == from_rows(f, {{1, 1, 1}, {1, 2, 4}, {1, 4, 2}}));

    MatrixGF z = MatrixGF::vandermonde(f, std::vector<std::uint32_t>{0, 3}, 0, 2);
    REQUIRE(z == from_rows(f, {{1, 1}, {0, 3}}));
}

TEST_CASE("vandermonde scaling multiplies whole columns", "[matrix]") {
    Field f(7);
    // scale by x - 3 evaluated at the points 1 and 2: 5 and 6
    std::vector<std::uint32_t> scale = {5, 6};
    MatrixGF m = MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 2}, 0, 2, &scale);
    REQUIRE(m == from_rows(f, {{5, 6}, {5, 5}}));
}

TEST_CASE("vandermonde rejects repeated or out-of-range points", "[matrix]") {
    Field f(7);
    REQUIRE_THROWS_AS(MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 1}, 0, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 7}, 0, 2), std::invalid_argument);
    std::vector<std::uint32_t> short_scale = {1};
    REQUIRE_THROWS_AS(MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 2}, 0, 2, &short_scale),
                      std::invalid_argument);
}

TEST_CASE("vandermonde on distinct points has full rank", "[matrix]") {
    Field f(13);
    MatrixGF m = MatrixGF::vandermonde(f, std::vector<std::uint32_t>{1, 2, 3, 4, 5}, 0, 3);
    REQUIRE(m.rank() == 3);
    MatrixGF tall = MatrixGF::vandermonde(f, std::vector<std::uint32_t>{2, 6}, 0, 5);
    REQUIRE(tall.rank() == 2);
}

TEST_CASE("rank is invariant under transpose", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 5}});  // row 2 = 2*row 1
    REQUIRE(m.rank() == 2);
    REQUIRE(m.transpose().rank() == 2);
}

TEST_CASE("solve returns a unique witness when columns are independent", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{1, 1}, {0, 3}});
    auto res = m.solve({5, 6});
    REQUIRE(res.kind == lrc::SolveKind::unique);
    REQUIRE(m.mul_vec(res.witness) == std::vector<std::uint32_t>{5, 6});
}

TEST_CASE("solve reports underdetermined systems with witness and nullspace", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{1, 1}});
    auto res = m.solve({3});
    REQUIRE(res.kind == lrc::SolveKind::underdetermined);
    REQUIRE(res.witness == std::vector<std::uint32_t>{3, 0});
    REQUIRE(res.nullspace.rows() == 1);
    // basis vector is proportional to (1, 6)
    REQUIRE(res.nullspace.vget(0, 1) == 1);
    REQUIRE(res.nullspace.vget(0, 0) == 6);
    REQUIRE(m.mul_vec({res.nullspace.vget(0, 0), res.nullspace.vget(0, 1)}) ==
            std::vector<std::uint32_t>{0});
}

TEST_CASE("solve detects inconsistent systems", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{1}, {1}});
    auto res = m.solve({1, 2});
    REQUIRE(res.kind == lrc::SolveKind::none);
}

TEST_CASE("nullspace rows annihilate the matrix", "[matrix]") {
    Field f(13);
    MatrixGF m = from_rows(f, {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}});
    MatrixGF ns = m.nullspace();
    REQUIRE(ns.rows() == 4 - m.rank());
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        std::vector<std::uint32_t> x(4);
        for (std::size_t j = 0; j < 4; ++j) x[j] = ns.vget(r, j);
        REQUIRE(m.mul_vec(x) == std::vector<std::uint32_t>(3, 0));
    }
    REQUIRE(ns.rank() == ns.rows());
}

TEST_CASE("rref produces unit pivots and clears their columns", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{2, 1, 1}, {4, 3, 5}});
    auto rr = m.rref();
    REQUIRE(rr.pivots == std::vector<std::size_t>{0, 1});
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (std::size_t r = 0; r < m.rows(); ++r)
            REQUIRE(rr.mat.vget(r, rr.pivots[pi]) == (r == pi ? 1u : 0u));
}

TEST_CASE("column independence checks match ranks", "[matrix]") {
    Field f(7);
    MatrixGF m = from_rows(f, {{1, 2, 3}, {0, 1, 5}});
    REQUIRE(m.columns_independent({}));
    REQUIRE(m.columns_independent({0, 1}));
    REQUIRE_FALSE(m.columns_independent({0, 1, 2}));  // more columns than rows
    REQUIRE_THROWS_AS(m.columns_independent({1, 0}), std::invalid_argument);  // must be increasing
}

TEST_CASE("paste and selection move blocks exactly", "[matrix]") {
    Field f(7);
    MatrixGF big(f, 3, 4);
    big.paste(1, 2, from_rows(f, {{1, 2}, {3, 4}}));
    REQUIRE(big.vget(1, 2) == 1);
    REQUIRE(big.vget(2, 3) == 4);
    REQUIRE(big.vget(0, 0) == 0);
    REQUIRE_THROWS_AS(big.paste(2, 3, from_rows(f, {{1, 2}, {3, 4}})), std::invalid_argument);

    MatrixGF cols = big.select_columns({2, 3});
    REQUIRE(cols == from_rows(f, {{0, 0}, {1, 2}, {3, 4}}));
    MatrixGF rows = big.select_rows(1, 2);
    REQUIRE(rows.rows() == 2);
    REQUIRE(rows.vget(0, 2) == 1);
}

TEST_CASE("empty shapes are legal and rank zero", "[matrix]") {
    Field f(7);
    MatrixGF none(f, 0, 5);
    REQUIRE(none.rank() == 0);
    REQUIRE(none.nullspace().rows() == 5);           // everything is in the kernel
    REQUIRE_FALSE(none.columns_independent({0}));    // a column of height zero is dependent
    MatrixGF wide(f, 3, 0);
    REQUIRE(wide.rank() == 0);
    REQUIRE(wide.is_zero());
}

TEST_CASE("field mismatch is rejected in matrix kernels", "[matrix]") {
    Field f7(7), f8(2, 3);
    MatrixGF a(f7, 2, 2), b(f8, 2, 2);
    REQUIRE_THROWS_AS(a.paste(0, 0, b), std::invalid_argument);
    REQUIRE_THROWS_AS(a.mul(b), std::invalid_argument);
}

TEST_CASE("matrix multiplication agrees with hand products", "[matrix]") {
    Field f(7);
    MatrixGF a = from_rows(f, {{1, 2}, {3, 4}});
    MatrixGF ident = from_rows(f, {{1, 0}, {0, 1}});
    REQUIRE(a.mul(ident) == a);
    MatrixGF b = from_rows(f, {{2, 0}, {1, 5}});
    REQUIRE(a.mul(b) == from_rows(f, {{4, 3}, {3, 6}}));  // computed mod 7
}

TEST_CASE("text rendering aligns entries", "[matrix]") {
    Field f(13);
    MatrixGF m = from_rows(f, {{1, 12}, {0, 5}});
    REQUIRE(m.to_text() == " 1 12\n 0  5\n");
}
