#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "awtc/bitlinalg.hpp"
#include "awtc/rng.hpp"

using namespace awtc;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, fair_bit(rng));
    return m;
}

// Brute-force count of v with v*A = b, enumerating all 2^rows vectors.
std::uint64_t enumerate_solutions(const BitMatrix& a, const BitVector& b) {
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << a.rows()); ++v)
        if (vec_mat_mul(BitVector::from_uint(v, a.rows()), a) == b) ++count;
    return count;
}

// Brute-force smallest dependent column subset by exhaustive subset scan.
std::optional<std::size_t> enumerate_min_dependent_size(const BitMatrix& m, std::size_t budget) {
    for (std::size_t w = 1; w <= budget; ++w) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.cols()); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != w) continue;
            BitVector acc(m.rows());
            for (std::size_t c = 0; c < m.cols(); ++c)
                if ((mask >> c) & 1) acc ^= m.column(c);
            if (acc.is_zero()) return w;
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(2, 3)) == 0);
    CHECK(rank(BitMatrix::from_strings({"11", "11"})) == 1);
}

TEST_CASE("nullity basics") {
    CHECK(nullity(BitMatrix::identity(3)) == 0);
    CHECK(nullity(BitMatrix(2, 3)) == 2);
    CHECK(nullity(BitMatrix::from_strings({"11", "11"})) == 1);
}

TEST_CASE("rank-nullity holds on random matrices") {
    auto rng = make_rng(7, "test-ranknullity", 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + uniform_below(rng, 8);
        std::size_t cols = 1 + uniform_below(rng, 8);
        BitMatrix m = random_matrix(rows, cols, rng);
        CHECK(rank(m) + nullity(m) == rows);
    }
}

TEST_CASE("select_columns") {
    BitMatrix m = BitMatrix::from_strings({"100", "011"});
    CHECK(select_columns(m, {0, 1}) == BitMatrix::from_strings({"10", "01"}));
    CHECK(select_columns(m, {0, 1, 2}) == m);
    CHECK(select_columns(m, {1, 2}) == BitMatrix::from_strings({"00", "11"}));
    CHECK_THROWS(select_columns(m, {1, 0}));
    CHECK_THROWS(select_columns(m, {3}));
}

TEST_CASE("column selection rank monotone under union") {
    auto rng = make_rng(11, "test-colrank", 0);
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix m = random_matrix(3 + uniform_below(rng, 4), 6, rng);
        std::vector<int> s1, s2;
        for (int c = 0; c < 6; ++c) {
            bool in1 = fair_bit(rng), in2 = fair_bit(rng);
            if (in1) s1.push_back(c);
            if (in1 || in2) s2.push_back(c);
        }
        if (s1.empty() || s2.empty()) continue;
        CHECK(rank(select_columns(m, s2)) >= rank(select_columns(m, s1)));
    }
}

TEST_CASE("count_solutions trivial cases") {
    BitMatrix zero23(2, 3);
    CHECK(count_solutions(zero23, BitVector::from_string("000")) == 4);
    CHECK(count_solutions(zero23, BitVector::from_string("100")) == 0);
    BitMatrix a = BitMatrix::from_strings({"10", "10"});
    CHECK(count_solutions(a, BitVector::from_string("10")) == 2);  // matches enumeration
    CHECK_THROWS(count_solutions(a, BitVector::from_string("1")));
}

TEST_CASE("count_solutions equals enumeration and is 0 or 2^nullity") {
    auto rng = make_rng(13, "test-countsol", 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + uniform_below(rng, 6);
        std::size_t cols = 1 + uniform_below(rng, 6);
        BitMatrix a = random_matrix(rows, cols, rng);
        BitVector b(cols);
        for (std::size_t c = 0; c < cols; ++c) b.set(c, fair_bit(rng));
        std::uint64_t got = count_solutions(a, b);
        CHECK(got == enumerate_solutions(a, b));
        CHECK((got == 0 || got == (std::uint64_t{1} << nullity(a))));
    }
}

TEST_CASE("solve_one") {
    BitMatrix id = BitMatrix::identity(4);
    BitVector b = BitVector::from_string("0110");
    CHECK(solve_one(id, b) == b);
    CHECK(!solve_one(BitMatrix(2, 3), BitVector::from_string("010")).has_value());
    BitMatrix a = BitMatrix::from_strings({"10", "10"});
    auto v = solve_one(a, BitVector::from_string("10"));
    REQUIRE(v.has_value());
    CHECK(vec_mat_mul(*v, a) == BitVector::from_string("10"));
}

TEST_CASE("solve_one result always satisfies the system") {
    auto rng = make_rng(17, "test-solveone", 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + uniform_below(rng, 7);
        std::size_t cols = 1 + uniform_below(rng, 7);
        BitMatrix a = random_matrix(rows, cols, rng);
        BitVector b(cols);
        for (std::size_t c = 0; c < cols; ++c) b.set(c, fair_bit(rng));
        auto v = solve_one(a, b);
        if (v)
            CHECK(vec_mat_mul(*v, a) == b);
        else
            CHECK(count_solutions(a, b) == 0);
    }
}

TEST_CASE("kernel_basis spans the null space") {
    auto rng = make_rng(19, "test-kernel", 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + uniform_below(rng, 6);
        std::size_t cols = 1 + uniform_below(rng, 6);
        BitMatrix a = random_matrix(rows, cols, rng);
        auto basis = kernel_basis(a);
        CHECK(basis.size() == nullity(a));
        for (const auto& v : basis) CHECK(vec_mat_mul(v, a).is_zero());
        if (!basis.empty())
            CHECK(rank(BitMatrix::from_rows(basis)) == basis.size());
    }
}

TEST_CASE("min_dependent_columns examples") {
    SUBCASE("zero column found at weight 1") {
        BitMatrix m = BitMatrix::from_strings({"101", "001"});
        // column 1 (0-based) of this matrix is nonzero; build one with a zero column
        BitMatrix z = BitMatrix::from_strings({"100", "001"});
        auto dep = min_dependent_columns(z, 3);
        REQUIRE(dep.has_value());
        CHECK(*dep == std::vector<int>{1});
        (void)m;
    }
    SUBCASE("full column rank yields nothing") {
        CHECK(!min_dependent_columns(BitMatrix::identity(3), 2).has_value());
    }
    SUBCASE("1x3 parity row") {
        BitMatrix m = BitMatrix::from_strings({"110"});
        auto dep = min_dependent_columns(m, 2);
        REQUIRE(dep.has_value());
        CHECK(*dep == std::vector<int>{2});  // the all-zero column wins at weight 1
        auto pair = min_dependent_columns(BitMatrix::from_strings({"11"}), 2);
        REQUIRE(pair.has_value());
        CHECK(*pair == std::vector<int>{0, 1});
    }
}

TEST_CASE("min_dependent_columns matches exhaustive subset scan") {
    auto rng = make_rng(23, "test-mindep", 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + uniform_below(rng, 5);
        std::size_t cols = 2 + uniform_below(rng, 9);  // <= 10 columns
        BitMatrix m = random_matrix(rows, cols, rng);
        std::size_t budget = 1 + uniform_below(rng, cols);
        auto got = min_dependent_columns(m, budget);
        auto want_size = enumerate_min_dependent_size(m, budget);
        CHECK(got.has_value() == want_size.has_value());
        if (got) {
            CHECK(got->size() == *want_size);
            BitVector acc(m.rows());
            for (int c : *got) acc ^= m.column(c);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("matrix text format round trip") {
    BitMatrix m = BitMatrix::from_strings({"1010", "0111"});
    CHECK(BitMatrix::from_text(m.to_text()) == m);
    CHECK(m.to_text() == "2 4\n1010\n0111\n");
    CHECK_THROWS(BitMatrix::from_text("2 4\n1010\n01\n"));
}
