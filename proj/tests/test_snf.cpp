#include <catch2/catch_amalgamated.hpp>

#include <orthotopy/intmat.hpp>
#include <orthotopy/oracle.hpp>
#include <orthotopy/snf.hpp>

using orthotopy::Int;
using orthotopy::IntMat;
using orthotopy::SnfResult;

namespace {

// Structural contract of the Smith form: exact factorization, unimodular
// transforms, non-negative diagonal with trailing zeros and a divisibility
// chain.
void check_snf_contract(const IntMat& m) {
    const SnfResult s = orthotopy::smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(abs(s.u.det()) == 1);
    REQUIRE(abs(s.v.det()) == 1);
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d(i, j) == 0);
    bool seen_zero = false;
    for (std::size_t t = 0; t < steps; ++t) {
        REQUIRE(s.d(t, t) >= 0);
        if (s.d(t, t) == 0) seen_zero = true;
        else {
            REQUIRE(!seen_zero);
            if (t + 1 < steps && s.d(t + 1, t + 1) != 0)
                REQUIRE(s.d(t + 1, t + 1) % s.d(t, t) == 0);
        }
    }
}

std::vector<Int> diagonal(const IntMat& d) {
    std::vector<Int> out;
    for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t) out.push_back(d(t, t));
    return out;
}

} // namespace

TEST_CASE("known smith forms") {
    {
        const SnfResult s = orthotopy::smith_normal_form(IntMat::from_rows({{2, 0}, {0, 3}}));
        REQUIRE(diagonal(s.d) == std::vector<Int>{1, 6});
    }
    {
        // Classic 3x3 example with diagonal 2, 6, 12.
        const IntMat m = IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
        const SnfResult s = orthotopy::smith_normal_form(m);
        REQUIRE(diagonal(s.d) == std::vector<Int>{2, 6, 12});
        check_snf_contract(m);
    }
    {
        const IntMat m = IntMat::from_rows({{2, 4}, {4, 8}});
        const SnfResult s = orthotopy::smith_normal_form(m);
        REQUIRE(diagonal(s.d) == std::vector<Int>{2, 0});
    }
    {
        const SnfResult s = orthotopy::smith_normal_form(IntMat(2, 2));
        REQUIRE(diagonal(s.d) == std::vector<Int>{0, 0});
    }
    check_snf_contract(IntMat::identity(4));
    check_snf_contract(IntMat(0, 3));
    check_snf_contract(IntMat(3, 0));
}

TEST_CASE("rank") {
    REQUIRE(orthotopy::rank(IntMat::identity(3)) == 3);
    REQUIRE(orthotopy::rank(IntMat(4, 2)) == 0);
    REQUIRE(orthotopy::rank(IntMat::from_rows({{1, 2}, {2, 4}})) == 1);
    REQUIRE(orthotopy::rank(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}})) == 2);
}

TEST_CASE("kernel basis") {
    {
        const IntMat m = IntMat::from_rows({{1, 2}});
        const IntMat k = orthotopy::kernel_basis(m);
        REQUIRE(k.cols() == 1);
        REQUIRE(m * k == IntMat(1, 1));
        REQUIRE(k(0, 0) * k(0, 0) + k(1, 0) * k(1, 0) != 0);
    }
    {
        // Full-rank square matrix: trivial kernel.
        const IntMat k = orthotopy::kernel_basis(IntMat::from_rows({{2, 0}, {0, 3}}));
        REQUIRE(k.cols() == 0);
    }
    {
        const IntMat m = IntMat::from_rows({{2, 4, 6}});
        const IntMat k = orthotopy::kernel_basis(m);
        REQUIRE(k.cols() == 2);
        REQUIRE(m * k == IntMat(1, 2));
        // Columns of a unimodular matrix form a primitive basis: the kernel
        // lattice is a direct summand, so the Smith diagonal is all ones.
        const SnfResult s = orthotopy::smith_normal_form(k);
        REQUIRE(diagonal(s.d) == std::vector<Int>{1, 1});
    }
}

TEST_CASE("randomized structural checks") {
    orthotopy::SplitMix64 rng(20260814);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng.next() % 5;
        const std::size_t cols = 1 + rng.next() % 6;
        const IntMat m = orthotopy::random_matrix(rng, rows, cols);
        check_snf_contract(m);

        const IntMat k = orthotopy::kernel_basis(m);
        REQUIRE(k.cols() == cols - orthotopy::rank(m));
        REQUIRE(m * k == IntMat(rows, k.cols()));
        if (k.cols() > 0) REQUIRE(orthotopy::rank(k) == k.cols());
    }
}
