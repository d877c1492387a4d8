#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include <orthotopy/homotopy.hpp>

using orthotopy::FgAbGroup;
using orthotopy::GroupFamily;
using orthotopy::make_group;
using orthotopy::pi;
using orthotopy::trivial_group;

TEST_CASE("family parsing and printing") {
    REQUIRE(orthotopy::parse_family("O") == GroupFamily::O);
    REQUIRE(orthotopy::parse_family("SO") == GroupFamily::SO);
    REQUIRE(orthotopy::parse_family("PO") == GroupFamily::PO);
    REQUIRE(orthotopy::parse_family("PSO") == GroupFamily::PSO);
    REQUIRE_FALSE(orthotopy::parse_family("U").has_value());
    REQUIRE(to_string(GroupFamily::PSO) == "PSO");
}

TEST_CASE("stable eight-periodic row") {
    const FgAbGroup z = make_group({0});
    const FgAbGroup z2 = make_group({2});
    const FgAbGroup zero = trivial_group();
    const FgAbGroup expect[8] = {z2, z2, zero, z, zero, zero, zero, z};
    for (long long i = 0; i <= 31; ++i) REQUIRE(orthotopy::bott_stable(i) == expect[i % 8]);
    REQUIRE_THROWS_AS(orthotopy::bott_stable(-1), orthotopy::OutOfRangeError);
}

TEST_CASE("center of the simply connected cover") {
    REQUIRE(orthotopy::spin_center(3) == make_group({2}));
    REQUIRE(orthotopy::spin_center(5) == make_group({2}));
    REQUIRE(orthotopy::spin_center(4) == make_group({2, 2}));
    REQUIRE(orthotopy::spin_center(8) == make_group({2, 2}));
    REQUIRE(orthotopy::spin_center(6) == make_group({4}));
    REQUIRE(orthotopy::spin_center(10) == make_group({4}));
    REQUIRE_THROWS_AS(orthotopy::spin_center(2), orthotopy::OutOfRangeError);
}

TEST_CASE("first unstable group, kernel first") {
    {
        const auto u = orthotopy::first_unstable(2);
        REQUIRE(u.total == make_group({0}));
        REQUIRE(u.kernel == trivial_group());
        REQUIRE(u.stable == make_group({2}));
        REQUIRE_FALSE(u.split);
    }
    for (long long n : {3, 7}) {
        const auto u = orthotopy::first_unstable(n);
        REQUIRE(u.total == trivial_group());
        REQUIRE(u.split);
    }
    {
        const auto u = orthotopy::first_unstable(4);
        REQUIRE(u.kernel == make_group({0}));
        REQUIRE(u.stable == make_group({0}));
        REQUIRE(u.total == make_group({0, 0}));
        REQUIRE(u.split);
    }
    REQUIRE(orthotopy::first_unstable(5).total == make_group({2}));
    REQUIRE(orthotopy::first_unstable(6).total == make_group({0}));
    REQUIRE(orthotopy::first_unstable(8).total == make_group({0, 0}));
    REQUIRE(orthotopy::first_unstable(9).total == make_group({2, 2}));
    REQUIRE(orthotopy::first_unstable(10).total == make_group({0, 2}));
    REQUIRE(orthotopy::first_unstable(12).total == make_group({0, 0}));
    REQUIRE_THROWS_AS(orthotopy::first_unstable(1), orthotopy::OutOfRangeError);
}

TEST_CASE("pi hits the published values") {
    REQUIRE(pi(GroupFamily::O, 5, 3) == make_group({0}));
    REQUIRE(pi(GroupFamily::PO, 8, 1) == make_group({2, 2}));

    // components
    for (long long n = 1; n <= 10; ++n) {
        REQUIRE(pi(GroupFamily::O, n, 0) == make_group({2}));
        REQUIRE(pi(GroupFamily::SO, n, 0) == trivial_group());
    }
    REQUIRE(pi(GroupFamily::PO, 1, 0) == trivial_group());
    REQUIRE(pi(GroupFamily::PSO, 1, 0) == trivial_group());
    REQUIRE(pi(GroupFamily::PO, 2, 0) == make_group({2}));
    REQUIRE(pi(GroupFamily::PSO, 2, 0) == trivial_group());
    REQUIRE(pi(GroupFamily::PO, 6, 0) == make_group({2}));
    REQUIRE(pi(GroupFamily::PSO, 6, 0) == trivial_group());
    // odd projective degrees collapse onto SO
    for (long long i = 0; i <= 6; ++i) {
        REQUIRE(pi(GroupFamily::PO, 7, i) == pi(GroupFamily::SO, 7, i));
        REQUIRE(pi(GroupFamily::PSO, 7, i) == pi(GroupFamily::SO, 7, i));
    }
    // degree-2 projective families
    REQUIRE(pi(GroupFamily::PO, 2, 1) == make_group({0}));
    REQUIRE(pi(GroupFamily::PSO, 2, 1) == make_group({0}));

    // fundamental groups of even projective families
    REQUIRE(pi(GroupFamily::PO, 4, 1) == make_group({2, 2}));
    REQUIRE(pi(GroupFamily::PSO, 6, 1) == make_group({4}));
    REQUIRE(pi(GroupFamily::PSO, 12, 1) == make_group({2, 2}));

    // first unstable degree
    REQUIRE(pi(GroupFamily::O, 3, 2) == trivial_group());
    REQUIRE(pi(GroupFamily::SO, 4, 3) == make_group({0, 0}));
    REQUIRE(pi(GroupFamily::PO, 4, 3) == make_group({0, 0}));
    REQUIRE(pi(GroupFamily::O, 2, 1) == make_group({0}));

    // stable interior
    REQUIRE(pi(GroupFamily::SO, 9, 3) == make_group({0}));
    REQUIRE(pi(GroupFamily::PO, 10, 2) == trivial_group());
    REQUIRE(pi(GroupFamily::PSO, 10, 8) == make_group({2}));
}

TEST_CASE("range errors") {
    REQUIRE_THROWS_AS(pi(GroupFamily::O, 5, 9), orthotopy::UnsupportedRangeError);
    REQUIRE_THROWS_AS(pi(GroupFamily::O, 5, 5), orthotopy::UnsupportedRangeError);
    REQUIRE_THROWS_AS(pi(GroupFamily::O, 0, 0), orthotopy::OutOfRangeError);
    REQUIRE_THROWS_AS(pi(GroupFamily::O, 5, -1), orthotopy::OutOfRangeError);
    try {
        pi(GroupFamily::O, 5, 9);
        FAIL("expected a range error");
    } catch (const orthotopy::UnsupportedRangeError& e) {
        REQUIRE(std::string(e.what()).find("n - 1 = 4") != std::string::npos);
    }
}

TEST_CASE("golden table") {
    std::ifstream in(std::string(ORTHOTOPY_TEST_DATA_DIR) + "/homotopy_tables_golden.txt");
    REQUIRE(in.good());
    std::string line;
    long long rows = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string family_name;
        long long n = 0, i = 0;
        REQUIRE((ls >> family_name >> n >> i));
        std::string expected;
        std::getline(ls, expected);
        expected.erase(0, expected.find_first_not_of(' '));
        const auto family = orthotopy::parse_family(family_name);
        REQUIRE(family.has_value());
        INFO(line);
        REQUIRE(to_string(pi(*family, n, i)) == expected);
        ++rows;
    }
    REQUIRE(rows == 1200);
}

TEST_CASE("query struct front end") {
    REQUIRE(pi({GroupFamily::O, 5, 3}) == make_group({0}));
}
