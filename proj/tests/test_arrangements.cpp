#include <doctest.h>

#include <sstream>

#include "ccx/arrangement.hpp"
#include "ccx/complexes.hpp"
#include "ccx/graph.hpp"
#include "ccx/hseries.hpp"

using namespace ccx;

TEST_CASE("full_bn sizes") {
    CHECK(full_bn(1).hyperplanes().size() == 1);
    CHECK(full_bn(2).hyperplanes().size() == 4);
    CHECK(full_bn(3).hyperplanes().size() == 9);
}

TEST_CASE("graphic arrangements") {
    Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    auto a = graphic(k3);
    CHECK(a.hyperplanes().size() == 3);
    for (const auto& h : a.hyperplanes()) CHECK(h.kind == Hyperplane::Kind::Eq);
    CHECK(graphic(Graph(3, {})).empty());
}

TEST_CASE("rank") {
    CHECK(rank(full_bn(3)) == 3);
    CHECK(rank(graphic(Graph(3, {{1, 2}, {1, 3}, {2, 3}}))) == 2);
    CHECK(rank(SignedArrangement(2, {})) == 0);
    CHECK(rank(graphic(Graph(4, {{1, 2}, {3, 4}}))) == 2);
}

TEST_CASE("char_poly of the full B_3 arrangement") {
    auto [chi, r] = char_poly(full_bn(3));
    CHECK(chi == Polynomial(IntSeq{-15, 23, -9, 1}));
    CHECK(r == 3);
}

TEST_CASE("char_poly of graphic arrangements is P_G / t for connected G") {
    auto [chi, r] = char_poly(graphic(Graph(3, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK(chi == Polynomial(IntSeq{2, -3, 1}));
    CHECK(r == 2);
    for (const auto& g : corpus(4, 0)) {
        Polynomial p = chromatic_polynomial(g);
        Polynomial quotient = p.divide_by_t();
        if (quotient.coeff(0) == 0) continue;  // disconnected
        auto [c, rr] = char_poly(graphic(g));
        CHECK(c == quotient);
        CHECK(rr == g.n() - 1);
    }
}

TEST_CASE("char_poly of the empty arrangement") {
    auto [chi, r] = char_poly(SignedArrangement(2, {}));
    CHECK(chi == Polynomial::constant(1));
    CHECK(r == 0);
}

TEST_CASE("point counts multiply over disjoint coordinate supports") {
    // {x1=x2} in n=4 together with {x3=0} is block diagonal
    SignedArrangement joint(4, {{Hyperplane::Kind::Eq, 1, 2},
                                {Hyperplane::Kind::Zero, 3, 0}});
    auto [chi, r] = char_poly(joint);
    auto [c1, r1] = char_poly(SignedArrangement(2, {{Hyperplane::Kind::Eq, 1, 2}}));
    auto [c2, r2] = char_poly(SignedArrangement(1, {{Hyperplane::Kind::Zero, 1, 0}}));
    CHECK(r == r1 + r2);
    CHECK(chi == c1 * c2);
}

TEST_CASE("subarrangement enumeration") {
    CHECK(enumerate_subarrangements(2).size() == 15);
    CHECK(enumerate_subarrangements(3).size() == 511);
    auto a = enumerate_subarrangements(4, 5), b = enumerate_subarrangements(4, 5);
    REQUIRE(a.size() == 200);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK_THROWS_AS(enumerate_subarrangements(5), LimitExceeded);
}

TEST_CASE("restriction bridge on all subarrangements of B2 and B3") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& a : enumerate_subarrangements(n)) {
            auto [chi, r] = char_poly(a);
            auto formula = extract_bn_h(chi, r, n).values;
            auto direct = summarize(build_bn_restriction(a)).h;
            CHECK(formula == direct);
        }
    }
}

TEST_CASE("arrangement text format") {
    std::istringstream in("3 3\neq 1 2\nne 2 3\nzero 1\n");
    auto a = SignedArrangement::parse(in);
    CHECK(a.n() == 3);
    CHECK(a.hyperplanes().size() == 3);
    std::istringstream round(a.format());
    CHECK(SignedArrangement::parse(round) == a);
    std::istringstream bad("2 1\nfoo 1 2\n");
    CHECK_THROWS_AS(SignedArrangement::parse(bad), ParseError);
    std::istringstream dup("2 2\neq 1 2\neq 2 1\n");
    CHECK_THROWS_AS(SignedArrangement::parse(dup), std::invalid_argument);
}
