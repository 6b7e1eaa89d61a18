#include <doctest.h>

#include <random>

#include "ccx/core_math.hpp"

using namespace ccx;

TEST_CASE("binomial values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(27, 3) == 2925);  // 27*26*25/6
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial Pascal identity up to 60") {
    for (long a = 1; a <= 60; ++a)
        for (long b = 1; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("from_roots") {
    CHECK(Polynomial::from_roots({1, 3, 5}) ==
          Polynomial(IntSeq{-15, 23, -9, 1}));
    CHECK(Polynomial::from_roots({}) == Polynomial::constant(1));
    CHECK(Polynomial::from_roots({1, 2, 4, 8, 16}) ==
          Polynomial(IntSeq{-1024, 1984, -1240, 310, -31, 1}));
}

TEST_CASE("eval") {
    Polynomial p(IntSeq{0, 2, -3, 1});  // t^3 - 3t^2 + 2t
    CHECK(p.eval(-1) == -6);
    CHECK(p.eval(0) == 0);
    CHECK(Polynomial(IntSeq{-1, 1}).eval(7) == 6);
}

TEST_CASE("zero polynomial and degree") {
    Polynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Polynomial(IntSeq{0, 0}).is_zero());
    CHECK((z * Polynomial(IntSeq{1, 2})).is_zero());
}

TEST_CASE("ring operations agree with pointwise evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 6), pt(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IntSeq a(deg(rng) + 1), b(deg(rng) + 1);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        Polynomial p{a}, q{b};
        BigInt x = pt(rng);
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
}

TEST_CASE("alternating binomial transform") {
    SUBCASE("constant series, n=1") {
        IntSeq c(5, 1);
        CHECK(alternating_binomial_transform(c, 1, 2) == IntSeq{1, 0});
    }
    SUBCASE("c_j = j+1, n=2") {
        IntSeq c;
        for (int j = 0; j < 6; ++j) c.emplace_back(j + 1);
        CHECK(alternating_binomial_transform(c, 2, 3) == IntSeq{1, 0, 0});
    }
    SUBCASE("c_j = (j+1)^2, n=3") {
        IntSeq c;
        for (int j = 0; j < 7; ++j) c.emplace_back((j + 1) * (j + 1));
        CHECK(alternating_binomial_transform(c, 3, 4) == IntSeq{1, 1, 0, 0});
    }
    SUBCASE("guard violation on wrong n") {
        IntSeq c;
        for (int j = 0; j < 7; ++j) c.emplace_back((j + 1) * (j + 1));
        CHECK_THROWS_AS(alternating_binomial_transform(c, 2, 4), GuardViolation);
    }
    SUBCASE("input too short") {
        CHECK_THROWS_AS(alternating_binomial_transform(IntSeq{1, 1}, 1, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("transform is linear in c") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-20, 20);
    // finitely supported c keeps the guard window clear for any out_len
    for (int trial = 0; trial < 50; ++trial) {
        IntSeq a{coeff(rng), coeff(rng)}, b{coeff(rng), coeff(rng)};
        auto pad = [](IntSeq s, size_t len) { s.resize(len, 0); return s; };
        int n = 1 + trial % 3;
        size_t len = 16;
        IntSeq sum(2);
        sum[0] = a[0] + b[0];
        sum[1] = a[1] + b[1];
        auto ta = alternating_binomial_transform(pad(a, len), n, 8);
        auto tb = alternating_binomial_transform(pad(b, len), n, 8);
        auto ts = alternating_binomial_transform(pad(sum, len), n, 8);
        for (size_t k = 0; k < 8; ++k) CHECK(ts[k] == ta[k] + tb[k]);
    }
}

TEST_CASE("interpolate") {
    SUBCASE("cubic with roots 1,3,5") {
        auto p = interpolate({{0, -15}, {1, 0}, {3, 0}, {5, 0}});
        CHECK(p == Polynomial(IntSeq{-15, 23, -9, 1}));
    }
    SUBCASE("single point") {
        CHECK(interpolate({{0, 1}}) == Polynomial::constant(1));
    }
    SUBCASE("squares") {
        CHECK(interpolate({{1, 1}, {2, 4}, {3, 9}}) ==
              Polynomial(IntSeq{0, 0, 1}));
    }
    SUBCASE("non-integral result") {
        CHECK_THROWS_AS(interpolate({{0, 0}, {2, 1}}), NonIntegralResult);
    }
    SUBCASE("duplicate x rejected") {
        CHECK_THROWS_AS(interpolate({{1, 1}, {1, 2}}), std::invalid_argument);
    }
}

TEST_CASE("interpolate after evaluate is the identity") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-50, 50), deg(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        IntSeq c(deg(rng) + 1);
        for (auto& v : c) v = coeff(rng);
        Polynomial p{c};
        std::vector<std::pair<BigInt, BigInt>> pts;
        int m = std::max(p.degree() + 1, 1);
        for (int x = 0; x < m; ++x) pts.emplace_back(x, p.eval(x));
        CHECK(interpolate(pts) == p);
    }
}

TEST_CASE("to_string rendering") {
    CHECK(Polynomial(IntSeq{0, 2, -3, 1}).to_string() == "t^3 - 3t^2 + 2t");
    CHECK(Polynomial(IntSeq{-15, 23, -9, 1}).to_string() ==
          "t^3 - 9t^2 + 23t - 15");
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial::constant(-7).to_string() == "-7");
}
