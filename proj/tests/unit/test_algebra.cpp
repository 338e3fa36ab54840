#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "toporep/algebra.hpp"
#include "toporep/error.hpp"

using namespace toporep;

namespace {
const auto Q = FieldSpec::rationals();
const auto F2 = FieldSpec::prime(2);
const auto F3 = FieldSpec::prime(3);

ExactVector vq(std::vector<long> e) { return ExactVector::from_ints(Q, e); }
ExactVector v2(std::vector<long> e) { return ExactVector::from_ints(F2, e); }
}  // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("GF(2)") == F2);
    CHECK(FieldSpec::parse("3") == F3);
    CHECK(FieldSpec::parse("Q").is_rationals());
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::parse("GF(x)"), Error);
    CHECK(F3.normalize(Rational(-1)) == 2);
    CHECK(F3.normalize(Rational(1, 2)) == 2);  // 2^-1 = 2 mod 3
    CHECK(Q.normalize(Rational(2, 4)) == Rational(1, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("bilinear form") {
    CHECK(bilinear(vq({1, 1, 1}), vq({-1, -1, 2})) == 0);
    CHECK(bilinear(v2({1, 0}), v2({1, 0})) == 1);
    CHECK(bilinear(v2({1, 1}), v2({1, 1})) == 0);
    CHECK_THROWS_AS(bilinear(v2({1, 1}), v2({1})), Error);
    CHECK_THROWS_AS(bilinear(v2({1}), vq({1})), Error);
}

TEST_CASE("rank") {
    CHECK(rank(ExactMatrix::from_rows(F2, {{1, 1}, {1, 1}})) == 1);
    for (auto f : {F2, F3, Q}) CHECK(rank(ExactMatrix::identity(f, 3)) == 3);
    auto c5 = ExactMatrix::from_rows(Q, {{1, 1, 1}, {-1, -1, 2}, {3, 1, 2}, {-1, 5, -1}, {1, 0, -1}});
    CHECK(rank(c5) == 3);
    CHECK(rank(ExactMatrix(Q, 0, 0)) == 0);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(ExactMatrix::identity(Q, 2)).empty());
    auto k = kernel_basis(ExactMatrix::from_rows(F2, {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == v2({1, 1}));
    CHECK(kernel_basis(ExactMatrix(Q, 2, 3)).size() == 3);
}

TEST_CASE("span membership") {
    CHECK(in_span(vq({1, 1}), {vq({1, 0}), vq({0, 1})}));
    CHECK(!in_span(vq({0, 0, 1}), {vq({1, 0, 0})}));
    CHECK(in_span(v2({1, 1, 0}), {v2({1, 0, 1}), v2({0, 1, 1})}));
    CHECK(in_span(v2({0, 0}), {}));
    CHECK(!in_span(v2({1, 0}), {}));
}

TEST_CASE("rank agrees with an integer elimination oracle and with the kernel") {
    std::mt19937_64 rng(7);
    for (long p : {2L, 3L, 5L}) {
        auto f = FieldSpec::prime(p);
        for (int trial = 0; trial < 200; ++trial) {
            int rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
            for (auto& r : a)
                for (auto& x : r) x = rng() % p;
            auto m = ExactMatrix::from_rows(f, a);
            int r = static_cast<int>(rank(m));
            CHECK(r == oracle::rank_mod(a, p));
            auto ker = kernel_basis(m);
            CHECK(r + static_cast<int>(ker.size()) == cols);
            for (const auto& x : ker) CHECK(m.multiply(x).is_zero());
            CHECK(rank(m.transpose()) == static_cast<std::size_t>(r));

            // scaling and swapping rows keeps the rank
            auto b = a;
            std::swap(b[0], b[rows - 1]);
            const long c = 1 + static_cast<long>(rng() % (p - 1));
            for (auto& x : b[0]) x = x * c % p;
            CHECK(rank(ExactMatrix::from_rows(f, b)) == static_cast<std::size_t>(r));
        }
    }
}

TEST_CASE("in_span matches solving the augmented system") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + rng() % 4, k = rng() % 4;
        std::vector<ExactVector> s;
        std::vector<std::vector<long>> cols;
        for (int i = 0; i < k; ++i) {
            std::vector<long> e(n);
            for (auto& x : e) x = static_cast<long>(rng() % 5) - 2;
            s.push_back(vq(e));
            cols.push_back(e);
        }
        std::vector<long> target(n);
        for (auto& x : target) x = static_cast<long>(rng() % 5) - 2;
        auto v = vq(target);
        // v in span(S) iff the kernel of [S | v] has a vector with last coordinate nonzero
        ExactMatrix aug(Q, n, k + 1);
        for (int i = 0; i < k; ++i)
            for (int r = 0; r < n; ++r) aug.set(r, i, cols[i][r]);
        for (int r = 0; r < n; ++r) aug.set(r, k, target[r]);
        bool solvable = false;
        for (const auto& x : kernel_basis(aug))
            if (x[k] != 0) solvable = true;
        CHECK(in_span(v, s) == solvable);
    }
}

TEST_CASE("rationals do not overflow") {
    std::vector<Rational> big{Rational("123456789012345678901234567890"), Rational(1)};
    ExactVector a(Q, big);
    CHECK(bilinear(a, a) == Rational("15241578753238836750495351562536198787501905199875019052101"));
}
