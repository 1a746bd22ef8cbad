#include <doctest.h>

#include <random>

#include "flagpart/laurent.hpp"
#include "flagpart/matrix_fq.hpp"
#include "flagpart/rational_poly.hpp"

using namespace flagpart;

TEST_CASE("mat_rank on pinned matrices") {
    CHECK(mat_rank(MatrixFq::identity(5, 3)) == 3);
    CHECK(mat_rank(MatrixFq(3, 2, 4)) == 0);
    CHECK(mat_rank(MatrixFq::from_rows(3, {{1, 1}, {2, 2}})) == 1);
}

TEST_CASE("rank is invariant under row permutation and submultiplicative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        uint32_t p = trial % 2 ? 5 : 3;
        int n = 2 + static_cast<int>(rng() % 3);
        MatrixFq a(p, n, n), b(p, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = rng() % p;
                b.at(i, j) = rng() % p;
            }
        int r = (a * b).rank();
        CHECK(r <= a.rank());
        CHECK(r <= b.rank());

        MatrixFq perm(p, n, n);
        for (int i = 0; i < n; ++i) perm.at(i, (i + 1) % n) = 1;
        CHECK((perm * a).rank() == a.rank());
    }
}

TEST_CASE("inverse and nullspace") {
    MatrixFq m = MatrixFq::from_rows(7, {{1, 2}, {3, 4}});
    MatrixFq inv = m.inverse();
    CHECK(m * inv == MatrixFq::identity(7, 2));

    MatrixFq s = MatrixFq::from_rows(5, {{1, 2, 3}});
    MatrixFq ns = s.right_nullspace();
    CHECK(ns.cols() == 2);
    CHECK((s * ns).is_zero());
}

TEST_CASE("laurent products expand and cancel") {
    LaurentPoly one_plus_u = LaurentPoly::from_coeffs(0, {1, 1});
    LaurentPoly one_minus_uinv = LaurentPoly::constant(1) - LaurentPoly::u_pow(-1);
    CHECK(laurent_mul(one_plus_u, one_minus_uinv) ==
          LaurentPoly::u_pow(1) - LaurentPoly::u_pow(-1));

    LaurentPoly um1 = LaurentPoly::from_coeffs(0, {-1, 1});
    CHECK(laurent_mul(um1, um1) == LaurentPoly::from_coeffs(0, {1, -2, 1}));

    // (1+u)^2 (1+u^2) = 1 + 2u + 2u^2 + 2u^3 + u^4
    LaurentPoly sq = laurent_mul(one_plus_u, one_plus_u);
    LaurentPoly res = laurent_mul(sq, LaurentPoly::from_coeffs(0, {1, 0, 1}));
    CHECK(res == LaurentPoly::from_coeffs(0, {1, 2, 2, 2, 1}));
}

TEST_CASE("laurent algebra laws on random elements") {
    std::mt19937 rng(11);
    auto rand_poly = [&]() {
        LaurentPoly p;
        for (int k = 0; k < 4; ++k)
            p += LaurentPoly::term(static_cast<long>(rng() % 7) - 3,
                                   static_cast<int>(rng() % 7) - 3);
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(laurent_mul(a, laurent_mul(b, c)) == laurent_mul(laurent_mul(a, b), c));
        CHECK(laurent_mul(a, b) == laurent_mul(b, a));
        CHECK(laurent_mul(a, LaurentPoly::one()) == a);
        CHECK(laurent_mul(a, b + c) == laurent_mul(a, b) + laurent_mul(a, c));
    }
}

TEST_CASE("laurent evaluation and poles") {
    LaurentPoly p = LaurentPoly::u_pow(1) - LaurentPoly::u_pow(-1);
    CHECK(p.eval(mpq_class(2)) == mpq_class(3, 2));
    CHECK(p.at_one() == 0);
    CHECK_THROWS_AS(p.eval(mpq_class(0)), PoleAtSpecialization);
}

TEST_CASE("interpolation recovers the pinned cubic") {
    std::vector<std::pair<mpq_class, mpq_class>> samples{
        {2, 21}, {3, 52}, {5, 186}, {7, 456}};
    RationalPoly p = interpolate_poly(samples, 3);
    CHECK(p.coeffs() == std::vector<mpq_class>{1, 2, 2, 1});
    for (const auto& [x, y] : samples) CHECK(p.eval(x) == y);
}

TEST_CASE("interpolation simple cases") {
    RationalPoly sq = interpolate_poly({{2, 4}, {3, 9}, {5, 25}}, 2);
    CHECK(sq.coeffs() == std::vector<mpq_class>{0, 0, 1});

    RationalPoly cst = interpolate_poly({{2, 1}, {3, 1}}, 0);
    CHECK(cst.coeffs() == std::vector<mpq_class>{1});
}

TEST_CASE("interpolation error modes") {
    CHECK_THROWS_AS(interpolate_poly({{2, 4}, {2, 5}, {3, 9}}, 1), DuplicateAbscissa);
    // q^2 sampled with an extra bad point under bound 2
    CHECK_THROWS_AS(interpolate_poly({{2, 4}, {3, 9}, {5, 25}, {7, 50}}, 2),
                    OverdeterminedMismatch);
    CHECK_THROWS_AS(interpolate_poly({{2, 4}}, 1), std::invalid_argument);
}

TEST_CASE("interpolation round trip on random polynomials") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = static_cast<int>(rng() % 4);
        std::vector<mpq_class> cs;
        for (int i = 0; i <= deg; ++i) {
            mpq_class c(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
            c.canonicalize();
            cs.push_back(c);
        }
        RationalPoly p(cs);
        std::vector<std::pair<mpq_class, mpq_class>> samples;
        for (int x = 1; x <= deg + 3; ++x) samples.push_back({x, p.eval(x)});
        RationalPoly q = interpolate_poly(samples, deg);
        for (const auto& [x, y] : samples) CHECK(q.eval(x) == y);
    }
}
