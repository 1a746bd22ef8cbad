#include <doctest.h>

#include <random>

#include "flagpart/hecke.hpp"

using namespace flagpart;

namespace {

const HeckeParam<LaurentPoly>& par() {
    static auto p = symbolic_hecke_param();
    return p;
}

LaurentPoly upow(int e) { return LaurentPoly::u_pow(e); }
LaurentPoly upoly(int min_exp, std::vector<mpz_class> cs) {
    return LaurentPoly::from_coeffs(min_exp, cs);
}

HeckeElt<LaurentPoly> basis(const CoxeterGroup& W, const char* word, LaurentPoly c) {
    return HeckeElt<LaurentPoly>::basis(W, W.element_from_string(word), std::move(c));
}

} // namespace

TEST_CASE("quadratic relation in the normalized basis") {
    const CoxeterGroup& W = CoxeterGroup::get("A1");
    auto Ts = basis(W, "1", LaurentPoly::one());
    auto sq = hatT_mul(par(), Ts, Ts);
    // (1 - u^-1) T_s + u^-1 T_e
    CHECK(sq.coeff(W.generator(0)) == upoly(-1, {-1, 1}));
    CHECK(sq.coeff(0) == upow(-1));
}

TEST_CASE("lengths add") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    auto prod = hatT_mul(par(), basis(W, "1", LaurentPoly::one()), basis(W, "2", LaurentPoly::one()));
    CHECK(prod.coeffs().size() == 1);
    CHECK(prod.coeff(W.element_from_string("1,2")) == LaurentPoly::one());
}

TEST_CASE("product along any reduced word gives the basis element") {
    for (const std::string label : {"A2", "B2", "G2", "C3"}) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        for (int w = 0; w < W.order(); ++w) {
            auto acc = HeckeElt<LaurentPoly>::basis(W, 0, LaurentPoly::one());
            for (uint8_t s : W.word(w))
                acc = hatT_mul(par(), acc,
                               basis(W, std::to_string(s + 1).c_str(), LaurentPoly::one()));
            CHECK(acc.coeffs().size() == 1);
            CHECK(acc.coeff(w) == LaurentPoly::one());
        }
    }
}

TEST_CASE("associativity on random triples") {
    const CoxeterGroup& W = CoxeterGroup::get("B2");
    std::mt19937 rng(23);
    auto rand_elt = [&]() {
        HeckeElt<LaurentPoly> h(W);
        for (int k = 0; k < 3; ++k)
            h.add(static_cast<int>(rng() % W.order()),
                  LaurentPoly::term(static_cast<long>(rng() % 5) - 2,
                                    static_cast<int>(rng() % 5) - 2));
        return h;
    };
    for (int trial = 0; trial < 15; ++trial) {
        auto a = rand_elt(), b = rand_elt(), c = rand_elt();
        CHECK(hatT_mul(par(), a, hatT_mul(par(), b, c)) ==
              hatT_mul(par(), hatT_mul(par(), a, b), c));
        CHECK(hatT_mul(par(), HeckeElt<LaurentPoly>::basis(W, 0, LaurentPoly::one()), a) == a);
        CHECK(hatT_mul(par(), a, HeckeElt<LaurentPoly>::basis(W, 0, LaurentPoly::one())) == a);
    }
}

TEST_CASE("displayed central element: regular semisimple in rank 2 type A") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    // 6 + 3(u-1)(T1 + T2) + (u-1)^2 (T12 + T21) + (u^3 - 1) T121
    HeckeElt<LaurentPoly> Pi(W);
    Pi.add(0, LaurentPoly::constant(6));
    LaurentPoly um1 = upoly(0, {-1, 1});
    Pi.add(W.element_from_string("1"), mpz_class(3) * um1);
    Pi.add(W.element_from_string("2"), mpz_class(3) * um1);
    Pi.add(W.element_from_string("1,2"), um1 * um1);
    Pi.add(W.element_from_string("2,1"), um1 * um1);
    Pi.add(W.element_from_string("1,2,1"), upoly(0, {-1, 0, 0, 1}));
    CHECK(is_central(par(), Pi).central);

    auto profile = min_coeff_profile(Pi);
    CHECK(profile.at(W.class_of_word("e").id) == LaurentPoly::constant(6));
    CHECK(profile.at(W.class_of_word("1").id) == mpz_class(3) * um1);
}

TEST_CASE("displayed central element: transvection") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    // (2u + 1) + u^2 (T1 + T2) + u^3 T121
    HeckeElt<LaurentPoly> Pi(W);
    Pi.add(0, upoly(0, {1, 2}));
    Pi.add(W.element_from_string("1"), upow(2));
    Pi.add(W.element_from_string("2"), upow(2));
    Pi.add(W.element_from_string("1,2,1"), upow(3));
    CHECK(is_central(par(), Pi).central);

    auto profile = min_coeff_profile(Pi);
    CHECK(profile.size() == 3);
    CHECK(profile.at(W.class_of_word("e").id) == upoly(0, {1, 2}));
    CHECK(profile.at(W.class_of_word("1").id) == upow(2));
    CHECK(profile.at(W.class_of_word("1,2").id).is_zero());
    // s1s2s1 is conjugate to s1; its own coefficient u^3 is not a
    // minimal-length coefficient and does not enter the profile.
    CHECK(W.class_of_word("1,2,1").id == W.class_of_word("1").id);
    CHECK(Pi.coeff(W.element_from_string("1,2,1")) == upow(3));
}

TEST_CASE("basis elements are not central; the witness names a generator") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    auto t1 = basis(W, "1", LaurentPoly::one());
    auto cert = is_central(par(), t1);
    CHECK_FALSE(cert.central);
    CHECK(cert.generator == 2);
}

TEST_CASE("regular-unipotent element sum u^l(w) hatT_w is central") {
    for (const std::string label : {"A1", "A2", "B2"}) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        HeckeElt<LaurentPoly> Pi(W);
        for (int w = 0; w < W.order(); ++w) Pi.add(w, upow(W.length(w)));
        CHECK(is_central(par(), Pi).central);
        auto profile = min_coeff_profile(Pi);
        for (const auto& cls : W.conjugacy_classes())
            CHECK(profile.at(cls.id) == upow(cls.min_length));
    }
}

TEST_CASE("min-coeff mismatch is detected") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    HeckeElt<LaurentPoly> h(W);
    h.add(W.element_from_string("1"), LaurentPoly::one()); // but not on s2
    CHECK_THROWS_AS(min_coeff_profile(h), MinCoeffMismatch);
}

TEST_CASE("scalars are central with a trivial profile") {
    const CoxeterGroup& W = CoxeterGroup::get("C3");
    auto c = basis(W, "e", upoly(0, {4, 2}));
    CHECK(is_central(par(), c).central);
    auto profile = min_coeff_profile(c);
    for (const auto& cls : W.conjugacy_classes()) {
        if (cls.id == W.class_of_word("e").id)
            CHECK(profile.at(cls.id) == upoly(0, {4, 2}));
        else
            CHECK(profile.at(cls.id).is_zero());
    }
}

TEST_CASE("specialization at u = 1 makes the generators involutions") {
    const CoxeterGroup& W = CoxeterGroup::get("B2");
    auto num = numeric_hecke_param(mpq_class(1));
    auto Ts = HeckeElt<mpq_class>::basis(W, W.generator(0), mpq_class(1));
    auto sq = hatT_mul(num, Ts, Ts);
    CHECK(sq.coeffs().size() == 1);
    CHECK(sq.coeff(0) == 1);
}

TEST_CASE("at_one of pinned table coefficients") {
    // u^3 (u - 1) vanishes at 1; 2u^2 gives 2
    CHECK(upoly(3, {-1, 1}).at_one() == 0);
    CHECK(upoly(2, {2}).at_one() == 2);
}

TEST_CASE("at_one of a central element commutes with all of W") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    HeckeElt<LaurentPoly> Pi(W);
    Pi.add(0, upoly(0, {1, 2}));
    Pi.add(W.element_from_string("1"), upow(2));
    Pi.add(W.element_from_string("2"), upow(2));
    Pi.add(W.element_from_string("1,2,1"), upow(3));
    GroupAlgebraElement pi = at_one(Pi);
    CHECK(pi.coeff(0) == 3);
    CHECK(pi.coeff(W.element_from_string("1")) == 1);
    CHECK(pi.commutes_with_all());

    GroupAlgebraElement bad(W);
    bad.add(W.element_from_string("1"), 1);
    CHECK_FALSE(bad.commutes_with_all());
}

TEST_CASE("numeric centrality at a sampled prime") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    auto num = numeric_hecke_param(mpq_class(7));
    HeckeElt<mpq_class> Pi(W);
    Pi.add(0, 15);
    Pi.add(W.element_from_string("1"), 49);
    Pi.add(W.element_from_string("2"), 49);
    Pi.add(W.element_from_string("1,2,1"), 343);
    CHECK(is_central(num, Pi).central);
}

TEST_CASE("group mismatch is rejected") {
    auto a = HeckeElt<LaurentPoly>::basis(CoxeterGroup::get("A2"), 0, LaurentPoly::one());
    auto b = HeckeElt<LaurentPoly>::basis(CoxeterGroup::get("B2"), 0, LaurentPoly::one());
    CHECK_THROWS_AS(hatT_mul(par(), a, b), GroupMismatch);
}
