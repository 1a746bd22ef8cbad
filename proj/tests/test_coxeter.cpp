#include <doctest.h>

#include <map>
#include <set>

#include "flagpart/coxeter.hpp"

using namespace flagpart;

TEST_CASE("orders and longest lengths of the built-in groups") {
    std::map<std::string, std::pair<int, int>> expect{
        {"A1", {2, 1}}, {"A2", {6, 3}}, {"B2", {8, 4}},
        {"G2", {12, 6}}, {"B3", {48, 9}}, {"C3", {48, 9}}};
    for (const auto& [label, oe] : expect) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        CHECK(W.order() == oe.first);
        CHECK(W.length(W.w0()) == oe.second);
    }
    CHECK(CoxeterGroup::get("C2").order() == 8);
    CHECK_THROWS_AS(CoxeterGroup::get("D4"), UnsupportedType);
    CHECK_THROWS_AS(CoxeterGroup::get("B9"), UnsupportedType);
}

TEST_CASE("braid and quadratic relations hold on the stored multiplication") {
    for (const std::string label : {"A2", "B2", "C2", "G2", "B3", "C3"}) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        for (int i = 0; i < W.rank(); ++i)
            for (int j = 0; j < W.rank(); ++j) {
                int m = W.coxeter_m(i, j);
                int cur = 0;
                int a = i, b = j;
                for (int k = 0; k < 2 * m; ++k) {
                    cur = W.mult(cur, W.generator(a));
                    std::swap(a, b);
                }
                CHECK(cur == 0);
            }
    }
}

TEST_CASE("length identities") {
    for (const std::string label : {"A2", "B2", "G2", "C3"}) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        int L = W.length(W.w0());
        for (int w = 0; w < W.order(); ++w) {
            CHECK(W.length(w) == W.length(W.inverse(w)));
            CHECK(W.length(W.mult(W.w0(), w)) == L - W.length(w));
        }
    }
}

TEST_CASE("conjugacy classes partition the group") {
    std::map<std::string, std::size_t> expect{{"A2", 3}, {"B2", 5}, {"G2", 6}, {"B3", 10},
                                              {"C3", 10}};
    for (const auto& [label, n] : expect) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        const auto& classes = W.conjugacy_classes();
        CHECK(classes.size() == n);
        std::size_t total = 0;
        std::set<int> seen;
        for (const auto& c : classes) {
            total += c.members.size();
            for (int w : c.members) CHECK(seen.insert(w).second);
            for (int w : c.min_members) CHECK(W.length(w) == c.min_length);
        }
        CHECK(total == static_cast<std::size_t>(W.order()));
    }
}

TEST_CASE("A2 classes are the symmetric group cycle types") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    CHECK(W.class_of_word("e").members.size() == 1);
    CHECK(W.class_of_word("1").members.size() == 3);
    CHECK(W.class_of_word("1,2").members.size() == 2);
    // both Coxeter elements are minimal
    const auto& cox = W.class_of_word("1,2");
    CHECK(cox.min_members.size() == 2);
    CHECK(cox.min_length == 2);
}

TEST_CASE("B2 classes match the table layout") {
    const CoxeterGroup& W = CoxeterGroup::get("B2");
    // (1), (s1), (s2), (s1s2s1s2), (s1s2)
    CHECK(W.class_of_word("e").id != W.class_of_word("1").id);
    CHECK(W.class_of_word("1").id != W.class_of_word("2").id);
    const auto& central = W.class_of_word("1,2,1,2");
    CHECK(central.members.size() == 1);
    CHECK(central.min_members.size() == 1);
    CHECK(central.rep == W.w0());
    CHECK(W.class_of_word("w0").id == central.id);
}

TEST_CASE("C3 named classes and minimal lengths") {
    const CoxeterGroup& W = CoxeterGroup::get("C3");
    CHECK(W.conjugacy_classes().size() == 10);
    // the word used in the table is a member; every minimal member has length 4
    const auto& c = W.class_of_word("2,3,2,3");
    CHECK(c.min_length == 4);
    for (int w : c.min_members) CHECK(W.length(w) == 4);
    // (s1 s3)^2 = 1
    int s13 = W.mult(W.generator(0), W.generator(2));
    CHECK(W.mult(s13, s13) == 0);
}

TEST_CASE("signed cycle types in rank 2") {
    const CoxeterGroup& C2 = CoxeterGroup::get("C2");
    auto w0t = C2.signed_cycle_type_of(C2.w0());
    CHECK(w0t.first.empty());
    CHECK(w0t.second == std::vector<int>{1, 1});
    // s2 is the coordinate swap in C2
    auto s2t = C2.signed_cycle_type_of(C2.generator(1));
    CHECK(s2t.first == std::vector<int>{2});
    CHECK(s2t.second.empty());

    const CoxeterGroup& C3 = CoxeterGroup::get("C3");
    auto idt = C3.signed_cycle_type_of(0);
    CHECK(idt.first == std::vector<int>{1, 1, 1});
    CHECK(idt.second.empty());
}

TEST_CASE("cycle types in S_2n double positives and fold negatives") {
    CHECK(s2n_cycle_type({{2}, {}}) == std::vector<int>{2, 2});
    CHECK(s2n_cycle_type({{}, {2}}) == std::vector<int>{4});
    CHECK(s2n_cycle_type({{}, {1, 1}}) == std::vector<int>{2, 2});
}

TEST_CASE("odd parts appear with even multiplicity in every S_2n type") {
    for (int n = 2; n <= 3; ++n) {
        const CoxeterGroup& W = CoxeterGroup::get("C" + std::to_string(n));
        for (int w = 0; w < W.order(); ++w) {
            auto parts = W.s2n_cycle_type_of(w);
            std::map<int, int> mult;
            for (int p : parts) ++mult[p];
            for (auto [p, m] : mult)
                if (p % 2) CHECK(m % 2 == 0);
        }
    }
}

TEST_CASE("B3 and C3 are the same abstract group with matching classes") {
    const CoxeterGroup& B = CoxeterGroup::get("B3");
    const CoxeterGroup& C = CoxeterGroup::get("C3");
    REQUIRE(B.order() == C.order());
    for (int w = 0; w < B.order(); ++w) {
        CHECK(B.word(w) == C.word(w));
        CHECK(B.length(w) == C.length(w));
    }
    std::set<std::pair<int, std::size_t>> bsig, csig;
    for (const auto& c : B.conjugacy_classes()) bsig.insert({c.min_length, c.members.size()});
    for (const auto& c : C.conjugacy_classes()) csig.insert({c.min_length, c.members.size()});
    CHECK(bsig == csig);
    // word-level identification is a bijection on classes
    for (const auto& c : B.conjugacy_classes())
        CHECK(C.class_of_word(c.label).members.size() == c.members.size());
}

TEST_CASE("element serialization round trips") {
    const CoxeterGroup& W = CoxeterGroup::get("B3");
    for (int w = 0; w < W.order(); ++w)
        CHECK(W.element_from_string(W.element_to_string(w)) == w);
    CHECK(W.element_to_string(0) == "e");
    CHECK(W.element_from_string("w0") == W.w0());
}

TEST_CASE("ambient permutations commute with the mirror and embed W") {
    for (const std::string label : {"B2", "C2", "B3", "C3"}) {
        const CoxeterGroup& W = CoxeterGroup::get(label);
        int N = W.ambient_size();
        std::set<std::vector<int>> images;
        for (int w = 0; w < W.order(); ++w) {
            auto p = W.ambient_permutation(w);
            CHECK(images.insert(p).second);
            for (int i = 0; i < N; ++i) CHECK(p[N - 1 - i] == N - 1 - p[i]);
            CHECK(W.element_with_ambient_permutation(p) == w);
        }
    }
}
