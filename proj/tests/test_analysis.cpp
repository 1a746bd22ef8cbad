#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "flagpart/analysis.hpp"
#include "flagpart/paper_data.hpp"

using namespace flagpart;

namespace {

std::string tmpdir(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

} // namespace

TEST_CASE("interpolated tables match the transcription in rank <= 2") {
    CountStore store(tmpdir("fp_xi"), 2);

    XiEntry a2 = xi_from_samples(store, "A2", {1, 1, 1}, "std", {2, 3, 5, 7});
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    CHECK(a2.by_class.at(W.class_of_word("e").id) == LaurentPoly::from_coeffs(0, {1, 2, 2, 1}));
    for (int w = 1; w < W.order(); ++w) CHECK(a2.by_element.at(w).is_zero());

    // split class: the z-identified families interpolate to the transcribed
    // polynomials even though the constructed variant flips with the prime
    XiTable table = derived_xi_table(store, "B2", {3, 5, 7, 11, 13});
    const CoxeterGroup& WB = CoxeterGroup::get("B2");
    const XiEntry* z1 = table.find("u1", "1");
    const XiEntry* z2 = table.find("u1", "z2");
    REQUIRE(z1 != nullptr);
    REQUIRE(z2 != nullptr);
    CHECK(z1->by_class.at(WB.class_of_word("2").id) == LaurentPoly::from_coeffs(2, {2}));
    CHECK(z1->by_class.at(WB.class_of_word("1,2,1,2").id) ==
          LaurentPoly::from_coeffs(3, {-1, 1}));
    CHECK(z2->by_class.at(WB.class_of_word("2").id).at_one() == 0);
    CHECK(z2->by_class.at(WB.class_of_word("1,2,1,2").id).at_one() == 2);
    // the per-prime realization is recorded rather than assumed constant
    CHECK(z1->provenance.find("q3:") != std::string::npos);
    CHECK(z1->provenance.find("q13:") != std::string::npos);
}

TEST_CASE("derived table assigns z labels and reproduces the S sets") {
    CountStore store(tmpdir("fp_tab"), 2);
    XiTable table = derived_xi_table(store, "B2", {3, 5, 7, 11, 13});
    const CoxeterGroup& W = CoxeterGroup::get("B2");
    REQUIRE(table.find("u1", "1") != nullptr);
    REQUIRE(table.find("u1", "z2") != nullptr);
    REQUIRE(table.find("u4", "1") != nullptr);

    std::map<std::string, std::map<int, LaurentPoly>> z1;
    for (const auto& info : unipotent_partitions(Family::B, 2))
        z1[info.u_label] = table.find(info.u_label, "1")->by_class;
    auto S = s_sets("B2", z1);
    CHECK(S.at("u1") == resolve_class_set(W, {"2", "1,2,1,2"}));
    CHECK(S.at("u0") == resolve_class_set(W, {"1,2"}));
    CHECK(S.at("u2") == resolve_class_set(W, {"1"}));
    CHECK(S.at("u4") == resolve_class_set(W, {"e"}));
}

TEST_CASE("A2 derived S sets") {
    CountStore store(tmpdir("fp_a2"), 2);
    XiTable table = derived_xi_table(store, "A2", {2, 3, 5, 7});
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    std::map<std::string, std::map<int, LaurentPoly>> z1;
    for (const auto& info : unipotent_partitions(Family::A, 2))
        z1[info.u_label] = table.find(info.u_label, "1")->by_class;
    auto S = s_sets("A2", z1);
    CHECK(S.at("u0") == resolve_class_set(W, {"1,2"}));
    CHECK(S.at("u1") == resolve_class_set(W, {"1"}));
    CHECK(S.at("u3") == resolve_class_set(W, {"e"}));
}

TEST_CASE("phi fibers") {
    auto f2 = phi_map(2);
    REQUIRE(f2.size() == 4);
    const CoxeterGroup& C2 = CoxeterGroup::get("C2");
    CHECK(f2.at({2, 2}) == resolve_class_set(C2, {"2", "w0"}));
    CHECK(f2.at({4}) == resolve_class_set(C2, {"1,2"}));
    CHECK(f2.at({1, 1, 1, 1}) == resolve_class_set(C2, {"e"}));
    CHECK(f2.at({2, 1, 1}) == resolve_class_set(C2, {"1"}));

    auto f3 = phi_map(3);
    CHECK(f3.size() == 8);
    std::size_t covered = 0;
    for (const auto& [parts, fiber] : f3) covered += fiber.size();
    CHECK(covered == CoxeterGroup::get("C3").conjugacy_classes().size());
}

TEST_CASE("springer permutation characters in type A") {
    const CoxeterGroup& W = CoxeterGroup::get("A2");
    CHECK(springer_char_A({1, 1, 1}, W, 0) == 6);
    CHECK(springer_char_A({2, 1}, W, W.element_from_string("1")) == 1);
    for (int w = 0; w < W.order(); ++w) CHECK(springer_char_A({3}, W, w) == 1);
    // regular representation characters vanish off the identity
    for (int w = 1; w < W.order(); ++w) CHECK(springer_char_A({1, 1, 1}, W, w) == 0);
}

TEST_CASE("verify_all on the smallest derived profile") {
    RunConfig cfg;
    cfg.types = {"A1"};
    cfg.cache_dir = tmpdir("fp_verify");
    cfg.jobs = 2;
    cfg.with_pgl3 = false;
    cfg.with_phi = false;
    cfg.with_pieces = false;
    Report report = verify_all(cfg);
    for (const auto& c : report.checks)
        if (c.status == "fail") MESSAGE(c.id, ": ", c.actual);
    CHECK(report.all_pass());
    CHECK(report.to_json().find("paper_ref") != std::string::npos);
    CHECK(report.to_markdown().find("ALL CHECKS PASS") != std::string::npos);
}

TEST_CASE("a corrupted cache entry surfaces as a failing check") {
    std::string dir = tmpdir("fp_corrupt");
    {
        // seed the cache with genuine counts, then corrupt one value
        CountStore store(dir, 2);
        store.unipotent("A1", 3, {2}, "std");
    }
    std::string path = dir + "/A1_q3_2_std.json";
    {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), {});
        auto pos = text.find("\"1\": 3");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 6, "\"1\": 4");
        std::ofstream(path) << text;
    }
    RunConfig cfg;
    cfg.types = {"A1"};
    cfg.cache_dir = dir;
    cfg.with_pgl3 = false;
    cfg.with_phi = false;
    cfg.with_pieces = false;
    Report report = verify_all(cfg);
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("special piece unions match the displayed sets") {
    const CoxeterGroup& WB = CoxeterGroup::get("B3");
    auto pieces = special_piece_sets("B3");
    REQUIRE(pieces.size() == 6);
    CHECK(pieces[0] == resolve_class_set(WB, {"e"}));
    CHECK(pieces[1] == resolve_class_set(WB, {"1", "3", "2,3,2,3"}));
    CHECK(pieces[2] == resolve_class_set(WB, {"1,3", "w0"}));
    CHECK(pieces[5] == resolve_class_set(WB, {"1,2,3"}));
    // C3 gives the same six sets under the word identification
    const CoxeterGroup& WC = CoxeterGroup::get("C3");
    auto cpieces = special_piece_sets("C3");
    REQUIRE(cpieces.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        std::set<int> mapped;
        for (int cid : pieces[i])
            mapped.insert(WC.class_of_word(WB.conjugacy_classes()[cid].label).id);
        CHECK(mapped == cpieces[i]);
    }
}

TEST_CASE("the symplectic rank-2 model realizes the orthogonal table") {
    CountStore store(tmpdir("fp_c2"), 2);
    XiTable table = derived_xi_table(store, "C2", {3, 5, 7, 11, 13}, "B2");
    const CoxeterGroup& WC = CoxeterGroup::get("C2");
    const XiEntry* z1 = table.find("u1", "1");
    REQUIRE(z1 != nullptr);
    CHECK(z1->by_class.at(WC.class_of_word("2").id) == LaurentPoly::from_coeffs(2, {2}));
    CHECK(z1->by_class.at(WC.class_of_word("1,2,1,2").id) ==
          LaurentPoly::from_coeffs(3, {-1, 1}));
}

TEST_CASE("phi handles generic rank through the signed-permutation model") {
    auto f4 = phi_map(4);
    // valid type-C partitions of 8 (odd parts in even multiplicity)
    CHECK(f4.size() == 14);
    std::size_t covered = 0;
    for (const auto& [parts, fiber] : f4) {
        covered += fiber.size();
        std::map<int, int> mult;
        for (int p : parts) ++mult[p];
        for (auto [p, m] : mult)
            if (p % 2) CHECK(m % 2 == 0);
    }
    CHECK(covered == CoxeterGroup::get("C4").conjugacy_classes().size());
    CHECK(CoxeterGroup::get("C4").conjugacy_classes().size() == 20);
}
