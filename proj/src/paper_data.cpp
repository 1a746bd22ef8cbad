#include "flagpart/paper_data.hpp"

#include <map>
#include <sstream>

#include "flagpart/coxeter.hpp"

namespace flagpart {

// Hand-transcribed tables.  One record per line:
//   type | u-label | class word | z | kind | payload | source
// Xi payloads are ascending u-coefficients from u^0; set payloads are
// ';'-separated class words.  The two entries printed twice with the same
// subscript in the source tables are stored under z2 with a note, plus a
// raw "disputed" record carrying both readings.
static const char* kAssetText = R"TBL(
A1|u1|-|1|S|e|sec2
A1|u0|-|1|S|1|sec2
A1|u1|e|1|Xi|1,1|sec2
A1|u0|1|1|Xi|0,1|sec2
A1|u1|-|-|ss|e|sec8
A1|u0|-|-|ss|1|sec8
A1|u1|e|1|xi|2|sec8
A1|u0|1|1|xi|1|sec8
A1|u1|-|-|nu|1|springer-corr
A1|u0|-|-|nu|1|springer-corr
A1|u1|-|-|bz|1|sec8
A1|u0|-|-|bz|1|sec8
A1|u1|-|-|cu|e|kl-map-typeA
A1|u0|-|-|cu|1|kl-map-typeA
A2|u3|-|1|S|e|sec2
A2|u1|-|1|S|1|sec2
A2|u0|-|1|S|1,2|sec2
A2|u3|e|1|Xi|1,2,2,1|sec2
A2|u1|1|1|Xi|0,0,1|sec2
A2|u0|1,2|1|Xi|0,0,1|sec2
A2|u3|-|-|ss|e|sec8
A2|u1|-|-|ss|1|sec8
A2|u0|-|-|ss|1,2|sec8
A2|u3|e|1|xi|6|sec8
A2|u1|1|1|xi|1|sec8
A2|u0|1,2|1|xi|1|sec8
A2|u3|-|-|nu|1|springer-corr
A2|u1|-|-|nu|1|springer-corr
A2|u0|-|-|nu|1|springer-corr
A2|u3|-|-|bz|1|sec8
A2|u1|-|-|bz|1|sec8
A2|u0|-|-|bz|1|sec8
A2|u3|-|-|cu|e|kl-map-typeA
A2|u1|-|-|cu|1|kl-map-typeA
A2|u0|-|-|cu|1,2|kl-map-typeA
B2|u4|-|1|S|e|sec2
B2|u2|-|1|S|1|sec2
B2|u1|-|1|S|2;1,2,1,2|sec2
B2|u0|-|1|S|1,2|sec2
B2|u4|e|1|Xi|1,2,2,2,1|sec2
B2|u2|1|1|Xi|0,0,1,1|sec2
B2|u1|2|1|Xi|0,0,2|sec2
B2|u1|1,2,1,2|1|Xi|0,0,0,-1,1|sec2
B2|u0|1,2|1|Xi|0,0,1|sec2
B2|u4|-|-|ss|e|sec8
B2|u2|-|-|ss|1|sec8
B2|u1|-|-|ss|2;1,2,1,2|sec8
B2|u0|-|-|ss|1,2|sec8
B2|u4|e|1|xi|8|sec8
B2|u2|1|1|xi|2|sec8
B2|u1|2|1|xi|2|sec8
B2|u1|1,2,1,2|1|xi|0|sec8
B2|u1|2|z2|xi|0|sec8
B2|u1|1,2,1,2|z2|xi|2|sec8
B2|u0|1,2|1|xi|1|sec8
B2|u4|-|-|nu|1|springer-corr
B2|u2|-|-|nu|1|springer-corr
B2|u1|-|-|nu|2|springer-corr
B2|u0|-|-|nu|1|springer-corr
B2|u4|-|-|bz|1|sec8
B2|u2|-|-|bz|1|sec8
B2|u1|-|-|bz|2|sec8
B2|u0|-|-|bz|1|sec8
G2|u6|-|1|S|e|sec2
G2|u3|-|1|S|2|sec2
G2|u2|-|1|S|1;1,2,1,2,1,2|sec2
G2|u1|-|1|S|1,2,1,2|sec2
G2|u0|-|1|S|1,2|sec2
G2|u6|e|1|Xi|1,2,2,2,2,2,1|sec2
G2|u3|2|1|Xi|0,0,0,1,1|sec2
G2|u2|1|1|Xi|0,0,1,1|sec2
G2|u2|1,2,1,2,1,2|1|Xi|0,0,0,0,-1,0,1|sec2
G2|u1|1,2,1,2|1|Xi|0,0,0,0,2|sec2
G2|u0|1,2|1|Xi|0,0,1|sec2
G2|u6|-|-|ss|e|sec8
G2|u3|-|-|ss|2|sec8
G2|u2|-|-|ss|1|sec8
G2|u1|-|-|ss|1,2,1,2,1,2;1,2,1,2|sec8
G2|u0|-|-|ss|1,2|sec8
G2|u6|e|1|xi|12|sec8
G2|u3|2|1|xi|2|sec8
G2|u2|1|1|xi|2|sec8
G2|u1|1,2,1,2,1,2|1|xi|-3|sec8
G2|u1|1,2,1,2,1,2|z2|xi|3|sec8
G2|u1|1,2,1,2,1,2|z3|xi|0|sec8
G2|u1|1,2,1,2|1|xi|2|sec8
G2|u1|1,2,1,2|z2|xi|0|sec8
G2|u1|1,2,1,2|z3|xi|2|sec8
G2|u0|1,2|1|xi|1|sec8
G2|u6|-|-|nu|1|springer-corr
G2|u3|-|-|nu|1|springer-corr
G2|u2|-|-|nu|1|springer-corr
G2|u1|-|-|nu|2|springer-corr
G2|u0|-|-|nu|1|springer-corr
G2|u6|-|-|bz|1|sec8
G2|u3|-|-|bz|1|sec8
G2|u2|-|-|bz|1|sec8
G2|u1|-|-|bz|6|sec8
G2|u0|-|-|bz|1|sec8
B3|u9|-|1|S|e|sec2
B3|u5|-|1|S|1|sec2
B3|u4|-|1|S|3;2,3,2,3|sec2
B3|u3|-|1|S|1,3;w0|sec2
B3|u2|-|1|S|1,2|sec2
B3|u1|-|1|S|2,3;2,3,1,2,3|sec2
B3|u0|-|1|S|1,2,3|sec2
B3|u9|e|1|Xi|1,3,5,7,8,8,7,5,3,1|sec2
B3|u5|1|1|Xi|0,0,0,0,1,2,1|sec2
B3|u4|2,3,2,3|1|Xi|0,0,0,0,-1,-1,1,1|sec2
B3|u4|3|1|Xi|0,0,0,2,4,2|sec2
B3|u3|1,3|1|Xi|0,0,0,0,1,1|sec2
B3|u3|w0|1|Xi|0,0,0,0,0,0,0,-1,0,1|sec2
B3|u2|1,2|1|Xi|0,0,0,0,2|sec2
B3|u1|2,3|1|Xi|0,0,0,2|sec2
B3|u1|2,3,1,2,3|1|Xi|0,0,0,0,-1,1|sec2
B3|u0|1,2,3|1|Xi|0,0,0,1|sec2
B3|u9|-|-|ss|e|sec8
B3|u5|-|-|ss|1|sec8
B3|u4|-|-|ss|3;2,3,2,3|sec8
B3|u3|-|-|ss|1,3|sec8
B3|u2|-|-|ss|1,2;w0|sec8
B3|u1|-|-|ss|2,3;2,3,1,2,3|sec8
B3|u0|-|-|ss|1,2,3|sec8
B3|u9|e|1|xi|48|sec8
B3|u5|1|1|xi|4|sec8
B3|u4|2,3,2,3|1|xi|0|sec8
B3|u4|2,3,2,3|z2|xi|4|sec8
B3|u4|3|1|xi|8|sec8
B3|u4|3|z2|xi|0|sec8-resolved-duplicate
B3|u3|1,3|1|xi|2|sec8
B3|u2|w0|1|xi|0|sec8
B3|u2|w0|z2|xi|6|sec8
B3|u2|1,2|1|xi|2|sec8
B3|u2|1,2|z2|xi|0|sec8
B3|u1|2,3|1|xi|2|sec8
B3|u1|2,3|z2|xi|0|sec8
B3|u1|2,3,1,2,3|1|xi|0|sec8
B3|u1|2,3,1,2,3|z2|xi|2|sec8
B3|u0|1,2,3|1|xi|1|sec8
B3|u4|3|?|disputed|8,0|sec8
B3|u9|-|-|nu|1|springer-corr
B3|u5|-|-|nu|1|springer-corr
B3|u4|-|-|nu|2|springer-corr
B3|u3|-|-|nu|1|springer-corr
B3|u2|-|-|nu|2|springer-corr
B3|u1|-|-|nu|2|springer-corr
B3|u0|-|-|nu|1|springer-corr
B3|u9|-|-|bz|1|sec8
B3|u5|-|-|bz|1|sec8
B3|u4|-|-|bz|2|sec8
B3|u3|-|-|bz|1|sec8
B3|u2|-|-|bz|2|sec8
B3|u1|-|-|bz|2|sec8
B3|u0|-|-|bz|1|sec8
B3|piece1|-|-|piece|e|sec5
B3|piece2|-|-|piece|1;3;2,3,2,3|sec5
B3|piece3|-|-|piece|1,3;w0|sec5
B3|piece4|-|-|piece|1,2|sec5
B3|piece5|-|-|piece|2,3;2,3,1,2,3|sec5
B3|piece6|-|-|piece|1,2,3|sec5
B3|piece1|-|-|piece_classes|u9|sec5-grouping
B3|piece2|-|-|piece_classes|u5;u4|sec5-grouping
B3|piece3|-|-|piece_classes|u3|sec5-grouping
B3|piece4|-|-|piece_classes|u2|sec5-grouping
B3|piece5|-|-|piece_classes|u1|sec5-grouping
B3|piece6|-|-|piece_classes|u0|sec5-grouping
C3|u9|-|1|S|e|sec2
C3|u6|-|1|S|3|sec2
C3|u4|-|1|S|1;2,3,2,3|sec2
C3|u3|-|1|S|1,3;w0|sec2
C3|u2p|-|1|S|1,2|sec2
C3|u2pp|-|1|S|2,3|sec2
C3|u1|-|1|S|2,3,1,2,3|sec2
C3|u0|-|1|S|1,2,3|sec2
C3|u9|e|1|Xi|1,3,5,7,8,8,7,5,3,1|sec2
C3|u6|3|1|Xi|0,0,0,1,2,2,2,1|sec2
C3|u4|2,3,2,3|1|Xi|0,0,0,0,0,-1,0,1|sec2
C3|u4|1|1|Xi|0,0,0,0,2,2|sec2
C3|u3|1,3|1|Xi|0,0,0,0,1,1|sec2
C3|u3|w0|1|Xi|0,0,0,0,0,0,0,-1,0,1|sec2
C3|u2p|1,2|1|Xi|0,0,0,1,1|sec2
C3|u2pp|2,3|1|Xi|0,0,0,1,1|sec2
C3|u1|2,3,1,2,3|1|Xi|0,0,0,0,0,1|sec2
C3|u0|1,2,3|1|Xi|0,0,0,1|sec2
C3|u9|-|-|ss|e|sec8
C3|u6|-|-|ss|3|sec8
C3|u4|-|-|ss|1;2,3,2,3|sec8
C3|u3|-|-|ss|1,3|sec8
C3|u2p|-|-|ss|1,2|sec8
C3|u2pp|-|-|ss|2,3|sec8
C3|u1|-|-|ss|2,3,1,2,3;w0|sec8
C3|u0|-|-|ss|1,2,3|sec8
C3|u9|e|1|xi|48|sec8
C3|u6|3|1|xi|8|sec8
C3|u4|2,3,2,3|1|xi|0|sec8
C3|u4|2,3,2,3|z2|xi|4|sec8
C3|u4|1|1|xi|4|sec8
C3|u4|1|z2|xi|0|sec8-resolved-duplicate
C3|u3|1,3|1|xi|2|sec8
C3|u2p|1,2|1|xi|2|sec8
C3|u2pp|2,3|1|xi|2|sec8
C3|u1|2,3,1,2,3|1|xi|1|sec8
C3|u1|2,3,1,2,3|z2|xi|1|sec8
C3|u1|w0|1|xi|-3|sec8
C3|u1|w0|z2|xi|3|sec8
C3|u0|1,2,3|1|xi|1|sec8
C3|u4|1|?|disputed|4,0|sec8
C3|u9|-|-|nu|1|springer-corr
C3|u6|-|-|nu|1|springer-corr
C3|u4|-|-|nu|2|springer-corr
C3|u3|-|-|nu|1|springer-corr
C3|u2p|-|-|nu|1|springer-corr
C3|u2pp|-|-|nu|1|springer-corr
C3|u1|-|-|nu|2|springer-corr
C3|u0|-|-|nu|1|springer-corr
C3|u9|-|-|bz|1|sec8
C3|u6|-|-|bz|1|sec8
C3|u4|-|-|bz|2|sec8
C3|u3|-|-|bz|1|sec8
C3|u2p|-|-|bz|1|sec8
C3|u2pp|-|-|bz|1|sec8
C3|u1|-|-|bz|2|sec8
C3|u0|-|-|bz|1|sec8
C3|piece1|-|-|piece|e|sec5
C3|piece2|-|-|piece|1;3;2,3,2,3|sec5
C3|piece3|-|-|piece|1,3;w0|sec5
C3|piece4|-|-|piece|1,2|sec5
C3|piece5|-|-|piece|2,3;2,3,1,2,3|sec5
C3|piece6|-|-|piece|1,2,3|sec5
C3|piece1|-|-|piece_classes|u9|sec5-grouping
C3|piece2|-|-|piece_classes|u6;u4|sec5-grouping
C3|piece3|-|-|piece_classes|u3|sec5-grouping
C3|piece4|-|-|piece_classes|u2p|sec5-grouping
C3|piece5|-|-|piece_classes|u2pp;u1|sec5-grouping
C3|piece6|-|-|piece_classes|u0|sec5-grouping
)TBL";

LaurentPoly GroundTruthEntry::as_poly() const {
    std::vector<mpz_class> coeffs;
    std::stringstream ss(payload);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.emplace_back(tok);
    return LaurentPoly::from_coeffs(0, coeffs);
}

long GroundTruthEntry::as_int() const { return std::stol(payload); }

std::vector<std::string> GroundTruthEntry::as_set() const {
    std::vector<std::string> out;
    std::stringstream ss(payload);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(tok);
    return out;
}

const char* PaperTables::asset_text() { return kAssetText; }

PaperTables::PaperTables() {
    std::stringstream ss(kAssetText);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        GroundTruthEntry e;
        std::getline(ls, e.type, '|');
        std::getline(ls, e.u_label, '|');
        std::getline(ls, e.class_word, '|');
        std::getline(ls, e.z, '|');
        std::getline(ls, e.kind, '|');
        std::getline(ls, e.payload, '|');
        std::getline(ls, e.source, '|');
        if (e.kind.empty()) throw std::runtime_error("bad table line: " + line);
        entries_.push_back(std::move(e));
    }
}

const PaperTables& PaperTables::get() {
    static PaperTables tables;
    return tables;
}

std::vector<const GroundTruthEntry*> PaperTables::select(const std::string& type,
                                                         const std::string& kind) const {
    std::vector<const GroundTruthEntry*> out;
    for (const auto& e : entries_)
        if (e.type == type && e.kind == kind) out.push_back(&e);
    return out;
}

bool PaperTables::has(const std::string& type, const std::string& u_label,
                      const std::string& class_word, const std::string& z,
                      const std::string& kind) const {
    for (const auto& e : entries_)
        if (e.type == type && e.u_label == u_label && e.class_word == class_word && e.z == z &&
            e.kind == kind)
            return true;
    return false;
}

const GroundTruthEntry& PaperTables::lookup(const std::string& type, const std::string& u_label,
                                            const std::string& class_word, const std::string& z,
                                            const std::string& kind) const {
    for (const auto& e : entries_)
        if (e.type == type && e.u_label == u_label && e.class_word == class_word && e.z == z &&
            e.kind == kind)
            return e;
    throw NotInPaper(type + "/" + u_label + "/" + class_word + "/" + z + "/" + kind);
}

std::vector<std::string> data_integrity_issues() {
    std::vector<std::string> issues;
    const PaperTables& t = PaperTables::get();

    // u=1 of every Xi entry must match the xi entry with the same key, when
    // the latter exists.
    for (const auto& e : t.all()) {
        if (e.kind != "Xi") continue;
        if (!t.has(e.type, e.u_label, e.class_word, "1", "xi")) continue;
        mpz_class lhs = e.as_poly().at_one();
        long rhs = t.lookup(e.type, e.u_label, e.class_word, "1", "xi").as_int();
        if (lhs != rhs)
            issues.push_back(e.type + " " + e.u_label + " (" + e.class_word + "): table v=1 value " +
                             lhs.get_str() + " != " + std::to_string(rhs));
    }

    // Disputed duplicates: the retained z=1 reading must equal the Xi value
    // at u=1 (this is what resolves which duplicate was the typo).
    for (const auto& e : t.all()) {
        if (e.kind != "disputed") continue;
        auto readings = e.as_set();
        mpz_class xi1 = t.lookup(e.type, e.u_label, e.class_word, "1", "Xi").as_poly().at_one();
        long kept = t.lookup(e.type, e.u_label, e.class_word, "1", "xi").as_int();
        if (xi1 != kept)
            issues.push_back(e.type + " " + e.u_label + " (" + e.class_word +
                             "): disputed resolution inconsistent with the u=1 value");
    }

    // S / ss set totals per type must equal the class counts.
    for (const std::string& type : {"A1", "A2", "B2", "G2", "B3", "C3"}) {
        const CoxeterGroup& W = CoxeterGroup::get(type);
        for (const std::string& kind : {"S", "ss"}) {
            std::size_t total = 0;
            for (const auto* e : t.select(type, kind)) total += e->as_set().size();
            if (total != W.conjugacy_classes().size())
                issues.push_back(type + " " + kind + " sets cover " + std::to_string(total) +
                                 " classes, expected " +
                                 std::to_string(W.conjugacy_classes().size()));
        }
        // nu totals = number of classes of W (each irreducible appears once).
        long nu_total = 0;
        for (const auto* e : t.select(type, "nu")) nu_total += e->as_int();
        if (nu_total != static_cast<long>(W.conjugacy_classes().size()))
            issues.push_back(type + " nu totals " + std::to_string(nu_total) + ", expected " +
                             std::to_string(W.conjugacy_classes().size()));
    }
    return issues;
}

} // namespace flagpart
