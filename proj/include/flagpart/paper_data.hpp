#ifndef FLAGPART_PAPER_DATA_HPP
#define FLAGPART_PAPER_DATA_HPP

#include <string>
#include <vector>

#include "flagpart/laurent.hpp"

namespace flagpart {

/// One transcribed record.  Kinds: Xi (u-polynomial), xi (integer), S / ss /
/// piece (class-word sets), piece_classes (u-label sets), cu (class word),
/// nu / bz (integers), disputed (raw duplicate readings kept for audit).
struct GroundTruthEntry {
    std::string type;       // "A1".."C3"
    std::string u_label;    // "u4", "u2p", "piece3", ...
    std::string class_word; // "2,3,1,2,3", "w0", "e", or "-"
    std::string z;          // "1", "z2", "z3", "-" (not keyed), "?"
    std::string kind;
    std::string payload;
    std::string source;

    LaurentPoly as_poly() const;              // Xi payloads
    long as_int() const;                      // xi / nu / bz payloads
    std::vector<std::string> as_set() const;  // S / ss / piece payloads, ';'-split
};

class PaperTables {
  public:
    static const PaperTables& get();

    const std::vector<GroundTruthEntry>& all() const { return entries_; }

    std::vector<const GroundTruthEntry*> select(const std::string& type,
                                                const std::string& kind) const;

    bool has(const std::string& type, const std::string& u_label, const std::string& class_word,
             const std::string& z, const std::string& kind) const;

    /// Throws NotInPaper when the table is silent on the key.
    const GroundTruthEntry& lookup(const std::string& type, const std::string& u_label,
                                   const std::string& class_word, const std::string& z,
                                   const std::string& kind) const;

    /// The raw line-format text (one record per line).
    static const char* asset_text();

  private:
    PaperTables();
    std::vector<GroundTruthEntry> entries_;
};

/// Standalone data-integrity audit: u=1 of each Xi entry against the matching
/// xi entry, set-size totals per type, and the disputed-duplicate resolution.
/// Returns human-readable problems; empty means consistent.
std::vector<std::string> data_integrity_issues();

} // namespace flagpart

#endif
