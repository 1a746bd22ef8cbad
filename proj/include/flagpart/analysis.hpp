#ifndef FLAGPART_ANALYSIS_HPP
#define FLAGPART_ANALYSIS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagpart/flag_count.hpp"
#include "flagpart/hecke.hpp"
#include "flagpart/lie_groups.hpp"

namespace flagpart {

/// Disk-backed store of count vectors; computes (and caches) on miss.
/// Refuses rank-3 jobs beyond q = 7 unless allow_large_q is set.
class CountStore {
  public:
    CountStore(std::string dir, int jobs, bool allow_large_q = false);

    const CountVector& unipotent(const std::string& type, uint32_t q,
                                 const std::vector<int>& partition, const std::string& variant);
    const CountVector& regular_ss(const std::string& type, uint32_t q,
                                  const std::vector<int>& eigenvalues);

    /// One enumeration pass for all still-missing classes of (type, q).
    void prefetch(const std::string& type, uint32_t q,
                  const std::vector<std::pair<std::vector<int>, std::string>>& classes);

    void guard(const std::string& type, uint32_t q) const;

    int jobs() const { return jobs_; }
    const std::string& dir() const { return dir_; }

  private:
    const CountVector& fetch(const std::string& type, uint32_t q, const std::string& class_spec,
                             const std::string& variant,
                             const std::function<MatrixFq(const GroupModel&)>& build);

    std::string key(const std::string& type, uint32_t q, const std::string& class_spec,
                    const std::string& variant) const;
    std::string path(const std::string& key) const;

    std::string dir_;
    int jobs_;
    bool allow_large_q_;
    std::map<std::string, CountVector> mem_;
};

/// Interpolated table for one (class, variant): per-element and per-class
/// polynomials, with the symbolic centrality certificate already enforced.
struct XiEntry {
    std::string type;
    std::vector<int> partition;
    std::string variant;           // "std"/"tw"
    std::string z;                 // "1"/"z2" after identification, else ""
    std::vector<uint32_t> primes;
    std::map<int, LaurentPoly> by_element; // w id -> polynomial
    std::map<int, LaurentPoly> by_class;   // class id -> polynomial
    std::string provenance;                // "interpolated"
};

/// Full interpolation over the prime list (derived grade, ranks <= 2).
XiEntry xi_from_samples(CountStore& store, const std::string& type,
                        const std::vector<int>& partition, const std::string& variant,
                        const std::vector<uint32_t>& primes);

/// Derived-grade table for a whole type: every class, split variants included,
/// with z labels assigned by matching the transcribed z=1 polynomials.
struct XiTable {
    std::string type;
    std::vector<XiEntry> entries;

    const XiEntry* find(const std::string& u_label, const std::string& z) const;
};

/// table_type names the transcription used for the per-prime z
/// identification (defaults to the model's own type; C2 uses the B2 tables
/// through the canonical-word identification of the two Weyl groups).
XiTable derived_xi_table(CountStore& store, const std::string& type,
                         const std::vector<uint32_t>& primes, std::string table_type = "");

/// S_u from a map u_label -> (class id -> poly): nonzero on u, zero on every
/// class strictly below in closure.
std::map<std::string, std::set<int>> s_sets(const std::string& type,
                                            const std::map<std::string, std::map<int, LaurentPoly>>& xi);

/// ss_u from integer values per (u_label, z): nonzero for some z on u, zero
/// for all z on everything strictly below.
std::map<std::string, std::set<int>> ss_sets(
    const std::string& type,
    const std::map<std::string, std::map<std::string, std::map<int, mpz_class>>>& xi1);

/// Conjugacy classes of W(C_n) fibered by the cycle type in S_2n.
std::map<std::vector<int>, std::set<int>> phi_map(int n);

/// Unions of the transcribed S_u over each special piece (B3/C3), as class-id
/// sets in display order.
std::vector<std::set<int>> special_piece_sets(const std::string& type);

/// Springer permutation-module character in type A: fixed cosets of the
/// Young subgroup S_lambda under w.
long springer_char_A(const std::vector<int>& lambda, const CoxeterGroup& W, int w);

/// Paper class-word set resolved to class ids.
std::set<int> resolve_class_set(const CoxeterGroup& W, const std::vector<std::string>& words);

struct CheckResult {
    std::string id;
    std::string grade;  // derived | sampled | data
    std::string status; // pass | fail | skip
    std::string expected;
    std::string actual;
    std::string ref;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int failures() const;
    std::string to_json() const;
    std::string to_markdown() const;
};

struct RunConfig {
    std::vector<std::string> types{"A1", "A2", "B2", "B3", "C3"};
    bool derive = true;
    std::vector<uint32_t> rank2_primes_a{2, 3, 5, 7};
    std::vector<uint32_t> rank2_primes_b{3, 5, 7, 11, 13};
    std::vector<uint32_t> rank3_primes{3, 5};
    std::string cache_dir = "cache";
    int jobs = 2;
    bool allow_large_q = false;
    bool with_pgl3 = true;
    bool with_solve = true;
    bool with_phi = true;
    bool with_pieces = true;
    bool with_springer = true;
    bool with_determinism = false;
};

/// Runs every enabled check and collects the structured report.
Report verify_all(const RunConfig& config);

} // namespace flagpart

#endif
