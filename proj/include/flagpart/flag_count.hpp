#ifndef FLAGPART_FLAG_COUNT_HPP
#define FLAGPART_FLAG_COUNT_HPP

#include <functional>
#include <string>
#include <vector>

#include "flagpart/lie_groups.hpp"

namespace flagpart {

inline constexpr const char* kCodeVersion = "flagpart-1";

/// Exact counts N_w = |B_g^w(F_q)| for all w, one group element.
struct CountVector {
    std::string type_label;
    uint32_t q = 0;
    std::string class_spec; // partition "4,1,1", or "regss", or "id"
    std::string variant;    // "std" / "tw" / "-"
    std::vector<unsigned long long> counts; // indexed by Weyl element id

    unsigned long long total() const {
        unsigned long long t = 0;
        for (auto c : counts) t += c;
        return t;
    }

    std::string json() const;
    static CountVector from_json(const std::string& text);
};

/// Sum over W of q^l(w) = |B(F_q)|.
unsigned long long flag_total(const CoxeterGroup& W, uint32_t q);

/// Primes the counting kernel is compiled for.
const std::vector<uint32_t>& supported_count_primes();

/// Stream every rational (isotropic) flag chain once: rank x N rows for B/C,
/// (N-1) x N for type A, in canonical chain form.
void enumerate_flags(const GroupModel& model, const std::function<void(const MatrixFq&)>& fn);

/// Canonical chain form: row i reduced against earlier rows, leading 1.
MatrixFq canonicalize_chain(const MatrixFq& rows);

/// Append the perp chain to a maximal isotropic chain, giving a complete
/// self-dual flag as an N x N row matrix (identity-style completion for A).
MatrixFq complete_isotropic_flag(const GroupModel& model, const MatrixFq& chain_rows);

/// Relative position of two complete flags (row matrices); returns the Weyl
/// element id.  For B/C both flags must be self-dual.
int relative_position(const GroupModel& model, const MatrixFq& flag1, const MatrixFq& flag2);

/// Count the partition pieces for one element.
CountVector count_partition(const GroupModel& model, const MatrixFq& g,
                            const std::string& class_spec, const std::string& variant,
                            int jobs = 1);

/// Shared enumeration pass for several elements (the heavy path).
std::vector<CountVector> count_many(const GroupModel& model, const std::vector<MatrixFq>& gs,
                                    const std::vector<std::pair<std::string, std::string>>& specs,
                                    int jobs = 1);

} // namespace flagpart

#endif
