#ifndef FLAGPART_LIE_GROUPS_HPP
#define FLAGPART_LIE_GROUPS_HPP

#include <string>
#include <vector>

#include "flagpart/coxeter.hpp"
#include "flagpart/matrix_fq.hpp"

namespace flagpart {

/// Matrix model over F_p: GL_{n+1} (A), SO_{2n+1} (B), Sp_2n (C), with the
/// antidiagonal form convention so the upper-triangular subgroup is a Borel.
struct GroupModel {
    Family fam;
    int rank;
    int N;      // matrix size
    uint32_t p; // characteristic, odd for B/C
    MatrixFq gram; // 0x0 for type A
    const CoxeterGroup* W;

    static GroupModel make(const std::string& type_label, uint32_t p);

    std::string type_label() const { return W->label(); }
    bool has_form() const { return fam != Family::A; }
    bool preserves_form(const MatrixFq& M) const;

    /// B(x, y) = x^T Gram y for row vectors.
    uint32_t form(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) const;
};

struct UnipotentClassInfo {
    std::vector<int> partition;      // descending Jordan type
    std::string u_label;             // "u0", "u1", ..., "u2p" / "u2pp" for the C3 tie
    int fiber_dim;                   // n with dim B_u = n
    long class_dim;
    int component_group_order;       // embedded data for rank <= 3, else 1
    bool has_split_variant;          // component_group_order == 2

    std::string pretty_label() const; // u'2 / u''2 display form
};

/// All unipotent classes of the type, labels assigned through the fiber
/// dimension, ordered by descending class dimension.
std::vector<UnipotentClassInfo> unipotent_partitions(Family fam, int rank);

const UnipotentClassInfo& class_by_partition(Family fam, int rank, const std::vector<int>& partition);
const UnipotentClassInfo& class_by_label(Family fam, int rank, const std::string& u_label);

int springer_fiber_dim(Family fam, const std::vector<int>& partition);

/// Dominance order: true iff lo's class lies in the closure of hi's.
bool closure_leq(Family fam, const std::vector<int>& lo, const std::vector<int>& hi);

void validate_partition(Family fam, int rank, const std::vector<int>& partition);

/// Form-preserving unipotent matrix of the exact Jordan type.  variant "std"
/// or "tw"; the twisted variant rescales the form on one chosen block by a
/// non-square before transport back to the standard form.
MatrixFq unipotent_rep(const GroupModel& model, const std::vector<int>& partition,
                       const std::string& variant = "std");

MatrixFq regular_ss_rep(const GroupModel& model, const std::vector<int>& eigenvalues);

/// Jordan type of a unipotent matrix, from ranks of powers of (M - I).
std::vector<int> jordan_type(const MatrixFq& M);

/// Monomial lift of a Weyl group element into the model (form-preserving).
MatrixFq weyl_lift(const GroupModel& model, int w);

/// Deterministic pseudo-random form-preserving element (for invariance tests).
MatrixFq random_group_element(const GroupModel& model, unsigned seed);

} // namespace flagpart

#endif
