#ifndef FLAGPART_HECKE_CHARS_HPP
#define FLAGPART_HECKE_CHARS_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "flagpart/coxeter.hpp"
#include "flagpart/errors.hpp"

namespace flagpart {

/// Partition of n+1 (type A) or bipartition of n (types B/C).
struct IrrLabel {
    std::vector<int> lam, mu;
    bool bipartition = false;

    std::string to_string() const; // "2,1" or "1|1", empty component "-"
    friend bool operator==(const IrrLabel& a, const IrrLabel& b) {
        return a.bipartition == b.bipartition && a.lam == b.lam && a.mu == b.mu;
    }
};

/// Labels of the irreducible modules, in the pinned deterministic order.
std::vector<IrrLabel> irr_labels(const CoxeterGroup& W);

/// Generator matrices of the seminormal model of E specialized at u0 > 0
/// (or at u0 = 1, where the classical limit formulas apply).
class SeminormalRep {
  public:
    static SeminormalRep build(const CoxeterGroup& W, const IrrLabel& label, const mpq_class& u0);

    int dim() const { return dim_; }
    /// Trace of the unnormalized T_w along a reduced word of w.
    mpq_class trace_word(const std::vector<uint8_t>& word) const;

  private:
    int dim_ = 0;
    std::vector<std::vector<std::vector<mpq_class>>> gen_; // [generator][row][col]
};

mpq_class char_value(const CoxeterGroup& W, const IrrLabel& E, int w, const mpq_class& u0);

struct CharMatrix {
    const CoxeterGroup* W = nullptr;
    mpq_class u0;
    std::vector<IrrLabel> rows;
    std::vector<int> class_reps; // pinned lex-least minimal member, class order
    std::vector<std::vector<mpq_class>> m;
};

/// Rows = irreducibles, columns = pinned class representatives; checked invertible.
CharMatrix char_matrix(const CoxeterGroup& W, const mpq_class& u0);

/// Solves |B_g^w| = sum_E x_E tr(T_w, E_q) on the representative columns and
/// verifies the full system over every w in W (FullSystemMismatch otherwise).
std::vector<mpq_class> solve_unipotent_traces(const CoxeterGroup& W,
                                              const std::vector<unsigned long long>& counts,
                                              const mpq_class& q);

} // namespace flagpart

#endif
