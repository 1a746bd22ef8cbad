#ifndef FLAGPART_COXETER_HPP
#define FLAGPART_COXETER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flagpart/errors.hpp"

namespace flagpart {

enum class Family { A, B, C, G };

struct GroupType {
    Family family;
    int rank;

    std::string label() const;
    static GroupType parse(const std::string& label); // throws UnsupportedType
};

/// Element of the hyperoctahedral group: img[i] = ±(j+1) means letter i+1 maps
/// to letter j+1 with that sign.  Positive permutations (type A) leave all
/// signs positive.
struct SignedPerm {
    std::vector<int> img;

    static SignedPerm identity(int n);
    SignedPerm compose(const SignedPerm& then_apply) const; // (*this) followed by argument? see .cpp
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img; }

    /// (positive cycle lengths; negative cycle lengths), each sorted descending.
    std::pair<std::vector<int>, std::vector<int>> signed_cycle_type() const;
};

/// Cycle type in S_2n of a signed permutation: a positive j-cycle contributes
/// (j, j), a negative j-cycle contributes (2j).
std::vector<int> s2n_cycle_type(const std::pair<std::vector<int>, std::vector<int>>& signed_type);

/// Finite Weyl group with full element enumeration (|W| <= a few thousand).
/// Elements are identified by dense ids in shortlex BFS order; id 0 is the
/// identity and the canonical word of an element is its shortlex-least
/// reduced word.
class CoxeterGroup {
  public:
    explicit CoxeterGroup(GroupType t);

    /// Shared immutable instance per type label ("A1", "A2", "B2", "C2",
    /// "G2", "B3", "C3", and generic "A4", "B4", ... while |W| stays small).
    static const CoxeterGroup& get(const std::string& type_label);

    const GroupType& type() const { return type_; }
    const std::string& label() const { return label_; }
    int rank() const { return type_.rank; }
    int order() const { return static_cast<int>(words_.size()); }
    int coxeter_m(int i, int j) const { return m_[i][j]; }

    int identity() const { return 0; }
    int w0() const { return w0_; }
    int length(int w) const { return static_cast<int>(words_[w].size()); }
    const std::vector<uint8_t>& word(int w) const { return words_[w]; }

    int generator(int s) const { return gen_id_[s]; }
    int mult(int a, int b) const { return mult_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int left_mult_gen(int s, int w) const { return mult_[gen_id_[s]][w]; }
    int right_mult_gen(int w, int s) const { return mult_[w][gen_id_[s]]; }
    int from_word(const std::vector<uint8_t>& word) const;

    std::string element_to_string(int w) const; // "1,2,1", identity "e"
    int element_from_string(const std::string& s) const; // accepts "e", "w0", "1,2,1"

    struct ConjClass {
        int id = 0;
        std::vector<int> members;     // sorted element ids
        int min_length = 0;
        std::vector<int> min_members; // sorted; front() is the pinned representative
        int rep = 0;                  // lexicographically least minimal-length member
        std::string label;            // canonical word of rep ("e" for the identity class)
        std::string cycle_label;      // "(2;-)" style for B/C, empty otherwise
    };

    const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
    int class_of(int w) const { return class_of_[w]; }
    const ConjClass& class_of_word(const std::string& word) const;

    bool has_perm_model() const { return type_.family != Family::G; }
    const SignedPerm& signed_perm(int w) const;

    /// Number of letters of the natural matrix model: n+1 (A), 2n+1 (B), 2n (C).
    int ambient_size() const;

    /// Image in S_N under the position embedding (0-based positions);
    /// B/C images commute with i <-> N-1-i.
    std::vector<int> ambient_permutation(int w) const;

    /// Element id with the given ambient permutation, or -1.
    int element_with_ambient_permutation(const std::vector<int>& perm) const;

    std::pair<std::vector<int>, std::vector<int>> signed_cycle_type_of(int w) const;
    std::vector<int> s2n_cycle_type_of(int w) const;

  private:
    void build_elements();
    void build_classes();

    GroupType type_;
    std::string label_;
    std::vector<std::vector<int>> m_; // Coxeter matrix
    std::vector<SignedPerm> gens_;    // A/B/C realization
    std::vector<std::vector<long>> gen_mats_; // G2 realization (rank x rank, row-major)

    std::vector<std::vector<uint8_t>> words_;
    std::vector<int> gen_id_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    int w0_ = 0;
    std::vector<SignedPerm> perms_;
    std::map<std::vector<int>, int> perm_index_; // ambient permutation -> id

    std::vector<ConjClass> classes_;
    std::vector<int> class_of_;
};

/// All conjugacy classes (spec op; identical to group.conjugacy_classes()).
inline const std::vector<CoxeterGroup::ConjClass>& conjugacy_classes(const CoxeterGroup& W) {
    return W.conjugacy_classes();
}

/// Minimal-length members of a class.
inline const std::vector<int>& minimal_length_reps(const CoxeterGroup::ConjClass& c) {
    return c.min_members;
}

std::string partition_to_string(const std::vector<int>& parts);
std::vector<int> partition_from_string(const std::string& s);

} // namespace flagpart

#endif
