#pragma once

#include "ghom/matrix.hpp"

namespace ghom {

/* Buchberger completion for a submodule of a free module over the ambient
   polynomial ring.  The module order is term-over-position: ring order on
   the monomials first, ties to the lower component index.

   Every basis element carries a tracker writing it over the original
   generators, so membership certificates and syzygies of the originals fall
   out of the completion.  No pair is ever discarded; each same-component
   pair is reduced exactly once and contributes either a basis element or a
   syzygy, which is what makes syzygies() a complete generating set.

   The defining ideal of the ring is deliberately ignored here.  Callers
   model a quotient ring by appending its relations as extra generators,
   one per component (see quotient_columns). */
class SubmoduleGB {
public:
    SubmoduleGB(GradedRing R, int rank, const std::vector<SparseVec>& gens);

    int rank() const { return rank_; }
    int ngens() const { return ngens_; }
    const GradedRing& ring() const { return R_; }

    void add_and_complete(const SparseVec& g);

    SparseVec normal_form(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return normal_form(v).empty(); }

    // is (comp, m) in the lead module of the completed basis
    bool lead_divides(int comp, const Monomial& m) const;

    // v as a polynomial combination of the original generators
    std::optional<std::vector<Polynomial>> lift(const SparseVec& v) const;

    // generators of the syzygy module of the original generators, as sparse
    // vectors over generator indices
    const std::vector<SparseVec>& syzygies() const { return syz_; }

private:
    struct Elt {
        SparseVec v;        // monic: lead coefficient one
        SparseVec tracker;  // v = sum tracker[i] * gens[i]
        int lead_comp;
        Monomial lead_mono;
        int64_t sugar;
    };
    struct SPair {
        int i, j;
        Monomial lcm;
        int64_t sugar;
    };

    GradedRing R_;
    int rank_ = 0;
    int ngens_ = 0;
    std::vector<Elt> basis_;
    std::vector<std::vector<int>> by_comp_;
    std::vector<SPair> pairs_;
    std::vector<SparseVec> syz_;

    void append(SparseVec v, SparseVec tracker, int64_t sugar);
    void complete();
    SparseVec reduce(SparseVec v, SparseVec* tracker, int64_t* sugar) const;
};

// the defining relations of R placed in every component of a rank-r free
// module; appended as generators these turn P-syzygies into R-kernels
std::vector<SparseVec> quotient_columns(const GradedRing& R, int rank);

} // namespace ghom
