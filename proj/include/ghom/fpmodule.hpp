#pragma once

#include "ghom/module_gb.hpp"

namespace ghom {

struct MinimizedPresentation;

/* Finitely presented graded module: cokernel of its presentation matrix.
   Rows of the matrix are the generators, columns the relations.  Cheap to
   copy; derived data (membership basis, minimization) is cached behind the
   shared state, so a value must not be shared across threads. */
class FPModule {
public:
    FPModule() = default;
    static FPModule cokernel(GradedMatrix relations);
    static FPModule free_module(GradedRing R, std::vector<int64_t> gen_degrees);
    static FPModule residue_field(const GradedRing& R);
    static FPModule cyclic_quotient(const GradedRing& R, const std::vector<Polynomial>& gens);

    const GradedRing& ring() const;
    int ngens() const;
    const std::vector<int64_t>& gen_degrees() const;
    const GradedMatrix& relations() const;

    bool has_relations() const;  // presentation matrix nonzero
    bool is_zero() const;        // no generators survive minimization

    bool element_is_zero(const SparseVec& v) const;
    // canonical representative of the class of v
    SparseVec element_nf(const SparseVec& v) const;

    // k-basis of the degree-d piece as (generator, monomial) pairs
    std::vector<std::pair<int, Monomial>> graded_basis(int64_t d) const;
    int64_t graded_dim(int64_t d) const;

    FPModule shifted(int64_t s) const;  // all degrees moved up by s

    const MinimizedPresentation& minimized() const;

    bool same(const FPModule& o) const { return d_ == o.d_; }

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

struct MinimizedPresentation {
    FPModule module;
    GradedMatrix old_to_new;  // projection onto the surviving generators
    GradedMatrix new_to_old;  // inclusion of the surviving generators
};

FPModule direct_sum(const std::vector<FPModule>& parts);

/* Greedy minimal generating subset: candidates are admitted in degree order,
   each only if it is not already generated by the admitted ones together
   with the denominators.  Homogeneous candidates over a graded-local ring
   make this a genuinely minimal generating set of (span cands + span dens)
   modulo span dens. */
std::vector<SparseVec> minimal_generators(const GradedRing& R,
                                          const std::vector<int64_t>& row_degs,
                                          std::vector<SparseVec> cands,
                                          const std::vector<SparseVec>& dens);

// generators of { v : d(v) in span(target_span) }, as vectors over the
// source generators of d; raw, not minimalized
std::vector<SparseVec> preimage_gens(const GradedMatrix& d,
                                     const std::vector<SparseVec>& target_span);

// minimal generating vectors of the kernel of a map of free modules
std::vector<SparseVec> kernel_gens(const GradedMatrix& d);

// phi sends generators of M to columns in N's generator coordinates
bool hom_well_defined(const FPModule& M, const FPModule& N, const GradedMatrix& phi);
bool map_is_injective(const FPModule& M, const FPModule& N, const GradedMatrix& phi);
bool map_is_isomorphism(const FPModule& M, const FPModule& N, const GradedMatrix& phi);

} // namespace ghom
