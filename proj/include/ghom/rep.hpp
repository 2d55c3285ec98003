#pragma once

#include "ghom/fpmodule.hpp"

namespace ghom {

/* Graded module captured concretely on a degree window: a basis for each
   piece plus the matrices of multiplication by each variable.  Faithful
   exactly when the module vanishes outside the window. */
struct FiniteDimRep {
    GradedRing R;
    int64_t lo = 0;
    int64_t hi = -1;
    // pieces[k]: basis labels of the degree lo+k piece; labels are only
    // meaningful for reps built straight from a module
    std::vector<std::vector<std::pair<int, Monomial>>> pieces;
    // action[v][k]: multiplication by variable v, piece(lo+k) into
    // piece(lo+k+weight v), dense column major, dim(target)*dim(source)
    std::vector<std::vector<std::vector<Scalar>>> action;

    int64_t dim(int64_t d) const {
        return (d < lo || d > hi) ? 0 : (int64_t)pieces[d - lo].size();
    }
};

FiniteDimRep rep_from_module(const FPModule& M, int64_t lo, int64_t hi);

// reverses degrees and transposes all actions
FiniteDimRep matlis_dual(const FiniteDimRep& rep);

struct RepPresentation {
    FPModule module;
    // the chosen generators inside the rep: degree and coefficient column
    std::vector<std::pair<int64_t, std::vector<Scalar>>> gens;
};

// degreewise minimal generators and a complete relation set; faithful when
// the rep vanishes outside its window
RepPresentation rep_to_module(const FiniteDimRep& rep);

/* Graded dual of R modulo the t-th power of the maximal ideal.  These climb
   up to the injective hull of the residue field as t grows; over an artinian
   ring the tower is constant once t exceeds the socle degree. */
struct InjectiveTruncation {
    int t = 0;
    FiniteDimRep rep;
    RepPresentation pres;
};

InjectiveTruncation injective_hull_truncation(const GradedRing& R, int t);

// canonical inclusion of truncation a into truncation b, needs a.t <= b.t
GradedMatrix injective_truncation_inclusion(const InjectiveTruncation& a,
                                            const InjectiveTruncation& b);

/* Duality against the injective hull of the residue field, for modules over
   an artinian ring.  Every finite module then lives on the window from its
   least generator degree up to max generator degree plus the ring's top
   nonzero degree, so the windowed rep is faithful. */
struct MatlisData {
    int64_t lo = 0, hi = -1; // window where the primal module lives
    FiniteDimRep primal, dual;
    RepPresentation dual_pres; // the dual, presented as a module
};

// largest degree with a nonzero piece, off the least pure variable powers in
// the defining lead ideal; only meaningful over an artinian ring
int64_t artinian_top_degree(const GradedRing& R);

MatlisData matlis_dual_module(const FPModule& M);

// double dual together with the natural evaluation map into it; the map is
// an isomorphism for every finite module over an artinian ring
struct BidualData {
    FPModule bidual;
    GradedMatrix to_bidual;
};

BidualData matlis_bidual(const FPModule& M);

} // namespace ghom
