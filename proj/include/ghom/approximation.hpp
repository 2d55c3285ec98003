#pragma once

#include "ghom/complex.hpp"
#include "ghom/invariants.hpp"

#include <json.hpp>
#include <optional>

namespace ghom {

/* Embedding of a module into a free module by evaluating against its ring
   dual: the free target covers the dual minimally, so when the input is
   totally reflexive the map is injective and the cokernel is totally
   reflexive again. */
struct EmbedStep {
    GradedMatrix into_free;  // columns are the generators as functionals on the dual
    FPModule cokernel;
};
EmbedStep embed_totally_reflexive(const FPModule& G);

/* Pushout of iota : G -> Q against beta : G -> P (free targets on the row
   degrees): merged is (Q + P) / { (iota g, -beta g) }, generators Q rows
   first, then P rows.  from_free and from_lower are the coprojections;
   coker(from_lower) recovers coker(iota), and splicing a complex along
   from_free / from_lower leaves its homology untouched. */
struct PushoutStep {
    FPModule merged;
    GradedMatrix from_free;   // Q -> merged
    GradedMatrix from_lower;  // P -> merged
};
PushoutStep pushout_step(const GradedMatrix& iota, const GradedMatrix& beta);

// Hom(C, R) for a bounded complex of frees: spot i moves to -i
ModuleComplex dual_free_complex(const ModuleComplex& C);

/* Decomposition of a module at a cut: total is quasi-isomorphic to the
   module in spot zero, finite is its free top (spots cut..finite_pd),
   reflexive the suspension of the rest, with a totally reflexive component
   at the cut and frees below.  connect is the one nonzero spot of the chain
   map finite -> reflexive, sitting at the cut. */
struct TrianglePresentation {
    int cut = 0;
    int finite_pd = 0;
    ModuleComplex total;
    ModuleComplex finite;
    ModuleComplex reflexive;
    GradedMatrix connect;
};

struct ApproximationResult {
    InvariantReport gdim;  // certification that fixed finite_pd
    int cut = 0;
    std::optional<TrianglePresentation> triangle;  // absent when gdim is not certified finite
    nlohmann::json checks;
    bool all_passed = false;

    nlohmann::json to_json() const;
};

/* Builds the decomposition and verifies it: total resolves the module, the
   finite part has projective dimension exactly finite_pd, the reflexive
   part has Gorenstein dimension at most cut, homology amplitudes fall in
   the advertised windows, and the induced sequence through the cut is exact
   degree by degree.  Requires 0 <= cut <= gdim. */
ApproximationResult approximate_module(const FPModule& N, int cut, int bound);

/* Reads the same decomposition one notch down: both parts lose a
   suspension, so the finite part carries finite_pd - 1 and the reflexive
   part promises its bound at cut - 1.  Re-verifies those two claims and the
   three chain maps of the rotated reading. */
ApproximationResult rotate_triangle(const ApproximationResult& A, int bound);

} // namespace ghom
