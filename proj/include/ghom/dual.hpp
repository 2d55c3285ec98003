#pragma once

#include "ghom/fpmodule.hpp"

namespace ghom {

/* Hom(M, R), presented from the kernel of the transposed presentation.
   Column j of functionals lists the values of the j-th generator functional
   on M's generators, i.e. the generators of Hom(M, R) as vectors over the
   dual cover of M. */
struct DualModule {
    FPModule module;
    GradedMatrix functionals;
};

DualModule dual_into_ring(const FPModule& M);

// matrix of the canonical evaluation map M -> (M*)* over the chosen
// generators of both sides; D must be the dual of M and DD the dual of D
GradedMatrix biduality_map(const FPModule& M, const DualModule& D, const DualModule& DD);

bool is_reflexive(const FPModule& M);

} // namespace ghom
