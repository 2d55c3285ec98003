#pragma once

#include "ghom/complex.hpp"
#include "ghom/resolution.hpp"
#include "ghom/ringmap.hpp"

namespace ghom {

/* A module over the target of phi, viewed as a module over the source by
   restriction.  No presentation over the source is ever built; functors
   against the handle are computed over the target ring after base change. */
struct ModuleHandle {
    RingMap phi;
    FPModule N;
};

ModuleHandle restrict_scalars(RingMap phi, FPModule N);

// resolution as a free complex in homological degrees 0..n (shorter if the
// resolution stops)
ModuleComplex resolution_complex(FreeResolution& F, int n);

// entrywise image of a free complex; re-checks that the result is a complex
ModuleComplex base_change_complex(const RingMap& phi, const ModuleComplex& C);

// F (free, over the source of the handle) tensored with N over the target;
// component i is a direct sum of shifted copies of N
ModuleComplex tensor_with_module(const ModuleComplex& F, const ModuleHandle& N);

// Hom(F, N) with Hom(F_i, -) placed at homological degree -i
ModuleComplex hom_into_module(const ModuleComplex& F, const ModuleHandle& N);

} // namespace ghom
