#pragma once

#include "ghom/fpmodule.hpp"
#include "ghom/subquotient.hpp"

#include <optional>

namespace ghom {

/* Bounded complex of presented modules; differentials are matrices on
   generators.  Free complexes are the special case where no component has
   relations. */
struct ModuleComplex {
    GradedRing R;
    int lo = 0;
    std::vector<FPModule> comps;      // comps[k] sits at homological degree lo+k
    std::vector<GradedMatrix> diffs;  // diffs[k] : comps[k+1] -> comps[k]

    int hi() const { return lo + (int)comps.size() - 1; }
    bool in_window(int i) const { return i >= lo && i <= hi(); }
    FPModule comp(int i) const;     // zero module outside the window
    GradedMatrix diff(int i) const; // d_i : comp(i) -> comp(i-1); empty outside
    bool components_free() const;
};

// validates degrees, well-definedness of each differential, and d.d = 0
ModuleComplex make_complex(GradedRing R, int lo, std::vector<FPModule> comps,
                           std::vector<GradedMatrix> diffs);

// complex with the module alone in homological degree n
ModuleComplex one_term_complex(const FPModule& M, int n);

ModuleComplex shift_complex(const ModuleComplex& C, int s); // odd s negates diffs
ModuleComplex keep_at_or_above(const ModuleComplex& C, int n);
ModuleComplex keep_at_or_below(const ModuleComplex& C, int n);

// ker d_i / im d_{i+1} inside the generator cover of comps at i
Subquotient homology_at(const ModuleComplex& C, int i);
FPModule homology_module(const ModuleComplex& C, int i);

// dimension of the homology at spot i in one internal degree, through dense
// ranks over the graded pieces; exact, since taking a piece is exact
int64_t homology_piece_dim(const ModuleComplex& C, int i, int64_t degree);

// largest / smallest degree with nonzero homology; nullopt when exact
std::optional<int> sup_homology(const ModuleComplex& C);
std::optional<int> inf_homology(const ModuleComplex& C);

// f.comps[k] : C.comp(f.lo+k) -> D.comp(f.lo+k); components outside f's
// window are zero maps
struct ChainMap {
    int lo = 0;
    std::vector<GradedMatrix> comps;
    GradedMatrix at(const ModuleComplex& C, const ModuleComplex& D, int i) const;
};

// every square commutes up to the relations of the target component
bool chain_map_commutes(const ModuleComplex& C, const ModuleComplex& D, const ChainMap& f);

} // namespace ghom
