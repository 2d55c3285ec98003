#pragma once

#include "ghom/fpmodule.hpp"

namespace ghom {

/* Presentation of (span(numerator) + span(denominator)) / span(denominator)
   inside a free module, remembering how the chosen generators sit in the
   ambient so classes can be expressed over them later. */
struct Subquotient {
    FPModule module;
    std::vector<int64_t> ambient_degs;
    std::vector<SparseVec> gens;        // generator representatives in the ambient
    std::shared_ptr<SubmoduleGB> span;  // gens, then denominators, then quotient columns

    // coordinates of an ambient vector over the chosen generators;
    // nullopt when it is not in numerator + denominator
    std::optional<SparseVec> express(const SparseVec& v) const;
};

Subquotient make_subquotient(const GradedRing& R, std::vector<int64_t> ambient_degs,
                             const std::vector<SparseVec>& numerator,
                             const std::vector<SparseVec>& denominator);

} // namespace ghom
