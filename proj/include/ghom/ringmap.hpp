#pragma once

#include "ghom/ring.hpp"

namespace ghom {

/* Graded ring homomorphism determined by images of the source variables.
   Each image must be homogeneous of the same weighted degree as the variable
   it replaces (or zero), and the defining relations of the source must map
   into the defining ideal of the target; the checked constructor verifies
   both. */
class RingMap {
public:
    RingMap() = default;
    RingMap(GradedRing source, GradedRing target, std::vector<Polynomial> images);
    static RingMap identity(const GradedRing& R);
    // skips validation; for building deliberately broken maps in tests
    static RingMap unchecked(GradedRing source, GradedRing target,
                             std::vector<Polynomial> images);

    const GradedRing& source() const { return d_->src; }
    const GradedRing& target() const { return d_->tgt; }
    const std::vector<Polynomial>& images() const { return d_->img; }
    bool is_identity() const { return d_->ident; }

    Polynomial apply(const Polynomial& a) const;

private:
    struct Data {
        GradedRing src, tgt;
        std::vector<Polynomial> img;
        bool ident = false;
    };
    std::shared_ptr<const Data> d_;
};

} // namespace ghom
