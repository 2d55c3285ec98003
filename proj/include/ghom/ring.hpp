#pragma once

#include "ghom/polynomial.hpp"

#include <memory>

namespace ghom {

/* Quotient of a weighted-graded polynomial ring by a homogeneous ideal.
   Elements are represented by polynomials; nf() gives the canonical
   representative against the reduced Groebner basis of the defining ideal.
   Cheap to copy (shared immutable state); same() compares identity. */
class GradedRing {
public:
    GradedRing() = default;
    GradedRing(Field f, std::vector<std::string> var_names, std::vector<int> weights,
               OrderKind kind, std::vector<Polynomial> defining);

    const Field& field() const;
    int nvars() const;
    const std::vector<std::string>& var_names() const;
    const std::vector<int>& weights() const;
    const TermOrder& order() const;
    const std::vector<Polynomial>& defining_gens() const;
    const std::vector<Polynomial>& defining_gb() const;

    Polynomial nf(const Polynomial& a) const;
    bool is_zero_mod(const Polynomial& a) const { return nf(a).is_zero(); }

    Polynomial var(int i) const;
    Polynomial constant(const Scalar& c) const;
    Polynomial one() const;

    bool is_polynomial_ring() const;
    bool is_artinian() const;

    // standard monomials of the given weighted degree (a basis of that
    // graded piece of the ring)
    std::vector<Monomial> monomial_basis(int64_t degree) const;

    // true iff f is a nonzerodivisor; decided through the colon ideal,
    // computed by eliminating an auxiliary variable
    bool is_regular_element(const Polynomial& f) const;

    bool same(const GradedRing& o) const { return d_ == o.d_; }

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// reduced monic Groebner basis, deterministically sorted by lead monomial
std::vector<Polynomial> groebner_ideal(std::vector<Polynomial> gens, const TermOrder& ord);

// full normal form against any basis (remainder of multivariate division)
Polynomial nf_ideal(const Polynomial& a, const std::vector<Polynomial>& basis,
                    const TermOrder& ord);

} // namespace ghom
