#pragma once

#include "ghom/order.hpp"
#include "ghom/scalar.hpp"

#include <optional>
#include <vector>

namespace ghom {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/* Terms kept sorted strictly decreasing under the order they were built with.
   All arithmetic re-sorts through the supplied order, so a polynomial must only
   be combined with others from the same ring. */
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return {}; }
    static Polynomial term(Monomial m, Scalar c);

    bool is_zero() const { return t_.empty(); }
    int nterms() const { return (int)t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const;
    const Monomial& lead_mono() const { return lead().mono; }
    const Scalar& lead_coeff() const { return lead().coeff; }

    // defined only for nonzero polynomials; max degree over terms
    int64_t degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // canonical comparison for deterministic sorting (not an algebraic order)
    int cmp(const Polynomial& o, const TermOrder& ord) const;

    std::string str(const std::vector<std::string>& names) const;

    friend Polynomial p_add(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
    friend Polynomial p_sub(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
    friend Polynomial p_mul(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
    friend Polynomial p_mul_term(const Polynomial& a, const Term& t, const TermOrder& ord);
    friend Polynomial p_scale(const Polynomial& a, const Scalar& c);
    friend Polynomial p_neg(const Polynomial& a);
    friend Polynomial p_from_terms(std::vector<Term> ts, const TermOrder& ord);

private:
    std::vector<Term> t_;
};

Polynomial p_add(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
Polynomial p_sub(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
Polynomial p_mul(const Polynomial& a, const Polynomial& b, const TermOrder& ord);
Polynomial p_mul_term(const Polynomial& a, const Term& t, const TermOrder& ord);
Polynomial p_scale(const Polynomial& a, const Scalar& c);
Polynomial p_neg(const Polynomial& a);
Polynomial p_monic(const Polynomial& a);

// builds a polynomial from unsorted terms, combining duplicates
Polynomial p_from_terms(std::vector<Term> ts, const TermOrder& ord);

// remainder and quotient of division by a single divisor (lead-term division)
struct DivisionResult { Polynomial quotient, remainder; };
DivisionResult p_divide(const Polynomial& a, const Polynomial& d, const TermOrder& ord);

} // namespace ghom
