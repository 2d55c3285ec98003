#pragma once

#include "ghom/monomial.hpp"

#include <string>
#include <vector>

namespace ghom {

enum class OrderKind { DegRevLex, DegLex };

/* Degree-compatible monomial order with positive variable weights. */
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(OrderKind kind, std::vector<int> weights);

    // Block order for eliminating the first k variables: compares their
    // exponents lexicographically before falling back to the base comparison.
    TermOrder with_elim_prefix(int k) const;

    OrderKind kind() const { return kind_; }
    const std::vector<int>& weights() const { return w_; }
    int nvars() const { return (int)w_.size(); }
    int elim_prefix() const { return elim_; }

    // negative if a < b, 0 if equal, positive if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string str() const;

    bool operator==(const TermOrder& o) const {
        return kind_ == o.kind_ && w_ == o.w_ && elim_ == o.elim_;
    }

private:
    OrderKind kind_ = OrderKind::DegRevLex;
    std::vector<int> w_;
    int elim_ = 0;
};

} // namespace ghom
