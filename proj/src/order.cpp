#include "ghom/order.hpp"

#include <stdexcept>

namespace ghom {

TermOrder::TermOrder(OrderKind kind, std::vector<int> weights)
    : kind_(kind), w_(std::move(weights)) {
    for (int w : w_)
        if (w <= 0) throw std::invalid_argument("variable weights must be positive");
}

TermOrder TermOrder::with_elim_prefix(int k) const {
    if (k < 0 || k > nvars()) throw std::invalid_argument("bad elimination prefix");
    TermOrder t = *this;
    t.elim_ = k;
    return t;
}

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    for (int i = 0; i < elim_; ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (kind_ == OrderKind::DegRevLex) {
        // ties broken at the last differing variable, smaller exponent wins
        for (int i = nvars() - 1; i >= 0; --i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
        return 0;
    }
    for (int i = 0; i < nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    return 0;
}

std::string TermOrder::str() const {
    return kind_ == OrderKind::DegRevLex ? "degrevlex" : "deglex";
}

} // namespace ghom
