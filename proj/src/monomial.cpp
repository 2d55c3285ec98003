#include "ghom/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

Monomial::Monomial(std::vector<int> exps, const std::vector<int>& weights)
    : e_(std::move(exps)) {
    if (e_.size() != weights.size())
        throw std::invalid_argument("exponent/weight length mismatch");
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0) throw std::invalid_argument("negative exponent");
        deg_ += (int64_t)e_[i] * weights[i];
    }
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) throw std::invalid_argument("inexact monomial division");
    }
    r.deg_ -= o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o, const std::vector<int>& weights) const {
    std::vector<int> m(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) m[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(m), weights);
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (!e_[i]) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace ghom
