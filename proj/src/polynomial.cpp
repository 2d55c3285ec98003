#include "ghom/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

Polynomial Polynomial::term(Monomial m, Scalar c) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
    return p;
}

const Term& Polynomial::lead() const {
    if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
    return t_.front();
}

int64_t Polynomial::degree() const {
    if (t_.empty()) throw std::domain_error("degree of zero polynomial");
    int64_t d = t_[0].mono.degree();
    for (const auto& t : t_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : t_)
        if (t.mono.degree() != t_[0].mono.degree()) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].mono != o.t_[i].mono || t_[i].coeff != o.t_[i].coeff) return false;
    return true;
}

int Polynomial::cmp(const Polynomial& o, const TermOrder& ord) const {
    size_t n = std::min(t_.size(), o.t_.size());
    for (size_t i = 0; i < n; ++i) {
        if (int c = ord.cmp(t_[i].mono, o.t_[i].mono)) return c;
        if (int c = t_[i].coeff.cmp(o.t_[i].coeff)) return c;
    }
    return t_.size() < o.t_.size() ? -1 : t_.size() > o.t_.size() ? 1 : 0;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < t_.size(); ++i) {
        const Term& t = t_[i];
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (i == 0) {
            if (neg) { s += "-"; c = c.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        if (t.mono.is_one()) s += c;
        else if (c == "1") s += t.mono.str(names);
        else s += c + "*" + t.mono.str(names);
    }
    return s;
}

Polynomial p_add(const Polynomial& a, const Polynomial& b, const TermOrder& ord) {
    Polynomial r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        int c = ord.cmp(a.t_[i].mono, b.t_[j].mono);
        if (c > 0) r.t_.push_back(a.t_[i++]);
        else if (c < 0) r.t_.push_back(b.t_[j++]);
        else {
            Scalar s = a.t_[i].coeff + b.t_[j].coeff;
            if (!s.is_zero()) r.t_.push_back({a.t_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
    return r;
}

Polynomial p_neg(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.t_) t.coeff = -t.coeff;
    return r;
}

Polynomial p_sub(const Polynomial& a, const Polynomial& b, const TermOrder& ord) {
    return p_add(a, p_neg(b), ord);
}

Polynomial p_mul_term(const Polynomial& a, const Term& t, const TermOrder& ord) {
    (void)ord;  // multiplying by a single term preserves the sort
    Polynomial r;
    if (t.coeff.is_zero()) return r;
    r.t_.reserve(a.t_.size());
    for (const auto& u : a.t_) {
        Scalar c = u.coeff * t.coeff;
        if (!c.is_zero()) r.t_.push_back({u.mono * t.mono, c});
    }
    return r;
}

Polynomial p_mul(const Polynomial& a, const Polynomial& b, const TermOrder& ord) {
    Polynomial r;
    for (const auto& t : b.t_)
        r = p_add(r, p_mul_term(a, t, ord), ord);
    return r;
}

Polynomial p_scale(const Polynomial& a, const Scalar& c) {
    Polynomial r;
    if (c.is_zero()) return r;
    r.t_.reserve(a.t_.size());
    for (const auto& t : a.t_) r.t_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial p_monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    return p_scale(a, a.lead_coeff().inverse());
}

Polynomial p_from_terms(std::vector<Term> ts, const TermOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
        return ord.cmp(x.mono, y.mono) > 0;
    });
    Polynomial r;
    for (auto& t : ts) {
        if (!r.t_.empty() && r.t_.back().mono == t.mono)
            r.t_.back().coeff = r.t_.back().coeff + t.coeff;
        else
            r.t_.push_back(std::move(t));
    }
    std::erase_if(r.t_, [](const Term& t) { return t.coeff.is_zero(); });
    return r;
}

DivisionResult p_divide(const Polynomial& a, const Polynomial& d, const TermOrder& ord) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial h = a, q, r;
    while (!h.is_zero()) {
        const Term& lt = h.lead();
        if (d.lead_mono().divides(lt.mono)) {
            Term f{lt.mono / d.lead_mono(), lt.coeff / d.lead_coeff()};
            q = p_add(q, Polynomial::term(f.mono, f.coeff), ord);
            h = p_sub(h, p_mul_term(d, f, ord), ord);
        } else {
            r = p_add(r, Polynomial::term(lt.mono, lt.coeff), ord);
            h = p_sub(h, Polynomial::term(lt.mono, lt.coeff), ord);
        }
    }
    return {q, r};
}

} // namespace ghom
