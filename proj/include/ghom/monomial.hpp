#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ghom {

/* Exponent vector with cached weighted degree. The weight vector lives in the
   ring; callers pass it where a degree has to be (re)computed. */
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> exps, const std::vector<int>& weights);

    int nvars() const { return (int)e_.size(); }
    int exp(int i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }
    int64_t degree() const { return deg_; }
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    // exact division; caller must have checked divides()
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial lcm(const Monomial& o, const std::vector<int>& weights) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<int> e_;
    int64_t deg_ = 0;
};

} // namespace ghom
