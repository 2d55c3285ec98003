#include "ghom/subquotient.hpp"

#include <stdexcept>

namespace ghom {

Subquotient make_subquotient(const GradedRing& R, std::vector<int64_t> ambient_degs,
                             const std::vector<SparseVec>& numerator,
                             const std::vector<SparseVec>& denominator) {
    int rank = (int)ambient_degs.size();
    Subquotient sq;
    sq.ambient_degs = ambient_degs;
    sq.gens = minimal_generators(R, ambient_degs, numerator, denominator);

    std::vector<int64_t> gdeg;
    for (const auto& g : sq.gens) {
        auto d = sv_degree(g, ambient_degs);
        if (!d) throw std::logic_error("zero generator in subquotient");
        gdeg.push_back(*d);
    }

    std::vector<SparseVec> all = sq.gens;
    for (const auto& d : denominator) all.push_back(d);
    for (auto& q : quotient_columns(R, rank)) all.push_back(std::move(q));
    sq.span = std::make_shared<SubmoduleGB>(R, rank, all);

    int ng = (int)sq.gens.size();
    std::vector<SparseVec> rels;
    for (const auto& s : sq.span->syzygies()) {
        SparseVec v;
        for (const auto& [i, p] : s)
            if (i < ng) v.push_back({i, p});
        v = sv_nf(v, R);
        if (!v.empty()) rels.push_back(std::move(v));
    }
    rels = minimal_generators(R, gdeg, rels, {});

    std::vector<int64_t> cdeg;
    for (const auto& r : rels) cdeg.push_back(*sv_degree(r, gdeg));
    GradedMatrix rel(R, gdeg, cdeg, rels);
    sq.module = FPModule::cokernel(std::move(rel));
    return sq;
}

std::optional<SparseVec> Subquotient::express(const SparseVec& v) const {
    auto lifted = span->lift(v);
    if (!lifted) return std::nullopt;
    SparseVec out;
    const GradedRing& R = module.ring();
    for (size_t k = 0; k < gens.size(); ++k) {
        Polynomial p = R.nf((*lifted)[k]);
        if (!p.is_zero()) out.push_back({(int)k, std::move(p)});
    }
    return out;
}

} // namespace ghom
