#include "ghom/dual.hpp"

#include <stdexcept>

namespace ghom {

DualModule dual_into_ring(const FPModule& M) {
    const GradedRing& R = M.ring();
    GradedMatrix T = M.relations().transpose();
    std::vector<SparseVec> ker = kernel_gens(T);

    std::vector<int64_t> fdeg = T.col_degrees();  // dual cover of M's generators
    std::vector<int64_t> gdeg;
    for (const auto& k : ker) gdeg.push_back(*sv_degree(k, fdeg));
    GradedMatrix functionals(R, fdeg, gdeg, ker);

    std::vector<SparseVec> rels = kernel_gens(functionals);
    std::vector<int64_t> rdeg;
    for (const auto& r : rels) rdeg.push_back(*sv_degree(r, gdeg));
    DualModule out;
    out.module = FPModule::cokernel(GradedMatrix(R, gdeg, rdeg, rels));
    out.functionals = std::move(functionals);
    return out;
}

GradedMatrix biduality_map(const FPModule& M, const DualModule& D, const DualModule& DD) {
    const GradedRing& R = M.ring();
    int ndual = D.module.ngens();
    std::vector<SparseVec> init;
    for (int j = 0; j < DD.functionals.ncols(); ++j) init.push_back(DD.functionals.col(j));
    for (auto& q : quotient_columns(R, ndual)) init.push_back(std::move(q));
    SubmoduleGB span(R, ndual, init);

    GradedMatrix B(R, DD.module.gen_degrees(), M.gen_degrees());
    for (int i = 0; i < M.ngens(); ++i) {
        SparseVec row;
        for (int j = 0; j < ndual; ++j) {
            const Polynomial& p = D.functionals.entry(i, j);
            if (!p.is_zero()) row.push_back({j, p});
        }
        auto lifted = span.lift(row);
        if (!lifted)
            throw std::logic_error("evaluation functional missing from the double dual");
        for (int r = 0; r < DD.module.ngens(); ++r) {
            Polynomial c = R.nf((*lifted)[r]);
            if (!c.is_zero()) B.set_entry(r, i, c);
        }
    }
    return B;
}

bool is_reflexive(const FPModule& M) {
    DualModule D = dual_into_ring(M);
    DualModule DD = dual_into_ring(D.module);
    GradedMatrix B = biduality_map(M, D, DD);
    return map_is_isomorphism(M, DD.module, B);
}

} // namespace ghom
