#include "ghom/functors.hpp"

#include <stdexcept>

namespace ghom {

namespace {

FPModule sum_of_shifts(const GradedRing& S, const FPModule& N,
                       const std::vector<int64_t>& degs, int sign) {
    std::vector<FPModule> parts;
    for (int64_t d : degs) parts.push_back(N.shifted(sign * d));
    if (parts.empty()) return FPModule::free_module(S, {});
    return direct_sum(parts);
}

} // namespace

ModuleHandle restrict_scalars(RingMap phi, FPModule N) {
    if (!N.ring().same(phi.target()))
        throw std::invalid_argument("restricted module must live over the map's target");
    return ModuleHandle{std::move(phi), std::move(N)};
}

ModuleComplex resolution_complex(FreeResolution& F, int n) {
    if (n < 0) throw std::invalid_argument("resolution window must reach degree 0");
    F.extend(n);
    const GradedRing& R = F.target().ring();
    std::vector<FPModule> comps;
    std::vector<GradedMatrix> diffs;
    for (int i = 0; i <= n; ++i)
        comps.push_back(FPModule::free_module(R, F.free_degrees(i)));
    for (int i = 1; i <= n; ++i) {
        if (i <= F.computed())
            diffs.push_back(F.differential(i));
        else
            diffs.push_back(GradedMatrix(R, F.free_degrees(i - 1), {}));
    }
    return ModuleComplex{R, 0, std::move(comps), std::move(diffs)};
}

ModuleComplex base_change_complex(const RingMap& phi, const ModuleComplex& C) {
    if (!C.R.same(phi.source()))
        throw std::invalid_argument("complex is not over the map's source");
    if (!C.components_free())
        throw std::invalid_argument("base change needs a complex of free modules");
    const GradedRing& S = phi.target();
    std::vector<FPModule> comps;
    std::vector<GradedMatrix> diffs;
    for (const auto& c : C.comps) comps.push_back(FPModule::free_module(S, c.gen_degrees()));
    for (const auto& d : C.diffs) {
        GradedMatrix m(S, d.row_degrees(), d.col_degrees());
        for (int j = 0; j < d.ncols(); ++j)
            for (const auto& [i, p] : d.col(j)) m.set_entry(i, j, phi.apply(p));
        diffs.push_back(std::move(m));
    }
    // make_complex re-verifies d.d = 0, which guards against ill-formed maps
    return make_complex(S, C.lo, std::move(comps), std::move(diffs));
}

ModuleComplex tensor_with_module(const ModuleComplex& F, const ModuleHandle& N) {
    ModuleComplex Cb = base_change_complex(N.phi, F);
    const GradedRing& S = N.phi.target();
    int nN = N.N.ngens();
    std::vector<FPModule> comps;
    for (const auto& c : Cb.comps) comps.push_back(sum_of_shifts(S, N.N, c.gen_degrees(), +1));
    std::vector<GradedMatrix> diffs;
    for (size_t k = 0; k < Cb.diffs.size(); ++k) {
        const GradedMatrix& d = Cb.diffs[k];
        GradedMatrix m(S, comps[k].gen_degrees(), comps[k + 1].gen_degrees());
        for (int g = 0; g < d.ncols(); ++g)
            for (const auto& [h, p] : d.col(g))
                for (int l = 0; l < nN; ++l) m.set_entry(h * nN + l, g * nN + l, p);
        diffs.push_back(std::move(m));
    }
    return make_complex(S, Cb.lo, std::move(comps), std::move(diffs));
}

ModuleComplex hom_into_module(const ModuleComplex& F, const ModuleHandle& N) {
    ModuleComplex Cb = base_change_complex(N.phi, F);
    const GradedRing& S = N.phi.target();
    int nN = N.N.ngens();
    int flo = Cb.lo, fhi = Cb.hi();
    std::vector<FPModule> comps;
    for (int k = fhi; k >= flo; --k)
        comps.push_back(sum_of_shifts(S, N.N, Cb.comps[k - flo].gen_degrees(), -1));
    std::vector<GradedMatrix> diffs;
    for (size_t kp = 0; kp + 1 < comps.size(); ++kp) {
        // comps[kp] is Hom(F_{fhi-kp}, N); the incoming map precomposes with
        // the complex differential F_{fhi-kp} -> F_{fhi-kp-1}
        const GradedMatrix& d = Cb.diffs[fhi - (int)kp - 1 - flo];
        GradedMatrix m(S, comps[kp].gen_degrees(), comps[kp + 1].gen_degrees());
        for (int g = 0; g < d.ncols(); ++g)
            for (const auto& [h, p] : d.col(g))
                for (int l = 0; l < nN; ++l) m.set_entry(g * nN + l, h * nN + l, p);
        diffs.push_back(std::move(m));
    }
    return make_complex(S, -fhi, std::move(comps), std::move(diffs));
}

} // namespace ghom
