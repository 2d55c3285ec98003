#include "ghom/complex.hpp"

#include <stdexcept>

namespace ghom {

namespace {

GradedMatrix negate_matrix(const GradedMatrix& m) {
    GradedMatrix out(m.ring(), m.row_degrees(), m.col_degrees());
    for (int j = 0; j < m.ncols(); ++j) out.set_col(j, sv_neg(m.col(j)));
    return out;
}

std::vector<SparseVec> matrix_columns(const GradedMatrix& m) {
    std::vector<SparseVec> out;
    for (int j = 0; j < m.ncols(); ++j) out.push_back(m.col(j));
    return out;
}

// each column of m lies in the relation span of the target module
bool columns_vanish_in(const GradedMatrix& m, const FPModule& target) {
    for (int j = 0; j < m.ncols(); ++j)
        if (!target.element_is_zero(m.col(j))) return false;
    return true;
}

} // namespace

FPModule ModuleComplex::comp(int i) const {
    if (in_window(i)) return comps[i - lo];
    return FPModule::free_module(R, {});
}

GradedMatrix ModuleComplex::diff(int i) const {
    if (i > lo && i <= hi()) return diffs[i - 1 - lo];
    std::vector<int64_t> rdeg, cdeg;
    if (in_window(i - 1)) rdeg = comps[i - 1 - lo].gen_degrees();
    if (in_window(i)) cdeg = comps[i - lo].gen_degrees();
    return GradedMatrix(R, rdeg, cdeg);
}

bool ModuleComplex::components_free() const {
    for (const auto& m : comps)
        if (m.has_relations()) return false;
    return true;
}

ModuleComplex make_complex(GradedRing R, int lo, std::vector<FPModule> comps,
                           std::vector<GradedMatrix> diffs) {
    if (!comps.empty() && diffs.size() + 1 != comps.size())
        throw std::invalid_argument("complex needs one differential less than components");
    for (size_t k = 0; k < comps.size(); ++k)
        if (!comps[k].ring().same(R))
            throw std::invalid_argument("complex component over the wrong ring");
    for (size_t k = 0; k < diffs.size(); ++k)
        if (!hom_well_defined(comps[k + 1], comps[k], diffs[k]))
            throw std::invalid_argument("complex differential is not a well defined map");
    for (size_t k = 0; k + 1 < diffs.size(); ++k) {
        GradedMatrix dd = diffs[k].compose(diffs[k + 1]);
        if (!columns_vanish_in(dd, comps[k]))
            throw std::invalid_argument("complex differentials do not compose to zero");
    }
    return ModuleComplex{std::move(R), lo, std::move(comps), std::move(diffs)};
}

ModuleComplex one_term_complex(const FPModule& M, int n) {
    return ModuleComplex{M.ring(), n, {M}, {}};
}

ModuleComplex shift_complex(const ModuleComplex& C, int s) {
    ModuleComplex out = C;
    out.lo += s;
    if (s % 2 != 0)
        for (auto& d : out.diffs) d = negate_matrix(d);
    return out;
}

ModuleComplex keep_at_or_above(const ModuleComplex& C, int n) {
    if (n <= C.lo) return C;
    ModuleComplex out{C.R, n, {}, {}};
    if (n > C.hi()) return out;
    out.comps.assign(C.comps.begin() + (n - C.lo), C.comps.end());
    out.diffs.assign(C.diffs.begin() + (n - C.lo), C.diffs.end());
    return out;
}

ModuleComplex keep_at_or_below(const ModuleComplex& C, int n) {
    if (n >= C.hi()) return C;
    ModuleComplex out{C.R, C.lo, {}, {}};
    if (n < C.lo) { out.lo = n; return out; }
    out.comps.assign(C.comps.begin(), C.comps.begin() + (n - C.lo + 1));
    out.diffs.assign(C.diffs.begin(), C.diffs.begin() + (n - C.lo));
    return out;
}

Subquotient homology_at(const ModuleComplex& C, int i) {
    if (!C.in_window(i)) return make_subquotient(C.R, {}, {}, {});
    const FPModule& M = C.comps[i - C.lo];
    std::vector<SparseVec> numerator;
    if (i == C.lo) {
        for (int j = 0; j < M.ngens(); ++j) numerator.push_back(sv_unit(j, C.R));
    } else {
        numerator = preimage_gens(C.diff(i), matrix_columns(C.comp(i - 1).relations()));
    }
    std::vector<SparseVec> denominator = matrix_columns(M.relations());
    if (i < C.hi())
        for (auto& c : matrix_columns(C.diff(i + 1))) denominator.push_back(std::move(c));
    return make_subquotient(C.R, M.gen_degrees(), numerator, denominator);
}

FPModule homology_module(const ModuleComplex& C, int i) { return homology_at(C, i).module; }

namespace {

int64_t dense_rank(std::vector<std::vector<Scalar>> cols) {
    int64_t rank = 0;
    std::vector<std::vector<Scalar>> basis;
    for (auto& v : cols) {
        for (const auto& b : basis) {
            size_t p = 0;
            while (p < b.size() && b[p].is_zero()) ++p;
            if (p == b.size() || v[p].is_zero()) continue;
            Scalar c = v[p] * b[p].inverse();
            for (size_t r = p; r < v.size(); ++r) v[r] = v[r] - c * b[r];
        }
        bool nz = false;
        for (const auto& x : v)
            if (!x.is_zero()) { nz = true; break; }
        if (nz) {
            basis.push_back(std::move(v));
            ++rank;
        }
    }
    return rank;
}

// rank of the degree e piece of the differential into spot i-1
int64_t piece_rank(const ModuleComplex& C, int i, int64_t e) {
    if (!C.in_window(i) || !C.in_window(i - 1)) return 0;
    FPModule src = C.comp(i), tgt = C.comp(i - 1);
    auto sb = src.graded_basis(e);
    auto tb = tgt.graded_basis(e);
    if (sb.empty() || tb.empty()) return 0;
    std::map<std::pair<int, std::vector<int>>, int> pos;
    for (size_t r = 0; r < tb.size(); ++r)
        pos[{tb[r].first, tb[r].second.exps()}] = (int)r;
    GradedMatrix d = C.diff(i);
    Field f = C.R.field();
    std::vector<std::vector<Scalar>> cols;
    for (const auto& [g, m] : sb) {
        SparseVec x = sv_term_mul(d.col(g), {m, Scalar::one(f)}, C.R.order());
        SparseVec nf = tgt.element_nf(x);
        std::vector<Scalar> v(tb.size(), Scalar::zero(f));
        for (const auto& [comp, p] : nf)
            for (const auto& t : p.terms()) {
                auto it = pos.find({comp, t.mono.exps()});
                if (it == pos.end())
                    throw std::logic_error("piece rank: normal form left the basis");
                v[it->second] = v[it->second] + t.coeff;
            }
        cols.push_back(std::move(v));
    }
    return dense_rank(std::move(cols));
}

} // namespace

int64_t homology_piece_dim(const ModuleComplex& C, int i, int64_t degree) {
    int64_t dim = (int64_t)C.comp(i).graded_basis(degree).size();
    if (dim == 0) return 0;
    return dim - piece_rank(C, i, degree) - piece_rank(C, i + 1, degree);
}

std::optional<int> sup_homology(const ModuleComplex& C) {
    for (int i = C.hi(); i >= C.lo; --i)
        if (!homology_module(C, i).is_zero()) return i;
    return std::nullopt;
}

std::optional<int> inf_homology(const ModuleComplex& C) {
    for (int i = C.lo; i <= C.hi(); ++i)
        if (!homology_module(C, i).is_zero()) return i;
    return std::nullopt;
}

GradedMatrix ChainMap::at(const ModuleComplex& C, const ModuleComplex& D, int i) const {
    int k = i - lo;
    if (k >= 0 && k < (int)comps.size()) return comps[k];
    return GradedMatrix(C.R, D.comp(i).gen_degrees(), C.comp(i).gen_degrees());
}

bool chain_map_commutes(const ModuleComplex& C, const ModuleComplex& D, const ChainMap& f) {
    for (int i = C.lo; i <= C.hi(); ++i)
        if (!hom_well_defined(C.comp(i), D.comp(i), f.at(C, D, i))) return false;
    for (int i = C.lo + 1; i <= C.hi(); ++i) {
        GradedMatrix lhs = f.at(C, D, i - 1).compose(C.diff(i));
        GradedMatrix rhs = D.diff(i).compose(f.at(C, D, i));
        FPModule tgt = D.comp(i - 1);
        for (int j = 0; j < lhs.ncols(); ++j)
            if (!tgt.element_is_zero(sv_sub(lhs.col(j), rhs.col(j), C.R.order())))
                return false;
    }
    return true;
}

} // namespace ghom
