#include "ghom/fpmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

struct FPModule::Data {
    GradedMatrix rel;
    std::shared_ptr<SubmoduleGB> zero_gb;
    std::shared_ptr<MinimizedPresentation> minimized;
};

namespace {

int sv_cmp_canonical(const SparseVec& a, const SparseVec& b, const TermOrder& ord) {
    size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        if (a[k].first != b[k].first) return a[k].first < b[k].first ? -1 : 1;
        if (int c = a[k].second.cmp(b[k].second, ord)) return c;
    }
    return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

} // namespace

FPModule FPModule::cokernel(GradedMatrix relations) {
    FPModule m;
    m.d_ = std::make_shared<Data>();
    m.d_->rel = std::move(relations);
    return m;
}

FPModule FPModule::free_module(GradedRing R, std::vector<int64_t> gen_degrees) {
    return cokernel(GradedMatrix(std::move(R), std::move(gen_degrees), {}));
}

FPModule FPModule::residue_field(const GradedRing& R) {
    std::vector<int64_t> cdeg;
    for (int i = 0; i < R.nvars(); ++i) cdeg.push_back(R.weights()[i]);
    GradedMatrix rel(R, {0}, cdeg);
    for (int i = 0; i < R.nvars(); ++i) rel.set_entry(0, i, R.var(i));
    return cokernel(std::move(rel));
}

FPModule FPModule::cyclic_quotient(const GradedRing& R, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nz;
    for (const auto& g : gens) {
        Polynomial p = R.nf(g);
        if (!p.is_zero()) nz.push_back(std::move(p));
    }
    std::vector<int64_t> cdeg;
    for (const auto& p : nz) cdeg.push_back(p.degree());
    GradedMatrix rel(R, {0}, cdeg);
    for (size_t j = 0; j < nz.size(); ++j) rel.set_entry(0, (int)j, nz[j]);
    return cokernel(std::move(rel));
}

const GradedRing& FPModule::ring() const { return d_->rel.ring(); }
int FPModule::ngens() const { return d_->rel.nrows(); }
const std::vector<int64_t>& FPModule::gen_degrees() const { return d_->rel.row_degrees(); }
const GradedMatrix& FPModule::relations() const { return d_->rel; }
bool FPModule::has_relations() const { return !d_->rel.is_zero(); }

bool FPModule::is_zero() const {
    if (ngens() == 0) return true;
    return minimized().module.ngens() == 0;
}

static std::shared_ptr<SubmoduleGB> build_zero_gb(const GradedMatrix& rel) {
    std::vector<SparseVec> gens;
    for (int j = 0; j < rel.ncols(); ++j) gens.push_back(rel.col(j));
    for (auto& q : quotient_columns(rel.ring(), rel.nrows())) gens.push_back(std::move(q));
    return std::make_shared<SubmoduleGB>(rel.ring(), rel.nrows(), gens);
}

bool FPModule::element_is_zero(const SparseVec& v) const {
    if (!d_->zero_gb) d_->zero_gb = build_zero_gb(d_->rel);
    return d_->zero_gb->contains(v);
}

SparseVec FPModule::element_nf(const SparseVec& v) const {
    if (!d_->zero_gb) d_->zero_gb = build_zero_gb(d_->rel);
    return d_->zero_gb->normal_form(v);
}

std::vector<std::pair<int, Monomial>> FPModule::graded_basis(int64_t d) const {
    if (!d_->zero_gb) d_->zero_gb = build_zero_gb(d_->rel);
    std::vector<std::pair<int, Monomial>> out;
    for (int i = 0; i < ngens(); ++i) {
        int64_t mdeg = d - gen_degrees()[i];
        if (mdeg < 0) continue;
        for (const auto& m : ring().monomial_basis(mdeg))
            if (!d_->zero_gb->lead_divides(i, m)) out.emplace_back(i, m);
    }
    return out;
}

int64_t FPModule::graded_dim(int64_t d) const { return (int64_t)graded_basis(d).size(); }

FPModule FPModule::shifted(int64_t s) const {
    return cokernel(d_->rel.with_degree_shift(s));
}

const MinimizedPresentation& FPModule::minimized() const {
    if (d_->minimized) return *d_->minimized;
    const GradedRing& R = ring();
    GradedMatrix X = d_->rel;
    GradedMatrix A = GradedMatrix::identity(R, gen_degrees());
    GradedMatrix B = A;
    while (true) {
        int pi = -1, pj = -1;
        for (int j = 0; j < X.ncols() && pi < 0; ++j)
            for (const auto& [i, p] : X.col(j))
                if (p.is_constant()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        Scalar u = X.entry(pi, pj).lead_coeff();
        std::vector<int> keep_rows, all_rows, keep_cols;
        for (int r = 0; r < X.nrows(); ++r) {
            all_rows.push_back(r);
            if (r != pi) keep_rows.push_back(r);
        }
        for (int c = 0; c < X.ncols(); ++c)
            if (c != pj) keep_cols.push_back(c);
        std::vector<int64_t> rd;
        for (int r : keep_rows) rd.push_back(X.row_degrees()[r]);

        // projection: the pivot row is rewritten through its relation column
        GradedMatrix step(R, rd, X.row_degrees());
        for (size_t k = 0; k < keep_rows.size(); ++k)
            step.set_entry((int)k, keep_rows[k], R.one());
        Scalar minv = -(u.inverse());
        for (const auto& [r, w] : X.col(pj)) {
            if (r == pi) continue;
            int rowpos = r < pi ? r : r - 1;
            step.set_entry(rowpos, pi, p_scale(w, minv));
        }
        GradedMatrix incl(R, X.row_degrees(), rd);
        for (size_t k = 0; k < keep_rows.size(); ++k)
            incl.set_entry(keep_rows[k], (int)k, R.one());

        X = step.compose(X.submatrix(all_rows, keep_cols));
        A = step.compose(A);
        B = B.compose(incl);
    }
    std::vector<int> rows, nzcols;
    for (int r = 0; r < X.nrows(); ++r) rows.push_back(r);
    for (int c = 0; c < X.ncols(); ++c)
        if (!X.col(c).empty()) nzcols.push_back(c);
    auto mz = std::make_shared<MinimizedPresentation>();
    mz->module = cokernel(X.submatrix(rows, nzcols));
    mz->old_to_new = std::move(A);
    mz->new_to_old = std::move(B);
    d_->minimized = std::move(mz);
    return *d_->minimized;
}

FPModule direct_sum(const std::vector<FPModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum needs at least one part");
    const GradedRing& R = parts[0].ring();
    std::vector<int64_t> rdeg, cdeg;
    for (const auto& p : parts) {
        if (!p.ring().same(R)) throw std::invalid_argument("direct sum across rings");
        rdeg.insert(rdeg.end(), p.gen_degrees().begin(), p.gen_degrees().end());
        const auto& cd = p.relations().col_degrees();
        cdeg.insert(cdeg.end(), cd.begin(), cd.end());
    }
    GradedMatrix rel(R, rdeg, cdeg);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
        const GradedMatrix& m = p.relations();
        for (int j = 0; j < m.ncols(); ++j)
            for (const auto& [i, q] : m.col(j)) rel.set_entry(ro + i, co + j, q);
        ro += m.nrows();
        co += m.ncols();
    }
    return FPModule::cokernel(std::move(rel));
}

std::vector<SparseVec> minimal_generators(const GradedRing& R,
                                          const std::vector<int64_t>& row_degs,
                                          std::vector<SparseVec> cands,
                                          const std::vector<SparseVec>& dens) {
    int rank = (int)row_degs.size();
    for (auto& c : cands) c = sv_nf(c, R);
    std::erase_if(cands, [](const SparseVec& c) { return c.empty(); });
    std::vector<int64_t> degs(cands.size());
    for (size_t k = 0; k < cands.size(); ++k) {
        auto d = sv_degree(cands[k], row_degs);
        if (!d) throw std::invalid_argument("zero candidate after filtering");
        degs[k] = *d;
    }
    std::vector<size_t> idx(cands.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (degs[a] != degs[b]) return degs[a] < degs[b];
        return sv_cmp_canonical(cands[a], cands[b], R.order()) < 0;
    });
    std::vector<SparseVec> init = dens;
    for (auto& q : quotient_columns(R, rank)) init.push_back(std::move(q));
    SubmoduleGB gb(R, rank, init);
    std::vector<SparseVec> out;
    for (size_t k : idx) {
        if (gb.contains(cands[k])) continue;
        out.push_back(cands[k]);
        gb.add_and_complete(cands[k]);
    }
    return out;
}

std::vector<SparseVec> preimage_gens(const GradedMatrix& d,
                                     const std::vector<SparseVec>& target_span) {
    const GradedRing& R = d.ring();
    std::vector<SparseVec> gens;
    for (int j = 0; j < d.ncols(); ++j) gens.push_back(d.col(j));
    for (const auto& s : target_span) gens.push_back(s);
    for (auto& q : quotient_columns(R, d.nrows())) gens.push_back(std::move(q));
    SubmoduleGB gb(R, d.nrows(), gens);
    std::vector<SparseVec> out;
    for (const auto& s : gb.syzygies()) {
        SparseVec v;
        for (const auto& [i, p] : s)
            if (i < d.ncols()) v.push_back({i, p});
        v = sv_nf(v, R);
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> kernel_gens(const GradedMatrix& d) {
    return minimal_generators(d.ring(), d.col_degrees(), preimage_gens(d, {}), {});
}

bool hom_well_defined(const FPModule& M, const FPModule& N, const GradedMatrix& phi) {
    if (phi.row_degrees() != N.gen_degrees() || phi.col_degrees() != M.gen_degrees())
        return false;
    for (int j = 0; j < M.relations().ncols(); ++j)
        if (!N.element_is_zero(phi.apply(M.relations().col(j)))) return false;
    return true;
}

bool map_is_injective(const FPModule& M, const FPModule& N, const GradedMatrix& phi) {
    if (!hom_well_defined(M, N, phi))
        throw std::invalid_argument("map does not respect the presentations");
    std::vector<SparseVec> rel_n;
    for (int j = 0; j < N.relations().ncols(); ++j) rel_n.push_back(N.relations().col(j));
    for (const auto& g : preimage_gens(phi, rel_n))
        if (!M.element_is_zero(g)) return false;
    return true;
}

bool map_is_isomorphism(const FPModule& M, const FPModule& N, const GradedMatrix& phi) {
    if (!hom_well_defined(M, N, phi))
        throw std::invalid_argument("map does not respect the presentations");
    const GradedRing& R = M.ring();
    std::vector<SparseVec> span;
    for (int j = 0; j < phi.ncols(); ++j) span.push_back(phi.col(j));
    std::vector<SparseVec> rel_n;
    for (int j = 0; j < N.relations().ncols(); ++j) rel_n.push_back(N.relations().col(j));
    std::vector<SparseVec> init = span;
    for (const auto& r : rel_n) init.push_back(r);
    for (auto& q : quotient_columns(R, N.ngens())) init.push_back(std::move(q));
    SubmoduleGB onto(R, N.ngens(), init);
    for (int b = 0; b < N.ngens(); ++b)
        if (!onto.contains(sv_unit(b, R))) return false;
    for (const auto& g : preimage_gens(phi, rel_n))
        if (!M.element_is_zero(g)) return false;
    return true;
}

} // namespace ghom
