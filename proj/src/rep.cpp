#include "ghom/rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace ghom {

namespace {

// ---- small dense linear algebra over the coefficient field ----
// The rep layer works degreewise with explicit bases, so plain Gaussian
// elimination is all that is needed here.

using Col = std::vector<Scalar>;

// incrementally built column space with membership test
struct SpanBuilder {
    Field f;
    std::vector<std::pair<int, Col>> basis; // (pivot row, vector), pivot entry 1

    Col reduce(Col v) const {
        for (const auto& [p, b] : basis) {
            if (v[p].is_zero()) continue;
            Scalar c = v[p];
            for (size_t r = 0; r < v.size(); ++r) v[r] = v[r] - c * b[r];
        }
        return v;
    }
    // returns false if v was already in the span
    bool add(const Col& v) {
        Col w = reduce(v);
        int p = -1;
        for (size_t r = 0; r < w.size(); ++r)
            if (!w[r].is_zero()) { p = (int)r; break; }
        if (p < 0) return false;
        Scalar inv = w[p].inverse();
        for (auto& x : w) x = x * inv;
        basis.emplace_back(p, std::move(w));
        return true;
    }
};

struct Rref {
    std::vector<Col> rows;               // row major
    std::vector<std::pair<int, int>> pivots; // (row, col)
};

Rref rref(Field f, int nrows, int ncols, const std::vector<Col>& cols) {
    Rref out;
    out.rows.assign(nrows, Col((size_t)ncols, Scalar::zero(f)));
    for (int c = 0; c < ncols; ++c)
        for (int r = 0; r < nrows; ++r) out.rows[r][c] = cols[c][r];
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (!out.rows[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(out.rows[rank], out.rows[piv]);
        Scalar inv = out.rows[rank][c].inverse();
        for (auto& x : out.rows[rank]) x = x * inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || out.rows[r][c].is_zero()) continue;
            Scalar m = out.rows[r][c];
            for (int j = 0; j < ncols; ++j)
                out.rows[r][j] = out.rows[r][j] - m * out.rows[rank][j];
        }
        out.pivots.emplace_back(rank, c);
        ++rank;
    }
    return out;
}

std::vector<Col> dense_kernel(Field f, int nrows, const std::vector<Col>& cols) {
    int ncols = (int)cols.size();
    Rref rr = rref(f, nrows, ncols, cols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto& [r, c] : rr.pivots) is_pivot[c] = true;
    std::vector<Col> ker;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        Col x((size_t)ncols, Scalar::zero(f));
        x[c] = Scalar::one(f);
        for (auto& [pr, pc] : rr.pivots) x[pc] = Scalar::zero(f) - rr.rows[pr][c];
        ker.push_back(std::move(x));
    }
    return ker;
}

// one solution of cols * x = b; the kernel directions are set to zero
Col dense_solve(Field f, int nrows, const std::vector<Col>& cols, const Col& b) {
    int ncols = (int)cols.size();
    std::vector<Col> aug = cols;
    aug.push_back(b);
    Rref rr = rref(f, nrows, ncols + 1, aug);
    Col x((size_t)ncols, Scalar::zero(f));
    for (auto& [pr, pc] : rr.pivots) {
        if (pc == ncols)
            throw std::logic_error("dense solve: right hand side outside the column span");
        x[pc] = rr.rows[pr][ncols];
    }
    return x;
}

// ---- rep plumbing ----

using Label = std::pair<int, std::vector<int>>;

std::map<Label, int> piece_index(const std::vector<std::pair<int, Monomial>>& basis) {
    std::map<Label, int> pos;
    for (size_t j = 0; j < basis.size(); ++j)
        pos[{basis[j].first, basis[j].second.exps()}] = (int)j;
    return pos;
}

int max_weight(const GradedRing& R) {
    return *std::max_element(R.weights().begin(), R.weights().end());
}

// image of a piece vector under multiplication by a monomial; empty means zero
Col apply_monomial(const FiniteDimRep& rep, int64_t d, Col vec, const Monomial& m) {
    const auto& w = rep.R.weights();
    for (int v = 0; v < (int)w.size(); ++v) {
        for (int rep_cnt = 0; rep_cnt < m.exps()[v]; ++rep_cnt) {
            int64_t td = d + w[v];
            int64_t rows = rep.dim(td), colsrc = rep.dim(d);
            if (rows == 0 || colsrc == 0 || vec.empty()) return {};
            const auto& a = rep.action[v][d - rep.lo];
            Col out((size_t)rows, Scalar::zero(rep.R.field()));
            for (int64_t c = 0; c < colsrc; ++c) {
                if (vec[c].is_zero()) continue;
                for (int64_t r = 0; r < rows; ++r)
                    out[r] = out[r] + a[(size_t)c * rows + r] * vec[c];
            }
            vec = std::move(out);
            d = td;
        }
    }
    return vec;
}

struct EvCols {
    std::vector<std::pair<int, Monomial>> labels; // (generator index, monomial)
    std::vector<Col> cols;                        // each of size rep.dim(d)
};

// evaluation of the free module on `gens` into the rep, in degree d
EvCols evaluation_columns(const FiniteDimRep& rep,
                          const std::vector<std::pair<int64_t, Col>>& gens,
                          int64_t d) {
    EvCols ev;
    int64_t rows = rep.dim(d);
    for (size_t g = 0; g < gens.size(); ++g) {
        int64_t rel = d - gens[g].first;
        if (rel < 0) continue;
        for (const auto& m : rep.R.monomial_basis(rel)) {
            Col val = apply_monomial(rep, gens[g].first, gens[g].second, m);
            if (val.empty()) val.assign((size_t)rows, Scalar::zero(rep.R.field()));
            ev.labels.emplace_back((int)g, m);
            ev.cols.push_back(std::move(val));
        }
    }
    return ev;
}

// coordinates of a dense degree d vector over the presentation's generators
SparseVec express_in_presentation(const FiniteDimRep& rep, const RepPresentation& pres,
                                  int64_t d, const Col& v) {
    EvCols ev = evaluation_columns(rep, pres.gens, d);
    Col x = dense_solve(rep.R.field(), (int)rep.dim(d), ev.cols, v);
    SparseVec sv;
    for (size_t g = 0; g < pres.gens.size(); ++g) {
        std::vector<Term> ts;
        for (size_t c = 0; c < ev.labels.size(); ++c)
            if (ev.labels[c].first == (int)g && !x[c].is_zero())
                ts.push_back({ev.labels[c].second, x[c]});
        Polynomial p = p_from_terms(std::move(ts), rep.R.order());
        if (!p.is_zero()) sv.emplace_back((int)g, std::move(p));
    }
    return sv;
}

// coordinates of a module element in the windowed basis at its degree
Col dense_coords(const FiniteDimRep& rep, const FPModule& M, const SparseVec& e,
                 int64_t d) {
    auto pos = piece_index(rep.pieces[d - rep.lo]);
    Col v((size_t)rep.dim(d), Scalar::zero(rep.R.field()));
    SparseVec nf = M.element_nf(e);
    for (const auto& [comp, p] : nf)
        for (const auto& t : p.terms()) {
            auto it = pos.find({comp, t.mono.exps()});
            if (it == pos.end())
                throw std::logic_error("rep coordinates: normal form left the basis");
            v[it->second] = v[it->second] + t.coeff;
        }
    return v;
}

} // namespace

FiniteDimRep rep_from_module(const FPModule& M, int64_t lo, int64_t hi) {
    FiniteDimRep rep;
    rep.R = M.ring();
    rep.lo = lo;
    rep.hi = hi;
    if (hi < lo) return rep;
    Field f = rep.R.field();
    int64_t n = hi - lo + 1;
    std::vector<std::map<Label, int>> pos((size_t)n);
    for (int64_t k = 0; k < n; ++k) {
        rep.pieces.push_back(M.graded_basis(lo + k));
        pos[k] = piece_index(rep.pieces.back());
    }
    const auto& w = rep.R.weights();
    rep.action.assign(w.size(), {});
    for (int v = 0; v < (int)w.size(); ++v) {
        rep.action[v].assign((size_t)n, {});
        std::vector<int> ex(w.size(), 0);
        ex[v] = 1;
        Monomial xv(ex, w);
        for (int64_t k = 0; k < n; ++k) {
            int64_t td = lo + k + w[v];
            if (td > hi) continue;
            int64_t rows = rep.dim(td), ncols = rep.dim(lo + k);
            Col mat((size_t)(rows * ncols), Scalar::zero(f));
            for (int64_t j = 0; j < ncols; ++j) {
                const auto& [gi, mono] = rep.pieces[k][j];
                SparseVec img = M.element_nf(
                    {{gi, Polynomial::term(mono * xv, Scalar::one(f))}});
                for (const auto& [comp, p] : img)
                    for (const auto& t : p.terms()) {
                        auto it = pos[td - lo].find({comp, t.mono.exps()});
                        if (it == pos[td - lo].end())
                            throw std::logic_error("rep capture: normal form left the basis");
                        mat[(size_t)j * rows + it->second] = t.coeff;
                    }
            }
            rep.action[v][k] = std::move(mat);
        }
    }
    return rep;
}

FiniteDimRep matlis_dual(const FiniteDimRep& rep) {
    FiniteDimRep d;
    d.R = rep.R;
    d.lo = -rep.hi;
    d.hi = -rep.lo;
    if (rep.hi < rep.lo) { d.lo = 0; d.hi = -1; return d; }
    int64_t n = rep.hi - rep.lo + 1;
    d.pieces.assign((size_t)n, {});
    for (int64_t k = 0; k < n; ++k)
        d.pieces[k] = rep.pieces[(-(d.lo + k)) - rep.lo]; // primal basis at the opposite degree
    const auto& w = rep.R.weights();
    d.action.assign(w.size(), {});
    for (int v = 0; v < (int)w.size(); ++v) {
        d.action[v].assign((size_t)n, {});
        for (int64_t k = 0; k < n; ++k) {
            int64_t e = d.lo + k;
            if (e + w[v] > d.hi) continue;
            // dual of multiplication piece(-e-w) -> piece(-e)
            int64_t kp = (-e - w[v]) - rep.lo;
            int64_t rows_p = rep.dim(-e), cols_p = rep.dim(-e - w[v]);
            const auto& a = rep.action[v][kp];
            Col b((size_t)(rows_p * cols_p), Scalar::zero(rep.R.field()));
            for (int64_t r = 0; r < rows_p; ++r)
                for (int64_t c = 0; c < cols_p; ++c)
                    b[(size_t)r * cols_p + c] = a[(size_t)c * rows_p + r];
            d.action[v][k] = std::move(b);
        }
    }
    return d;
}

RepPresentation rep_to_module(const FiniteDimRep& rep) {
    const GradedRing& R = rep.R;
    Field f = R.field();
    RepPresentation out{FPModule::free_module(R, {}), {}};
    if (rep.hi < rep.lo) return out;
    // degreewise generators: a basis complement of the span of all products
    // with the variables, smallest degree first
    for (int64_t d = rep.lo; d <= rep.hi; ++d) {
        int64_t dim = rep.dim(d);
        if (dim == 0) continue;
        SpanBuilder span{f, {}};
        const auto& w = R.weights();
        for (int v = 0; v < (int)w.size(); ++v) {
            int64_t e = d - w[v];
            if (e < rep.lo) continue;
            int64_t srcdim = rep.dim(e);
            const auto& a = rep.action[v][e - rep.lo];
            for (int64_t c = 0; c < srcdim; ++c) {
                Col col((size_t)dim, Scalar::zero(f));
                for (int64_t r = 0; r < dim; ++r) col[r] = a[(size_t)c * dim + r];
                span.add(col);
            }
        }
        for (int64_t r = 0; r < dim; ++r) {
            Col e((size_t)dim, Scalar::zero(f));
            e[r] = Scalar::one(f);
            if (span.add(e)) out.gens.emplace_back(d, std::move(e));
        }
    }
    std::vector<int64_t> gdegs;
    for (auto& [dg, v] : out.gens) gdegs.push_back(dg);

    // relations: kernels of the evaluation maps.  Above the window top every
    // product of a generator with a monomial of positive degree dies, and
    // degrees beyond top + max weight are already spanned by those, so the
    // scan below is complete.
    std::vector<SparseVec> rels;
    int64_t top = rep.hi + max_weight(R);
    for (int64_t d = rep.lo; d <= top; ++d) {
        EvCols ev = evaluation_columns(rep, out.gens, d);
        if (ev.cols.empty()) continue;
        for (const Col& x : dense_kernel(f, (int)rep.dim(d), ev.cols)) {
            SparseVec sv;
            for (size_t g = 0; g < out.gens.size(); ++g) {
                std::vector<Term> ts;
                for (size_t c = 0; c < ev.labels.size(); ++c)
                    if (ev.labels[c].first == (int)g && !x[c].is_zero())
                        ts.push_back({ev.labels[c].second, x[c]});
                Polynomial p = p_from_terms(std::move(ts), R.order());
                if (!p.is_zero()) sv.emplace_back((int)g, std::move(p));
            }
            if (!sv_is_zero(sv)) rels.push_back(std::move(sv));
        }
    }
    rels = minimal_generators(R, gdegs, std::move(rels), {});
    std::vector<int64_t> cdegs;
    for (const auto& sv : rels) {
        auto dg = sv_degree(sv, gdegs);
        cdegs.push_back(*dg);
    }
    out.module = FPModule::cokernel(GradedMatrix(R, gdegs, cdegs, rels));
    return out;
}

namespace {

std::vector<Polynomial> power_of_max_ideal(const GradedRing& R, int t) {
    std::vector<Polynomial> gens;
    std::vector<int> exps(R.nvars(), 0);
    Field f = R.field();
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == R.nvars() - 1) {
            exps[v] = left;
            gens.push_back(Polynomial::term(Monomial(exps, R.weights()), Scalar::one(f)));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[v] = e;
            self(self, v + 1, left - e);
        }
        exps[v] = 0;
    };
    rec(rec, 0, t);
    return gens;
}

} // namespace

InjectiveTruncation injective_hull_truncation(const GradedRing& R, int t) {
    if (t < 1) throw std::invalid_argument("injective truncation needs t >= 1");
    FPModule M = FPModule::cyclic_quotient(R, power_of_max_ideal(R, t));
    int64_t topdeg = (int64_t)(t - 1) * max_weight(R);
    FiniteDimRep primal = rep_from_module(M, 0, topdeg);
    InjectiveTruncation out;
    out.t = t;
    out.rep = matlis_dual(primal);
    out.pres = rep_to_module(out.rep);
    return out;
}

GradedMatrix injective_truncation_inclusion(const InjectiveTruncation& a,
                                            const InjectiveTruncation& b) {
    if (a.t > b.t)
        throw std::invalid_argument("injective truncation inclusion goes upward in t");
    const GradedRing& R = a.rep.R;
    if (!R.same(b.rep.R))
        throw std::invalid_argument("injective truncations over different rings");
    Field f = R.field();
    FPModule Ma = FPModule::cyclic_quotient(R, power_of_max_ideal(R, a.t));

    std::vector<SparseVec> cols;
    std::vector<int64_t> cdegs;
    for (const auto& [e, coeff] : a.pres.gens) {
        // dual of the projection onto the smaller quotient, evaluated
        // degreewise: transpose against the primal bases at degree -e
        const auto& basis_b = b.rep.pieces[e - b.rep.lo];
        auto pos_a = piece_index(a.rep.pieces[e - a.rep.lo]);
        Col vb((size_t)b.rep.dim(e), Scalar::zero(f));
        for (size_t jb = 0; jb < basis_b.size(); ++jb) {
            SparseVec img = Ma.element_nf(
                {{basis_b[jb].first,
                  Polynomial::term(basis_b[jb].second, Scalar::one(f))}});
            for (const auto& [comp, p] : img)
                for (const auto& tm : p.terms()) {
                    auto it = pos_a.find({comp, tm.mono.exps()});
                    if (it == pos_a.end())
                        throw std::logic_error("truncation inclusion: projection left the basis");
                    // vb[jb] += P(it->second, jb) * coeff[it->second]
                    vb[jb] = vb[jb] + tm.coeff * coeff[it->second];
                }
        }
        cols.push_back(express_in_presentation(b.rep, b.pres, e, vb));
        cdegs.push_back(e);
    }
    std::vector<int64_t> rdegs;
    for (auto& [dg, v] : b.pres.gens) rdegs.push_back(dg);
    return GradedMatrix(R, rdegs, cdegs, cols);
}

// standard monomials keep every exponent below the least pure power in the
// lead ideal, which caps their degree
int64_t artinian_top_degree(const GradedRing& R) {
    int64_t bound = 0;
    for (int v = 0; v < R.nvars(); ++v) {
        int best = -1;
        for (const auto& g : R.defining_gb()) {
            const auto& ex = g.lead_mono().exps();
            if (ex[v] == 0) continue;
            bool pure = true;
            for (int w = 0; w < R.nvars(); ++w)
                if (w != v && ex[w] != 0) pure = false;
            if (pure && (best < 0 || ex[v] < best)) best = ex[v];
        }
        if (best < 0) throw std::logic_error("artinian ring is missing a pure power");
        bound += (int64_t)(best - 1) * R.weights()[v];
    }
    return bound;
}

namespace {

std::pair<int64_t, int64_t> module_window(const FPModule& M) {
    if (M.ngens() == 0) return {0, -1};
    const auto& degs = M.gen_degrees();
    auto [mn, mx] = std::minmax_element(degs.begin(), degs.end());
    return {*mn, *mx + artinian_top_degree(M.ring())};
}

} // namespace

MatlisData matlis_dual_module(const FPModule& M) {
    if (!M.ring().is_artinian())
        throw std::invalid_argument("matlis duality needs an artinian base ring");
    MatlisData out;
    std::tie(out.lo, out.hi) = module_window(M);
    out.primal = rep_from_module(M, out.lo, out.hi);
    out.dual = matlis_dual(out.primal);
    out.dual_pres = rep_to_module(out.dual);
    return out;
}

BidualData matlis_bidual(const FPModule& M) {
    if (!M.ring().is_artinian())
        throw std::invalid_argument("matlis duality needs an artinian base ring");
    const GradedRing& R = M.ring();
    auto [lo, hi] = module_window(M);
    // dualizing twice reverses the window twice and transposes the actions
    // twice, so the double dual is presented straight off the primal rep
    FiniteDimRep rep = rep_from_module(M, lo, hi);
    RepPresentation back = rep_to_module(rep);
    std::vector<SparseVec> cols;
    for (int64_t i = 0; i < M.ngens(); ++i) {
        int64_t d = M.gen_degrees()[i];
        Col v = dense_coords(rep, M, {{(int)i, R.one()}}, d);
        cols.push_back(express_in_presentation(rep, back, d, v));
    }
    std::vector<int64_t> rdegs;
    for (auto& [dg, c] : back.gens) rdegs.push_back(dg);
    return {back.module, GradedMatrix(R, rdegs, M.gen_degrees(), cols)};
}

} // namespace ghom
