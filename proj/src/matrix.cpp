#include "ghom/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const TermOrder& ord) {
    SparseVec r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            Polynomial s = p_add(a[i].second, b[j].second, ord);
            if (!s.is_zero()) r.push_back({a[i].first, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

SparseVec sv_neg(const SparseVec& a) {
    SparseVec r = a;
    for (auto& [i, p] : r) p = p_neg(p);
    return r;
}

SparseVec sv_sub(const SparseVec& a, const SparseVec& b, const TermOrder& ord) {
    return sv_add(a, sv_neg(b), ord);
}

SparseVec sv_scale(const SparseVec& a, const Polynomial& p, const TermOrder& ord) {
    SparseVec r;
    if (p.is_zero()) return r;
    for (const auto& [i, q] : a) {
        Polynomial m = p_mul(q, p, ord);
        if (!m.is_zero()) r.push_back({i, std::move(m)});
    }
    return r;
}

SparseVec sv_term_mul(const SparseVec& a, const Term& t, const TermOrder& ord) {
    SparseVec r;
    if (t.coeff.is_zero()) return r;
    for (const auto& [i, q] : a) {
        Polynomial m = p_mul_term(q, t, ord);
        if (!m.is_zero()) r.push_back({i, std::move(m)});
    }
    return r;
}

SparseVec sv_nf(const SparseVec& a, const GradedRing& R) {
    SparseVec r;
    for (const auto& [i, q] : a) {
        Polynomial m = R.nf(q);
        if (!m.is_zero()) r.push_back({i, std::move(m)});
    }
    return r;
}

bool sv_is_zero(const SparseVec& a) {
    return std::all_of(a.begin(), a.end(), [](const auto& e) { return e.second.is_zero(); });
}

SparseVec sv_unit(int row, const GradedRing& R) {
    return {{row, R.one()}};
}

std::optional<int64_t> sv_degree(const SparseVec& a, const std::vector<int64_t>& row_degs) {
    std::optional<int64_t> deg;
    for (const auto& [i, p] : a) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous vector entry");
        int64_t d = p.degree() + row_degs[i];
        if (deg && *deg != d) throw std::invalid_argument("vector entries of mixed degree");
        deg = d;
    }
    return deg;
}

GradedMatrix::GradedMatrix(GradedRing R, std::vector<int64_t> row_degs,
                           std::vector<int64_t> col_degs)
    : R_(std::move(R)), rdeg_(std::move(row_degs)), cdeg_(std::move(col_degs)),
      cols_(cdeg_.size()) {}

GradedMatrix::GradedMatrix(GradedRing R, std::vector<int64_t> row_degs,
                           std::vector<int64_t> col_degs, std::vector<SparseVec> cols)
    : GradedMatrix(std::move(R), std::move(row_degs), std::move(col_degs)) {
    if (cols.size() != cdeg_.size()) throw std::invalid_argument("column count mismatch");
    for (size_t j = 0; j < cols.size(); ++j) set_col((int)j, std::move(cols[j]));
}

GradedMatrix GradedMatrix::identity(const GradedRing& R, std::vector<int64_t> degs) {
    GradedMatrix m(R, degs, degs);
    for (int i = 0; i < m.nrows(); ++i) m.cols_[i] = {{i, R.one()}};
    return m;
}

const Polynomial& GradedMatrix::entry(int i, int j) const {
    static const Polynomial zero;
    const SparseVec& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == i) return it->second;
    return zero;
}

void GradedMatrix::set_entry(int i, int j, const Polynomial& p) {
    if (i < 0 || i >= nrows() || j < 0 || j >= ncols())
        throw std::out_of_range("matrix entry index");
    Polynomial q = R_.nf(p);
    SparseVec& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, int r) { return e.first < r; });
    if (q.is_zero()) {
        if (it != c.end() && it->first == i) c.erase(it);
        return;
    }
    if (!q.is_homogeneous() || q.degree() != cdeg_[j] - rdeg_[i])
        throw std::invalid_argument("matrix entry of wrong degree");
    if (it != c.end() && it->first == i) it->second = std::move(q);
    else c.insert(it, {i, std::move(q)});
}

void GradedMatrix::set_col(int j, SparseVec v) {
    cols_[j].clear();
    for (auto& [i, p] : v) set_entry(i, j, p);
}

bool GradedMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool GradedMatrix::entries_in_max_ideal() const {
    for (const auto& c : cols_)
        for (const auto& [i, p] : c)
            if (p.is_constant()) return false;
    return true;
}

SparseVec GradedMatrix::apply(const SparseVec& v) const {
    SparseVec r;
    for (const auto& [j, p] : v)
        r = sv_add(r, sv_scale(cols_[j], p, R_.order()), R_.order());
    return sv_nf(r, R_);
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& inner) const {
    if (cdeg_ != inner.rdeg_) throw std::invalid_argument("composition degree mismatch");
    GradedMatrix r(R_, rdeg_, inner.cdeg_);
    for (int j = 0; j < inner.ncols(); ++j) r.set_col(j, apply(inner.col(j)));
    return r;
}

GradedMatrix GradedMatrix::transpose() const {
    std::vector<int64_t> nr(cdeg_.size()), nc(rdeg_.size());
    for (size_t i = 0; i < cdeg_.size(); ++i) nr[i] = -cdeg_[i];
    for (size_t i = 0; i < rdeg_.size(); ++i) nc[i] = -rdeg_[i];
    GradedMatrix r(R_, std::move(nr), std::move(nc));
    for (int j = 0; j < ncols(); ++j)
        for (const auto& [i, p] : cols_[j]) r.set_entry(j, i, p);
    return r;
}

GradedMatrix GradedMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
    std::vector<int64_t> nr, nc;
    std::vector<int> rowpos(nrows(), -1);
    for (size_t k = 0; k < rows.size(); ++k) {
        nr.push_back(rdeg_[rows[k]]);
        rowpos[rows[k]] = (int)k;
    }
    for (int j : cols) nc.push_back(cdeg_[j]);
    GradedMatrix r(R_, std::move(nr), std::move(nc));
    for (size_t jj = 0; jj < cols.size(); ++jj)
        for (const auto& [i, p] : cols_[cols[jj]])
            if (rowpos[i] >= 0) r.set_entry(rowpos[i], (int)jj, p);
    return r;
}

GradedMatrix GradedMatrix::with_degree_shift(int64_t s) const {
    GradedMatrix r = *this;
    for (auto& d : r.rdeg_) d += s;
    for (auto& d : r.cdeg_) d += s;
    return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return rdeg_ == o.rdeg_ && cdeg_ == o.cdeg_ && cols_ == o.cols_;
}

} // namespace ghom
