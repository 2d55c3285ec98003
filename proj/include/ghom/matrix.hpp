#pragma once

#include "ghom/ring.hpp"

#include <optional>

namespace ghom {

// sparse column vector: (row index, entry), sorted by row, no zero entries
using SparseVec = std::vector<std::pair<int, Polynomial>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const TermOrder& ord);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b, const TermOrder& ord);
SparseVec sv_neg(const SparseVec& a);
SparseVec sv_scale(const SparseVec& a, const Polynomial& p, const TermOrder& ord);
SparseVec sv_term_mul(const SparseVec& a, const Term& t, const TermOrder& ord);
SparseVec sv_nf(const SparseVec& a, const GradedRing& R);
bool sv_is_zero(const SparseVec& a);
SparseVec sv_unit(int row, const GradedRing& R);  // e_row

// degree of a homogeneous vector, given the degrees of the target rows;
// nullopt for the zero vector, throws if entries disagree
std::optional<int64_t> sv_degree(const SparseVec& a, const std::vector<int64_t>& row_degs);

/* Map of graded free modules in column-major sparse form.  Columns are the
   source generators, rows the target generators; a nonzero entry (i,j) must
   be homogeneous of degree col_deg[j] - row_deg[i].  Entries are kept in
   normal form against the defining ideal of the ring. */
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedRing R, std::vector<int64_t> row_degs, std::vector<int64_t> col_degs);
    GradedMatrix(GradedRing R, std::vector<int64_t> row_degs, std::vector<int64_t> col_degs,
                 std::vector<SparseVec> cols);
    static GradedMatrix identity(const GradedRing& R, std::vector<int64_t> degs);

    const GradedRing& ring() const { return R_; }
    int nrows() const { return (int)rdeg_.size(); }
    int ncols() const { return (int)cdeg_.size(); }
    const std::vector<int64_t>& row_degrees() const { return rdeg_; }
    const std::vector<int64_t>& col_degrees() const { return cdeg_; }

    const Polynomial& entry(int i, int j) const;
    void set_entry(int i, int j, const Polynomial& p);
    const SparseVec& col(int j) const { return cols_[j]; }
    void set_col(int j, SparseVec v);

    bool is_zero() const;
    bool entries_in_max_ideal() const;  // no unit entries anywhere

    SparseVec apply(const SparseVec& v) const;
    GradedMatrix compose(const GradedMatrix& inner) const;  // this * inner
    GradedMatrix transpose() const;                         // matrix of the dual map
    GradedMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    GradedMatrix with_degree_shift(int64_t s) const;  // same entries, all degrees + s

    bool operator==(const GradedMatrix& o) const;

private:
    GradedRing R_;
    std::vector<int64_t> rdeg_, cdeg_;
    std::vector<SparseVec> cols_;
};

} // namespace ghom
