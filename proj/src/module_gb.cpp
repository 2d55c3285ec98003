#include "ghom/module_gb.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

namespace {

struct Lead {
    int comp;
    const Monomial* mono;
    const Scalar* coeff;
};

Lead sv_lead(const SparseVec& v, const TermOrder& ord) {
    Lead best{-1, nullptr, nullptr};
    for (const auto& [c, p] : v) {
        if (p.is_zero()) continue;
        const Monomial& m = p.lead_mono();
        if (!best.mono) { best = {c, &m, &p.lead_coeff()}; continue; }
        int k = ord.cmp(m, *best.mono);
        if (k > 0 || (k == 0 && c < best.comp)) best = {c, &m, &p.lead_coeff()};
    }
    return best;
}

int64_t sv_sugar(const SparseVec& v) {
    int64_t s = 0;
    for (const auto& [c, p] : v)
        if (!p.is_zero()) s = std::max(s, p.degree());
    return s;
}

} // namespace

SubmoduleGB::SubmoduleGB(GradedRing R, int rank, const std::vector<SparseVec>& gens)
    : R_(std::move(R)), rank_(rank), by_comp_(rank) {
    for (const auto& g : gens) add_and_complete(g);
}

void SubmoduleGB::add_and_complete(const SparseVec& g) {
    int idx = ngens_++;
    SparseVec v = g;
    std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
    if (v.empty()) {
        syz_.push_back({{idx, R_.one()}});
        return;
    }
    for (const auto& [c, p] : v)
        if (c < 0 || c >= rank_) throw std::out_of_range("vector component out of range");
    append(std::move(v), {{idx, R_.one()}}, sv_sugar(g));
    complete();
}

void SubmoduleGB::append(SparseVec v, SparseVec tracker, int64_t sugar) {
    Lead l = sv_lead(v, R_.order());
    int comp = l.comp;
    Scalar c = *l.coeff;
    if (!c.is_one()) {
        Polynomial inv = Polynomial::term(Monomial(std::vector<int>(R_.nvars(), 0), R_.weights()),
                                          c.inverse());
        v = sv_scale(v, inv, R_.order());
        tracker = sv_scale(tracker, inv, R_.order());
    }
    int n = (int)basis_.size();
    Monomial lead = *sv_lead(v, R_.order()).mono;
    basis_.push_back({std::move(v), std::move(tracker), comp, lead, sugar});
    for (int i : by_comp_[comp]) {
        Monomial lcm = basis_[i].lead_mono.lcm(lead, R_.weights());
        int64_t s = std::max(basis_[i].sugar + (lcm / basis_[i].lead_mono).degree(),
                             sugar + (lcm / lead).degree());
        pairs_.push_back({i, n, lcm, s});
    }
    by_comp_[comp].push_back(n);
}

void SubmoduleGB::complete() {
    const TermOrder& ord = R_.order();
    while (!pairs_.empty()) {
        auto it = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const SPair& a, const SPair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (int c = ord.cmp(a.lcm, b.lcm)) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        SPair p = *it;
        pairs_.erase(it);
        const Elt& ei = basis_[p.i];
        const Elt& ej = basis_[p.j];
        Scalar one = Scalar::one(R_.field());
        Term ti{p.lcm / ei.lead_mono, one}, tj{p.lcm / ej.lead_mono, one};
        SparseVec s = sv_sub(sv_term_mul(ei.v, ti, ord), sv_term_mul(ej.v, tj, ord), ord);
        SparseVec tr = sv_sub(sv_term_mul(ei.tracker, ti, ord), sv_term_mul(ej.tracker, tj, ord), ord);
        int64_t sugar = p.sugar;
        SparseVec rem = reduce(std::move(s), &tr, &sugar);
        if (rem.empty()) {
            if (!sv_is_zero(tr)) syz_.push_back(std::move(tr));
        } else {
            append(std::move(rem), std::move(tr), sugar);
        }
    }
}

SparseVec SubmoduleGB::reduce(SparseVec v, SparseVec* tracker, int64_t* sugar) const {
    const TermOrder& ord = R_.order();
    SparseVec rem;
    while (true) {
        Lead l = sv_lead(v, ord);
        if (!l.mono) break;
        int hit = -1;
        for (int k : by_comp_[l.comp])
            if (basis_[k].lead_mono.divides(*l.mono)) { hit = k; break; }
        if (hit >= 0) {
            Term t{*l.mono / basis_[hit].lead_mono, *l.coeff};
            v = sv_sub(v, sv_term_mul(basis_[hit].v, t, ord), ord);
            if (tracker)
                *tracker = sv_sub(*tracker, sv_term_mul(basis_[hit].tracker, t, ord), ord);
            if (sugar) *sugar = std::max(*sugar, basis_[hit].sugar + t.mono.degree());
        } else {
            SparseVec lt{{l.comp, Polynomial::term(*l.mono, *l.coeff)}};
            rem = sv_add(rem, lt, ord);
            v = sv_sub(v, lt, ord);
        }
    }
    return rem;
}

SparseVec SubmoduleGB::normal_form(const SparseVec& v) const {
    return reduce(v, nullptr, nullptr);
}

bool SubmoduleGB::lead_divides(int comp, const Monomial& m) const {
    for (int k : by_comp_[comp])
        if (basis_[k].lead_mono.divides(m)) return true;
    return false;
}

std::optional<std::vector<Polynomial>> SubmoduleGB::lift(const SparseVec& v) const {
    SparseVec tracker;
    SparseVec rem = reduce(v, &tracker, nullptr);
    if (!rem.empty()) return std::nullopt;
    std::vector<Polynomial> out(ngens_);
    for (const auto& [i, p] : tracker) out[i] = p_neg(p);
    return out;
}

std::vector<SparseVec> quotient_columns(const GradedRing& R, int rank) {
    std::vector<SparseVec> out;
    for (int c = 0; c < rank; ++c)
        for (const auto& g : R.defining_gb()) out.push_back({{c, g}});
    return out;
}

} // namespace ghom
