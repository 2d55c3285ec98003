#include "ghom/ring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ghom {

struct GradedRing::Data {
    Field f;
    std::vector<std::string> names;
    std::vector<int> weights;
    TermOrder ord;
    std::vector<Polynomial> gens;
    std::vector<Polynomial> gb;
    bool artinian = false;
};

namespace {

Polynomial nf_full(Polynomial h, const std::vector<Polynomial>& basis, const TermOrder& ord,
                   int64_t* sugar, const std::vector<int64_t>* sugars) {
    Polynomial r;
    while (!h.is_zero()) {
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (basis[k].lead_mono().divides(h.lead_mono())) {
                Monomial m = h.lead_mono() / basis[k].lead_mono();
                Scalar c = h.lead_coeff() / basis[k].lead_coeff();
                h = p_sub(h, p_mul_term(basis[k], {m, c}, ord), ord);
                if (sugar) *sugar = std::max(*sugar, (*sugars)[k] + m.degree());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial lt = Polynomial::term(h.lead_mono(), h.lead_coeff());
            r = p_add(r, lt, ord);
            h = p_sub(h, lt, ord);
        }
    }
    return r;
}

struct SPair {
    int i, j;
    Monomial lcm;
    int64_t sugar;
};

bool pair_less(const SPair& a, const SPair& b, const TermOrder& ord) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = ord.cmp(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

/* Pair-set update after appending basis[n].  Prunes with the standard lcm
   criteria; the coprime-lead shortcut is sound for ideals (single component)
   but not for submodules of free modules, hence the flag. */
void gm_update(std::vector<SPair>& pairs, const std::vector<Polynomial>& basis,
               const std::vector<int64_t>& sugars, int n, const TermOrder& ord,
               bool coprime_shortcut) {
    const Monomial& mn = basis[n].lead_mono();
    const auto& w = ord.weights();
    struct Cand {
        int i;
        Monomial lcm;
        bool coprime;
        bool dead = false;
    };
    std::vector<Cand> cand;
    for (int i = 0; i < n; ++i) {
        if (basis[i].is_zero()) continue;
        cand.push_back({i, basis[i].lead_mono().lcm(mn, w),
                        basis[i].lead_mono().coprime(mn), false});
    }
    for (auto& a : cand)
        for (const auto& b : cand) {
            if (a.dead || b.dead || &a == &b) continue;
            if (b.lcm.divides(a.lcm) && b.lcm != a.lcm) { a.dead = true; break; }
        }
    for (size_t x = 0; x < cand.size(); ++x) {
        if (cand[x].dead) continue;
        bool coprime_in_class = coprime_shortcut && cand[x].coprime;
        std::vector<size_t> cls{x};
        for (size_t y = x + 1; y < cand.size(); ++y) {
            if (cand[y].dead || cand[y].lcm != cand[x].lcm) continue;
            cls.push_back(y);
            if (coprime_shortcut && cand[y].coprime) coprime_in_class = true;
        }
        if (coprime_in_class)
            for (size_t y : cls) cand[y].dead = true;
        else
            for (size_t k = 1; k < cls.size(); ++k) cand[cls[k]].dead = true;
    }
    std::erase_if(pairs, [&](const SPair& p) {
        if (!mn.divides(p.lcm)) return false;
        return basis[p.i].lead_mono().lcm(mn, w) != p.lcm &&
               basis[p.j].lead_mono().lcm(mn, w) != p.lcm;
    });
    for (const auto& c : cand) {
        if (c.dead) continue;
        int64_t s = std::max(sugars[c.i] + (c.lcm / basis[c.i].lead_mono()).degree(),
                             sugars[n] + (c.lcm / mn).degree());
        pairs.push_back({c.i, n, c.lcm, s});
    }
}

void buchberger_core(std::vector<Polynomial>& G, const TermOrder& ord) {
    std::vector<Polynomial> basis;
    std::vector<int64_t> sugars;
    std::vector<SPair> pairs;
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        basis.push_back(p_monic(g));
        sugars.push_back(g.degree());
        gm_update(pairs, basis, sugars, (int)basis.size() - 1, ord, true);
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
            return pair_less(a, b, ord);
        });
        SPair p = *it;
        pairs.erase(it);
        Scalar one = Scalar::one(basis[p.i].lead_coeff().field());
        Polynomial s = p_sub(p_mul_term(basis[p.i], {p.lcm / basis[p.i].lead_mono(), one}, ord),
                             p_mul_term(basis[p.j], {p.lcm / basis[p.j].lead_mono(), one}, ord), ord);
        int64_t sug = p.sugar;
        Polynomial h = nf_full(std::move(s), basis, ord, &sug, &sugars);
        if (h.is_zero()) continue;
        basis.push_back(p_monic(h));
        sugars.push_back(sug);
        gm_update(pairs, basis, sugars, (int)basis.size() - 1, ord, true);
    }
    G = std::move(basis);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const TermOrder& ord) {
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (!G[j].lead_mono().divides(G[i].lead_mono())) continue;
            if (G[i].lead_mono() == G[j].lead_mono() && j > i) continue;
            keep[i] = 0;
        }
    std::vector<Polynomial> M;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) M.push_back(G[i]);
    // leads are pairwise non-dividing now, so one tail-reduction pass settles
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        M[i] = p_monic(nf_full(M[i], others, ord, nullptr, nullptr));
    }
    std::sort(M.begin(), M.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.cmp(a.lead_mono(), b.lead_mono()) < 0;
    });
    return M;
}

} // namespace

std::vector<Polynomial> groebner_ideal(std::vector<Polynomial> gens, const TermOrder& ord) {
    buchberger_core(gens, ord);
    return interreduce(std::move(gens), ord);
}

Polynomial nf_ideal(const Polynomial& a, const std::vector<Polynomial>& basis,
                    const TermOrder& ord) {
    return nf_full(a, basis, ord, nullptr, nullptr);
}

GradedRing::GradedRing(Field f, std::vector<std::string> var_names, std::vector<int> weights,
                       OrderKind kind, std::vector<Polynomial> defining) {
    auto d = std::make_shared<Data>();
    if (var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (var_names.size() != weights.size())
        throw std::invalid_argument("variable/weight count mismatch");
    d->f = f;
    d->names = std::move(var_names);
    d->weights = std::move(weights);
    d->ord = TermOrder(kind, d->weights);
    for (auto& g : defining) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("defining relations must be homogeneous");
        d->gens.push_back(std::move(g));
    }
    d->gb = groebner_ideal(d->gens, d->ord);
    for (const auto& g : d->gb)
        if (g.is_constant()) throw std::invalid_argument("defining ideal is the unit ideal");
    d->artinian = true;
    for (int v = 0; v < (int)d->weights.size() && d->artinian; ++v) {
        bool found = false;
        for (const auto& g : d->gb) {
            const Monomial& m = g.lead_mono();
            bool pure = m.exp(v) > 0;
            for (int u = 0; pure && u < m.nvars(); ++u)
                if (u != v && m.exp(u) > 0) pure = false;
            if (pure) { found = true; break; }
        }
        d->artinian = found;
    }
    d_ = std::move(d);
}

const Field& GradedRing::field() const { return d_->f; }
int GradedRing::nvars() const { return (int)d_->weights.size(); }
const std::vector<std::string>& GradedRing::var_names() const { return d_->names; }
const std::vector<int>& GradedRing::weights() const { return d_->weights; }
const TermOrder& GradedRing::order() const { return d_->ord; }
const std::vector<Polynomial>& GradedRing::defining_gens() const { return d_->gens; }
const std::vector<Polynomial>& GradedRing::defining_gb() const { return d_->gb; }
bool GradedRing::is_polynomial_ring() const { return d_->gb.empty(); }
bool GradedRing::is_artinian() const { return d_->artinian; }

Polynomial GradedRing::nf(const Polynomial& a) const {
    return nf_ideal(a, d_->gb, d_->ord);
}

Polynomial GradedRing::var(int i) const {
    std::vector<int> e(nvars(), 0);
    e[i] = 1;
    return Polynomial::term(Monomial(e, d_->weights), Scalar::one(d_->f));
}

Polynomial GradedRing::constant(const Scalar& c) const {
    return Polynomial::term(Monomial(std::vector<int>(nvars(), 0), d_->weights), c);
}

Polynomial GradedRing::one() const { return constant(Scalar::one(d_->f)); }

std::vector<Monomial> GradedRing::monomial_basis(int64_t degree) const {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    int n = nvars();
    std::vector<int> e(n, 0);
    const auto& w = d_->weights;
    std::function<void(int, int64_t)> rec = [&](int v, int64_t rem) {
        if (v == n) {
            if (rem != 0) return;
            Monomial m(e, w);
            for (const auto& g : d_->gb)
                if (g.lead_mono().divides(m)) return;
            out.push_back(m);
            return;
        }
        for (int k = 0; (int64_t)k * w[v] <= rem; ++k) {
            e[v] = k;
            rec(v + 1, rem - (int64_t)k * w[v]);
        }
        e[v] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return d_->ord.cmp(a, b) > 0;
    });
    return out;
}

bool GradedRing::is_regular_element(const Polynomial& f) const {
    Polynomial fr = nf(f);
    if (fr.is_zero()) return false;
    if (d_->gb.empty()) return true;
    // (I : f) from I cap (f), eliminating t from t*I + (t-1)*(f)
    int n = nvars();
    std::vector<int> w2(n + 1, 1);
    for (int i = 0; i < n; ++i) w2[i + 1] = d_->weights[i];
    TermOrder ord2 = TermOrder(d_->ord.kind(), w2).with_elim_prefix(1);
    auto lift = [&](const Polynomial& p, int tpow) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            std::vector<int> e(n + 1, 0);
            e[0] = tpow;
            for (int i = 0; i < n; ++i) e[i + 1] = t.mono.exp(i);
            ts.push_back({Monomial(std::move(e), w2), t.coeff});
        }
        return p_from_terms(std::move(ts), ord2);
    };
    std::vector<Polynomial> gens2;
    for (const auto& g : d_->gb) gens2.push_back(lift(g, 1));
    gens2.push_back(p_sub(lift(fr, 1), lift(fr, 0), ord2));
    auto gb2 = groebner_ideal(gens2, ord2);
    for (const auto& g : gb2) {
        if (g.lead_mono().exp(0) != 0) continue;  // elimination order: lead free of t
        std::vector<Term> ts;                     // implies every term is
        for (const auto& t : g.terms()) {
            std::vector<int> e(t.mono.exps().begin() + 1, t.mono.exps().end());
            ts.push_back({Monomial(std::move(e), d_->weights), t.coeff});
        }
        Polynomial h = p_from_terms(std::move(ts), d_->ord);
        auto dv = p_divide(h, fr, d_->ord);
        if (!dv.remainder.is_zero())
            throw std::logic_error("colon computation: expected exact division");
        if (!nf(dv.quotient).is_zero()) return false;
    }
    return true;
}

} // namespace ghom
