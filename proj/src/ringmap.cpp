#include "ghom/ringmap.hpp"

#include <stdexcept>

namespace ghom {

static bool detect_identity(const GradedRing& src, const GradedRing& tgt,
                            const std::vector<Polynomial>& img) {
    if (!src.same(tgt)) return false;
    for (int i = 0; i < src.nvars(); ++i)
        if (img[i] != src.var(i)) return false;
    return true;
}

RingMap::RingMap(GradedRing source, GradedRing target, std::vector<Polynomial> images) {
    if (!(source.field() == target.field()))
        throw std::invalid_argument("ring map across different coefficient fields");
    if ((int)images.size() != source.nvars())
        throw std::invalid_argument("ring map needs one image per source variable");
    auto d = std::make_shared<Data>();
    d->src = std::move(source);
    d->tgt = std::move(target);
    for (int i = 0; i < d->src.nvars(); ++i) {
        Polynomial p = d->tgt.nf(images[i]);
        if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != d->src.weights()[i]))
            throw std::invalid_argument("variable image of wrong degree");
        d->img.push_back(std::move(p));
    }
    d->ident = detect_identity(d->src, d->tgt, d->img);
    d_ = std::move(d);
    for (const auto& g : d_->src.defining_gens())
        if (!apply(g).is_zero())
            throw std::invalid_argument("defining relation not sent to zero");
}

RingMap RingMap::identity(const GradedRing& R) {
    std::vector<Polynomial> img;
    for (int i = 0; i < R.nvars(); ++i) img.push_back(R.var(i));
    return RingMap(R, R, std::move(img));
}

RingMap RingMap::unchecked(GradedRing source, GradedRing target,
                           std::vector<Polynomial> images) {
    RingMap m;
    auto d = std::make_shared<Data>();
    d->src = std::move(source);
    d->tgt = std::move(target);
    d->img = std::move(images);
    d->ident = detect_identity(d->src, d->tgt, d->img);
    m.d_ = std::move(d);
    return m;
}

Polynomial RingMap::apply(const Polynomial& a) const {
    const GradedRing& T = d_->tgt;
    if (d_->ident) return T.nf(a);
    Polynomial out;
    for (const auto& t : a.terms()) {
        Polynomial prod = T.constant(t.coeff);
        for (int i = 0; i < d_->src.nvars(); ++i)
            for (int e = 0; e < t.mono.exp(i); ++e)
                prod = T.nf(p_mul(prod, d_->img[i], T.order()));
        out = p_add(out, prod, T.order());
    }
    return T.nf(out);
}

} // namespace ghom
