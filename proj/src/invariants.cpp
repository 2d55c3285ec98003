#include "ghom/invariants.hpp"

#include <stdexcept>

namespace ghom {

std::string ExtInt::str() const {
    if (kind == NegInf) return "-inf";
    if (kind == PosInf) return "+inf";
    return std::to_string(n);
}

std::string InvStatus::str() const {
    switch (kind) {
    case Exact:
        return "exact";
    case UpToBound: {
        std::string s = "certified-up-to-bound(B=" + std::to_string(bound);
        if (tmax > 0) s += ",t=" + std::to_string(tmax);
        return s + ")";
    }
    default:
        return "unknown(B=" + std::to_string(bound) + ")";
    }
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json v;
    if (status.kind != InvStatus::Unknown) v = value.str();
    return {{"name", name}, {"value", v}, {"status", status.str()},
            {"certificate", certificate}};
}

namespace {

ModuleHandle ring_as_handle(const GradedRing& R) {
    return restrict_scalars(RingMap::identity(R), FPModule::free_module(R, {0}));
}

/* One homology spot, inspected as cheaply as the ring allows.  Over an
   artinian ring the component supports a bounded degree window, so dense
   piece ranks decide everything and the evidence lists piece dimensions.
   Otherwise the homology module is computed outright and the evidence lists
   its generator degrees. */
struct SpotLook {
    bool nonzero = false;
    nlohmann::json evidence;
};

SpotLook look_at(const ModuleComplex& C, int spot) {
    SpotLook s;
    s.evidence = nlohmann::json::object();
    if (C.R.is_artinian()) {
        FPModule comp = C.comp(spot);
        if (comp.ngens() == 0) return s;
        const auto& gd = comp.gen_degrees();
        auto mm = std::minmax_element(gd.begin(), gd.end());
        nlohmann::json dims = nlohmann::json::array();
        for (int64_t e = *mm.first; e <= *mm.second + artinian_top_degree(C.R); ++e) {
            int64_t d = homology_piece_dim(C, spot, e);
            if (d > 0) dims.push_back({e, d});
        }
        if (!dims.empty()) {
            s.nonzero = true;
            s.evidence = {{"piece_dims", dims}};
        }
        return s;
    }
    FPModule H = homology_module(C, spot);
    if (!H.is_zero()) {
        s.nonzero = true;
        s.evidence = {{"generator_degrees", H.minimized().module.gen_degrees()}};
    }
    return s;
}

// nonvanishing homology spots of a Tor or Ext window, with per spot evidence
struct Window {
    std::vector<int> nonzero;
    nlohmann::json spots = nlohmann::json::array();
    int sup = -1; // largest nonzero index, -1 when everything vanished
};

Window scan(const ModuleComplex& C, int B, int sign) {
    Window w;
    for (int i = 0; i <= B; ++i) {
        SpotLook s = look_at(C, sign * i);
        if (!s.nonzero) continue;
        w.nonzero.push_back(i);
        w.sup = i;
        nlohmann::json spot = {{"i", i}};
        spot.update(s.evidence);
        w.spots.push_back(spot);
    }
    return w;
}

Window tor_window(FreeResolution& res, const ModuleHandle& N, int B) {
    return scan(tensor_with_module(resolution_complex(res, B + 1), N), B, +1);
}

Window ext_window(FreeResolution& res, const ModuleHandle& N, int B) {
    return scan(hom_into_module(resolution_complex(res, B + 1), N), B, -1);
}

} // namespace

FPModule tor_over_map(const FPModule& M, const ModuleHandle& N, int i) {
    if (!M.ring().same(N.phi.source()))
        throw std::invalid_argument("tor wants a module over the source ring");
    if (i < 0) throw std::invalid_argument("tor index must not be negative");
    FreeResolution res(M);
    ModuleComplex T = tensor_with_module(resolution_complex(res, i + 1), N);
    return homology_module(T, i);
}

FPModule ext_over_map(const FPModule& M, const ModuleHandle& N, int i) {
    if (!M.ring().same(N.phi.source()))
        throw std::invalid_argument("ext wants a module over the source ring");
    if (i < 0) throw std::invalid_argument("ext index must not be negative");
    FreeResolution res(M);
    ModuleComplex C = hom_into_module(resolution_complex(res, i + 1), N);
    return homology_module(C, -i);
}

InvariantReport depth_report(const ModuleHandle& N, int B) {
    InvariantReport rep;
    rep.name = "depth";
    if (N.N.is_zero()) {
        rep.value = ExtInt::pos_inf();
        rep.status = InvStatus::exact();
        rep.certificate = {{"zero_module", true}};
        return rep;
    }
    const GradedRing& R = N.phi.source();
    FreeResolution res(FPModule::residue_field(R));
    for (int i = 0; i <= B; ++i) {
        // grow the resolution one step at a time so an early answer never
        // pays for the full window
        ModuleComplex C = hom_into_module(resolution_complex(res, i + 1), N);
        SpotLook s = look_at(C, -i);
        if (!s.nonzero) continue;
        rep.value = ExtInt::of(i);
        rep.status = InvStatus::exact();
        rep.certificate = {{"first_nonvanishing", i}, {"window", B}};
        rep.certificate.update(s.evidence);
        return rep;
    }
    rep.value = ExtInt::pos_inf();
    rep.status = InvStatus::unknown(B);
    rep.certificate = {{"all_vanish_through", B}};
    return rep;
}

InvariantReport fd_report(const ModuleHandle& N, int B) {
    InvariantReport rep;
    rep.name = "fd";
    if (N.N.is_zero()) {
        rep.value = ExtInt::neg_inf();
        rep.status = InvStatus::exact();
        rep.certificate = {{"zero_module", true}};
        return rep;
    }
    const GradedRing& R = N.phi.source();
    FreeResolution res(FPModule::residue_field(R));
    Window w = tor_window(res, N, B);
    rep.value = w.sup < 0 ? ExtInt::neg_inf() : ExtInt::of(w.sup);
    bool complete = res.finished() && res.length() <= B;
    rep.status = complete ? InvStatus::exact() : InvStatus::up_to(B);
    rep.certificate = {{"tor_nonvanishing", w.spots},
                       {"residue_field_resolved", complete}};
    return rep;
}

ReflexiveCheck is_totally_reflexive(const FPModule& G, int B) {
    ReflexiveCheck rc;
    rc.bound = B;
    if (G.is_zero()) {
        rc.passed = true;
        rc.certificate = {{"zero_module", true}};
        return rc;
    }
    DualModule D = dual_into_ring(G);
    DualModule DD = dual_into_ring(D.module);
    GradedMatrix bid = biduality_map(G, D, DD);
    if (!map_is_isomorphism(G, DD.module, bid)) {
        rc.reason = "biduality is not an isomorphism";
        rc.certificate = {{"condition", "biduality"}};
        return rc;
    }
    ModuleHandle ring_h = ring_as_handle(G.ring());
    FreeResolution resG(G), resD(D.module);
    ModuleComplex EG = hom_into_module(resolution_complex(resG, B + 1), ring_h);
    ModuleComplex ED = hom_into_module(resolution_complex(resD, B + 1), ring_h);
    for (int i = 1; i <= B; ++i) {
        if (look_at(EG, -i).nonzero) {
            rc.reason = "ext against the ring does not vanish";
            rc.witness = i;
            rc.certificate = {{"condition", "ext_of_module"}, {"i", i}};
            return rc;
        }
        if (look_at(ED, -i).nonzero) {
            rc.reason = "ext of the dual against the ring does not vanish";
            rc.witness = i;
            rc.certificate = {{"condition", "ext_of_dual"}, {"i", i}};
            return rc;
        }
    }
    rc.passed = true;
    rc.certificate = {{"biduality", "isomorphism"}, {"ext_vanishing_window", B}};
    return rc;
}

InvariantReport gdim_report(const FPModule& N, int B) {
    InvariantReport rep;
    rep.name = "gdim";
    if (N.is_zero()) {
        rep.value = ExtInt::neg_inf();
        rep.status = InvStatus::exact();
        rep.certificate = {{"zero_module", true}};
        return rep;
    }
    FreeResolution res(N);
    Window w = ext_window(res, ring_as_handle(N.ring()), B);
    if (res.finished() && res.length() <= B) {
        // free tail: the value is the length of the finite resolution
        rep.value = ExtInt::of(res.length());
        rep.status = InvStatus::exact();
        rep.certificate = {{"resolution_length", res.length()},
                           {"ext_nonvanishing", w.nonzero}};
        return rep;
    }
    if (w.sup < 0) {
        rep.status = InvStatus::unknown(B);
        rep.certificate = {{"ext_vanishing_window", B},
                           {"note", "no nonvanishing ext against the ring in sight"}};
        return rep;
    }
    if (w.sup == B) {
        // no vanishing window after the sup, so it cannot be told apart from
        // anything larger; the syzygy check there would prove nothing
        std::vector<int64_t> betti;
        for (int i = 0; i <= B; ++i) betti.push_back(res.betti(i));
        rep.status = InvStatus::unknown(B);
        rep.certificate = {{"ext_nonvanishing", w.nonzero},
                           {"note", "nonvanishing ext reaches the window ceiling"},
                           {"betti", betti}};
        return rep;
    }
    FPModule G = res.syzygy_module(w.sup);
    ReflexiveCheck rc = is_totally_reflexive(G, B);
    if (rc.passed) {
        rep.value = ExtInt::of(w.sup);
        rep.status = InvStatus::up_to(B);
        rep.certificate = {{"ext_nonvanishing", w.nonzero},
                           {"syzygy_spot", w.sup},
                           {"syzygy_reflexive", rc.certificate}};
        return rep;
    }
    std::vector<int64_t> betti;
    for (int i = 0; i <= B; ++i) betti.push_back(res.betti(i));
    rep.status = InvStatus::unknown(B);
    rep.certificate = {{"ext_nonvanishing", w.nonzero},
                       {"syzygy_spot", w.sup},
                       {"refuted", {{"reason", rc.reason}, {"witness", rc.witness}}},
                       {"betti", betti}};
    return rep;
}

InvariantReport gfd_report(const ModuleHandle& N, int tmax, int B) {
    if (tmax < 1)
        throw std::invalid_argument("gfd needs at least one level of the tower");
    InvariantReport rep;
    rep.name = "gfd";
    if (N.N.is_zero()) {
        rep.value = ExtInt::neg_inf();
        rep.status = InvStatus::exact();
        rep.certificate = {{"zero_module", true}};
        return rep;
    }
    const GradedRing& R = N.phi.source();
    std::vector<ExtInt> vals;
    nlohmann::json per_t = nlohmann::json::array();
    int64_t prev_dim = -1;
    for (int t = 1; t <= tmax; ++t) {
        InjectiveTruncation trunc = injective_hull_truncation(R, t);
        int64_t tdim = 0;
        for (int64_t d = trunc.rep.lo; d <= trunc.rep.hi; ++d) tdim += trunc.rep.dim(d);
        if (tdim == prev_dim) {
            // the truncation gained nothing, so the canonical inclusion from
            // the previous level is an isomorphism and its value carries over
            ExtInt v = vals.back();
            per_t.push_back({{"t", t}, {"value", v.str()}, {"repeats_previous", true}});
            vals.push_back(v);
            continue;
        }
        prev_dim = tdim;
        FreeResolution resE(trunc.pres.module);
        Window w = tor_window(resE, N, B);
        ExtInt v = w.sup < 0 ? ExtInt::neg_inf() : ExtInt::of(w.sup);
        per_t.push_back({{"t", t}, {"value", v.str()}, {"tor_nonvanishing", w.nonzero}});
        vals.push_back(v);
    }
    rep.value = vals.back();
    rep.status = InvStatus::up_to(B, tmax);
    bool stab = tmax >= 2 && vals[tmax - 1] == vals[tmax - 2];
    rep.certificate = {{"per_t", per_t},
                      {"stabilized", stab},
                      {"at_window_ceiling", rep.value == ExtInt::of(B)}};
    return rep;
}

InvariantReport rfd_report(const ModuleHandle& N, const std::vector<FPModule>& tests,
                           int B) {
    if (tests.empty())
        throw std::invalid_argument("rfd needs at least one test module");
    InvariantReport rep;
    rep.name = "rfd";
    const GradedRing& R = N.phi.source();
    ExtInt best = ExtInt::neg_inf();
    nlohmann::json per = nlohmann::json::array();
    for (const FPModule& T : tests) {
        if (!T.ring().same(R))
            throw std::invalid_argument("rfd test module lives over the wrong ring");
        FreeResolution resT(T);
        resT.extend(B + 1);
        if (!resT.finished() || resT.length() > B)
            throw std::invalid_argument(
                "rfd test module does not resolve inside the window");
        Window w = tor_window(resT, N, B);
        ExtInt v = w.sup < 0 ? ExtInt::neg_inf() : ExtInt::of(w.sup);
        per.push_back({{"test_pd", resT.length()},
                       {"value", v.str()},
                       {"tor_nonvanishing", w.nonzero}});
        if (best.kind == ExtInt::NegInf || (v.kind == ExtInt::Finite && v.n > best.n))
            best = v;
    }
    rep.value = best;
    rep.status = InvStatus::up_to(B);
    rep.certificate = {{"tests", per}};
    return rep;
}

SupportCheck supp_member_max(const ModuleHandle& N) {
    const GradedRing& R = N.phi.source();
    FPModule T0 = tor_over_map(FPModule::residue_field(R), N, 0);
    SupportCheck sc;
    sc.member = !T0.is_zero();
    sc.witness = {{"tor0_generator_degrees",
                   T0.minimized().module.gen_degrees()}};
    return sc;
}

} // namespace ghom
