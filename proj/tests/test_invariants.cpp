#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/invariants.hpp"

using namespace ghom;

namespace {

Polynomial poly(const GradedRing& R,
                std::vector<std::pair<long long, std::vector<int>>> ts) {
    std::vector<Term> v;
    for (auto& [c, e] : ts)
        v.push_back({Monomial(e, R.weights()), Scalar::of_int(R.field(), c)});
    return p_from_terms(std::move(v), R.order());
}

GradedRing hypersurface_uv() {
    GradedRing P(field_rationals(), {"u", "v"}, {1, 1}, OrderKind::DegRevLex, {});
    return GradedRing(field_rationals(), {"u", "v"}, {1, 1}, OrderKind::DegRevLex,
                      {poly(P, {{1, {1, 1}}})});
}

GradedRing artinian_x3() {
    GradedRing P(field_prime(101), {"x"}, {1}, OrderKind::DegRevLex, {});
    return GradedRing(field_prime(101), {"x"}, {1}, OrderKind::DegRevLex,
                      {poly(P, {{1, {3}}})});
}

GradedRing square_zero_xy() {
    GradedRing P(field_prime(101), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    return GradedRing(field_prime(101), {"x", "y"}, {1, 1}, OrderKind::DegRevLex,
                      {poly(P, {{1, {2, 0}}}), poly(P, {{1, {1, 1}}}),
                       poly(P, {{1, {0, 2}}})});
}

ModuleHandle over_self(const FPModule& M) {
    return restrict_scalars(RingMap::identity(M.ring()), M);
}

// x |-> x into the plane, the running almost-finite example
struct LineToPlane {
    GradedRing R, S;
    RingMap phi;
    LineToPlane() {
        Field f = field_prime(101);
        R = GradedRing(f, {"x"}, {1}, OrderKind::DegRevLex, {});
        S = GradedRing(f, {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
        phi = RingMap(R, S, {poly(S, {{1, {1, 0}}})});
    }
};

} // namespace

TEST_CASE("extended integers and statuses") {
    CHECK(ExtInt::of(3).str() == "3");
    CHECK(ExtInt::neg_inf().str() == "-inf");
    CHECK(ExtInt::pos_inf().str() == "+inf");
    CHECK(ExtInt::of(2) == ExtInt::of(2));
    CHECK_FALSE(ExtInt::of(2) == ExtInt::of(1));
    CHECK_FALSE(ExtInt::neg_inf() == ExtInt::of(0));
    CHECK(InvStatus::exact().str() == "exact");
    CHECK(InvStatus::up_to(8).str() == "certified-up-to-bound(B=8)");
    CHECK(InvStatus::up_to(6, 4).str() == "certified-up-to-bound(B=6,t=4)");
    CHECK(InvStatus::unknown(8).str() == "unknown(B=8)");
}

TEST_CASE("depth over several rings") {
    GradedRing H = hypersurface_uv();
    InvariantReport dk = depth_report(over_self(FPModule::residue_field(H)), 8);
    CHECK(dk.value == ExtInt::of(0));
    CHECK(dk.status.kind == InvStatus::Exact);
    CHECK(dk.certificate["first_nonvanishing"] == 0);

    InvariantReport dr = depth_report(over_self(FPModule::free_module(H, {0})), 8);
    CHECK(dr.value == ExtInt::of(1));
    CHECK(dr.status.kind == InvStatus::Exact);

    GradedRing A = artinian_x3();
    CHECK(depth_report(over_self(FPModule::free_module(A, {0})), 8).value == ExtInt::of(0));

    GradedRing P2(field_rationals(), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    CHECK(depth_report(over_self(FPModule::free_module(P2, {0})), 8).value == ExtInt::of(2));

    InvariantReport dz = depth_report(
        over_self(FPModule::cokernel(GradedMatrix::identity(H, {0}))), 8);
    CHECK(dz.value == ExtInt::pos_inf());
    CHECK(dz.status.kind == InvStatus::Exact);
}

TEST_CASE("depth across a ring map") {
    LineToPlane lp;
    FPModule N = FPModule::cyclic_quotient(lp.S, {poly(lp.S, {{1, {1, 0}}})});
    InvariantReport d = depth_report(restrict_scalars(lp.phi, N), 8);
    CHECK(d.value == ExtInt::of(0)); // x kills all of S/(x)
    CHECK(d.status.kind == InvStatus::Exact);
    // the whole plane is x-regular, so its depth over the line is one
    InvariantReport ds = depth_report(restrict_scalars(lp.phi, FPModule::free_module(lp.S, {0})), 8);
    CHECK(ds.value == ExtInt::of(1));
}

TEST_CASE("bounded flat dimension") {
    GradedRing P2(field_rationals(), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    InvariantReport f = fd_report(over_self(FPModule::residue_field(P2)), 8);
    CHECK(f.value == ExtInt::of(2));
    CHECK(f.status.kind == InvStatus::Exact);

    GradedRing H = hypersurface_uv();
    InvariantReport g = fd_report(over_self(FPModule::residue_field(H)), 5);
    CHECK(g.value == ExtInt::of(5)); // never stops over the hypersurface
    CHECK(g.status == InvStatus::up_to(5));

    LineToPlane lp;
    FPModule N = FPModule::cyclic_quotient(lp.S, {poly(lp.S, {{1, {1, 0}}})});
    InvariantReport h = fd_report(restrict_scalars(lp.phi, N), 8);
    CHECK(h.value == ExtInt::of(1));
    CHECK(h.status.kind == InvStatus::Exact);

    CHECK(fd_report(over_self(FPModule::free_module(H, {})), 8).value == ExtInt::neg_inf());
}

TEST_CASE("ext and tor against a module handle") {
    GradedRing A = artinian_x3();
    FPModule k = FPModule::residue_field(A);
    ModuleHandle ring = over_self(FPModule::free_module(A, {0}));
    // the ring is its own injective hull here, so higher ext vanishes
    CHECK_FALSE(ext_over_map(k, ring, 0).is_zero());
    for (int i = 1; i <= 3; ++i) CHECK(ext_over_map(k, ring, i).is_zero());

    // tor with the hull is concentrated in homological degree zero
    FPModule E = matlis_dual_module(FPModule::free_module(A, {0})).dual_pres.module;
    CHECK_FALSE(tor_over_map(E, over_self(k), 0).is_zero());
    for (int i = 1; i <= 3; ++i) CHECK(tor_over_map(E, over_self(k), i).is_zero());

    CHECK_THROWS_AS(tor_over_map(k, ring, -1), std::invalid_argument);
    GradedRing H = hypersurface_uv();
    CHECK_THROWS_AS(tor_over_map(FPModule::residue_field(H), ring, 0),
                    std::invalid_argument);
}

TEST_CASE("total reflexivity") {
    GradedRing H = hypersurface_uv();
    CHECK(is_totally_reflexive(FPModule::free_module(H, {0, 2}), 6).passed);

    // over the gorenstein artinian ring even the residue field is reflexive
    GradedRing A = artinian_x3();
    ReflexiveCheck rk = is_totally_reflexive(FPModule::residue_field(A), 6);
    CHECK(rk.passed);

    // over the hypersurface the residue field has a zero dual
    ReflexiveCheck rh = is_totally_reflexive(FPModule::residue_field(H), 6);
    CHECK_FALSE(rh.passed);
    CHECK(rh.reason == "biduality is not an isomorphism");

    // over the short ring the dual is the two dimensional socle, so the
    // double dual has the wrong rank
    GradedRing F = square_zero_xy();
    ReflexiveCheck rf = is_totally_reflexive(FPModule::residue_field(F), 6);
    CHECK_FALSE(rf.passed);
    CHECK(rf.reason == "biduality is not an isomorphism");

    CHECK(is_totally_reflexive(FPModule::free_module(H, {}), 6).passed);
}

TEST_CASE("bounded restricted projective dimension against the ring") {
    // finite resolution: the answer is exact
    GradedRing P2(field_rationals(), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    InvariantReport gk = gdim_report(FPModule::residue_field(P2), 8);
    CHECK(gk.value == ExtInt::of(2));
    CHECK(gk.status.kind == InvStatus::Exact);

    // infinite resolution but a reflexive syzygy: certified up to the bound
    GradedRing H = hypersurface_uv();
    InvariantReport gh = gdim_report(FPModule::residue_field(H), 8);
    CHECK(gh.value == ExtInt::of(1));
    CHECK(gh.status == InvStatus::up_to(8));
    CHECK(gh.certificate["ext_nonvanishing"] == nlohmann::json({1}));

    GradedRing A = artinian_x3();
    InvariantReport ga = gdim_report(FPModule::residue_field(A), 8);
    CHECK(ga.value == ExtInt::of(0));
    CHECK(ga.status == InvStatus::up_to(8));

    // over the short ring nothing can be pinned down inside the window
    GradedRing F = square_zero_xy();
    InvariantReport gf = gdim_report(FPModule::residue_field(F), 8);
    CHECK(gf.status == InvStatus::unknown(8));
    std::vector<int64_t> doubling;
    for (int i = 0; i <= 8; ++i) doubling.push_back(INT64_C(1) << i);
    CHECK(gf.certificate["betti"] == nlohmann::json(doubling));
    CHECK(gf.certificate["ext_nonvanishing"].size() == 9);

    CHECK(gdim_report(FPModule::free_module(H, {3}), 8).value == ExtInt::of(0));
    CHECK(gdim_report(FPModule::free_module(H, {}), 8).value == ExtInt::neg_inf());
}

TEST_CASE("gorenstein flat dimension through the injective tower") {
    // artinian source: the tower reaches the true hull and settles at zero
    GradedRing A = artinian_x3();
    InvariantReport ga = gfd_report(over_self(FPModule::residue_field(A)), 4, 6);
    CHECK(ga.value == ExtInt::of(0));
    CHECK(ga.status == InvStatus::up_to(6, 4));
    CHECK(ga.certificate["stabilized"] == true);
    CHECK(ga.certificate["at_window_ceiling"] == false);
    CHECK(ga.certificate["per_t"][0]["value"] == "6"); // the bottom level overshoots
    CHECK(ga.certificate["per_t"][3]["value"] == "0");

    // across the map into the plane the tower sits at one on every level
    LineToPlane lp;
    FPModule N = FPModule::cyclic_quotient(lp.S, {poly(lp.S, {{1, {1, 0}}})});
    InvariantReport gn = gfd_report(restrict_scalars(lp.phi, N), 4, 6);
    CHECK(gn.value == ExtInt::of(1));
    CHECK(gn.certificate["stabilized"] == true);
    CHECK(gn.certificate["per_t"][0]["value"] == "1");

    CHECK(gfd_report(over_self(FPModule::free_module(A, {})), 4, 6).value ==
          ExtInt::neg_inf());
    CHECK_THROWS_AS(gfd_report(over_self(FPModule::residue_field(A)), 0, 6),
                    std::invalid_argument);
}

TEST_CASE("restricted flat dimension against chosen test modules") {
    GradedRing H = hypersurface_uv();
    FPModule k = FPModule::residue_field(H);
    FPModule T = FPModule::cyclic_quotient(H, {poly(H, {{1, {1, 0}}, {1, {0, 1}}})});
    InvariantReport r = rfd_report(over_self(k), {T}, 8);
    CHECK(r.value == ExtInt::of(1));
    CHECK(r.status == InvStatus::up_to(8));
    CHECK(r.certificate["tests"][0]["test_pd"] == 1);

    CHECK_THROWS_AS(rfd_report(over_self(k), {}, 8), std::invalid_argument);
    // the residue field itself never resolves inside the window here
    CHECK_THROWS_AS(rfd_report(over_self(k), {k}, 8), std::invalid_argument);
}

TEST_CASE("support membership at the maximal ideal") {
    GradedRing H = hypersurface_uv();
    CHECK(supp_member_max(over_self(FPModule::residue_field(H))).member);
    CHECK_FALSE(supp_member_max(over_self(FPModule::free_module(H, {}))).member);

    LineToPlane lp;
    FPModule N = FPModule::cyclic_quotient(lp.S, {poly(lp.S, {{1, {1, 0}}})});
    SupportCheck sc = supp_member_max(restrict_scalars(lp.phi, N));
    CHECK(sc.member);
    CHECK(sc.witness["tor0_generator_degrees"].size() > 0);
}

TEST_CASE("reports serialize with their certificates") {
    GradedRing H = hypersurface_uv();
    nlohmann::json j = depth_report(over_self(FPModule::residue_field(H)), 8).to_json();
    CHECK(j["name"] == "depth");
    CHECK(j["value"] == "0");
    CHECK(j["status"] == "exact");
    CHECK(j["certificate"]["window"] == 8);

    nlohmann::json u = gdim_report(FPModule::residue_field(square_zero_xy()), 4).to_json();
    CHECK(u["value"].is_null());
    CHECK(u["status"] == "unknown(B=4)");
}
