#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/functors.hpp"

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

std::vector<int64_t> dims(const FPModule& M, int64_t lo, int64_t hi) {
    std::vector<int64_t> out;
    for (int64_t d = lo; d <= hi; ++d) out.push_back(M.graded_dim(d));
    return out;
}

int64_t total(const FPModule& M, int64_t lo, int64_t hi) {
    int64_t n = 0;
    for (int64_t d = lo; d <= hi; ++d) n += M.graded_dim(d);
    return n;
}

} // namespace

TEST_CASE("resolution of the residue field over a hypersurface") {
    GradedRing H = hypersurface_uv();
    FreeResolution res(FPModule::residue_field(H));
    for (int i = 0; i <= 8; ++i) CHECK(res.betti(i) == (i == 0 ? 1 : 2));
    CHECK_FALSE(res.finished());
    for (int i = 1; i <= 8; ++i) CHECK(res.differential(i).entries_in_max_ideal());
    CHECK(res.graded_betti(3) == std::map<int64_t, int64_t>{{3, 2}});

    ModuleComplex C = resolution_complex(res, 6);
    for (int i = 1; i <= 5; ++i) CHECK(homology_module(C, i).is_zero());
    FPModule H0 = homology_module(C, 0);
    REQUIRE(H0.gen_degrees() == std::vector<int64_t>{0});
    GradedMatrix one(H, {0}, {0});
    one.set_entry(0, 0, H.one());
    CHECK(map_is_isomorphism(H0, FPModule::residue_field(H), one));

    // the augmentation is a chain map onto the module in degree 0
    ChainMap aug{0, {res.augmentation()}};
    CHECK(chain_map_commutes(C, one_term_complex(res.target(), 0), aug));
}

TEST_CASE("periodic resolution over an artinian hypersurface") {
    GradedRing A = artinian_x3();
    FreeResolution res(FPModule::residue_field(A));
    res.extend(5);
    Polynomial x = poly(A, {{1, {1}}}), x2 = poly(A, {{1, {2}}});
    for (int i = 0; i <= 4; ++i) CHECK(res.betti(i) == 1);
    CHECK(res.differential(1).entry(0, 0) == x);
    CHECK(res.differential(2).entry(0, 0) == x2);
    CHECK(res.differential(3).entry(0, 0) == x);
    CHECK(res.differential(4).entry(0, 0) == x2);
}

TEST_CASE("exponential betti growth over a short ring") {
    GradedRing F = square_zero_xy();
    FreeResolution res(FPModule::residue_field(F));
    for (int i = 0; i <= 6; ++i) CHECK(res.betti(i) == (int64_t)1 << i);
}

TEST_CASE("resolutions that stop") {
    GradedRing H = hypersurface_uv();
    FreeResolution free_res(FPModule::free_module(H, {2}));
    free_res.extend(4);
    CHECK(free_res.finished());
    CHECK(free_res.length() == 0);
    CHECK(free_res.betti(0) == 1);
    CHECK(free_res.betti(1) == 0);
    CHECK(free_res.free_degrees(0) == std::vector<int64_t>{2});

    // u+v is regular, so R/(u+v) has a length one resolution
    FreeResolution reg(FPModule::cyclic_quotient(H, {poly(H, {{1, {1, 0}}, {1, {0, 1}}})}));
    reg.extend(4);
    CHECK(reg.finished());
    CHECK(reg.length() == 1);

    GradedMatrix id = GradedMatrix::identity(H, {0});
    FreeResolution zero(FPModule::cokernel(id));
    zero.extend(2);
    CHECK(zero.finished());
    CHECK(zero.length() == -1);
    CHECK(zero.betti(0) == 0);
}

TEST_CASE("homology of explicit complexes") {
    GradedRing H = hypersurface_uv();
    Polynomial u = poly(H, {{1, {1, 0}}});
    // 0 -> R(-1) --u--> R -> 0
    GradedMatrix mu(H, {0}, {1});
    mu.set_entry(0, 0, u);
    ModuleComplex C = make_complex(
        H, 0, {FPModule::free_module(H, {0}), FPModule::free_module(H, {1})}, {mu});

    FPModule H0 = homology_module(C, 0), H1 = homology_module(C, 1);
    CHECK(dims(H0, 0, 3) == std::vector<int64_t>({1, 1, 1, 1})); // R/(u)
    CHECK(dims(H1, 0, 3) == std::vector<int64_t>({0, 0, 1, 1})); // (v), shifted into R(-1)
    CHECK(sup_homology(C) == 1);
    CHECK(inf_homology(C) == 0);

    // shifting moves homology and preserves dimensions
    ModuleComplex S3 = shift_complex(C, 3);
    CHECK(sup_homology(S3) == 4);
    CHECK(dims(homology_module(S3, 3), 0, 3) == dims(H0, 0, 3));
    CHECK(dims(homology_module(S3, 4), 0, 3) == dims(H1, 0, 3));

    // truncations keep the advertised windows
    ModuleComplex up = keep_at_or_above(C, 1), down = keep_at_or_below(C, 0);
    CHECK(up.lo == 1);
    CHECK(up.hi() == 1);
    CHECK(down.lo == 0);
    CHECK(down.hi() == 0);
    CHECK(homology_module(up, 1).graded_dim(1) == 1); // all of R(-1)
    CHECK(homology_module(down, 0).graded_dim(1) == 2); // all of R

    // zero differentials leave the components as homology
    ModuleComplex Z = make_complex(
        H, 0, {FPModule::free_module(H, {0}), FPModule::free_module(H, {0})},
        {GradedMatrix(H, {0}, {0})});
    CHECK(homology_module(Z, 0).graded_dim(0) == 1);
    CHECK(homology_module(Z, 1).graded_dim(0) == 1);

    // an exact complex has empty homology support
    GradedRing P(field_rationals(), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    GradedMatrix idp = GradedMatrix::identity(P, {0});
    ModuleComplex E = make_complex(
        P, 0, {FPModule::free_module(P, {0}), FPModule::free_module(P, {0})}, {idp});
    CHECK_FALSE(sup_homology(E).has_value());
    CHECK_FALSE(inf_homology(E).has_value());
}

TEST_CASE("koszul complex over the polynomial ring") {
    GradedRing P(field_rationals(), {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    FreeResolution res(FPModule::residue_field(P));
    res.extend(3);
    CHECK(res.finished());
    CHECK(res.length() == 2);
    CHECK(res.betti(0) == 1);
    CHECK(res.betti(1) == 2);
    CHECK(res.betti(2) == 1);
    ModuleComplex C = resolution_complex(res, 2);
    CHECK(homology_module(C, 1).is_zero());
    CHECK(homology_module(C, 2).is_zero());
    CHECK(homology_module(C, 0).graded_dim(0) == 1);
}

TEST_CASE("base change of free complexes") {
    Field f = field_rationals();
    GradedRing R1(f, {"x"}, {1}, OrderKind::DegRevLex, {});
    GradedRing S2(f, {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    RingMap incl(R1, S2, {poly(S2, {{1, {1, 0}}})});

    GradedMatrix mx(R1, {0}, {1});
    mx.set_entry(0, 0, poly(R1, {{1, {1}}}));
    ModuleComplex C = make_complex(
        R1, 0, {FPModule::free_module(R1, {0}), FPModule::free_module(R1, {1})}, {mx});
    ModuleComplex CS = base_change_complex(incl, C);
    CHECK(CS.R.same(S2));
    CHECK(CS.diffs[0].entry(0, 0) == poly(S2, {{1, {1, 0}}}));

    // x^2 dies in the target, leaving a zero differential
    GradedRing S2q(f, {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {poly(S2, {{1, {2, 0}}})});
    RingMap tozero(R1, S2q, {poly(S2q, {{1, {1, 0}}})});
    GradedMatrix mx2(R1, {0}, {2});
    mx2.set_entry(0, 0, poly(R1, {{1, {2}}}));
    ModuleComplex C2 = make_complex(
        R1, 0, {FPModule::free_module(R1, {0}), FPModule::free_module(R1, {2})}, {mx2});
    ModuleComplex C2S = base_change_complex(tozero, C2);
    CHECK(C2S.diffs[0].is_zero());
}

TEST_CASE("tensoring a free complex with a module over the target") {
    Field f = field_rationals();
    GradedRing R1(f, {"x"}, {1}, OrderKind::DegRevLex, {});
    GradedRing S2(f, {"x", "y"}, {1, 1}, OrderKind::DegRevLex, {});
    RingMap incl(R1, S2, {poly(S2, {{1, {1, 0}}})});
    ModuleHandle N = restrict_scalars(incl, FPModule::cyclic_quotient(S2, {poly(S2, {{1, {1, 0}}})}));

    // 0 -> R(-2) --x^2--> R -> 0; x^2 acts as zero on N = S/(x)
    GradedMatrix mx2(R1, {0}, {2});
    mx2.set_entry(0, 0, poly(R1, {{1, {2}}}));
    ModuleComplex C = make_complex(
        R1, 0, {FPModule::free_module(R1, {0}), FPModule::free_module(R1, {2})}, {mx2});
    ModuleComplex T = tensor_with_module(C, N);
    CHECK(dims(homology_module(T, 0), 0, 2) == std::vector<int64_t>({1, 1, 1}));
    CHECK(dims(homology_module(T, 1), 2, 4) == std::vector<int64_t>({1, 1, 1}));

    // a free target module has no higher homology against any resolution
    FreeResolution resk(FPModule::residue_field(R1));
    ModuleComplex RC = resolution_complex(resk, 3);
    ModuleHandle Sfree = restrict_scalars(incl, FPModule::free_module(S2, {0}));
    ModuleComplex TS = tensor_with_module(RC, Sfree);
    CHECK(homology_module(TS, 1).is_zero());
    CHECK(dims(homology_module(TS, 0), 0, 2) == std::vector<int64_t>({1, 1, 1}));

    // Tor of k with itself over an artinian hypersurface has the betti ranks
    GradedRing A = artinian_x3();
    RingMap ida = RingMap::identity(A);
    FreeResolution reska(FPModule::residue_field(A));
    ModuleComplex TA = tensor_with_module(resolution_complex(reska, 4),
                                          restrict_scalars(ida, FPModule::residue_field(A)));
    for (int i = 0; i <= 4; ++i) CHECK(total(homology_module(TA, i), 0, 6) == 1);
}

TEST_CASE("hom from a resolution into a module") {
    GradedRing H = hypersurface_uv();
    RingMap idh = RingMap::identity(H);
    FreeResolution res(FPModule::residue_field(H));
    ModuleComplex HomC =
        hom_into_module(resolution_complex(res, 3), restrict_scalars(idh, FPModule::free_module(H, {0})));
    // depth one: no socle, but Ext^1(k, R) is nonzero
    CHECK(homology_module(HomC, 0).is_zero());
    CHECK_FALSE(homology_module(HomC, -1).is_zero());

    GradedRing A = artinian_x3();
    RingMap ida = RingMap::identity(A);
    FreeResolution reska(FPModule::residue_field(A));
    ModuleComplex HomA = hom_into_module(resolution_complex(reska, 3),
                                         restrict_scalars(ida, FPModule::residue_field(A)));
    for (int i = 0; i <= 3; ++i) CHECK(total(homology_module(HomA, -i), -6, 6) == 1);

    // a free complex concentrated in degree zero dualizes to the module itself
    ModuleComplex F0 = one_term_complex(FPModule::free_module(H, {0, 0}), 0);
    ModuleComplex HomF = hom_into_module(F0, restrict_scalars(idh, FPModule::cyclic_quotient(H, {poly(H, {{1, {1, 0}}})})));
    CHECK(dims(homology_module(HomF, 0), 0, 2) == std::vector<int64_t>({2, 2, 2}));
}
