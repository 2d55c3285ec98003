#include "ghom/verify.hpp"

#include "ghom/invariants.hpp"
#include "ghom/resolution.hpp"

#include <algorithm>
#include <optional>

namespace ghom {

namespace {

std::string ring_display_name(const Fixture& f, const GradedRing& R) {
    for (const auto& [n, r] : f.rings)
        if (r.same(R)) return n;
    return "?";
}

ModuleHandle ring_as_module(const GradedRing& R) {
    return {RingMap::identity(R), FPModule::free_module(R, {0})};
}

// engine value against a fixture expectation; unknown statuses compare to
// the literal "unknown", infinities to the sign conventions
CheckResult compare_expected(const std::string& check_name, const InvariantReport& rep,
                             const ExpectedValue& want) {
    nlohmann::json cert = {{"expected", want.str()}, {"report", rep.to_json()}};
    if (want.kind == ExpectedValue::Unknown) {
        if (rep.status.kind == InvStatus::Unknown)
            return CheckResult::pass(check_name, std::move(cert));
        return CheckResult::fail(check_name, std::move(cert));
    }
    if (rep.status.kind == InvStatus::Unknown)
        return CheckResult::unknown(check_name, std::move(cert));
    ExtInt want_ext = want.kind == ExpectedValue::NegInf ? ExtInt::neg_inf()
                      : want.kind == ExpectedValue::PosInf ? ExtInt::pos_inf()
                                                           : ExtInt::of(want.n);
    if (rep.value == want_ext) return CheckResult::pass(check_name, std::move(cert));
    return CheckResult::fail(check_name, std::move(cert));
}

// tower value with the ceiling policy applied: nullopt when the window
// cannot separate the value from larger ones
std::optional<ExtInt> settled_gfd(const InvariantReport& rep, int bound) {
    if (rep.status.kind == InvStatus::Unknown) return std::nullopt;
    if (rep.value == ExtInt::of(bound)) return std::nullopt;
    return rep.value;
}

CheckResult gfd_value_check(const InvariantReport& rep, int bound) {
    nlohmann::json cert = rep.to_json();
    if (auto v = settled_gfd(rep, bound)) {
        cert["note"] = "value " + v->str();
        return CheckResult::pass("gfd_value", std::move(cert));
    }
    cert["note"] = "tower value sits on the window ceiling";
    return CheckResult::unknown("gfd_value", std::move(cert));
}

CheckResult gfd_stabilized_check(const InvariantReport& rep) {
    nlohmann::json cert = rep.certificate;
    bool stab = rep.certificate.value("stabilized", false);
    if (rep.status.kind == InvStatus::Exact || stab)
        return CheckResult::pass("gfd_stabilized", std::move(cert));
    cert["note"] = "top two tower levels disagree";
    return CheckResult::unknown("gfd_stabilized", std::move(cert));
}

struct DepthSide {
    InvariantReport ring_depth;
    InvariantReport module_depth;
    std::optional<int64_t> difference; // set when both ended finite
};

DepthSide depth_difference(const ModuleHandle& subject, int bound) {
    DepthSide d{depth_report(ring_as_module(subject.phi.source()), bound),
                depth_report(subject, bound), std::nullopt};
    if (d.ring_depth.status.kind != InvStatus::Unknown &&
        d.module_depth.status.kind != InvStatus::Unknown && d.ring_depth.value.is_finite() &&
        d.module_depth.value.is_finite())
        d.difference = d.ring_depth.value.n - d.module_depth.value.n;
    return d;
}

CheckResult depth_difference_check(const DepthSide& d) {
    nlohmann::json cert = {{"ring_depth", d.ring_depth.to_json()},
                           {"module_depth", d.module_depth.to_json()}};
    if (d.difference) {
        cert["note"] = "difference " + std::to_string(*d.difference);
        return CheckResult::pass("depth_difference", std::move(cert));
    }
    cert["note"] = "a depth did not settle to a finite value";
    return CheckResult::unknown("depth_difference", std::move(cert));
}

// the two support conclusions for a nonzero subject: finite depth, and a
// visible Tor against the bottom of the injective tower
void append_support_checks(std::vector<CheckResult>& out, const Fixture& f,
                           const ModuleHandle& subject, const InvariantReport& module_depth,
                           int bound) {
    {
        nlohmann::json cert = module_depth.to_json();
        if (module_depth.status.kind == InvStatus::Unknown)
            out.push_back(CheckResult::unknown("supp_depth_finite", std::move(cert)));
        else if (module_depth.value.is_finite())
            out.push_back(CheckResult::pass("supp_depth_finite", std::move(cert)));
        else
            out.push_back(CheckResult::fail("supp_depth_finite", std::move(cert)));
    }
    const GradedRing& R = subject.phi.source();
    int level = f.matlis_level(ring_display_name(f, R), 1);
    FPModule E = injective_hull_truncation(R, level).pres.module;
    for (int i = 0; i <= bound; ++i) {
        FPModule T = tor_over_map(E, subject, i);
        if (!T.is_zero()) {
            nlohmann::json cert = {{"tor_spot", i},
                                   {"truncation_level", level},
                                   {"generator_degrees", T.minimized().module.gen_degrees()},
                                   {"note", "Tor nonzero at homological degree " +
                                                std::to_string(i)}};
            out.push_back(CheckResult::pass("supp_tor_witness", std::move(cert)));
            return;
        }
    }
    out.push_back(CheckResult::unknown(
        "supp_tor_witness",
        {{"truncation_level", level},
         {"note", "no Tor seen through homological degree " + std::to_string(bound)}}));
}

InvariantReport betti_list_report(const FPModule& M, size_t upto) {
    FreeResolution res(M);
    InvariantReport rep;
    rep.name = "betti";
    std::vector<int64_t> b;
    for (size_t i = 0; i < upto; ++i) b.push_back(res.betti((int)i));
    rep.status = res.finished() && res.length() < (int)upto ? InvStatus::exact()
                                                            : InvStatus::up_to((int)upto - 1);
    rep.certificate = {{"betti", b}};
    rep.value = ExtInt::of(b.empty() ? 0 : b.back());
    return rep;
}

// fixture expectations resolved against engine computations; skips targets
// the caller is not examining
void append_expect_checks(std::vector<CheckResult>& out, const Fixture& f,
                          const std::string& subject_name, const GradedRing& source_ring,
                          const DepthSide& depths, const InvariantReport& gfd,
                          const InvariantReport* gdim, int bound) {
    for (const auto& ex : f.expects) {
        if (ex.target == "global") continue;
        std::string check_name = "expect_" + ex.prop + "(" + ex.target + ")";
        if (f.rings.count(ex.target)) {
            if (ex.prop != "depth") continue;
            const GradedRing& R = f.rings.at(ex.target);
            if (R.same(source_ring)) {
                out.push_back(compare_expected(check_name, depths.ring_depth, ex.value));
            } else {
                out.push_back(compare_expected(check_name,
                                               depth_report(ring_as_module(R), bound), ex.value));
            }
            continue;
        }
        if (ex.target != subject_name) continue;
        if (ex.prop == "depth") {
            out.push_back(compare_expected(check_name, depths.module_depth, ex.value));
        } else if (ex.prop == "gfd") {
            InvariantReport capped = gfd;
            if (!settled_gfd(gfd, bound)) capped.status = InvStatus::unknown(bound);
            out.push_back(compare_expected(check_name, capped, ex.value));
        } else if (ex.prop == "gdim") {
            if (gdim) out.push_back(compare_expected(check_name, *gdim, ex.value));
        } else if (ex.prop == "betti") {
            InvariantReport rep = betti_list_report(f.module(ex.target), ex.value.list.size());
            nlohmann::json cert = {{"expected", ex.value.str()}, {"report", rep.to_json()}};
            bool ok = ex.value.kind == ExpectedValue::List &&
                      rep.certificate["betti"].get<std::vector<int64_t>>() == ex.value.list;
            out.push_back(ok ? CheckResult::pass(check_name, std::move(cert))
                             : CheckResult::fail(check_name, std::move(cert)));
        }
    }
}

} // namespace

FixtureReport verify_main_fixture(const Fixture& f, const std::string& module_name, int bound,
                                  int tmax) {
    FixtureReport out{f.name, {}};
    std::string subject_name = module_name.empty() ? f.default_module() : module_name;
    ModuleHandle subject = f.subject(subject_name);

    if (subject.N.is_zero()) {
        InvariantReport dep = depth_report(subject, bound);
        InvariantReport gfd = gfd_report(subject, tmax, bound);
        out.checks.push_back(CheckResult::pass(
            "degenerate_conventions",
            {{"depth", dep.to_json()},
             {"gfd", gfd.to_json()},
             {"note", "zero module: depth " + dep.value.str() + ", gfd " + gfd.value.str()}}));
        for (const auto& ex : f.expects) {
            if (ex.target != subject_name) continue;
            std::string check_name = "expect_" + ex.prop + "(" + ex.target + ")";
            if (ex.prop == "depth")
                out.checks.push_back(compare_expected(check_name, dep, ex.value));
            else if (ex.prop == "gfd")
                out.checks.push_back(compare_expected(check_name, gfd, ex.value));
        }
        return out;
    }

    InvariantReport gfd = gfd_report(subject, tmax, bound);
    out.checks.push_back(gfd_value_check(gfd, bound));
    out.checks.push_back(gfd_stabilized_check(gfd));

    DepthSide depths = depth_difference(subject, bound);
    out.checks.push_back(depth_difference_check(depths));

    {
        auto a = settled_gfd(gfd, bound);
        nlohmann::json cert = {{"gfd", a ? a->str() : std::string("unsettled")},
                               {"depth_difference",
                                depths.difference ? std::to_string(*depths.difference)
                                                  : std::string("unsettled")}};
        if (!a || !depths.difference) {
            cert["note"] = "one side is unsettled at these bounds";
            out.checks.push_back(CheckResult::unknown("main_equality", std::move(cert)));
        } else if (*a == ExtInt::of(*depths.difference)) {
            cert["note"] = "both sides equal " + a->str();
            out.checks.push_back(CheckResult::pass("main_equality", std::move(cert)));
        } else {
            out.checks.push_back(CheckResult::fail("main_equality", std::move(cert)));
        }
    }

    InvariantReport gdim = gdim_report(subject.N, bound);
    if (subject.phi.is_identity()) {
        nlohmann::json cert = gdim.to_json();
        if (gdim.status.kind == InvStatus::Unknown || !depths.difference) {
            cert["note"] = "restricted dimension did not settle";
            out.checks.push_back(CheckResult::unknown("gdim_matches_depth", std::move(cert)));
        } else if (gdim.value == ExtInt::of(*depths.difference)) {
            cert["note"] = "matches the depth difference";
            out.checks.push_back(CheckResult::pass("gdim_matches_depth", std::move(cert)));
        } else {
            out.checks.push_back(CheckResult::fail("gdim_matches_depth", std::move(cert)));
        }
    } else {
        nlohmann::json cert = gdim.to_json();
        if (gdim.status.kind == InvStatus::Unknown) {
            cert["note"] = "target-ring dimension did not settle";
            out.checks.push_back(CheckResult::unknown("gdim_over_target", std::move(cert)));
        } else {
            cert["note"] = "target-ring value " + gdim.value.str();
            out.checks.push_back(CheckResult::pass("gdim_over_target", std::move(cert)));
        }
    }

    append_support_checks(out.checks, f, subject, depths.module_depth, bound);
    append_expect_checks(out.checks, f, subject_name, subject.phi.source(), depths, gfd,
                         subject.phi.is_identity() ? &gdim : nullptr, bound);
    return out;
}

FixtureReport verify_loc_fixture(const Fixture& f, int bound, int tmax) {
    if (f.localizations.empty())
        throw FixtureError("fixture " + f.name + ": no localization stand-ins declared", 0, 0);
    const ExpectStmt* global = nullptr;
    for (const auto& ex : f.expects)
        if (ex.target == "global" && ex.prop == "gfd") global = &ex;
    if (!global)
        throw FixtureError("fixture " + f.name + ": missing 'expect gfd(global)' entry", 0, 0);
    if (global->value.kind != ExpectedValue::Int)
        throw FixtureError("fixture " + f.name + ": the expected global value must be an integer",
                           0, 0);
    const GradedRing& base = f.map(f.localizations.front().map).source();
    for (const auto& lc : f.localizations)
        if (!f.map(lc.map).source().same(base))
            throw FixtureError("fixture " + f.name + ": stand-in '" + lc.name +
                                   "' does not start from the common base ring",
                               0, 0);

    int64_t g = global->value.n;
    FixtureReport out{f.name, {}};
    std::vector<std::optional<ExtInt>> values;
    for (const auto& lc : f.localizations) {
        ModuleHandle h = restrict_scalars(f.map(lc.map), f.module(lc.module));
        InvariantReport rep = gfd_report(h, tmax, bound);
        auto v = settled_gfd(rep, bound);
        values.push_back(v);
        nlohmann::json cert = rep.to_json();
        cert["stand_in"] = lc.name;
        if (v) {
            cert["note"] = "local value " + v->str();
            out.checks.push_back(CheckResult::pass("local_gfd(" + lc.name + ")", cert));
            nlohmann::json c2 = {{"local", v->str()},
                                 {"global", g},
                                 {"note", v->str() + " <= " + std::to_string(g)}};
            bool le = !v->is_finite() ? v->kind == ExtInt::NegInf : v->n <= g;
            out.checks.push_back(le ? CheckResult::pass("local_le_global(" + lc.name + ")", c2)
                                    : CheckResult::fail("local_le_global(" + lc.name + ")", c2));
        } else {
            cert["note"] = "tower value unsettled";
            out.checks.push_back(CheckResult::unknown("local_gfd(" + lc.name + ")", cert));
            out.checks.push_back(CheckResult::unknown(
                "local_le_global(" + lc.name + ")",
                {{"note", "local value unsettled at these bounds"}}));
        }
    }
    {
        bool all_known = std::all_of(values.begin(), values.end(),
                                     [](const auto& v) { return v.has_value(); });
        nlohmann::json cert = {{"global", g}};
        if (!all_known) {
            cert["note"] = "a stand-in is unsettled";
            out.checks.push_back(CheckResult::unknown("global_is_max", std::move(cert)));
        } else {
            ExtInt mx = ExtInt::neg_inf();
            for (const auto& v : values)
                if (v->kind == ExtInt::PosInf ||
                    (mx.kind != ExtInt::PosInf &&
                     (mx.kind == ExtInt::NegInf || (v->is_finite() && v->n > mx.n))))
                    mx = *v;
            cert["max_over_stand_ins"] = mx.str();
            cert["note"] = "max " + mx.str() + " vs global " + std::to_string(g);
            out.checks.push_back(mx == ExtInt::of(g)
                                     ? CheckResult::pass("global_is_max", std::move(cert))
                                     : CheckResult::fail("global_is_max", std::move(cert)));
        }
    }
    return out;
}

FixtureReport verify_supp_fixture(const Fixture& f, const std::string& module_name, int bound) {
    FixtureReport out{f.name, {}};
    std::string subject_name = module_name.empty() ? f.default_module() : module_name;
    ModuleHandle subject = f.subject(subject_name);
    if (subject.N.is_zero()) {
        out.checks.push_back(CheckResult::pass(
            "supp_vacuous", {{"note", "zero module: support conclusions are vacuous"}}));
        return out;
    }
    InvariantReport dep = depth_report(subject, bound);
    append_support_checks(out.checks, f, subject, dep, bound);
    return out;
}

bool main_applicable(const Fixture& f) {
    try {
        f.default_module();
        return true;
    } catch (const FixtureError&) {
        return false;
    }
}

bool loc_applicable(const Fixture& f) { return !f.localizations.empty(); }

bool supp_applicable(const Fixture& f) { return main_applicable(f); }

} // namespace ghom
