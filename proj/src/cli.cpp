#include "ghom/cli.hpp"

#include "ghom/approximation.hpp"
#include "ghom/invariants.hpp"
#include "ghom/resolution.hpp"
#include "ghom/verify.hpp"
#include "ghom/version.hpp"

#include <CLI11.hpp>

#include <future>
#include <ostream>
#include <sstream>

#ifndef GHOM_DEFAULT_FIXTURE_DIR
#define GHOM_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace ghom {

namespace {

struct CliOptions {
    std::vector<std::string> fixture_paths;
    std::string module_name;
    int bound = 8;
    int tmax = 4;
    int cut = 0;
    std::string field;
    std::string format = "text";
};

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (size_t i = 0; i < args.size(); ++i) s += (i ? " " : "") + args[i];
    return s;
}

bool field_matches(const Fixture& f, const std::string& want) {
    for (const auto& [n, R] : f.rings)
        if (R.field().str() != want) return false;
    return true;
}

void validate_field_flag(const std::string& s) {
    if (s.empty() || s == "QQ") return;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(3, s.size() - 4);
        if (!inner.empty() && inner.find_first_not_of("0123456789") == std::string::npos) {
            field_prime((uint32_t)std::stoll(inner)); // throws on non-primes
            return;
        }
    }
    throw FixtureError("--field must be QQ or GF(p), got '" + s + "'", 0, 0);
}

/* Fixtures chosen by the flags: explicit paths must all parse and match the
   field filter; with no explicit paths the shipped directory is scanned and
   the filter selects silently. */
std::vector<Fixture> load_selection(const CliOptions& o) {
    validate_field_flag(o.field);
    std::vector<Fixture> sel;
    if (!o.fixture_paths.empty()) {
        for (const auto& p : o.fixture_paths) {
            Fixture f = parse_fixture_file(p);
            if (!o.field.empty() && !field_matches(f, o.field))
                throw FixtureError("fixture " + f.name + " does not match --field " + o.field, 0,
                                   0);
            sel.push_back(std::move(f));
        }
    } else {
        for (const auto& p : list_fixture_files(GHOM_DEFAULT_FIXTURE_DIR)) {
            Fixture f = parse_fixture_file(p);
            if (o.field.empty() || field_matches(f, o.field)) sel.push_back(std::move(f));
        }
        if (sel.empty())
            throw FixtureError("no fixtures found under " GHOM_DEFAULT_FIXTURE_DIR, 0, 0);
    }
    std::sort(sel.begin(), sel.end(),
              [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return sel;
}

/* The single fixture and module a computation verb acts on.  With --module
   the fixture containing that module is found (and must be unique); without
   it the selection must already be a single fixture. */
std::pair<Fixture, std::string> resolve_computation_subject(std::vector<Fixture> sel,
                                                            const std::string& module_flag) {
    if (module_flag.empty()) {
        if (sel.size() != 1)
            throw FixtureError(
                "this command works on one fixture; pass --fixture or name a --module", 0, 0);
        std::string name = sel.front().default_module();
        return {std::move(sel.front()), name};
    }
    std::vector<size_t> hits;
    for (size_t i = 0; i < sel.size(); ++i)
        if (sel[i].modules.count(module_flag)) hits.push_back(i);
    if (hits.empty())
        throw FixtureError("module '" + module_flag + "' is not declared in any selected fixture",
                           0, 0);
    if (hits.size() > 1) {
        std::string where;
        for (size_t i : hits) where += (where.empty() ? "" : ", ") + sel[i].name;
        throw FixtureError("module '" + module_flag + "' is ambiguous across " + where +
                               "; pass --fixture",
                           0, 0);
    }
    return {std::move(sel[hits.front()]), module_flag};
}

ModuleHandle ring_as_module(const GradedRing& R) {
    return {RingMap::identity(R), FPModule::free_module(R, {0})};
}

CheckResult invariant_check(const std::string& name, const InvariantReport& rep) {
    nlohmann::json cert = rep.to_json();
    if (rep.status.kind == InvStatus::Unknown) {
        cert["note"] = "bounds exhausted: " + rep.status.str();
        return CheckResult::unknown(name, std::move(cert));
    }
    cert["note"] = "value " + rep.value.str() + ", " + rep.status.str();
    return CheckResult::pass(name, std::move(cert));
}

FixtureReport run_resolve(const Fixture& f, const std::string& mod, int bound) {
    FreeResolution res(f.module(mod));
    res.extend(bound);
    nlohmann::json spots = nlohmann::json::array();
    for (int i = 0; i <= bound; ++i) {
        const auto& degs = res.free_degrees(i);
        if (degs.empty() && res.finished() && i > res.length()) break;
        spots.push_back({{"spot", i}, {"generator_degrees", degs}});
    }
    bool finished = res.finished() && res.length() <= bound;
    nlohmann::json cert = {{"spots", spots},
                           {"finished", finished},
                           {"note", finished ? "resolution terminates at spot " +
                                                   std::to_string(res.length())
                                             : "resolution continues past the window"}};
    return {f.name, {CheckResult::pass("resolution(" + mod + ")", std::move(cert))}};
}

FixtureReport run_betti(const Fixture& f, const std::string& mod, int bound) {
    FreeResolution res(f.module(mod));
    std::vector<int64_t> b;
    nlohmann::json graded = nlohmann::json::array();
    for (int i = 0; i <= bound; ++i) {
        b.push_back(res.betti(i));
        nlohmann::json row;
        for (const auto& [d, c] : res.graded_betti(i)) row[std::to_string(d)] = c;
        graded.push_back({{"spot", i}, {"by_degree", row}});
    }
    std::string btxt;
    for (size_t i = 0; i < b.size(); ++i) btxt += (i ? "," : "") + std::to_string(b[i]);
    nlohmann::json cert = {{"betti", b},
                           {"graded", graded},
                           {"finished", res.finished() && res.length() <= bound},
                           {"note", "betti " + btxt}};
    return {f.name, {CheckResult::pass("betti(" + mod + ")", std::move(cert))}};
}

FixtureReport run_functor_rows(const Fixture& f, const std::string& mod, int bound, bool ext) {
    ModuleHandle subject = f.subject(mod);
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i <= bound; ++i) {
        FPModule H = ext ? ext_over_map(f.module(mod), ring_as_module(f.module(mod).ring()), i)
                         : tor_over_map(FPModule::residue_field(subject.phi.source()), subject, i);
        const FPModule& Hm = H.minimized().module;
        rows.push_back({{"i", i},
                        {"nonzero", !H.is_zero()},
                        {"generator_degrees", Hm.gen_degrees()}});
    }
    std::string name = (ext ? "ext_against_ring(" : "tor_residue(") + mod + ")";
    return {f.name, {CheckResult::pass(name, {{"rows", rows}})}};
}

FixtureReport run_approximate(const Fixture& f, const std::string& mod, int cut, int bound) {
    ApproximationResult A = approximate_module(f.module(mod), cut, bound);
    nlohmann::json cert = A.to_json();
    std::string name = "approximation(" + mod + ")";
    if (!A.triangle) {
        cert["note"] = "restricted dimension not certified at these bounds";
        return {f.name, {CheckResult::unknown(name, std::move(cert))}};
    }
    if (A.all_passed) {
        cert["note"] = "all decomposition checks passed at cut " + std::to_string(cut);
        return {f.name, {CheckResult::pass(name, std::move(cert))}};
    }
    cert["note"] = "a decomposition check failed";
    return {f.name, {CheckResult::fail(name, std::move(cert))}};
}

/* Verification verbs fan out over the applicable fixtures, one worker per
   fixture.  Workers re-parse from disk so no engine values are shared across
   threads; results come back in selection order and are re-sorted by name.
   Fixtures named explicitly must fit the verb; scanned ones are skipped. */
template <class Fn>
void verify_concurrently(RunReport& rep, const std::vector<Fixture>& sel,
                         bool (*applicable)(const Fixture&), bool explicit_selection, Fn run) {
    std::vector<std::future<FixtureReport>> futs;
    std::vector<std::string> names;
    for (const auto& f : sel) {
        if (!applicable(f)) {
            if (explicit_selection) {
                rep.fixtures.push_back(run(f)); // throws the verb's own error
                continue;
            }
            rep.skipped.push_back(f.name);
            continue;
        }
        std::string path = f.source_path;
        std::string text = path.empty() ? print_fixture(f) : "";
        std::string name = f.name;
        futs.push_back(std::async(std::launch::async, [path, text, name, run] {
            Fixture fresh = path.empty() ? parse_fixture_text(text, name)
                                         : parse_fixture_file(path);
            return run(fresh);
        }));
        names.push_back(f.name);
    }
    for (auto& fu : futs) rep.fixtures.push_back(fu.get());
    rep.sort_by_fixture();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions o;
    CLI::App app{"bounded verification of homological dimension identities", "ghom"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* s) {
        s->add_option("--fixture", o.fixture_paths, "fixture file (repeatable; default: shipped set)");
        s->add_option("--module", o.module_name, "subject module");
        s->add_option("--bound", o.bound, "resolution window")->check(CLI::Range(1, 64));
        s->add_option("--tmax", o.tmax, "injective tower height")->check(CLI::Range(1, 16));
        s->add_option("--field", o.field, "restrict to fixtures over this field (QQ or GF(p))");
        s->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        return s;
    };

    CLI::App* c_resolve = add_common(app.add_subcommand("resolve", "free resolution of a module"));
    CLI::App* c_betti = add_common(app.add_subcommand("betti", "betti numbers through the window"));
    CLI::App* c_depth = add_common(app.add_subcommand("depth", "depth of the subject"));
    CLI::App* c_ext = add_common(app.add_subcommand("ext", "Ext against the ring"));
    CLI::App* c_tor = add_common(app.add_subcommand("tor", "Tor against the residue field"));
    CLI::App* c_gdim = add_common(app.add_subcommand("gdim", "restricted dimension over the ring"));
    CLI::App* c_gfd = add_common(app.add_subcommand("gfd", "Tor-tower dimension over the structure map"));
    CLI::App* c_approx =
        add_common(app.add_subcommand("approximate", "finite/reflexive decomposition"));
    c_approx->add_option("--cut", o.cut, "splitting position")->check(CLI::Range(0, 64));
    CLI::App* c_verify = app.add_subcommand("verify", "theorem-level verification");
    c_verify->require_subcommand(1);
    CLI::App* v_main = add_common(c_verify->add_subcommand("main", "dimension equals depth difference"));
    CLI::App* v_loc = add_common(c_verify->add_subcommand("loc", "global value against localized stand-ins"));
    CLI::App* v_supp = add_common(c_verify->add_subcommand("supp", "support membership of the subject"));
    CLI::App* c_fixtures = app.add_subcommand("fixtures", "fixture inventory");
    CLI::App* fx_list = add_common(c_fixtures->add_subcommand("list", "list the shipped fixtures"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ghom: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    RunReport rep;
    rep.command = join_args(args);
    rep.bound = o.bound;
    rep.tmax = o.tmax;

    try {
        std::vector<Fixture> sel = load_selection(o);
        auto single = [&]() { return resolve_computation_subject(std::move(sel), o.module_name); };

        if (c_resolve->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(run_resolve(f, mod, o.bound));
        } else if (c_betti->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(run_betti(f, mod, o.bound));
        } else if (c_depth->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(
                {f.name, {invariant_check("depth(" + mod + ")", depth_report(f.subject(mod), o.bound))}});
        } else if (c_ext->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(run_functor_rows(f, mod, o.bound, true));
        } else if (c_tor->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(run_functor_rows(f, mod, o.bound, false));
        } else if (c_gdim->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(
                {f.name, {invariant_check("gdim(" + mod + ")", gdim_report(f.module(mod), o.bound))}});
        } else if (c_gfd->parsed()) {
            auto [f, mod] = single();
            InvariantReport r = gfd_report(f.subject(mod), o.tmax, o.bound);
            if (r.status.kind != InvStatus::Unknown && r.value == ExtInt::of(o.bound))
                r.status = InvStatus::unknown(o.bound);
            rep.fixtures.push_back({f.name, {invariant_check("gfd(" + mod + ")", r)}});
        } else if (c_approx->parsed()) {
            auto [f, mod] = single();
            rep.fixtures.push_back(run_approximate(f, mod, o.cut, o.bound));
        } else if (v_main->parsed()) {
            int b = o.bound, t = o.tmax;
            std::string m = o.module_name;
            bool ex = !o.fixture_paths.empty();
            verify_concurrently(rep, sel, main_applicable, ex, [b, t, m](const Fixture& f) {
                return verify_main_fixture(f, m, b, t);
            });
        } else if (v_loc->parsed()) {
            int b = o.bound, t = o.tmax;
            bool ex = !o.fixture_paths.empty();
            verify_concurrently(rep, sel, loc_applicable, ex, [b, t](const Fixture& f) {
                return verify_loc_fixture(f, b, t);
            });
        } else if (v_supp->parsed()) {
            int b = o.bound;
            std::string m = o.module_name;
            bool ex = !o.fixture_paths.empty();
            verify_concurrently(rep, sel, supp_applicable, ex, [b, m](const Fixture& f) {
                return verify_supp_fixture(f, m, b);
            });
        } else if (fx_list->parsed()) {
            if (o.format == "json") {
                nlohmann::json fs = nlohmann::json::array();
                for (const auto& f : sel) {
                    nlohmann::json mods = nlohmann::json::array();
                    for (const auto& mn : f.module_order) mods.push_back(mn);
                    fs.push_back({{"name", f.name},
                                  {"path", f.source_path},
                                  {"rings", f.ring_order},
                                  {"maps", f.map_order},
                                  {"modules", mods},
                                  {"localizations", f.localizations.size()},
                                  {"expects", f.expects.size()}});
                }
                out << nlohmann::json{{"engine",
                                       {{"name", kEngineName}, {"version", kEngineVersion}}},
                                      {"command", rep.command},
                                      {"fixtures", fs}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& f : sel) {
                    out << f.name << ": " << f.ring_order.size() << " rings, "
                        << f.map_order.size() << " maps, " << f.module_order.size()
                        << " modules, " << f.localizations.size() << " localizations, "
                        << f.expects.size() << " expects";
                    if (!f.source_path.empty()) out << "  (" << f.source_path << ")";
                    out << "\n";
                }
            }
            return 0;
        }
    } catch (const FixtureError& e) {
        err << "ghom: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "ghom: input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "ghom: " << e.what() << "\n";
        return 2;
    }

    rep.sort_by_fixture();
    rep.write(out, o.format);
    return rep.exit_status();
}

} // namespace ghom
