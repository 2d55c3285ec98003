#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/cli.hpp"
#include "ghom/fixture.hpp"
#include "ghom/report.hpp"
#include "ghom/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace ghom;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string& stem) {
    return std::string(GHOM_FIXTURE_DIR) + "/" + stem + ".gfd";
}

FixtureError capture_error(const std::string& text) {
    try {
        parse_fixture_text(text, "t.gfd");
    } catch (const FixtureError& e) {
        return e;
    }
    FAIL("expected a FixtureError");
    return FixtureError("", 0, 0);
}

struct CliRun {
    int rc;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

/* Validator for the subset of JSON Schema the shipped schema uses: type,
   required, properties, additionalProperties (boolean), items, enum. */
bool schema_ok(const json& inst, const json& sch, std::string& why, const std::string& path) {
    if (sch.contains("enum")) {
        for (const auto& v : sch["enum"])
            if (inst == v) return true;
        why = path + ": not in enum";
        return false;
    }
    if (sch.contains("type")) {
        std::string t = sch["type"];
        bool ok = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
                  (t == "string" && inst.is_string()) ||
                  (t == "integer" && inst.is_number_integer());
        if (!ok) {
            why = path + ": expected " + t;
            return false;
        }
    }
    if (inst.is_object()) {
        if (sch.contains("required"))
            for (const auto& r : sch["required"])
                if (!inst.contains(r.get<std::string>())) {
                    why = path + ": missing " + r.get<std::string>();
                    return false;
                }
        const json props = sch.value("properties", json::object());
        bool extra_ok = true;
        if (sch.contains("additionalProperties") && sch["additionalProperties"].is_boolean())
            extra_ok = sch["additionalProperties"].get<bool>();
        for (auto it = inst.begin(); it != inst.end(); ++it) {
            if (props.contains(it.key())) {
                if (!schema_ok(it.value(), props[it.key()], why, path + "." + it.key()))
                    return false;
            } else if (!extra_ok) {
                why = path + ": unexpected key " + it.key();
                return false;
            }
        }
    }
    if (inst.is_array() && sch.contains("items")) {
        for (size_t i = 0; i < inst.size(); ++i)
            if (!schema_ok(inst[i], sch["items"], why, path + "[" + std::to_string(i) + "]"))
                return false;
    }
    return true;
}

json load_schema() {
    std::ifstream in(std::string(GHOM_SCHEMA_DIR) + "/report.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("the fixture grammar builds real objects") {
    Fixture f = parse_fixture_text(
        "# two rings, a self-map, and modules with shifted generators\n"
        "ring R = QQ[u,v] / (u*v, u^3);\n"
        "ring Z = GF(7)[t];\n"
        "map phi : R -> R = [u, v];\n"
        "module M over R = coker [[u, 1/2*v^2], [u^2, 0]] degrees [0,-1];\n"
        "module F over Z = coker [] degrees [2];\n"
        "prime_test E2 = matlis_trunc(R, 2);\n"
        "expect depth(M) = 0 via dense_ranks;\n"
        "expect betti(M) = [2,3] via dense_ranks;\n"
        "expect gdim(M) = unknown via closed_form;\n",
        "t");

    const GradedRing& R = f.ring("R");
    CHECK(R.nvars() == 2);
    CHECK(R.field().str() == "QQ");
    CHECK(R.is_zero_mod(p_mul(R.var(0), R.var(1), R.order())));
    CHECK(f.ring("Z").field().str() == "GF(7)");

    CHECK(f.map("phi").is_identity());

    const FPModule& M = f.module("M");
    CHECK(M.gen_degrees() == std::vector<int64_t>{0, -1});
    CHECK(M.relations().ncols() == 2);
    const FPModule& F = f.module("F");
    CHECK(F.relations().ncols() == 0);
    CHECK(F.graded_dim(2) == 1);

    REQUIRE(f.prime_tests.size() == 1);
    CHECK(f.prime_tests[0].level == 2);
    CHECK(f.matlis_level("R") == 2);
    CHECK(f.matlis_level("Z", 1) == 1);

    REQUIRE(f.expects.size() == 3);
    CHECK(f.expects[0].value == ExpectedValue::of(0));
    CHECK(f.expects[1].value == ExpectedValue::of_list({2, 3}));
    CHECK(f.expects[2].value == ExpectedValue::unknown());
    CHECK(f.expects[2].oracle == "closed_form");
}

TEST_CASE("parse errors carry their position and expectations") {
    FixtureError e = capture_error("ring R = QQ[x]\nmodule M over R = coker [[x]] degrees [0];");
    CHECK(e.line == 2);
    CHECK(e.col == 1);
    CHECK(std::string(e.what()).find("t.gfd:2:1") != std::string::npos);
    CHECK(std::string(e.what()).find("';'") != std::string::npos);

    e = capture_error("ring R = QQ[x] / (x + x^2);");
    CHECK(std::string(e.what()).find("defining generator 1 is inhomogeneous") !=
          std::string::npos);

    e = capture_error("ring R = QQ[x,y];\nmodule M over R = coker [[x, y^2]] degrees [0,0];");
    CHECK(std::string(e.what()).find("module M: relation 1 is inhomogeneous") !=
          std::string::npos);

    e = capture_error("ring R = QQ[x];\nmodule M over R = coker [[z]] degrees [0];");
    CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
    CHECK(e.line == 2);

    e = capture_error("ring R = QQ[x,y];\nmap f : R -> R = [x];");
    CHECK(std::string(e.what()).find("map f") != std::string::npos);
    CHECK(std::string(e.what()).find("1 images for 2 variables") != std::string::npos);

    e = capture_error("ring R = QQ[x];\nmodule M over R = coker [[x]] degrees [0];\n"
                      "expect depth(M) = 0 via magic;");
    CHECK(std::string(e.what()).find("unknown oracle 'magic'") != std::string::npos);

    e = capture_error("ring R = QQ[x];\nexpect depth(Q) = 0 via direct;");
    CHECK(std::string(e.what()).find("'Q' is not declared") != std::string::npos);

    e = capture_error("ring R = QQ[x];\nmodule M over R = coker [[x]] degrees [0];\n"
                      "localize L = (R, M, nosuch);");
    CHECK(std::string(e.what()).find("map 'nosuch' is not declared") != std::string::npos);

    e = capture_error("ring R = QQ[x]; @");
    CHECK(std::string(e.what()).find("stray character '@'") != std::string::npos);

    e = capture_error("ring R = QQ[x];\nring R = QQ[y];");
    CHECK(std::string(e.what()).find("already declared") != std::string::npos);
}

TEST_CASE("pretty-printing round-trips to identical objects") {
    for (const auto& path : list_fixture_files(GHOM_FIXTURE_DIR)) {
        Fixture a = parse_fixture_file(path);
        std::string printed = print_fixture(a);
        Fixture b = parse_fixture_text(printed, a.name);
        CHECK(print_fixture(b) == printed);

        REQUIRE(a.ring_order == b.ring_order);
        for (const auto& rn : a.ring_order) {
            const GradedRing &ra = a.rings.at(rn), &rb = b.rings.at(rn);
            CHECK(ra.var_names() == rb.var_names());
            CHECK(ra.field().str() == rb.field().str());
            REQUIRE(ra.defining_gb().size() == rb.defining_gb().size());
            for (size_t i = 0; i < ra.defining_gb().size(); ++i)
                CHECK(ra.defining_gb()[i] == rb.defining_gb()[i]);
        }
        REQUIRE(a.module_order == b.module_order);
        for (const auto& mn : a.module_order) {
            const FPModule &ma = a.modules.at(mn), &mb = b.modules.at(mn);
            CHECK(ma.gen_degrees() == mb.gen_degrees());
            for (int64_t d = -2; d <= 4; ++d) CHECK(ma.graded_dim(d) == mb.graded_dim(d));
        }
        REQUIRE(a.expects.size() == b.expects.size());
        for (size_t i = 0; i < a.expects.size(); ++i) {
            CHECK(a.expects[i].prop == b.expects[i].prop);
            CHECK(a.expects[i].target == b.expects[i].target);
            CHECK(a.expects[i].value == b.expects[i].value);
            CHECK(a.expects[i].oracle == b.expects[i].oracle);
        }
    }
}

TEST_CASE("role conventions pick the subject and its structure map") {
    Fixture f4 = parse_fixture_file(fixture_path("f4_almost_finite"));
    CHECK(f4.default_module() == "N");
    RingMap phi = f4.structure_map("N");
    CHECK(!phi.is_identity());
    CHECK(phi.source().nvars() == 1);
    CHECK(f4.subject().phi.target().same(f4.ring("S")));

    Fixture f1 = parse_fixture_file(fixture_path("f1_hypersurface_q"));
    CHECK(f1.default_module() == "k");
    CHECK(f1.structure_map("k").is_identity());

    Fixture l3 = parse_fixture_file(fixture_path("loc3_product"));
    CHECK_THROWS_AS(l3.default_module(), FixtureError);
    CHECK(main_applicable(l3) == false);
    CHECK(loc_applicable(l3) == true);
}

TEST_CASE("reports fold outcomes into exit codes") {
    auto with = [](std::vector<Outcome> os) {
        RunReport r;
        FixtureReport fr{"x", {}};
        for (auto o : os) fr.checks.push_back({"c", o, json::object()});
        r.fixtures.push_back(fr);
        return r.exit_status();
    };
    CHECK(with({}) == 0);
    CHECK(with({Outcome::Pass, Outcome::Pass}) == 0);
    CHECK(with({Outcome::Pass, Outcome::Unknown}) == 3);
    CHECK(with({Outcome::Unknown, Outcome::Fail}) == 1);
    CHECK(with({Outcome::Fail}) == 1);

    RunReport r;
    r.command = "verify main";
    r.fixtures.push_back({"b", {CheckResult::pass("one", {{"k", 1}})}});
    r.fixtures.push_back({"a", {CheckResult::unknown("two", json::object())}});
    r.sort_by_fixture();
    CHECK(r.fixtures[0].fixture == "a");
    json j = r.to_json();
    CHECK(j["engine"]["name"] == "ghom");
    CHECK(j["outcomes"]["pass"] == 1);
    CHECK(j["outcomes"]["unknown"] == 1);
    CHECK(j["exit_status"] == 3);
}

TEST_CASE("run reports validate against the shipped schema") {
    json schema = load_schema();
    std::string why;

    for (auto args : std::vector<std::vector<std::string>>{
             {"verify", "main", "--fixture", fixture_path("f4_almost_finite"), "--format",
              "json"},
             {"verify", "supp", "--format", "json"},
             {"verify", "loc", "--format", "json"},
             {"depth", "--fixture", fixture_path("f2_gorenstein_artinian"), "--format", "json"},
         }) {
        CliRun r = cli(args);
        json out = json::parse(r.out);
        INFO(args[0], " ", args[1]);
        CHECK(schema_ok(out, schema, why, "$"));
        CHECK(why.empty());
        CHECK(out["exit_status"] == r.rc);
    }

    // the validator itself must bite
    CliRun r = cli({"depth", "--fixture", fixture_path("f2_gorenstein_artinian"), "--format",
                    "json"});
    json broken = json::parse(r.out);
    broken["fixtures"][0]["checks"][0]["outcome"] = "maybe";
    CHECK(!schema_ok(broken, schema, why, "$"));
    broken = json::parse(r.out);
    broken.erase("command");
    CHECK(!schema_ok(broken, schema, why, "$"));
}

TEST_CASE("command-line contract: flags, errors, and exit codes") {
    CliRun r = cli({"verify", "main", "--fixture", fixture_path("f4_almost_finite"), "--bound",
                    "8", "--tmax", "4", "--format", "json"});
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] ==
          "verify main --fixture " + fixture_path("f4_almost_finite") +
              " --bound 8 --tmax 4 --format json");
    CHECK(j["bounds"]["bound"] == 8);

    r = cli({"gdim", "--fixture", fixture_path("f3_semidecidable"), "--module", "k", "--bound",
             "8"});
    CHECK(r.rc == 3);
    CHECK(r.out.find("unknown") != std::string::npos);

    r = cli({"resolve", "--module", "nonexistent"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("nonexistent") != std::string::npos);

    r = cli({"frobnicate"});
    CHECK(r.rc == 2);
    CHECK(!r.err.empty());

    r = cli({"gdim", "--bogus"});
    CHECK(r.rc == 2);

    r = cli({"verify", "loc", "--fixture", fixture_path("f1_hypersurface_q")});
    CHECK(r.rc == 2);
    CHECK(r.err.find("localization") != std::string::npos);

    r = cli({"depth", "--fixture", "no/such/file.gfd"});
    CHECK(r.rc == 2);

    r = cli({"verify", "supp", "--field", "QQ"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("f1_hypersurface_q") != std::string::npos);
    CHECK(r.out.find("f2_gorenstein") == std::string::npos);

    r = cli({"verify", "supp", "--field", "GF(4)"});
    CHECK(r.rc == 2);

    r = cli({"betti", "--fixture", fixture_path("f1_hypersurface_q")});
    CHECK(r.rc == 0);
    CHECK(r.out.find("1,2,2") != std::string::npos);

    r = cli({"approximate", "--fixture", fixture_path("f1_hypersurface_q"), "--cut", "5"});
    CHECK(r.rc == 2);

    r = cli({"fixtures", "list"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("f0_zero_module") != std::string::npos);
    CHECK(r.out.find("loc3_product") != std::string::npos);

    // a degenerate subject reports conventions and exits clean
    r = cli({"verify", "main", "--fixture", fixture_path("f0_zero_module")});
    CHECK(r.rc == 0);
    CHECK(r.out.find("degenerate_conventions") != std::string::npos);
}

TEST_CASE("concurrent verification is deterministic") {
    CliRun a = cli({"verify", "supp", "--format", "json"});
    CliRun b = cli({"verify", "supp", "--format", "json"});
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
}
