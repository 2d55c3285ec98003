#include "ghom/report.hpp"

#include "ghom/version.hpp"

#include <algorithm>
#include <ostream>

namespace ghom {

const char* outcome_str(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Unknown: return "unknown";
    }
    return "";
}

CheckResult CheckResult::pass(std::string name, nlohmann::json cert) {
    return {std::move(name), Outcome::Pass, std::move(cert)};
}
CheckResult CheckResult::fail(std::string name, nlohmann::json cert) {
    return {std::move(name), Outcome::Fail, std::move(cert)};
}
CheckResult CheckResult::unknown(std::string name, nlohmann::json cert) {
    return {std::move(name), Outcome::Unknown, std::move(cert)};
}

nlohmann::json FixtureReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name},
                      {"outcome", outcome_str(c.outcome)},
                      {"certificate", c.certificate}});
    return {{"fixture", fixture}, {"checks", cs}};
}

void RunReport::sort_by_fixture() {
    std::sort(fixtures.begin(), fixtures.end(),
              [](const FixtureReport& a, const FixtureReport& b) { return a.fixture < b.fixture; });
    std::sort(skipped.begin(), skipped.end());
}

int RunReport::exit_status() const {
    bool any_unknown = false;
    for (const auto& f : fixtures)
        for (const auto& c : f.checks) {
            if (c.outcome == Outcome::Fail) return 1;
            if (c.outcome == Outcome::Unknown) any_unknown = true;
        }
    return any_unknown ? 3 : 0;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    int npass = 0, nfail = 0, nunknown = 0;
    for (const auto& f : fixtures) {
        fs.push_back(f.to_json());
        for (const auto& c : f.checks) {
            if (c.outcome == Outcome::Pass) ++npass;
            else if (c.outcome == Outcome::Fail) ++nfail;
            else ++nunknown;
        }
    }
    return {{"engine", {{"name", kEngineName}, {"version", kEngineVersion}}},
            {"command", command},
            {"bounds", {{"bound", bound}, {"tmax", tmax}}},
            {"fixtures", fs},
            {"skipped", skipped},
            {"outcomes", {{"pass", npass}, {"fail", nfail}, {"unknown", nunknown}}},
            {"exit_status", exit_status()}};
}

void RunReport::write_text(std::ostream& out) const {
    out << kEngineName << " " << kEngineVersion << " :: " << command << " (bound " << bound
        << ", tmax " << tmax << ")\n";
    int npass = 0, nfail = 0, nunknown = 0;
    for (const auto& f : fixtures) {
        out << f.fixture << "\n";
        for (const auto& c : f.checks) {
            out << "  " << outcome_str(c.outcome);
            for (int i = (int)std::string(outcome_str(c.outcome)).size(); i < 8; ++i) out << ' ';
            out << " " << c.name;
            if (c.certificate.contains("note"))
                out << "  [" << c.certificate["note"].get<std::string>() << "]";
            out << "\n";
            if (c.outcome == Outcome::Pass) ++npass;
            else if (c.outcome == Outcome::Fail) ++nfail;
            else ++nunknown;
        }
    }
    for (const auto& s : skipped) out << s << "\n  skipped (not applicable)\n";
    out << "exit " << exit_status() << ": " << npass << " pass, " << nfail << " fail, "
        << nunknown << " unknown\n";
}

void RunReport::write(std::ostream& out, const std::string& format) const {
    if (format == "json") out << to_json().dump(2) << "\n";
    else write_text(out);
}

} // namespace ghom
