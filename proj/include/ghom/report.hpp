#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ghom {

/* Outcome of a single verification check.  Unknown means the bounded search
   was exhausted without settling the claim; it is never folded into Fail. */
enum class Outcome { Pass, Fail, Unknown };

const char* outcome_str(Outcome o);

struct CheckResult {
    std::string name;
    Outcome outcome = Outcome::Pass;
    nlohmann::json certificate; // replayable evidence, shape depends on the check

    static CheckResult pass(std::string name, nlohmann::json cert);
    static CheckResult fail(std::string name, nlohmann::json cert);
    static CheckResult unknown(std::string name, nlohmann::json cert);
};

// all checks run against one fixture
struct FixtureReport {
    std::string fixture;
    std::vector<CheckResult> checks;
    nlohmann::json to_json() const;
};

/* Envelope for one command invocation: the echoed command line, the bounds
   it ran under, one report per fixture (sorted by fixture name), and the
   names of selected fixtures the verb did not apply to.  The exit status is
   a function of the outcome multiset alone: any fail gives 1, otherwise any
   unknown gives 3, otherwise 0. */
struct RunReport {
    std::string command;
    int bound = 8;
    int tmax = 4;
    std::vector<FixtureReport> fixtures;
    std::vector<std::string> skipped;

    void sort_by_fixture();
    int exit_status() const;
    nlohmann::json to_json() const;
    void write_text(std::ostream& out) const;
    void write(std::ostream& out, const std::string& format) const; // "json" or "text"
};

} // namespace ghom
