#pragma once

#include "ghom/fpmodule.hpp"
#include "ghom/functors.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghom {

/* Failure while reading a fixture file.  Parse errors carry the position and
   the tokens that would have been accepted there; semantic errors name the
   offending object and leave the position at the statement that declared it. */
struct FixtureError : std::runtime_error {
    int line = 0;
    int col = 0;
    FixtureError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), col(col_) {}
};

/* Right-hand side of an expect statement. */
struct ExpectedValue {
    enum Kind { Int, List, Unknown, NegInf, PosInf };
    Kind kind = Int;
    int64_t n = 0;
    std::vector<int64_t> list;

    static ExpectedValue of(int64_t v) { return {Int, v, {}}; }
    static ExpectedValue of_list(std::vector<int64_t> v) { return {List, 0, std::move(v)}; }
    static ExpectedValue unknown() { return {Unknown, 0, {}}; }
    static ExpectedValue neg_inf() { return {NegInf, 0, {}}; }
    static ExpectedValue pos_inf() { return {PosInf, 0, {}}; }

    bool operator==(const ExpectedValue& o) const {
        return kind == o.kind && (kind != Int || n == o.n) && (kind != List || list == o.list);
    }
    std::string str() const;
};

// expect PROP(TARGET) = VALUE via ORACLE;  the target is a module, a ring,
// or the reserved name "global" used by localization fixtures
struct ExpectStmt {
    std::string prop;
    std::string target;
    ExpectedValue value;
    std::string oracle;
};

// localize NAME = (RING, MODULE, MAP);  a stand-in for one localized piece
struct LocalizeStmt {
    std::string name;
    std::string ring;
    std::string module;
    std::string map;
};

// prime_test NAME = matlis_trunc(RING, t);
struct PrimeTestStmt {
    std::string name;
    std::string ring;
    int level = 1;
};

/* One parsed fixture file, with every declared object fully materialized.
   Declaration order is kept so the printer can reproduce the file layout. */
struct Fixture {
    std::string name;        // file stem, used to sort and label reports
    std::string source_path; // empty when parsed from a bare string

    std::vector<std::string> ring_order, map_order, module_order;
    std::map<std::string, GradedRing> rings;
    std::map<std::string, RingMap> maps;
    std::map<std::string, std::pair<std::string, std::string>> map_rings;
    std::map<std::string, FPModule> modules;
    std::map<std::string, std::string> module_ring;
    std::vector<PrimeTestStmt> prime_tests;
    std::vector<LocalizeStmt> localizations;
    std::vector<ExpectStmt> expects;

    const GradedRing& ring(const std::string& n) const;
    const RingMap& map(const std::string& n) const;
    const FPModule& module(const std::string& n) const;

    /* Role conventions.  The subject module is the one named on the command
       line, else the module named "N", else the unique module of the file.
       Its structure map is the map whose target is the subject's ring (the
       map named "phi" wins ties), else the identity. */
    std::string default_module() const; // throws FixtureError when unresolvable
    RingMap structure_map(const std::string& module_name) const;
    ModuleHandle subject(const std::string& module_name = "") const;

    // lowest declared matlis_trunc level over the given ring, or fallback
    int matlis_level(const std::string& ring_name, int fallback = 1) const;
};

Fixture parse_fixture_text(const std::string& text, const std::string& display_name);
Fixture parse_fixture_file(const std::string& path);

// canonical layout: one statement per line, declaration order preserved;
// parsing the output yields the same objects as the original file
std::string print_fixture(const Fixture& f);

// sorted *.gfd paths directly under dir
std::vector<std::string> list_fixture_files(const std::string& dir);

} // namespace ghom
