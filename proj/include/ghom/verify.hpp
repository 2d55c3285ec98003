#pragma once

#include "ghom/fixture.hpp"
#include "ghom/report.hpp"

namespace ghom {

/* Theorem-level verification of a single fixture.  Each routine returns one
   FixtureReport; outcomes follow the engine's certification discipline: a
   value sitting on the window ceiling is reported unknown, never pass. */

// bounded Tor-tower value of the subject vs its depth difference, the
// target-ring restricted dimension when the structure map is the identity,
// and the support conclusions; degenerate subjects report the sign
// conventions instead
FixtureReport verify_main_fixture(const Fixture& f, const std::string& module_name, int bound,
                                  int tmax);

// every localized stand-in stays at or below the expected global value, and
// the maximum over the stand-ins attains it
FixtureReport verify_loc_fixture(const Fixture& f, int bound, int tmax);

// support membership of the subject: finite depth, plus a nonvanishing Tor
// against the bottom truncated injective
FixtureReport verify_supp_fixture(const Fixture& f, const std::string& module_name, int bound);

bool main_applicable(const Fixture& f);
bool loc_applicable(const Fixture& f);
bool supp_applicable(const Fixture& f);

} // namespace ghom
