#pragma once

#include "ghom/dual.hpp"
#include "ghom/functors.hpp"
#include "ghom/rep.hpp"

#include <json.hpp>

namespace ghom {

/* Extended integer for homological invariants: empty sups are -inf, empty
   infs are +inf. */
struct ExtInt {
    enum Kind { NegInf, Finite, PosInf };
    Kind kind = Finite;
    int64_t n = 0;

    static ExtInt neg_inf() { return {NegInf, 0}; }
    static ExtInt pos_inf() { return {PosInf, 0}; }
    static ExtInt of(int64_t v) { return {Finite, v}; }
    bool is_finite() const { return kind == Finite; }
    bool operator==(const ExtInt& o) const {
        return kind == o.kind && (kind != Finite || n == o.n);
    }
    std::string str() const;
};

/* How much of the answer a bounded computation pinned down.  Exact answers
   hold absolutely; certified-up-to-bound answers describe everything visible
   in the examined window; unknown answers carry no value at all. */
struct InvStatus {
    enum Kind { Exact, UpToBound, Unknown };
    Kind kind = Unknown;
    int bound = 0; // resolution window
    int tmax = 0;  // height of the test module tower, 0 when none was used

    static InvStatus exact() { return {Exact, 0, 0}; }
    static InvStatus up_to(int b, int t = 0) { return {UpToBound, b, t}; }
    static InvStatus unknown(int b) { return {Unknown, b, 0}; }
    bool operator==(const InvStatus& o) const {
        return kind == o.kind && bound == o.bound && tmax == o.tmax;
    }
    std::string str() const;
};

struct InvariantReport {
    std::string name;
    ExtInt value;
    InvStatus status;
    nlohmann::json certificate; // replayable evidence for the verdict
    nlohmann::json to_json() const;
};

// Ext^i(M, N) over the source ring of the handle; M lives over that ring
FPModule ext_over_map(const FPModule& M, const ModuleHandle& N, int i);
// Tor_i(M, N) over the source ring of the handle
FPModule tor_over_map(const FPModule& M, const ModuleHandle& N, int i);

// least i <= B with Ext^i(k, N) nonzero over the source ring; +inf for the
// zero module, exact when a nonvanishing degree is found
InvariantReport depth_report(const ModuleHandle& N, int B);

// sup of the nonvanishing Tor_i(k, N) over the source ring, i <= B; exact
// when the residue field resolves completely inside the window
InvariantReport fd_report(const ModuleHandle& N, int B);

/* Total reflexivity of G over its own ring, checked through window B:
   biduality is an isomorphism and both G and its dual have no higher Ext
   against the ring in degrees 1..B.  Failures are exact and carry the
   offending condition; success is only as strong as the window. */
struct ReflexiveCheck {
    bool passed = false;
    int bound = 0;
    int witness = -1;   // failing Ext degree, -1 when biduality itself fails
    std::string reason; // empty on success
    nlohmann::json certificate;
};

ReflexiveCheck is_totally_reflexive(const FPModule& G, int B);

// restricted projective dimension against the ring: sup of the nonvanishing
// Ext^i(N, ring) over i <= B, then a total reflexivity check of the syzygy
// at that spot; -inf for the zero module
InvariantReport gdim_report(const FPModule& N, int B);

/* Tor against the injective tower of the source ring: for each t <= tmax,
   v_t = sup of the nonvanishing Tor_i(E_t, N) with i <= B.  The reported
   value is v at the top of the tower; the certificate keeps the whole
   profile and whether the last two levels agree.  A value equal to B cannot
   be told apart from anything larger, which verification treats as
   inconclusive. */
InvariantReport gfd_report(const ModuleHandle& N, int tmax, int B);

// sup of Tor-nonvanishing against finitely many test modules over the source
// ring; every test module must resolve completely inside the window
InvariantReport rfd_report(const ModuleHandle& N, const std::vector<FPModule>& tests,
                           int B);

// membership of the maximal ideal in the support, decided at the bottom:
// Tor_0(k, N) nonzero
struct SupportCheck {
    bool member = false;
    nlohmann::json witness;
};

SupportCheck supp_member_max(const ModuleHandle& N);

} // namespace ghom
