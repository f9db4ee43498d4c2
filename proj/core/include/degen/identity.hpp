#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "degen/polynomial.hpp"

namespace degen {

/// One point of a parameter sweep. Only the fields a case declares as swept
/// are meaningful; the rest stay 0.
struct SweepPoint {
    int n = 0;
    int k = 0;
    int r = 0;
    int p = 0;
};

/// Engine-wide default sweep bounds. k always runs 0..n; p runs the full
/// closed interval [p_min, p_max] for cases that sweep it.
struct SweepLimits {
    int n_max = 10;
    int r_max = 4;
    int p_min = -3;
    int p_max = 3;
};

/// User-supplied bound overrides. An override lowers or raises the global
/// default but never lifts a case above its own cap.
struct SweepOverrides {
    std::optional<int> n_max;
    std::optional<int> r_max;
};

struct Counterexample {
    SweepPoint point;
    MultiPoly lhs;
    MultiPoly rhs;
};

struct IdentityReport {
    std::string id;
    long long points = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    double wall_ms = 0.0;
};

/// A catalog entry: an equality of two exact polynomial computations over a
/// swept integer-parameter grid. Sweep order is lexicographic in (n, k, r, p),
/// so a failing case always reports the smallest violating point.
struct IdentityCase {
    std::string id;
    std::string description;
    bool sweep_k = false;
    bool sweep_r = false;
    bool sweep_p = false;
    int n_cap = 10;
    int r_cap = 4;
    std::function<MultiPoly(const SweepPoint&)> lhs;
    std::function<MultiPoly(const SweepPoint&)> rhs;
};

/// The full identity catalog. With corrupted = true, two deliberately broken
/// variants are appended as negative controls for the checker itself.
std::vector<IdentityCase> catalog(bool corrupted = false);

/// Prefix match with a digit boundary: when the filter ends in a digit, the
/// id must not continue with another digit. Filter "eq4" takes "eq4" and
/// "eq4r" but not "eq42"; filter "thm" takes every thm case.
bool filter_matches(const std::string& filter, const std::string& id);

IdentityReport run_identity(const IdentityCase& c, const SweepOverrides& o = {});

/// Looks the case up by exact id; unknown ids raise UnknownIdentityError.
IdentityReport run_identity(const std::string& id, const SweepOverrides& o = {});

/// Runs every catalog case matching the optional filter, in id order.
/// An explicit filter that matches nothing raises UnknownIdentityError.
std::vector<IdentityReport> run_suite(const std::optional<std::string>& filter = {},
                                      const SweepOverrides& o = {},
                                      bool corrupted = false);

}  // namespace degen
