#pragma once

// Finite evidence for the Mathieu-Zhao property of an image M = im(eta).
//
// M is an MZ-subspace when f^m in M for every m >= 1 forces g f^m in M for all large m.
// Both quantifiers range over infinitely many powers, so everything here is
// falsification-only: a clean report is evidence, never a proof.

#include "mzlab/image_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mzlab {

struct MZScanConfig {
    /// Powers f^1..f^I are tested.
    unsigned power_bound = 6;
    /// Products g f^1..g f^T are tested.
    unsigned tail_bound = 8;
    std::vector<Polynomial> multipliers;
    unsigned degree_cap = kDefaultDegreeCap;
};

struct TailResult {
    Polynomial g;
    /// membership[m - 1] answers g f^m in M.
    std::vector<bool> membership;
    /// Least N with g f^m in M for all N <= m <= T; std::nullopt when g f^T is not in M.
    std::optional<unsigned> tail_start;
};

struct MZScanReport {
    Polynomial f;
    unsigned power_bound;
    unsigned tail_bound;
    /// powers[i - 1] answers f^i in M.
    std::vector<bool> powers;
    std::optional<unsigned> first_escape;
    std::vector<TailResult> tails;

    bool all_powers_in() const;
    /// Every power up to I is in M but some multiplier has no tail up to T.
    bool suspect() const;
};

/// All monomials of degree <= max_degree, grlex-descending.
std::vector<Polynomial> default_multipliers(const Ring& ring, unsigned max_degree = 2);

/// Throws DegreeCapExceeded unless deg(f) * max(I, T) + max deg(G) <= cap.
MZScanReport mz_scan(const LinearMapSpec& spec, const Polynomial& f, const MZScanConfig& config);

struct EscapeResult {
    /// Least i <= bound with f^i outside M.
    std::optional<unsigned> index;
    unsigned bound;
    /// True when no escape was found; the search cannot rule one out beyond the bound.
    bool inconclusive() const { return !index.has_value(); }
};

EscapeResult power_escape_search(const ImageEngine& engine, const Polynomial& f, unsigned power_bound);

/// Sample parameter sets for a canonical family: a = 1, roots of unity of order 2, 3, 4 and
/// the non-roots 2 and -1/2, spread over tuples for the multi-parameter families.
std::vector<CanonicalCase> parameter_samples(Family family, MapKind kind);

/// The families with a closed-form membership rule.
std::vector<std::pair<Family, MapKind>> closed_form_families();

struct SuiteConfig {
    unsigned max_degree = 6;
    std::vector<unsigned> m_list{2, 3, 4};
    /// Upper limit on parameter samples per family.
    unsigned samples = 6;
    IdentityMaps maps;
};

struct CheckResult {
    std::string check_id;
    std::string case_name;
    std::string params;
    unsigned m = 1;
    unsigned degree = 0;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::size_t failures() const;
};

/// Runs every finite-degree check; failures are collected, not short-circuited.
SuiteReport theorem_suite(const SuiteConfig& config);

/// Parameters as scalar text, comma separated.
std::string params_string(const CanonicalCase& c);

}  // namespace mzlab
