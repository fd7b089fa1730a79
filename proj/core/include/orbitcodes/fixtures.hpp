#ifndef ORBITCODES_FIXTURES_HPP
#define ORBITCODES_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

namespace orbitcodes::fixtures {

/// Where a fixture's expected numbers come from.
enum class Origin {
    published, // stated in the literature the library reproduces
    derived,   // computed here with an independent oracle and frozen
    definition // immediate from the definitions
};

const char* origin_name(Origin o) noexcept;

struct CheckResult {
    std::string label;
    std::string expected;
    std::string computed;
    bool passed = false;
};

struct FixtureResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<CheckResult> checks;
    std::string error; // nonempty when the fixture threw
};

struct Fixture {
    std::string name;
    std::string summary;
    Origin origin;
    std::function<void(FixtureResult&)> run;
};

/// The reference catalog: every worked example the library reproduces,
/// keyed by name. Entries are independent and safe to run in any order.
const std::vector<Fixture>& catalog();

/// Runs every fixture whose name contains `filter` (all when empty).
std::vector<FixtureResult> run_catalog(const std::string& filter = "");

/// Pinned modulus (low degree first, length n+1) for the dimension-3 family
/// fixtures; these are the fields in which span{1, a^2, a^3} reaches
/// distance 4. Throws if (q, n) is not in the pinned set.
std::vector<unsigned> dim3_family_modulus(unsigned q, unsigned n);

/// All (q, n) pairs with a pinned dimension-3 family modulus.
std::vector<std::pair<unsigned, unsigned>> dim3_family_parameters();

} // namespace orbitcodes::fixtures

#endif
