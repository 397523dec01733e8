#pragma once
// Seeded property suites behind `qfree verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qfree::cli {

enum class Tier { small, standard, large };

/// "small", "standard" (alias "default") or "large"; nullopt otherwise.
std::optional<Tier> parse_tier(const std::string& text);
const char* tier_name(Tier tier);

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    /// Summary statistic, e.g. the largest observed deviation.
    std::string detail;
    /// First failing case, when any.
    std::optional<std::string> counterexample;
    bool ok() const { return passed == total; }
};

struct SuiteResult {
    std::string name;
    std::vector<PropertyResult> properties;
    bool ok() const;
};

/// theorem6, lemma2, corollary, gap, monochromatize, geometry.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, Tier tier);

}  // namespace qfree::cli
