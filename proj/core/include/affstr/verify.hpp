#ifndef AFFSTR_VERIFY_HPP
#define AFFSTR_VERIFY_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "affstr/strings.hpp"

namespace affstr {

/// A fixture number. Plain entries carry only `expected`; annotated entries
/// {"paper": v, "adjudicated": v', "note": ...} keep the printed value too.
struct FixtureValue {
    Integer expected;
    std::optional<Integer> paper;
    std::string note;

    bool annotated() const noexcept { return paper.has_value(); }
};

struct FanFixture {
    std::string name;
    std::string file;
    AlgebraSpec algebra;
    long cutoff = 0;
    std::vector<FanVector> vectors;  // in file order
};

struct FixtureString {
    std::vector<Rational> xi;
    std::vector<FixtureValue> coeffs;
};

struct FixtureModule {
    std::vector<Rational> mu;
    std::string note;
    std::vector<FixtureString> strings;
};

/// η_{base,target}(n) for n = 0.. (indices 0-based here, 1-based on disk).
struct FixtureEta {
    std::size_t base = 0;
    std::size_t target = 0;
    std::string source;
    std::vector<FixtureValue> values;
};

struct FixtureBlock {
    std::size_t base = 0;
    std::size_t target = 0;
    IntMatrix matrix;
};

struct StringFixture {
    std::string name;
    std::string file;
    AlgebraSpec algebra;
    Integer level;
    long cutoff = 0;
    std::vector<std::vector<Rational>> base;
    std::vector<FixtureModule> modules;
    std::vector<FixtureEta> eta;
    std::vector<FixtureBlock> blocks;
    std::optional<std::size_t> distinct_strings;
};

struct FixtureSet {
    std::vector<FanFixture> fans;
    std::vector<StringFixture> strings;
    std::vector<std::string> warnings;

    bool empty() const noexcept { return fans.empty() && strings.empty(); }
};

/// Explicit directory if given, else $AFFSTR_FIXTURES, else the built-in path.
std::filesystem::path fixture_directory(const std::optional<std::filesystem::path>& explicit_dir = std::nullopt);

/// Every *.json in dir, by file name. A missing directory is a ConfigError.
FixtureSet load_fixtures(const std::filesystem::path& dir);

FanFixture parse_fan_fixture(const std::string& text, const std::string& file = "<memory>");
StringFixture parse_string_fixture(const std::string& text, const std::string& file = "<memory>");

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first divergence on failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool passed() const;
    std::size_t failures() const;
    std::string to_text() const;
};

struct VerifyOptions {
    /// Test mode: perturb one expected value before checking.
    bool inject_fault = false;
    std::vector<long> lemma_probes{0, -5};
    std::size_t weyl_pairs = 100;
    unsigned seed = 1729;
};

/// Runs fixtures in parallel; the report order follows the fixture order.
VerifyReport verify_fixtures(FixtureSet fixtures, const VerifyOptions& opts = {});

} // namespace affstr

#endif
