#include "affstr/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "affstr/io.hpp"
#include "affstr/oracle.hpp"
#include "json_support.hpp"

#ifndef AFFSTR_DEFAULT_FIXTURE_DIR
#define AFFSTR_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace affstr {

using namespace detail;

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p);
    if (!in) {
        throw ConfigError("cannot read " + p.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraSpec fixture_algebra(const json& j)
{
    if (j.is_string()) {
        return AlgebraSpec::preset(j.get<std::string>());
    }
    return algebra_from_json(j.dump());
}

FixtureValue value_from(const json& j, const char* what)
{
    if (j.is_object()) {
        FixtureValue v{integer_from(field(j, "adjudicated", what), what),
            integer_from(field(j, "paper", what), what), ""};
        if (j.contains("note") && j.at("note").is_string()) {
            v.note = j.at("note").get<std::string>();
        }
        return v;
    }
    return {integer_from(j, what), std::nullopt, ""};
}

std::vector<FixtureValue> values_from(const json& j, const char* what)
{
    if (!j.is_array()) {
        throw ConfigError(std::string(what) + ": expected an array");
    }
    std::vector<FixtureValue> out;
    for (const auto& v : j) {
        out.push_back(value_from(v, what));
    }
    return out;
}

std::string labels_text(std::span<const Rational> labels)
{
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + labels[i].get_str();
    }
    return out + "]";
}

std::string describe(const FixtureValue& v)
{
    std::string out = "expected " + v.expected.get_str();
    if (v.annotated()) {
        out += " (printed " + v.paper->get_str() + ", " + v.note + ")";
    }
    return out;
}

// Collects one named check; the first divergence wins.
class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    bool ok() const noexcept { return !failure_; }

    void fail(std::string detail)
    {
        if (!failure_) {
            failure_ = std::move(detail);
        }
    }

    void note(std::string detail)
    {
        if (!failure_) {
            info_ = std::move(detail);
        }
    }

    CheckResult result() const { return {name_, ok(), failure_ ? *failure_ : info_}; }

private:
    std::string name_;
    std::optional<std::string> failure_;
    std::string info_;
};

template <typename F>
CheckResult guarded(const std::string& name, F&& body)
{
    Check check(name);
    try {
        body(check);
    } catch (const Error& e) {
        check.fail(std::string("exception: ") + e.what());
    }
    return check.result();
}

std::vector<CheckResult> run_fan_fixture(const FanFixture& fx)
{
    std::vector<CheckResult> out;
    const std::string tag = fx.file + ": ";
    std::optional<Fan> built;
    out.push_back(guarded(tag + "fan entries to grade " + std::to_string(fx.cutoff), [&](Check& c) {
        built = build_fan(fx.algebra, fx.cutoff);
        auto key = [](const FanVector& v) { return std::make_tuple(v.grade, v.root, v.mult); };
        std::set<std::tuple<Integer, std::vector<Integer>, int>> ours;
        for (const auto& v : built->vectors) {
            ours.insert(key(v));
        }
        std::set<std::tuple<Integer, std::vector<Integer>, int>> listed;
        for (std::size_t i = 0; i < fx.vectors.size(); ++i) {
            const auto k = key(fx.vectors[i]);
            if (!listed.insert(k).second) {
                c.fail("entry " + std::to_string(i + 1) + " is listed twice");
            }
            if (!ours.contains(k)) {
                std::string root;
                for (const auto& x : fx.vectors[i].root) {
                    root += x.get_str() + ",";
                }
                c.fail("entry " + std::to_string(i + 1) + " (" + root + "0," + fx.vectors[i].grade.get_str() + ","
                    + std::to_string(fx.vectors[i].mult) + ") is not produced by the builder");
            }
        }
        for (const auto& v : built->vectors) {
            if (!listed.contains(key(v))) {
                c.fail("builder produced an unlisted vector at grade " + v.grade.get_str());
            }
        }
        c.note(std::to_string(fx.vectors.size()) + " entries");
    }));
    out.push_back(guarded(tag + "denominator identity", [&](Check& c) {
        const DenominatorReport rep = verify_denominator(built ? *built : build_fan(fx.algebra, fx.cutoff));
        if (!rep.ok && rep.first_mismatch) {
            const auto& m = *rep.first_mismatch;
            std::string root;
            for (const auto& x : m.root) {
                root += x.get_str() + ",";
            }
            c.fail("coefficient of e^-(" + root + "0," + m.grade.get_str() + "): product gives "
                + m.expected.get_str() + ", fan carries " + m.actual.get_str());
        } else if (!rep.ok) {
            c.fail("identity fails");
        }
        c.note(std::to_string(rep.terms_checked) + " terms");
    }));
    return out;
}

struct ModuleRun {
    const FixtureModule* fixture = nullptr;
    StringComputation computation;
};

std::vector<CheckResult> run_string_fixture(const StringFixture& fx, const VerifyOptions& opts)
{
    std::vector<CheckResult> out;
    const AlgebraSpec& spec = fx.algebra;
    const std::string tag = fx.file + ": ";

    out.push_back(guarded(tag + "class weights", [&](Check& c) {
        const auto classes = enumerate_class_weights(spec, fx.level);
        if (fx.base.empty()) {
            c.fail("fixture lists no base weights");
            return;
        }
        const auto it = classes.find(congruence_class(spec, fx.base.front()));
        if (it == classes.end()) {
            c.fail("first base weight is not a level-" + fx.level.get_str() + " dominant weight");
            return;
        }
        const auto& got = it->second.weights;
        if (got.size() != fx.base.size()) {
            c.fail("class has " + std::to_string(got.size()) + " weights, fixture lists " + std::to_string(fx.base.size()));
        }
        for (std::size_t i = 0; i < std::min(got.size(), fx.base.size()); ++i) {
            if (got[i].classical != fx.base[i]) {
                c.fail("position " + std::to_string(i + 1) + ": expected " + labels_text(fx.base[i]) + ", got "
                    + labels_text(got[i].classical));
            }
        }
    }));

    std::vector<ModuleRun> runs;
    for (const auto& m : fx.modules) {
        const std::string mtag = tag + "mu=" + labels_text(m.mu) + " ";
        std::optional<StringComputation> comp;
        out.push_back(guarded(mtag + "strings", [&](Check& c) {
            comp = compute_strings(spec, fx.level, m.mu, fx.cutoff);
            const StringTable& t = comp->table;
            if (t.coefficients(t.mu_index, 0) != 1) {
                c.fail("highest weight multiplicity is " + t.coefficients(t.mu_index, 0).get_str());
            }
            std::size_t annotated = 0;
            for (const auto& s : m.strings) {
                const auto idx = t.base.index_of(s.xi);
                if (!idx) {
                    c.fail("xi " + labels_text(s.xi) + " is not in the class");
                    continue;
                }
                if (s.coeffs.size() > static_cast<std::size_t>(t.depth + 1)) {
                    c.fail("xi " + labels_text(s.xi) + " lists more coefficients than the cutoff");
                    continue;
                }
                for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
                    annotated += s.coeffs[n].annotated() ? 1 : 0;
                    const Integer& got = t.coefficients(*idx, n);
                    if (got != s.coeffs[n].expected) {
                        c.fail("xi " + labels_text(s.xi) + " q^" + std::to_string(n) + ": " + describe(s.coeffs[n])
                            + ", got " + got.get_str());
                    }
                }
            }
            c.note(std::to_string(m.strings.size()) + " strings, " + std::to_string(annotated) + " annotated entries");
        }));
        if (!comp) {
            continue;
        }

        const StringTable& table = comp->table;
        out.push_back(guarded(mtag + "oracle equivalence", [&](Check& c) {
            auto fan = std::make_shared<const Fan>(build_fan(spec, fx.cutoff));
            RacahOracle oracle(spec, table.mu(), fan);
            std::size_t compared = 0;
            for (std::size_t s = 0; s < table.base.size(); ++s) {
                for (long d = 0; d <= fx.cutoff; ++d) {
                    AffineWeight w = table.base.weights[s];
                    w.grade = -d;
                    const Integer folded = weight_multiplicity(table, w);
                    const Integer racah = oracle.multiplicity(w);
                    ++compared;
                    if (folded != racah) {
                        c.fail("xi " + labels_text(w.classical) + " grade " + std::to_string(-d) + ": folded "
                            + folded.get_str() + ", oracle " + racah.get_str());
                    }
                }
            }
            // Annotated entries are adjudicated by the oracle alone.
            for (const auto& s : m.strings) {
                for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
                    if (!s.coeffs[n].annotated()) {
                        continue;
                    }
                    AffineWeight w = make_weight(spec, s.xi, fx.level, -static_cast<long>(n));
                    const Integer racah = oracle.multiplicity(w);
                    if (racah != s.coeffs[n].expected) {
                        c.fail("annotated entry xi " + labels_text(s.xi) + " q^" + std::to_string(n) + ": "
                            + describe(s.coeffs[n]) + ", oracle " + racah.get_str());
                    }
                }
            }
            c.note(std::to_string(compared) + " dominant weights");
        }));

        out.push_back(guarded(mtag + "Weyl invariance", [&](Check& c) {
            std::mt19937 rng(opts.seed);
            std::uniform_int_distribution<std::size_t> pick_s(0, table.base.size() - 1);
            std::uniform_int_distribution<long> pick_d(0, fx.cutoff);
            std::uniform_int_distribution<std::size_t> pick_i(0, spec.rank());
            std::uniform_int_distribution<int> pick_len(1, 12);
            for (std::size_t trial = 0; trial < opts.weyl_pairs; ++trial) {
                AffineWeight w = table.base.weights[pick_s(rng)];
                w.grade = -pick_d(rng);
                std::vector<std::size_t> word(static_cast<std::size_t>(pick_len(rng)));
                for (auto& i : word) {
                    i = pick_i(rng);
                }
                const AffineWeight moved = apply_word(spec, word, w);
                const Integer a = weight_multiplicity(table, w);
                const Integer b = weight_multiplicity(table, moved);
                if (a != b) {
                    c.fail(format_weight(spec, w) + " has " + a.get_str() + ", its image " + format_weight(spec, moved)
                        + " has " + b.get_str());
                }
            }
            c.note(std::to_string(opts.weyl_pairs) + " pairs");
        }));
        runs.push_back({&m, std::move(*comp)});
    }

    if (runs.empty()) {
        return out;
    }
    // Folded fans depend on the class only; the first module's are used.
    const StringComputation& first = runs.front().computation;

    out.push_back(guarded(tag + "grade-0 block", [&](Check& c) {
        const Rational det = determinant(to_rational(first.system.grade0_block()));
        if (det != 1 && det != -1) {
            c.fail("determinant " + det.get_str());
        }
        for (std::size_t j = 0; j < first.system.p; ++j) {
            if (first.system.eta[j][j][0] == 0) {
                c.fail("zero diagonal at " + std::to_string(j + 1));
            }
        }
        c.note("determinant " + det.get_str());
    }));

    if (!fx.eta.empty()) {
        out.push_back(guarded(tag + "folded-fan multiplicities", [&](Check& c) {
            std::size_t annotated = 0;
            for (const auto& e : fx.eta) {
                if (e.base >= first.fans.folded.size() || e.target >= first.fans.folded.size()) {
                    c.fail("eta index out of range");
                    continue;
                }
                const FoldedFan& ff = first.fans.folded[e.base];
                for (std::size_t n = 0; n < e.values.size(); ++n) {
                    annotated += e.values[n].annotated() ? 1 : 0;
                    if (static_cast<long>(n) > ff.cutoff) {
                        c.fail("eta list longer than the cutoff");
                        break;
                    }
                    const Integer got = ff.eta(e.target, static_cast<long>(n));
                    if (got != e.values[n].expected) {
                        c.fail("eta(" + std::to_string(e.base + 1) + "," + std::to_string(e.target + 1) + ") at n="
                            + std::to_string(n) + (e.source.empty() ? "" : " [" + e.source + "]") + ": "
                            + describe(e.values[n]) + ", got " + got.get_str());
                    }
                }
            }
            c.note(std::to_string(fx.eta.size()) + " lists, " + std::to_string(annotated) + " annotated entries");
        }));
    }

    if (!fx.blocks.empty()) {
        out.push_back(guarded(tag + "block matrices", [&](Check& c) {
            for (const auto& b : fx.blocks) {
                if (b.base >= first.system.p || b.target >= first.system.p) {
                    c.fail("block index out of range");
                    continue;
                }
                const IntMatrix got = first.system.block(b.base, b.target);
                if (b.matrix.rows() > got.rows() || b.matrix.cols() > got.cols()) {
                    c.fail("block larger than the system");
                    continue;
                }
                for (std::size_t i = 0; i < b.matrix.rows(); ++i) {
                    for (std::size_t k = 0; k < b.matrix.cols(); ++k) {
                        if (got(i, k) != b.matrix(i, k)) {
                            c.fail("M(" + std::to_string(b.base + 1) + "," + std::to_string(b.target + 1) + ") entry ("
                                + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): expected "
                                + b.matrix(i, k).get_str() + ", got " + got(i, k).get_str());
                        }
                    }
                }
            }
        }));
    }

    out.push_back(guarded(tag + "grade independence", [&](Check& c) {
        const Fan fan = build_fan(spec, fx.cutoff);
        std::size_t checked = 0;
        for (const auto& xi : first.base.weights) {
            for (const auto& gamma : fan.vectors) {
                ++checked;
                if (!lemma1_check(spec, xi, gamma, opts.lemma_probes)) {
                    c.fail("xi " + labels_text(xi.classical) + " with the fan vector at grade " + gamma.grade.get_str());
                }
            }
        }
        c.note(std::to_string(checked) + " pairs");
    }));

    if (fx.distinct_strings) {
        out.push_back(guarded(tag + "distinct strings", [&](Check& c) {
            std::set<std::vector<Integer>> rows;
            for (const auto& r : runs) {
                for (std::size_t s = 0; s < r.computation.table.base.size(); ++s) {
                    rows.insert(r.computation.table.string(s));
                }
            }
            if (rows.size() != *fx.distinct_strings) {
                c.fail("expected " + std::to_string(*fx.distinct_strings) + ", got " + std::to_string(rows.size()));
            }
            c.note(std::to_string(rows.size()));
        }));
    }
    return out;
}

void inject_fault(FixtureSet& set)
{
    for (auto& fx : set.strings) {
        for (auto& m : fx.modules) {
            for (auto& s : m.strings) {
                if (!s.coeffs.empty()) {
                    s.coeffs.back().expected += 1;
                    return;
                }
            }
        }
    }
    for (auto& fx : set.fans) {
        if (!fx.vectors.empty()) {
            fx.vectors.back().mult = -fx.vectors.back().mult;
            return;
        }
    }
}

} // namespace

std::filesystem::path fixture_directory(const std::optional<std::filesystem::path>& explicit_dir)
{
    if (explicit_dir) {
        return *explicit_dir;
    }
    if (const char* env = std::getenv("AFFSTR_FIXTURES"); env && *env) {
        return env;
    }
    return AFFSTR_DEFAULT_FIXTURE_DIR;
}

FanFixture parse_fan_fixture(const std::string& text, const std::string& file)
{
    const json j = parse_json(text, file.c_str());
    FanFixture fx{j.value("name", file), file, fixture_algebra(field(j, "algebra", "fan fixture")),
        long_from(field(j, "cutoff", "fan fixture"), "fan fixture cutoff"), {}};
    const Fan listed = fan_from_json(fx.algebra, field(j, "vectors", "fan fixture").dump(), fx.cutoff);
    // Keep file order for diagnostics.
    for (const auto& e : field(j, "vectors", "fan fixture")) {
        FanVector v;
        for (const auto& x : e.at("root")) {
            v.root.push_back(integer_from(x, "fan root"));
        }
        v.grade = integer_from(e.at("grade"), "fan grade");
        v.mult = static_cast<int>(long_from(e.at("mult"), "fan mult"));
        fx.vectors.push_back(std::move(v));
    }
    if (listed.cutoff > fx.cutoff) {
        throw ConfigError(file + ": entries exceed the stated cutoff");
    }
    return fx;
}

StringFixture parse_string_fixture(const std::string& text, const std::string& file)
{
    const json j = parse_json(text, file.c_str());
    StringFixture fx{j.value("name", file), file, fixture_algebra(field(j, "algebra", "string fixture")),
        integer_from(field(j, "level", "string fixture"), "string fixture level"),
        long_from(field(j, "cutoff", "string fixture"), "string fixture cutoff"), {}, {}, {}, {}, std::nullopt};
    if (fx.cutoff < 0) {
        throw ConfigError(file + ": negative cutoff");
    }
    const std::size_t r = fx.algebra.rank();
    for (const auto& b : field(j, "base", "string fixture")) {
        fx.base.push_back(labels_from(b, r, "string fixture base"));
    }
    for (const auto& m : field(j, "modules", "string fixture")) {
        FixtureModule mod;
        mod.mu = labels_from(field(m, "mu", "module"), r, "module mu");
        mod.note = m.value("note", "");
        for (const auto& s : field(m, "strings", "module")) {
            mod.strings.push_back(
                {labels_from(field(s, "xi", "string"), r, "string xi"), values_from(field(s, "coeffs", "string"), "coeffs")});
        }
        fx.modules.push_back(std::move(mod));
    }
    const std::size_t p = fx.base.size();
    if (j.contains("eta")) {
        for (const auto& e : j.at("eta")) {
            fx.eta.push_back({index_from(field(e, "base", "eta"), p, "eta base"),
                index_from(field(e, "target", "eta"), p, "eta target"), e.value("source", ""),
                values_from(field(e, "values", "eta"), "eta values")});
        }
    }
    if (j.contains("blocks")) {
        for (const auto& b : j.at("blocks")) {
            const json& rows = field(b, "matrix", "block");
            if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
                throw ConfigError(file + ": block matrix must be a non-empty array of rows");
            }
            IntMatrix mat(rows.size(), rows[0].size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].is_array() || rows[i].size() != mat.cols()) {
                    throw ConfigError(file + ": ragged block matrix");
                }
                for (std::size_t k = 0; k < mat.cols(); ++k) {
                    mat(i, k) = integer_from(rows[i][k], "block entry");
                }
            }
            fx.blocks.push_back({index_from(field(b, "base", "block"), p, "block base"),
                index_from(field(b, "target", "block"), p, "block target"), std::move(mat)});
        }
    }
    if (j.contains("distinct_strings")) {
        fx.distinct_strings = static_cast<std::size_t>(long_from(j.at("distinct_strings"), "distinct_strings"));
    }
    return fx;
}

FixtureSet load_fixtures(const std::filesystem::path& dir)
{
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw ConfigError("fixture directory " + dir.string() + " does not exist");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    FixtureSet set;
    for (const auto& path : files) {
        const std::string text = read_file(path);
        const std::string name = path.filename().string();
        const json j = parse_json(text, name.c_str());
        const std::string kind = j.value("kind", "");
        if (kind == "fan") {
            set.fans.push_back(parse_fan_fixture(text, name));
        } else if (kind == "strings") {
            set.strings.push_back(parse_string_fixture(text, name));
        } else {
            throw ConfigError(name + ": unknown fixture kind '" + kind + "'");
        }
    }
    if (set.empty()) {
        set.warnings.push_back("no fixtures found in " + dir.string());
    }
    return set;
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string VerifyReport::to_text() const
{
    std::string out;
    for (const auto& w : warnings) {
        out += "WARN  " + w + "\n";
    }
    for (const auto& c : checks) {
        out += (c.passed ? "PASS  " : "FAIL  ") + c.name;
        if (!c.detail.empty()) {
            out += (c.passed ? "  (" + c.detail + ")" : "  -- " + c.detail);
        }
        out += "\n";
    }
    out += std::to_string(checks.size()) + " checks, " + std::to_string(failures()) + " failed\n";
    return out;
}

VerifyReport verify_fixtures(FixtureSet fixtures, const VerifyOptions& opts)
{
    if (opts.inject_fault) {
        inject_fault(fixtures);
    }
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (const auto& fx : fixtures.fans) {
        jobs.push_back(std::async(std::launch::async, [&fx] { return run_fan_fixture(fx); }));
    }
    for (const auto& fx : fixtures.strings) {
        jobs.push_back(std::async(std::launch::async, [&fx, &opts] { return run_string_fixture(fx, opts); }));
    }
    VerifyReport report;
    report.warnings = fixtures.warnings;
    for (auto& job : jobs) {
        auto part = job.get();
        report.checks.insert(report.checks.end(), part.begin(), part.end());
    }
    return report;
}

} // namespace affstr
