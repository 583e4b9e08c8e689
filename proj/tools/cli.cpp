#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "affstr/io.hpp"
#include "affstr/oracle.hpp"
#include "affstr/verify.hpp"

namespace affstr::cli {

namespace {

struct RunConfig {
    std::string algebra = "A2";
    long level = 1;
    std::string mu = "";
    long cutoff = 9;
    std::string format = "text";
    bool verify = false;
    std::string out_path;

    // command specific
    std::optional<long> base_index;
    std::string weight;
    long grade = 0;
    long min_depth = 0;
    std::string fixtures;
    bool inject_fault = false;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write " + cfg.out_path);
    }
    file << text;
}

void require_cutoff(const RunConfig& cfg)
{
    if (cfg.cutoff < 0) {
        throw ConfigError("--cutoff must be non-negative");
    }
}

Format format_for(const RunConfig& cfg, bool csv_allowed)
{
    const Format f = parse_format(cfg.format);
    if (f == Format::csv && !csv_allowed) {
        throw ConfigError("csv output is not available for this command");
    }
    return f;
}

// μ as classical Dynkin labels; λ_0 is whatever the level leaves over.
AffineWeight highest_weight(const AlgebraSpec& spec, const RunConfig& cfg)
{
    if (cfg.level < 1) {
        throw ConfigError("--level must be >= 1");
    }
    std::vector<Rational> labels = cfg.mu.empty() ? std::vector<Rational>(spec.rank(), Rational(0)) : parse_labels(cfg.mu);
    if (labels.size() != spec.rank()) {
        throw ConfigError("--mu needs " + std::to_string(spec.rank()) + " labels for " + spec.label());
    }
    AffineWeight mu = make_weight(spec, labels, cfg.level, 0);
    if (zeroth_label(spec, mu) < 0) {
        throw ConfigError("--mu is too large for level " + std::to_string(cfg.level));
    }
    return mu;
}

void spot_check(const StringTable& table, std::ostream& err)
{
    auto fan = std::make_shared<const Fan>(build_fan(table.algebra, table.depth));
    RacahOracle oracle(table.algebra, table.mu(), fan);
    for (std::size_t s = 0; s < table.base.size(); ++s) {
        for (long d = 0; d <= table.depth; ++d) {
            AffineWeight w = table.base.weights[s];
            w.grade = -d;
            const Integer folded = table.coefficients(s, static_cast<std::size_t>(d));
            const Integer racah = oracle.multiplicity(w);
            if (folded != racah) {
                throw ConsistencyError("oracle disagrees at " + format_weight(table.algebra, w) + ": folded "
                    + folded.get_str() + ", oracle " + racah.get_str());
            }
        }
    }
    err << "oracle check passed for " << table.base.size() * static_cast<std::size_t>(table.depth + 1)
        << " coefficients\n";
}

int cmd_fan(const RunConfig& cfg, std::ostream& out)
{
    require_cutoff(cfg);
    const Format f = format_for(cfg, false);
    const AlgebraSpec spec = load_algebra(cfg.algebra);
    const Fan fan = build_fan(spec, cfg.cutoff);
    if (cfg.verify) {
        const auto rep = verify_denominator(fan);
        if (!rep.ok) {
            throw ConsistencyError("fan fails the denominator identity");
        }
    }
    emit(cfg, out, f == Format::json ? fan_to_json(fan) : fan_to_text(fan));
    return ok;
}

int cmd_folded_fan(const RunConfig& cfg, std::ostream& out)
{
    require_cutoff(cfg);
    const Format f = format_for(cfg, false);
    const AlgebraSpec spec = load_algebra(cfg.algebra);
    const AffineWeight mu = highest_weight(spec, cfg);
    auto classes = enumerate_class_weights(spec, mu.level);
    const BaseWeightSet& base = classes.at(congruence_class(spec, mu.classical));
    const FoldedFans fans = build_folded_fans(spec, base, cfg.cutoff);

    std::vector<std::size_t> chosen;
    if (cfg.base_index) {
        if (*cfg.base_index < 1 || static_cast<std::size_t>(*cfg.base_index) > base.size()) {
            throw ConfigError("--base must lie in 1.." + std::to_string(base.size()));
        }
        chosen.push_back(static_cast<std::size_t>(*cfg.base_index - 1));
    } else {
        for (std::size_t j = 0; j < base.size(); ++j) {
            chosen.push_back(j);
        }
    }
    std::string text;
    if (f == Format::json) {
        // One document per base weight would not parse as a whole; wrap them.
        if (chosen.size() == 1) {
            text = folded_fan_to_json(fans.folded[chosen.front()]);
        } else {
            text = "[\n";
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                std::string doc = folded_fan_to_json(fans.folded[chosen[i]]);
                doc.pop_back();
                text += doc + (i + 1 < chosen.size() ? ",\n" : "\n");
            }
            text += "]\n";
        }
    } else {
        for (std::size_t j : chosen) {
            text += folded_fan_to_text(spec, base, fans.folded[j]);
        }
    }
    emit(cfg, out, text);
    return ok;
}

int cmd_strings(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    require_cutoff(cfg);
    const Format f = format_for(cfg, true);
    const AlgebraSpec spec = load_algebra(cfg.algebra);
    const AffineWeight mu = highest_weight(spec, cfg);
    const StringComputation comp = compute_strings(spec, mu.level, mu.classical, cfg.cutoff);
    if (cfg.verify) {
        spot_check(comp.table, err);
    }
    switch (f) {
    case Format::json:
        emit(cfg, out, string_table_to_json(comp.table));
        break;
    case Format::csv:
        emit(cfg, out, string_table_to_csv(comp.table));
        break;
    case Format::text:
        emit(cfg, out, string_table_to_text(comp.table));
        break;
    }
    return ok;
}

int cmd_mult(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Format f = format_for(cfg, false);
    const AlgebraSpec spec = load_algebra(cfg.algebra);
    const AffineWeight mu = highest_weight(spec, cfg);
    if (cfg.weight.empty()) {
        throw ConfigError("mult needs --weight");
    }
    // Weight labels may be negative here; parse them by hand.
    std::vector<Rational> labels;
    {
        std::stringstream ss(cfg.weight);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const long v = std::stol(item, &used);
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
                labels.emplace_back(v);
            } catch (const std::logic_error&) {
                throw ConfigError("malformed --weight '" + cfg.weight + "'");
            }
        }
    }
    if (labels.size() != spec.rank()) {
        throw ConfigError("--weight needs " + std::to_string(spec.rank()) + " labels");
    }
    const AffineWeight w = make_weight(spec, labels, mu.level, cfg.grade);
    const WeylOutcome red = to_dominant(spec, w);
    const long depth = red.dominant.grade > 0 ? 0 : to_long(-red.dominant.grade);
    const StringComputation comp = compute_strings(spec, mu.level, mu.classical, depth);
    const Integer m = weight_multiplicity(comp.table, w);
    if (cfg.verify) {
        auto fan = std::make_shared<const Fan>(build_fan(spec, depth));
        const Integer racah = RacahOracle(spec, mu, fan).multiplicity(w);
        if (racah != m) {
            throw ConsistencyError("oracle gives " + racah.get_str() + ", folded path gives " + m.get_str());
        }
        err << "oracle check passed\n";
    }
    if (f == Format::json) {
        emit(cfg, out, "{\"weight\": " + format_labels(labels) + ", \"grade\": " + std::to_string(cfg.grade)
                + ", \"mult\": " + m.get_str() + "}\n");
    } else {
        emit(cfg, out, m.get_str() + "\n");
    }
    return ok;
}

int cmd_character(const RunConfig& cfg, std::ostream& out)
{
    require_cutoff(cfg);
    const Format f = format_for(cfg, true);
    const AlgebraSpec spec = load_algebra(cfg.algebra);
    const AffineWeight mu = highest_weight(spec, cfg);
    const StringComputation comp = compute_strings(spec, mu.level, mu.classical, cfg.cutoff);
    const auto terms = character(comp.table, cfg.min_depth, cfg.cutoff);
    switch (f) {
    case Format::json:
        emit(cfg, out, character_to_json(spec, terms));
        break;
    case Format::csv:
        emit(cfg, out, character_to_csv(spec, terms));
        break;
    case Format::text:
        emit(cfg, out, character_to_text(spec, terms));
        break;
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto dir = fixture_directory(cfg.fixtures.empty() ? std::nullopt
                                                            : std::optional<std::filesystem::path>(cfg.fixtures));
    FixtureSet set = load_fixtures(dir);
    VerifyOptions opts;
    opts.inject_fault = cfg.inject_fault;
    const VerifyReport report = verify_fixtures(std::move(set), opts);
    for (const auto& w : report.warnings) {
        err << "warning: " << w << "\n";
    }
    emit(cfg, out, report.to_text());
    return report.passed() ? ok : consistency_failure;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool module, bool cutoff)
{
    sub->add_option("--algebra", cfg.algebra, "preset (A1, A2, A3) or JSON config path")->capture_default_str();
    if (module) {
        sub->add_option("--level", cfg.level, "level k >= 1")->capture_default_str();
        sub->add_option("--mu", cfg.mu, "highest weight as classical Dynkin labels, e.g. 1,0");
    }
    if (cutoff) {
        sub->add_option("--cutoff", cfg.cutoff, "grade depth |u|")->capture_default_str();
    }
    sub->add_option("--format", cfg.format, "text, json or csv")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write output to this file");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"String functions and weight multiplicities of affine Lie algebras", "affstr"};
    app.require_subcommand(1);

    auto* fan = app.add_subcommand("fan", "list the fan to a grade cutoff");
    add_common(fan, cfg, false, true);
    fan->add_flag("--verify", cfg.verify, "check the denominator identity");

    auto* folded = app.add_subcommand("folded-fan", "folded fans of the class of mu");
    add_common(folded, cfg, true, true);
    folded->add_option("--base", cfg.base_index, "1-based base weight index (default: all)");

    auto* strings = app.add_subcommand("strings", "string functions of L(mu)");
    add_common(strings, cfg, true, true);
    strings->add_flag("--verify", cfg.verify, "cross-check against the Racah oracle");

    auto* mult = app.add_subcommand("mult", "multiplicity of one weight in L(mu)");
    add_common(mult, cfg, true, false);
    mult->add_option("--weight", cfg.weight, "classical Dynkin labels of the weight")->required();
    mult->add_option("--grade", cfg.grade, "grade of the weight (<= 0 below mu)")->capture_default_str();
    mult->add_flag("--verify", cfg.verify, "cross-check against the Racah oracle");

    auto* chr = app.add_subcommand("character", "weights and multiplicities in a depth window");
    add_common(chr, cfg, true, true);
    chr->add_option("--min-depth", cfg.min_depth, "shallowest depth listed")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run the fixture suite");
    ver->add_option("--fixtures", cfg.fixtures, "fixture directory (default: $AFFSTR_FIXTURES or built-in)");
    ver->add_flag("--inject-fault", cfg.inject_fault, "perturb one fixture value (test mode)");
    ver->add_option("--out", cfg.out_path, "write the report to this file");

    std::vector<std::string> argv_store{"affstr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : config_error;
    }

    try {
        if (*fan) {
            return cmd_fan(cfg, out);
        }
        if (*folded) {
            return cmd_folded_fan(cfg, out);
        }
        if (*strings) {
            return cmd_strings(cfg, out, err);
        }
        if (*mult) {
            return cmd_mult(cfg, out, err);
        }
        if (*chr) {
            return cmd_character(cfg, out);
        }
        return cmd_verify(cfg, out, err);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return consistency_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return config_error;
    }
}

} // namespace affstr::cli
