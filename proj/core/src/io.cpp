#include "affstr/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json_support.hpp"

namespace affstr {

using detail::json;

namespace {

using namespace detail;

std::string dump(const json& j) { return j.dump(1) + "\n"; }

std::string join_integers(std::span<const Integer> values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += values[i].get_str();
    }
    return out;
}

std::string dynkin_string(std::span<const Rational> labels)
{
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + labels[i].get_str();
    }
    return out + "]";
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "text") {
        return Format::text;
    }
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    throw ConfigError("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

AlgebraSpec algebra_from_json(const std::string& text)
{
    const json j = parse_json(text, "algebra config");
    const json& label = field(j, "label", "algebra config");
    const json& cartan = field(j, "cartan", "algebra config");
    if (!label.is_string()) {
        throw ConfigError("algebra config: label must be a string");
    }
    if (!cartan.is_array() || cartan.empty()) {
        throw ConfigError("algebra config: cartan must be a non-empty square matrix");
    }
    const std::size_t r = cartan.size();
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!cartan[i].is_array() || cartan[i].size() != r) {
            throw ConfigError("algebra config: cartan must be square");
        }
        for (std::size_t k = 0; k < r; ++k) {
            a(i, k) = integer_from(cartan[i][k], "algebra config cartan");
        }
    }
    std::vector<Rational> sym(r, Rational(1));
    if (j.contains("symmetrizer")) {
        sym = labels_from(j.at("symmetrizer"), r, "algebra config symmetrizer");
    }
    return AlgebraSpec::create(label.get<std::string>(), std::move(a), std::move(sym));
}

std::string algebra_to_json(const AlgebraSpec& spec)
{
    json cartan = json::array();
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < spec.rank(); ++k) {
            row.push_back(integer_json(spec.cartan()(i, k)));
        }
        cartan.push_back(std::move(row));
    }
    return dump({{"label", spec.label()}, {"cartan", cartan}, {"symmetrizer", labels_json(spec.symmetrizer())}});
}

AlgebraSpec load_algebra(const std::string& preset_or_path)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(preset_or_path, ec)) {
        std::ifstream in(preset_or_path);
        if (!in) {
            throw ConfigError("cannot read algebra config " + preset_or_path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return algebra_from_json(buf.str());
    }
    return AlgebraSpec::preset(preset_or_path);
}

std::vector<Rational> parse_labels(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        long v = 0;
        const auto [ptr, err] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || err != std::errc() || ptr != item.data() + item.size()) {
            throw ConfigError("malformed label list '" + std::string(text) + "'");
        }
        if (v < 0) {
            throw ConfigError("labels must be non-negative: '" + std::string(text) + "'");
        }
        out.emplace_back(v);
        pos = end + 1;
    }
    return out;
}

std::string fan_to_json(const Fan& fan)
{
    json out = json::array();
    for (const auto& v : fan.vectors) {
        json root = json::array();
        for (const auto& c : v.root) {
            root.push_back(integer_json(c));
        }
        out.push_back({{"root", root}, {"grade", integer_json(v.grade)}, {"mult", v.mult}});
    }
    return dump(out);
}

Fan fan_from_json(const AlgebraSpec& spec, const std::string& text, long cutoff)
{
    const json j = parse_json(text, "fan");
    if (!j.is_array()) {
        throw ConfigError("fan: expected a JSON array");
    }
    Fan fan{spec, cutoff, {}};
    long top = 0;
    for (const auto& e : j) {
        FanVector v;
        const json& root = field(e, "root", "fan entry");
        if (!root.is_array() || root.size() != spec.rank()) {
            throw ConfigError("fan entry: root has the wrong rank");
        }
        for (const auto& c : root) {
            v.root.push_back(integer_from(c, "fan root"));
        }
        v.grade = integer_from(field(e, "grade", "fan entry"), "fan grade");
        const long mult = long_from(field(e, "mult", "fan entry"), "fan mult");
        if (mult != 1 && mult != -1) {
            throw ConfigError("fan entry: mult must be +1 or -1");
        }
        v.mult = static_cast<int>(mult);
        if (v.grade < 0) {
            throw ConfigError("fan entry: negative grade");
        }
        top = std::max(top, to_long(v.grade));
        fan.vectors.push_back(std::move(v));
    }
    if (cutoff < 0) {
        fan.cutoff = top;
    }
    std::sort(fan.vectors.begin(), fan.vectors.end(), fan_order);
    return fan;
}

std::string fan_to_text(const Fan& fan)
{
    std::string out;
    for (const auto& v : fan.vectors) {
        out += "(" + join_integers(v.root, ", ") + ", 0, " + v.grade.get_str() + ", " + std::to_string(v.mult) + ")\n";
    }
    return out;
}

std::string folded_fan_to_json(const FoldedFan& folded)
{
    json entries = json::array();
    for (const auto& [key, eta] : folded.entries) {
        entries.push_back({{"target", key.first + 1}, {"grade", key.second}, {"eta", integer_json(eta)}});
    }
    return dump({{"base", folded.base_index + 1}, {"entries", entries}});
}

FoldedFan folded_fan_from_json(const std::string& text, long cutoff)
{
    const json j = parse_json(text, "folded fan");
    constexpr std::size_t unbounded = static_cast<std::size_t>(-1) / 2;
    FoldedFan out;
    out.base_index = index_from(field(j, "base", "folded fan"), unbounded, "folded fan base");
    long top = 0;
    const json& entries = field(j, "entries", "folded fan");
    if (!entries.is_array()) {
        throw ConfigError("folded fan: entries must be an array");
    }
    for (const auto& e : entries) {
        const std::size_t target = index_from(field(e, "target", "folded entry"), unbounded, "folded target");
        const long grade = long_from(field(e, "grade", "folded entry"), "folded grade");
        if (grade < 0) {
            throw ConfigError("folded entry: negative grade");
        }
        const Integer eta = integer_from(field(e, "eta", "folded entry"), "folded eta");
        if (eta == 0) {
            throw ConfigError("folded entry: zero multiplicity");
        }
        if (!out.entries.emplace(std::make_pair(target, grade), eta).second) {
            throw ConfigError("folded entry: duplicate (target, grade)");
        }
        top = std::max(top, grade);
    }
    out.cutoff = cutoff < 0 ? top : cutoff;
    return out;
}

std::string folded_fan_to_text(const AlgebraSpec& spec, const BaseWeightSet& base, const FoldedFan& folded)
{
    std::string out = "base " + std::to_string(folded.base_index + 1) + " "
        + format_weight(spec, base.weights.at(folded.base_index)) + "\n";
    for (const auto& [key, eta] : folded.entries) {
        const auto coords = to_root_basis(spec, base.weights.at(key.first));
        std::string c;
        for (const auto& x : coords) {
            c += x.get_str() + ";";
        }
        out += "(" + c + std::to_string(key.second) + ";" + eta.get_str() + ")\n";
    }
    return out;
}

std::string string_table_to_json(const StringTable& table)
{
    json strings = json::array();
    for (std::size_t s = 0; s < table.base.size(); ++s) {
        json coeffs = json::array();
        for (const auto& c : table.string(s)) {
            coeffs.push_back(integer_json(c));
        }
        strings.push_back({{"xi", labels_json(table.base.weights[s].classical)}, {"coeffs", coeffs}});
    }
    json out;
    out["algebra"] = table.algebra.label();
    out["mu"] = labels_json(table.mu().classical);
    out["level"] = integer_json(table.level());
    out["cutoff"] = table.depth;
    out["strings"] = std::move(strings);
    return dump(out);
}

StringTable string_table_from_json(const AlgebraSpec& spec, const std::string& text)
{
    const json j = parse_json(text, "string table");
    const Integer level = integer_from(field(j, "level", "string table"), "string table level");
    const long depth = long_from(field(j, "cutoff", "string table"), "string table cutoff");
    if (depth < 0) {
        throw ConfigError("string table: negative cutoff");
    }
    const auto mu = labels_from(field(j, "mu", "string table"), spec.rank(), "string table mu");
    const json& strings = field(j, "strings", "string table");
    if (!strings.is_array() || strings.empty()) {
        throw ConfigError("string table: strings must be a non-empty array");
    }
    std::vector<AffineWeight> weights;
    std::vector<std::vector<Integer>> rows;
    for (const auto& s : strings) {
        weights.push_back(make_weight(spec, labels_from(field(s, "xi", "string"), spec.rank(), "string xi"), level, 0));
        const json& coeffs = field(s, "coeffs", "string");
        if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(depth + 1)) {
            throw ConfigError("string table: each string needs cutoff + 1 coefficients");
        }
        std::vector<Integer> row;
        for (const auto& c : coeffs) {
            row.push_back(integer_from(c, "string coefficient"));
        }
        rows.push_back(std::move(row));
    }
    const std::vector<AffineWeight> listed = weights;
    BaseWeightSet base = make_base_weight_set(spec, level, std::move(weights));
    const auto mu_index = base.index_of(mu);
    if (!mu_index) {
        throw ConfigError("string table: mu is not among the strings");
    }
    StringTable table{spec, base, *mu_index, depth, IntMatrix(base.size(), static_cast<std::size_t>(depth + 1))};
    for (std::size_t i = 0; i < listed.size(); ++i) {
        const std::size_t s = *base.index_of(listed[i].classical);
        for (std::size_t n = 0; n < rows[i].size(); ++n) {
            table.coefficients(s, n) = rows[i][n];
        }
    }
    return table;
}

std::string string_table_to_text(const StringTable& table)
{
    const AlgebraSpec& spec = table.algebra;
    std::string out = spec.label() + " level " + table.level().get_str() + " mu " + dynkin_string(table.mu().classical)
        + " cutoff " + std::to_string(table.depth) + "\n";
    for (std::size_t s = 0; s < table.base.size(); ++s) {
        const auto row = table.string(s);
        out += "sigma_" + std::to_string(s + 1) + " " + dynkin_string(table.base.weights[s].classical) + " "
            + format_weight(spec, table.base.weights[s]) + ": " + join_integers(row, " ") + "\n";
    }
    return out;
}

std::string string_table_to_csv(const StringTable& table)
{
    std::string out = "string,xi,grade,coefficient\n";
    for (std::size_t s = 0; s < table.base.size(); ++s) {
        std::string xi;
        for (const auto& l : table.base.weights[s].classical) {
            xi += (xi.empty() ? "" : " ") + l.get_str();
        }
        for (long n = 0; n <= table.depth; ++n) {
            out += std::to_string(s + 1) + "," + xi + "," + std::to_string(n) + ","
                + table.coefficients(s, static_cast<std::size_t>(n)).get_str() + "\n";
        }
    }
    return out;
}

std::string character_to_json(const AlgebraSpec& spec, const CharacterTerms& terms)
{
    json out = json::array();
    for (const auto& [w, m] : terms) {
        out.push_back({{"labels", labels_json(affine_labels(spec, w))},
            {"grade", integer_json(w.grade)},
            {"mult", integer_json(m)}});
    }
    return dump(out);
}

std::string character_to_text(const AlgebraSpec& spec, const CharacterTerms& terms)
{
    std::string out;
    for (const auto& [w, m] : terms) {
        out += dynkin_string(affine_labels(spec, w)) + " " + format_weight(spec, w) + " " + m.get_str() + "\n";
    }
    return out;
}

std::string character_to_csv(const AlgebraSpec& spec, const CharacterTerms& terms)
{
    std::string out = "labels,grade,multiplicity\n";
    for (const auto& [w, m] : terms) {
        std::string labels;
        for (const auto& l : affine_labels(spec, w)) {
            labels += (labels.empty() ? "" : " ") + l.get_str();
        }
        out += labels + "," + w.grade.get_str() + "," + m.get_str() + "\n";
    }
    return out;
}

} // namespace affstr
