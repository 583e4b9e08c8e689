#ifndef AFFSTR_IO_HPP
#define AFFSTR_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affstr/strings.hpp"

namespace affstr {

enum class Format { text, json, csv };

/// "text", "json" or "csv"; anything else is a ConfigError.
Format parse_format(std::string_view name);

/// Algebra config: {"label": "A2", "cartan": [[2,-1],[-1,2]], "symmetrizer": [1,1]}.
/// The symmetrizer may hold integers or "p/q" strings and may be omitted
/// for symmetric Cartan matrices.
AlgebraSpec algebra_from_json(const std::string& text);
std::string algebra_to_json(const AlgebraSpec& spec);

/// A preset name (A1, A2, A3) or the path of a JSON algebra config.
AlgebraSpec load_algebra(const std::string& preset_or_path);

/// "1,0,2" -> {1, 0, 2}. Labels must be non-negative integers.
std::vector<Rational> parse_labels(std::string_view text);

// Integers serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; the parsers accept both.

/// JSON array of {"root": [..], "grade": n, "mult": ±1}.
std::string fan_to_json(const Fan& fan);
/// cutoff < 0 takes the largest grade present.
Fan fan_from_json(const AlgebraSpec& spec, const std::string& text, long cutoff = -1);
/// One 5-tuple (a1, .., ar, 0, n, mult) per line, root coordinates first.
std::string fan_to_text(const Fan& fan);

/// {"base": j, "entries": [{"target": s, "grade": n, "eta": η}]} with 1-based
/// indices, entries sorted by (target, grade).
std::string folded_fan_to_json(const FoldedFan& folded);
FoldedFan folded_fan_from_json(const std::string& text, long cutoff = -1);
std::string folded_fan_to_text(const AlgebraSpec& spec, const BaseWeightSet& base, const FoldedFan& folded);

/// {"algebra": label, "mu": [labels], "level": k, "cutoff": |u|,
///  "strings": [{"xi": [labels], "coeffs": [..]}]}
std::string string_table_to_json(const StringTable& table);
StringTable string_table_from_json(const AlgebraSpec& spec, const std::string& text);
std::string string_table_to_text(const StringTable& table);
/// Header "string,xi,grade,coefficient"; one row per (string, grade).
std::string string_table_to_csv(const StringTable& table);

using CharacterTerms = std::vector<std::pair<AffineWeight, Integer>>;
std::string character_to_json(const AlgebraSpec& spec, const CharacterTerms& terms);
std::string character_to_text(const AlgebraSpec& spec, const CharacterTerms& terms);
std::string character_to_csv(const AlgebraSpec& spec, const CharacterTerms& terms);

} // namespace affstr

#endif
