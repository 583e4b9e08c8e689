#ifndef AFFSTR_STRINGS_HPP
#define AFFSTR_STRINGS_HPP

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "affstr/folding.hpp"

namespace affstr {

/// All dominant level-k grade-0 weights, split by congruence class.
std::map<CongruenceClassId, BaseWeightSet> enumerate_class_weights(const AlgebraSpec& spec, const Integer& level);

/// The system M m = δ for one module.
///
/// Unknowns are ordered block by block (one block per base weight ξ_j); inside
/// a block position i holds grade −(depth − i), so grade 0 comes last and
/// every block M_(j,s) is upper-triangular Toeplitz with η_{j,s}(d) on the
/// d-th superdiagonal.
struct BlockSystem {
    std::size_t p = 0;
    long depth = 0;
    std::size_t mu_index = 0;
    /// eta[j][s][d] = η_{j,s}(d), d = 0..depth.
    std::vector<std::vector<std::vector<Integer>>> eta;
    std::vector<Integer> rhs;

    IntMatrix block(std::size_t j, std::size_t s) const;
    IntMatrix grade0_block() const;
    IntMatrix matrix() const;
    std::size_t position(std::size_t j, long grade_depth) const;
};

BlockSystem assemble_system(const BaseWeightSet& base, std::span<const FoldedFan> folded, std::size_t mu_index,
    long depth);

/// Coefficients m_{s,n} of the extended string functions of one module.
struct StringTable {
    AlgebraSpec algebra;
    BaseWeightSet base;
    std::size_t mu_index = 0;
    long depth = 0;
    IntMatrix coefficients;  // p × (depth + 1), column n ↔ q^n

    const Integer& level() const noexcept { return base.level; }
    const AffineWeight& mu() const { return base.weights[mu_index]; }
    std::vector<Integer> string(std::size_t s) const;
};

/// Per-grade forward substitution with the grade-0 block. Throws
/// ConsistencyError on a fractional or negative coefficient.
StringTable solve_strings(const AlgebraSpec& spec, const BaseWeightSet& base, const BlockSystem& system);

/// Multiplicity of λ in the module, read off the string table.
/// Throws OutOfWindowError if λ lies deeper than the table's depth.
Integer weight_multiplicity(const StringTable& table, const AffineWeight& w);

/// All weights with nonzero multiplicity at depths min_depth..max_depth below
/// the highest weight (grade −max_depth..−min_depth), sorted by grade
/// descending then Dynkin labels.
std::vector<std::pair<AffineWeight, Integer>> character(const StringTable& table, long min_depth, long max_depth);

/// Everything produced along the folded-fan pipeline for one module.
struct StringComputation {
    BaseWeightSet base;
    FoldedFans fans;
    BlockSystem system;
    StringTable table;
};

/// μ given by classical Dynkin labels; λ_0 is inferred from the level.
StringComputation compute_strings(const AlgebraSpec& spec, const Integer& level, std::span<const Rational> mu,
    long depth, const FanOptions& opts = {});

} // namespace affstr

#endif
