#ifndef AFFSTR_FOLDING_HPP
#define AFFSTR_FOLDING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "affstr/algebra.hpp"
#include "affstr/fan.hpp"
#include "affstr/weyl.hpp"

namespace affstr {

/// Residues of a classical weight in P/Q, one per invariant factor > 1.
struct CongruenceClassId {
    std::vector<Integer> residues;

    friend bool operator==(const CongruenceClassId&, const CongruenceClassId&) = default;
    friend bool operator<(const CongruenceClassId& a, const CongruenceClassId& b) { return a.residues < b.residues; }
};

/// Requires integral Dynkin labels.
CongruenceClassId congruence_class(const AlgebraSpec& spec, std::span<const Rational> labels);

/// Dominant level-k grade-0 weights ξ_1..ξ_p of one congruence class, in the
/// order (height in the simple-root basis, then root-basis lexicographic).
struct BaseWeightSet {
    Integer level;
    CongruenceClassId cls;
    std::vector<AffineWeight> weights;

    std::size_t size() const noexcept { return weights.size(); }
    std::optional<std::size_t> index_of(std::span<const Rational> classical) const;
};

/// Sorts and validates a base set; throws ConfigError on any violation.
BaseWeightSet make_base_weight_set(const AlgebraSpec& spec, const Integer& level, std::vector<AffineWeight> weights);

/// Full folded fan FΨ(ξ_j): η_{j,s}(n) keyed by (target index s, offset n).
/// Absent entries are zero.
struct FoldedFan {
    std::size_t base_index = 0;
    long cutoff = 0;
    std::map<std::pair<std::size_t, long>, Integer> entries;

    Integer eta(std::size_t target, long offset) const;
};

struct FoldedShift {
    AffineWeight target;  // dominant, same level as ξ
    long offset = 0;      // grade(target) − grade(ξ), never negative
    int contribution = 0;
    WeylOutcome outcome;
};

/// Transports ξ + γ to the dominant chamber. Walls are kept: multiplicities
/// are invariant under the ordinary action, so no term is ever excluded and
/// the optional is always engaged for valid input.
std::optional<FoldedShift> fold_shift(const AlgebraSpec& spec, const AffineWeight& xi, const FanVector& gamma);

/// Requires fan.cutoff ≥ cutoff.
FoldedFan build_folded_fan(const AlgebraSpec& spec, const BaseWeightSet& base, std::size_t base_index,
    const Fan& fan, long cutoff);

/// Grows a fan until one whole extra grade layer lands no folded entry at
/// offset ≤ cutoff for any base weight, then adds one guard layer.
Fan fan_for_folding(const AlgebraSpec& spec, const BaseWeightSet& base, long cutoff, const FanOptions& opts = {});

struct FoldedFans {
    Fan fan;
    std::vector<FoldedFan> folded;
};

/// Folded fans for every base weight (built concurrently).
FoldedFans build_folded_fans(const AlgebraSpec& spec, const BaseWeightSet& base, long cutoff,
    const FanOptions& opts = {});

/// Folds ξ_j shifted to each probe grade against γ and checks that the
/// (target, offset, contribution) triple does not depend on the probe. Also
/// checks that the translation decomposition of the reducing element
/// reproduces the folded grade.
bool lemma1_check(const AlgebraSpec& spec, const AffineWeight& xi, const FanVector& gamma,
    std::span<const long> probe_grades);

} // namespace affstr

#endif
