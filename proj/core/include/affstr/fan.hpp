#ifndef AFFSTR_FAN_HPP
#define AFFSTR_FAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affstr/algebra.hpp"

namespace affstr {

/// A shift γ = ρ − wρ (w ≠ e) with multiplicity s(γ) = −ε(w).
struct FanVector {
    std::vector<Integer> root;  // simple-root coordinates of γ°
    Integer grade;              // δ-coefficient of γ, ≥ 0
    int mult = 0;

    RootVector shift() const { return RootVector{root, grade}; }

    friend bool operator==(const FanVector&, const FanVector&) = default;
};

/// (grade, root lexicographic): the serialization order.
bool fan_order(const FanVector& a, const FanVector& b);

/// The fan Γ of the Cartan subalgebra, truncated at grade ≤ cutoff.
struct Fan {
    AlgebraSpec algebra;
    long cutoff = 0;
    std::vector<FanVector> vectors;
};

struct FanOptions {
    std::size_t max_nodes = 5'000'000;
};

/// Exhaustive BFS over the orbit of ρ, pruned at grade −cutoff.
Fan build_fan(const AlgebraSpec& spec, long cutoff, const FanOptions& opts = {});

struct DenominatorMismatch {
    std::vector<Integer> root;
    Integer grade;
    Integer expected;  // coefficient of e^{−γ} in 1 − Π(1 − e^{−α})^mult
    Integer actual;    // coefficient carried by the fan
};

struct DenominatorReport {
    bool ok = true;
    std::size_t terms_checked = 0;
    std::optional<DenominatorMismatch> first_mismatch;
};

/// Expands the affine denominator to the fan's cutoff grade and compares it
/// coefficient by coefficient with Σ s(γ) e^{−γ}.
DenominatorReport verify_denominator(const Fan& fan);

} // namespace affstr

#endif
