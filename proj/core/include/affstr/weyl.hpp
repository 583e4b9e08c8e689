#ifndef AFFSTR_WEYL_HPP
#define AFFSTR_WEYL_HPP

#include <cstddef>
#include <vector>

#include "affstr/algebra.hpp"

namespace affstr {

/// Result of bringing a weight into the fundamental chamber.
///
/// `word` lists the simple reflections in the order they were applied
/// (index 0 is the affine reflection). On a wall the sign belongs to this
/// particular word only.
struct WeylOutcome {
    AffineWeight dominant;
    int sign = 1;
    bool on_wall = false;
    std::vector<std::size_t> word;
};

/// Decomposition of a reducing element as t_θ∨ · s: `theta` is θ∨ in
/// simple-root coordinates (coroots identified with roots via the form),
/// `linear` is s acting on Dynkin labels.
struct TranslationDatum {
    std::vector<Integer> theta;
    RatMatrix linear;
};

struct ReductionOptions {
    std::size_t max_steps = 1'000'000;
};

/// s_i λ = λ − λ_i α_i with α_0 = δ − θ.
AffineWeight reflect(const AlgebraSpec& spec, std::size_t i, const AffineWeight& w);

/// s_i ∘ λ = s_i(λ + ρ) − ρ.
AffineWeight shifted_reflect(const AlgebraSpec& spec, std::size_t i, const AffineWeight& w);

/// Ordinary action. Requires level > 0.
WeylOutcome to_dominant(const AlgebraSpec& spec, const AffineWeight& w, const ReductionOptions& opts = {});

/// Shifted action. Requires level(λ + ρ) > 0. When the shifted orbit meets a
/// wall the result has on_wall = true and `dominant` is meaningless.
WeylOutcome to_dominant_shifted(const AlgebraSpec& spec, const AffineWeight& w,
    const ReductionOptions& opts = {});

TranslationDatum translation_datum(const AlgebraSpec& spec, const WeylOutcome& outcome);

/// Applies t_θ∨ · s to a weight using the closed translation formula
/// (classical part s(λ°) + kθ∨, grade n − (s(λ°), θ∨) − (k/2)|θ∨|²).
AffineWeight apply_translation_datum(const AlgebraSpec& spec, const TranslationDatum& datum,
    const AffineWeight& w);

/// Replays a word of simple reflections on a weight, first letter first.
AffineWeight apply_word(const AlgebraSpec& spec, const std::vector<std::size_t>& word, const AffineWeight& w);

} // namespace affstr

#endif
