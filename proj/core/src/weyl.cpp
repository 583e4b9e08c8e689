#include "affstr/weyl.hpp"

#include <string>

namespace affstr {

namespace {

void check_index(const AlgebraSpec& spec, std::size_t i)
{
    if (i > spec.rank()) {
        throw ConfigError("reflection index " + std::to_string(i) + " out of range for " + spec.label());
    }
}

// s_i on Dynkin labels only, given the label c = λ_i being reflected.
void reflect_classical(const AlgebraSpec& spec, std::size_t i, const Rational& c, std::vector<Rational>& labels)
{
    if (c == 0) {
        return;
    }
    const std::size_t r = spec.rank();
    if (i == 0) {
        // λ − λ_0 (δ − θ): classical part gains λ_0 θ.
        const auto& theta = spec.highest_root_labels();
        for (std::size_t j = 0; j < r; ++j) {
            labels[j] += c * theta[j];
        }
    } else {
        for (std::size_t j = 0; j < r; ++j) {
            labels[j] -= c * spec.cartan()(j, i - 1);
        }
    }
}

// Index of the most negative affine label (ties: smallest index), or r+1 when
// every label is ≥ 0. `zero` reports whether some label is exactly 0.
std::size_t most_negative(const std::vector<Rational>& labels, bool& zero)
{
    std::size_t best = labels.size();
    zero = false;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 0) {
            zero = true;
        }
        if (labels[i] < 0 && (best == labels.size() || labels[i] < labels[best])) {
            best = i;
        }
    }
    return best;
}

WeylOutcome reduce(const AlgebraSpec& spec, const AffineWeight& w, const ReductionOptions& opts,
    bool stop_on_wall)
{
    if (w.level <= 0) {
        throw ConfigError("reduction to the dominant chamber needs positive level, got " + w.level.get_str());
    }
    WeylOutcome out{w, 1, false, {}};
    for (std::size_t step = 0;; ++step) {
        if (step > opts.max_steps) {
            throw ResourceError("dominant reduction exceeded " + std::to_string(opts.max_steps) + " steps");
        }
        const auto labels = affine_labels(spec, out.dominant);
        bool zero = false;
        const std::size_t i = most_negative(labels, zero);
        if (stop_on_wall && zero) {
            out.on_wall = true;
            return out;
        }
        if (i == labels.size()) {
            out.on_wall = zero;
            return out;
        }
        out.dominant = reflect(spec, i, out.dominant);
        out.sign = -out.sign;
        out.word.push_back(i);
    }
}

} // namespace

AffineWeight reflect(const AlgebraSpec& spec, std::size_t i, const AffineWeight& w)
{
    check_index(spec, i);
    AffineWeight out = w;
    const Rational c = i == 0 ? zeroth_label(spec, w) : w.classical[i - 1];
    reflect_classical(spec, i, c, out.classical);
    if (i == 0) {
        out.grade -= to_integer(c);
    }
    return out;
}

AffineWeight shifted_reflect(const AlgebraSpec& spec, std::size_t i, const AffineWeight& w)
{
    const AffineWeight rho = weyl_vector(spec);
    return subtract(reflect(spec, i, add(w, rho)), rho);
}

WeylOutcome to_dominant(const AlgebraSpec& spec, const AffineWeight& w, const ReductionOptions& opts)
{
    return reduce(spec, w, opts, false);
}

WeylOutcome to_dominant_shifted(const AlgebraSpec& spec, const AffineWeight& w, const ReductionOptions& opts)
{
    const AffineWeight rho = weyl_vector(spec);
    WeylOutcome out = reduce(spec, add(w, rho), opts, true);
    out.dominant = subtract(out.dominant, rho);
    return out;
}

TranslationDatum translation_datum(const AlgebraSpec& spec, const WeylOutcome& outcome)
{
    const std::size_t r = spec.rank();
    // Track w = t_τ · s as (s, τ): s_i (t_τ s) = t_{s_i τ} (s_i s), and
    // s_0 = t_θ s_θ.
    RatMatrix linear = RatMatrix::identity(r);
    std::vector<Rational> tau(r, Rational(0));  // Dynkin labels

    std::vector<Rational> theta_dynkin = spec.highest_root_labels();
    for (std::size_t i : outcome.word) {
        check_index(spec, i);
        // Reflection matrices act on Dynkin labels; s_0's linear part is s_θ.
        auto reflect_vec = [&](std::vector<Rational>& v) {
            if (i == 0) {
                // s_θ v = v − ⟨v, θ∨⟩ θ with ⟨v, θ∨⟩ = Σ a_j^∨ v_j.
                Rational pairing = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    pairing += spec.comarks()[j] * v[j];
                }
                for (std::size_t j = 0; j < r; ++j) {
                    v[j] -= pairing * theta_dynkin[j];
                }
            } else {
                const Rational c = v[i - 1];
                for (std::size_t j = 0; j < r; ++j) {
                    v[j] -= c * spec.cartan()(j, i - 1);
                }
            }
        };
        for (std::size_t col = 0; col < r; ++col) {
            std::vector<Rational> v(r);
            for (std::size_t row = 0; row < r; ++row) {
                v[row] = linear(row, col);
            }
            reflect_vec(v);
            for (std::size_t row = 0; row < r; ++row) {
                linear(row, col) = v[row];
            }
        }
        reflect_vec(tau);
        if (i == 0) {
            for (std::size_t j = 0; j < r; ++j) {
                tau[j] += theta_dynkin[j];
            }
        }
    }

    TranslationDatum datum;
    datum.linear = std::move(linear);
    const auto coords = mat_vec(spec.inverse_cartan(), tau);
    datum.theta.reserve(r);
    for (const auto& c : coords) {
        datum.theta.push_back(to_integer(c));
    }
    return datum;
}

AffineWeight apply_translation_datum(const AlgebraSpec& spec, const TranslationDatum& datum,
    const AffineWeight& w)
{
    const std::size_t r = spec.rank();
    const auto moved = mat_vec(datum.linear, w.classical);
    const AffineWeight moved_weight{moved, 0, 0};
    const AffineWeight shift{root_labels(spec, datum.theta), 0, 0};

    AffineWeight out = w;
    for (std::size_t j = 0; j < r; ++j) {
        out.classical[j] = moved[j] + w.level * shift.classical[j];
    }
    const Rational k = w.level;
    const Rational grade = Rational(w.grade) - inner_product(spec, moved_weight, shift)
        - k / 2 * inner_product(spec, shift, shift);
    out.grade = to_integer(grade);
    return out;
}

AffineWeight apply_word(const AlgebraSpec& spec, const std::vector<std::size_t>& word, const AffineWeight& w)
{
    AffineWeight out = w;
    for (std::size_t i : word) {
        out = reflect(spec, i, out);
    }
    return out;
}

} // namespace affstr
