#ifndef AFFSTR_ALGEBRA_HPP
#define AFFSTR_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affstr/exact.hpp"

namespace affstr {

/// Weight (classical part; level; grade) of an untwisted affine algebra.
///
/// The classical part is kept in the fundamental-weight basis (Dynkin labels
/// λ_1..λ_r). `grade` is the coefficient of δ, so weights of a module below
/// its highest weight have grade < 0 while fan shifts have grade ≥ 0.
struct AffineWeight {
    std::vector<Rational> classical;
    Integer level;
    Integer grade;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

bool operator<(const AffineWeight& a, const AffineWeight& b);

/// α + nδ with α in the classical root lattice (simple-root coordinates).
struct RootVector {
    std::vector<Integer> classical;
    Integer grade;

    friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Classical Cartan data together with its untwisted affine extension.
///
/// The symmetrizer is normalized so that the highest root has squared length
/// 2; (α_i, α_j) = d_i A_ij. Simple root α_j has Dynkin labels A_{·j}.
class AlgebraSpec {
public:
    static AlgebraSpec create(std::string label, IntMatrix cartan, std::vector<Rational> symmetrizer);

    /// Built-in presets: "A1", "A2", "A3".
    static AlgebraSpec preset(const std::string& name);

    const std::string& label() const noexcept { return label_; }
    std::size_t rank() const noexcept { return cartan_.rows(); }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    const std::vector<Rational>& symmetrizer() const noexcept { return symmetrizer_; }

    /// Marks a_1..a_r of the highest root θ = Σ a_i α_i.
    const std::vector<Integer>& marks() const noexcept { return marks_; }
    /// Comarks a_1^∨..a_r^∨; λ_0 = k − Σ a_i^∨ λ_i.
    const std::vector<Integer>& comarks() const noexcept { return comarks_; }
    const Integer& dual_coxeter() const noexcept { return dual_coxeter_; }

    /// Positive classical roots in simple-root coordinates, sorted by height.
    const std::vector<std::vector<Integer>>& positive_roots() const noexcept { return positive_roots_; }
    const std::vector<Integer>& highest_root() const noexcept { return marks_; }
    /// Dynkin labels of θ.
    const std::vector<Rational>& highest_root_labels() const noexcept { return theta_labels_; }

    /// (α_i, α_j).
    const RatMatrix& root_gram() const noexcept { return root_gram_; }
    /// (ω_i, ω_j).
    const RatMatrix& weight_gram() const noexcept { return weight_gram_; }
    /// Maps Dynkin labels to simple-root coordinates.
    const RatMatrix& inverse_cartan() const noexcept { return inverse_cartan_; }

    /// Invariant factors > 1 of P/Q and the column transform used to read
    /// residues off Dynkin labels.
    const std::vector<Integer>& congruence_moduli() const noexcept { return congruence_moduli_; }
    const IntMatrix& congruence_transform() const noexcept { return congruence_transform_; }
    const std::vector<std::size_t>& congruence_columns() const noexcept { return congruence_columns_; }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
    {
        return a.label_ == b.label_ && a.cartan_ == b.cartan_ && a.symmetrizer_ == b.symmetrizer_;
    }

private:
    AlgebraSpec() = default;

    std::string label_;
    IntMatrix cartan_;
    std::vector<Rational> symmetrizer_;
    std::vector<Integer> marks_;
    std::vector<Integer> comarks_;
    Integer dual_coxeter_;
    std::vector<std::vector<Integer>> positive_roots_;
    std::vector<Rational> theta_labels_;
    RatMatrix root_gram_;
    RatMatrix weight_gram_;
    RatMatrix inverse_cartan_;
    std::vector<Integer> congruence_moduli_;
    IntMatrix congruence_transform_;
    std::vector<std::size_t> congruence_columns_;
};

/// Builds a weight from classical Dynkin labels.
AffineWeight make_weight(const AlgebraSpec& spec, std::span<const Rational> labels, const Integer& level,
    const Integer& grade = 0);
AffineWeight make_weight(const AlgebraSpec& spec, std::initializer_list<long> labels, long level, long grade = 0);

/// λ_0 = k − Σ a_i^∨ λ_i.
Rational zeroth_label(const AlgebraSpec& spec, const AffineWeight& w);

/// All labels λ_0..λ_r, zeroth first.
std::vector<Rational> affine_labels(const AlgebraSpec& spec, const AffineWeight& w);

Rational inner_product(const AlgebraSpec& spec, const AffineWeight& a, const AffineWeight& b);

/// ρ: every affine Dynkin label equal to 1, level h^∨, grade 0.
AffineWeight weyl_vector(const AlgebraSpec& spec);

std::vector<Rational> to_root_basis(const AlgebraSpec& spec, const AffineWeight& w);
AffineWeight from_root_basis(const AlgebraSpec& spec, std::span<const Rational> coords, const Integer& level,
    const Integer& grade);

/// Dynkin labels of Σ c_i α_i.
std::vector<Rational> root_labels(const AlgebraSpec& spec, std::span<const Integer> coords);

AffineWeight add(const AlgebraSpec& spec, const AffineWeight& w, const RootVector& root);
AffineWeight add(const AffineWeight& a, const AffineWeight& b);
AffineWeight subtract(const AffineWeight& a, const AffineWeight& b);

/// True if all of λ_0..λ_r are ≥ 0.
bool is_dominant(const AlgebraSpec& spec, const AffineWeight& w);

/// True if every classical label is an integer (λ_0 then is too).
bool is_integral(const AffineWeight& w);

std::string format_labels(std::span<const Rational> labels);
std::string format_weight(const AlgebraSpec& spec, const AffineWeight& w);

} // namespace affstr

#endif
