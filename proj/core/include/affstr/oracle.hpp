#ifndef AFFSTR_ORACLE_HPP
#define AFFSTR_ORACLE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "affstr/fan.hpp"
#include "affstr/weyl.hpp"

namespace affstr {

/// Unfolded Racah recursion
///
///     m_λ = Σ_γ s(γ) m_{λ+γ} + Σ_w ε(w) δ_{w∘μ, λ}
///
/// over the whole fan, memoized on dominant representatives. Shares only the
/// algebra and Weyl-group layers with the folded pipeline.
class RacahOracle {
public:
    /// μ must be dominant integral with grade 0. The fan bounds the depth
    /// of answerable queries.
    RacahOracle(AlgebraSpec spec, AffineWeight mu, std::shared_ptr<const Fan> fan);

    const AffineWeight& mu() const noexcept { return mu_; }
    long max_depth() const noexcept { return fan_->cutoff; }

    /// Throws OutOfWindowError if λ's dominant representative lies deeper
    /// than the fan cutoff.
    Integer multiplicity(const AffineWeight& w) const;

    std::size_t cache_size() const;

private:
    Integer dominant_multiplicity(const AffineWeight& xi) const;
    Integer singular_term(const AffineWeight& w) const;

    AlgebraSpec spec_;
    AffineWeight mu_;
    std::shared_ptr<const Fan> fan_;
    mutable std::mutex mutex_;
    mutable std::map<AffineWeight, Integer> cache_;
};

/// One-shot form of RacahOracle::multiplicity.
Integer racah_multiplicity(const AffineWeight& mu, const AffineWeight& w, const Fan& fan);

/// Coefficients of Π_{n≥1} (1 − q^n)^power to q^n_max (power may be negative).
std::vector<Integer> euler_power_series(long power, long n_max);

/// Π (1 − q^n)^{-2}.
std::vector<Integer> euler_square_series(long n_max);

/// −Π (1 − q^n)^2: the level-1 folded-fan series η(q) with η(q)σ(q) = −1.
std::vector<Integer> level1_eta_series(long n_max);

/// Total multiplicity at each depth 0..n_max of a level-1 module, from
///     ch L^μ = σ(e^{−δ}) Σ_{α∈M} e^{μ + α − (|α|²/2 + (μ|α))δ}
/// with σ = Π(1 − q^n)^{−r} and M the coroot lattice.
std::vector<Integer> level1_character_totals(const AlgebraSpec& spec, const AffineWeight& mu, long n_max);

} // namespace affstr

#endif
