#include "affstr/oracle.hpp"

#include <functional>
#include <string>

namespace affstr {

RacahOracle::RacahOracle(AlgebraSpec spec, AffineWeight mu, std::shared_ptr<const Fan> fan)
    : spec_(std::move(spec)), mu_(std::move(mu)), fan_(std::move(fan))
{
    if (!fan_) {
        throw ConfigError("oracle needs a fan");
    }
    if (!(fan_->algebra == spec_)) {
        throw ConfigError("fan was built for a different algebra");
    }
    if (mu_.classical.size() != spec_.rank() || mu_.grade != 0 || !is_integral(mu_) || !is_dominant(spec_, mu_)
        || mu_.level < 1) {
        throw ConfigError("oracle highest weight must be dominant integral of positive level at grade 0");
    }
}

std::size_t RacahOracle::cache_size() const
{
    std::lock_guard lock(mutex_);
    return cache_.size();
}

Integer RacahOracle::multiplicity(const AffineWeight& w) const
{
    if (w.level != mu_.level) {
        throw ConfigError("weight level differs from the module level");
    }
    if (!is_integral(w)) {
        return 0;
    }
    const WeylOutcome red = to_dominant(spec_, w);
    if (red.dominant.grade > 0) {
        return 0;
    }
    if (-red.dominant.grade > fan_->cutoff) {
        throw OutOfWindowError("oracle query at depth " + Integer(-red.dominant.grade).get_str() + " exceeds fan cutoff "
            + std::to_string(fan_->cutoff));
    }
    // Serialize fills so concurrent callers see one sequential computation.
    std::lock_guard lock(mutex_);
    return dominant_multiplicity(red.dominant);
}

Integer RacahOracle::singular_term(const AffineWeight& w) const
{
    const WeylOutcome shifted = to_dominant_shifted(spec_, w);
    if (shifted.on_wall) {
        return 0;
    }
    return shifted.dominant == mu_ ? Integer(shifted.sign) : Integer(0);
}

Integer RacahOracle::dominant_multiplicity(const AffineWeight& xi) const
{
    if (xi.grade > 0) {
        return 0;
    }
    if (const auto it = cache_.find(xi); it != cache_.end()) {
        return it->second;
    }
    const Integer depth = -xi.grade;
    Integer total = singular_term(xi);
    for (const auto& gamma : fan_->vectors) {
        if (gamma.grade > depth) {
            break;  // vectors are sorted by grade; deeper shifts leave the module
        }
        const AffineWeight raised = add(spec_, xi, gamma.shift());
        const WeylOutcome red = to_dominant(spec_, raised);
        const Integer m = dominant_multiplicity(red.dominant);
        if (m != 0) {
            total += gamma.mult * m;
        }
    }
    if (total < 0) {
        throw ConsistencyError("negative Racah multiplicity at " + format_weight(spec_, xi));
    }
    cache_.emplace(xi, total);
    return total;
}

Integer racah_multiplicity(const AffineWeight& mu, const AffineWeight& w, const Fan& fan)
{
    RacahOracle oracle(fan.algebra, mu, std::make_shared<const Fan>(fan));
    return oracle.multiplicity(w);
}

namespace {

std::vector<Integer> truncate_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b, long n_max)
{
    std::vector<Integer> out(static_cast<std::size_t>(n_max + 1), 0);
    for (std::size_t i = 0; i < a.size() && static_cast<long>(i) <= n_max; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && static_cast<long>(i + j) <= n_max; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Π (1 − q^n) via Euler's pentagonal number theorem.
std::vector<Integer> euler_product(long n_max)
{
    std::vector<Integer> out(static_cast<std::size_t>(n_max + 1), 0);
    for (long k = 0;; ++k) {
        bool any = false;
        for (long kk : {k, -k}) {
            if (k == 0 && kk != 0) {
                continue;
            }
            const long e = kk * (3 * kk - 1) / 2;
            if (e <= n_max) {
                out[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
                any = true;
            }
            if (k == 0) {
                break;
            }
        }
        if (!any && k > 0) {
            break;
        }
    }
    return out;
}

// 1 / f for f(0) = ±1.
std::vector<Integer> reciprocal(const std::vector<Integer>& f)
{
    const std::size_t n = f.size();
    std::vector<Integer> g(n, 0);
    if (n == 0) {
        return g;
    }
    if (f[0] != 1 && f[0] != -1) {
        throw ConsistencyError("series reciprocal needs a unit constant term");
    }
    g[0] = f[0];
    for (std::size_t i = 1; i < n; ++i) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            acc += f[j] * g[i - j];
        }
        g[i] = -acc * f[0];
    }
    return g;
}

} // namespace

std::vector<Integer> euler_power_series(long power, long n_max)
{
    if (n_max < 0) {
        throw ConfigError("series order must be non-negative");
    }
    std::vector<Integer> base = euler_product(n_max);
    if (power < 0) {
        base = reciprocal(base);
        power = -power;
    }
    std::vector<Integer> out(static_cast<std::size_t>(n_max + 1), 0);
    out[0] = 1;
    for (long i = 0; i < power; ++i) {
        out = truncate_multiply(out, base, n_max);
    }
    return out;
}

std::vector<Integer> euler_square_series(long n_max) { return euler_power_series(-2, n_max); }

std::vector<Integer> level1_eta_series(long n_max)
{
    auto out = euler_power_series(2, n_max);
    for (auto& c : out) {
        c = -c;
    }
    return out;
}

std::vector<Integer> level1_character_totals(const AlgebraSpec& spec, const AffineWeight& mu, long n_max)
{
    if (mu.level != 1) {
        throw ConfigError("level-1 character totals need a level-1 highest weight");
    }
    if (n_max < 0) {
        throw ConfigError("series order must be non-negative");
    }
    const std::size_t r = spec.rank();
    const auto sigma = euler_power_series(-static_cast<long>(r), n_max);

    // Coroot lattice basis α_i^∨ = (2 / (α_i, α_i)) α_i in simple-root
    // coordinates; Gram matrix G and linear term b_i = (μ | α_i^∨).
    std::vector<Rational> scale(r);
    for (std::size_t i = 0; i < r; ++i) {
        scale[i] = Rational(1) / spec.symmetrizer()[i];
    }
    RatMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            gram(i, j) = scale[i] * scale[j] * spec.root_gram()(i, j);
        }
    }
    std::vector<Rational> lin(r);
    for (std::size_t i = 0; i < r; ++i) {
        lin[i] = mu.classical[i];  // (μ | α_i^∨) = μ_i
    }

    // f(x) = ½ xᵀGx + bᵀx ≤ n_max bounds every coordinate:
    // |x_i + c_i|² ≤ 2 (n_max − f_min) (G⁻¹)_ii with c = G⁻¹ b.
    const RatMatrix ginv = inverse(gram);
    const auto c = mat_vec(ginv, lin);
    Rational fmin = 0;
    for (std::size_t i = 0; i < r; ++i) {
        fmin -= lin[i] * c[i];
    }
    fmin /= 2;
    std::vector<Integer> lo(r);
    std::vector<Integer> hi(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Rational radius_sq = 2 * (Rational(n_max) - fmin) * ginv(i, i);
        Integer ceil_sq;
        mpz_cdiv_q(ceil_sq.get_mpz_t(), radius_sq.get_num_mpz_t(), radius_sq.get_den_mpz_t());
        Integer root;
        mpz_sqrt(root.get_mpz_t(), ceil_sq.get_mpz_t());
        root += 1;
        const Rational center = -c[i];
        Integer center_floor;
        mpz_fdiv_q(center_floor.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
        lo[i] = center_floor - root;
        hi[i] = center_floor + root + 1;
    }

    std::vector<Integer> totals(static_cast<std::size_t>(n_max + 1), 0);
    std::vector<Integer> x(r);
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
        if (i == r) {
            Rational f = 0;
            for (std::size_t a = 0; a < r; ++a) {
                f += lin[a] * x[a];
                for (std::size_t b = 0; b < r; ++b) {
                    f += Rational(1, 2) * x[a] * gram(a, b) * x[b];
                }
            }
            const Integer shell = to_integer(f);
            if (shell < 0 || shell > n_max) {
                return;
            }
            const long s = to_long(shell);
            for (long n = s; n <= n_max; ++n) {
                totals[static_cast<std::size_t>(n)] += sigma[static_cast<std::size_t>(n - s)];
            }
            return;
        }
        for (x[i] = lo[i]; x[i] <= hi[i]; ++x[i]) {
            visit(i + 1);
        }
    };
    visit(0);
    return totals;
}

} // namespace affstr
