#include "affstr/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affstr {

bool operator<(const AffineWeight& a, const AffineWeight& b)
{
    if (a.level != b.level) {
        return a.level < b.level;
    }
    if (a.grade != b.grade) {
        return a.grade < b.grade;
    }
    return std::lexicographical_compare(a.classical.begin(), a.classical.end(), b.classical.begin(),
        b.classical.end());
}

namespace {

void validate_cartan(const IntMatrix& a, const std::vector<Rational>& d)
{
    const std::size_t r = a.rows();
    if (r == 0) {
        throw ConfigError("Cartan matrix must have rank >= 1");
    }
    if (a.cols() != r) {
        throw ConfigError("Cartan matrix must be square");
    }
    if (d.size() != r) {
        throw ConfigError("symmetrizer length does not match the rank");
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (d[i] <= 0) {
            throw ConfigError("symmetrizer entries must be positive");
        }
        if (a(i, i) != 2) {
            throw ConfigError("Cartan matrix diagonal must be 2");
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) {
                continue;
            }
            if (a(i, j) > 0) {
                throw ConfigError("Cartan matrix off-diagonal entries must be <= 0");
            }
            if ((a(i, j) == 0) != (a(j, i) == 0)) {
                throw ConfigError("Cartan matrix zero pattern must be symmetric");
            }
            if (d[i] * a(i, j) != d[j] * a(j, i)) {
                throw ConfigError("symmetrizer does not symmetrize the Cartan matrix");
            }
        }
    }
    // Positive definiteness via leading principal minors of (d_i A_ij).
    for (std::size_t m = 1; m <= r; ++m) {
        RatMatrix minor(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                minor(i, j) = d[i] * a(i, j);
            }
        }
        if (determinant(minor) <= 0) {
            throw ConfigError("Cartan matrix is not of finite type (form not positive definite)");
        }
    }
}

// Positive roots by the root-string algorithm, in simple-root coordinates.
std::vector<std::vector<Integer>> generate_positive_roots(const IntMatrix& a)
{
    const std::size_t r = a.rows();
    std::set<std::vector<Integer>> known;
    std::vector<std::vector<Integer>> roots;
    std::vector<std::vector<Integer>> layer;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Integer> e(r, 0);
        e[i] = 1;
        known.insert(e);
        roots.push_back(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::vector<std::vector<Integer>> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < r; ++i) {
                // p: how far the i-string extends below beta.
                Integer p = 0;
                std::vector<Integer> down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!known.contains(down)) {
                        break;
                    }
                    p += 1;
                }
                Integer pairing = 0;  // <beta, alpha_i^vee>
                for (std::size_t j = 0; j < r; ++j) {
                    pairing += a(i, j) * beta[j];
                }
                if (p - pairing > 0) {
                    std::vector<Integer> up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) {
                        roots.push_back(up);
                        next.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        Integer hx = 0;
        Integer hy = 0;
        for (const auto& c : x) {
            hx += c;
        }
        for (const auto& c : y) {
            hy += c;
        }
        if (hx != hy) {
            return hx < hy;
        }
        return x < y;
    });
    return roots;
}

} // namespace

AlgebraSpec AlgebraSpec::create(std::string label, IntMatrix cartan, std::vector<Rational> symmetrizer)
{
    validate_cartan(cartan, symmetrizer);
    const std::size_t r = cartan.rows();

    AlgebraSpec spec;
    spec.label_ = std::move(label);
    spec.cartan_ = std::move(cartan);
    spec.positive_roots_ = generate_positive_roots(spec.cartan_);
    spec.marks_ = spec.positive_roots_.back();

    // Normalize so that (θ, θ) = 2.
    Rational theta_sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            theta_sq += spec.marks_[i] * spec.marks_[j] * symmetrizer[i] * spec.cartan_(i, j);
        }
    }
    for (auto& di : symmetrizer) {
        di = di * 2 / theta_sq;
    }
    spec.symmetrizer_ = std::move(symmetrizer);

    spec.comarks_.resize(r);
    spec.dual_coxeter_ = 1;
    for (std::size_t i = 0; i < r; ++i) {
        spec.comarks_[i] = to_integer(spec.marks_[i] * spec.symmetrizer_[i]);
        spec.dual_coxeter_ += spec.comarks_[i];
    }

    spec.root_gram_ = RatMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            spec.root_gram_(i, j) = spec.symmetrizer_[i] * spec.cartan_(i, j);
        }
    }
    const RatMatrix a = to_rational(spec.cartan_);
    spec.inverse_cartan_ = inverse(a);
    // α = Aᵀ ω as row vectors, hence Gram(ω) = A⁻ᵀ Gram(α) A⁻¹.
    spec.weight_gram_ =
        multiply(multiply(transpose(spec.inverse_cartan_), spec.root_gram_), spec.inverse_cartan_);
    spec.theta_labels_ = root_labels(spec, spec.marks_);

    // Root-lattice vectors as Dynkin rows: row j of Aᵀ is α_j.
    IntMatrix rows(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            rows(j, i) = spec.cartan_(i, j);
        }
    }
    SmithForm snf = smith_normal_form(rows);
    spec.congruence_transform_ = std::move(snf.right);
    for (std::size_t i = 0; i < r; ++i) {
        if (snf.diagonal[i] != 1) {
            spec.congruence_moduli_.push_back(snf.diagonal[i]);
            spec.congruence_columns_.push_back(i);
        }
    }
    return spec;
}

AlgebraSpec AlgebraSpec::preset(const std::string& name)
{
    if (name == "A1") {
        return create("A1", IntMatrix{{2}}, {Rational(1)});
    }
    if (name == "A2") {
        return create("A2", IntMatrix{{2, -1}, {-1, 2}}, {Rational(1), Rational(1)});
    }
    if (name == "A3") {
        return create("A3", IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
            {Rational(1), Rational(1), Rational(1)});
    }
    throw ConfigError("unknown algebra preset '" + name + "' (known: A1, A2, A3)");
}

AffineWeight make_weight(const AlgebraSpec& spec, std::span<const Rational> labels, const Integer& level,
    const Integer& grade)
{
    if (labels.size() != spec.rank()) {
        throw ConfigError("weight has " + std::to_string(labels.size()) + " labels, algebra rank is "
            + std::to_string(spec.rank()));
    }
    return AffineWeight{std::vector<Rational>(labels.begin(), labels.end()), level, grade};
}

AffineWeight make_weight(const AlgebraSpec& spec, std::initializer_list<long> labels, long level, long grade)
{
    std::vector<Rational> v;
    v.reserve(labels.size());
    for (long l : labels) {
        v.emplace_back(l);
    }
    return make_weight(spec, v, Integer(level), Integer(grade));
}

Rational zeroth_label(const AlgebraSpec& spec, const AffineWeight& w)
{
    Rational out = w.level;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        out -= spec.comarks()[i] * w.classical[i];
    }
    return out;
}

std::vector<Rational> affine_labels(const AlgebraSpec& spec, const AffineWeight& w)
{
    std::vector<Rational> out;
    out.reserve(spec.rank() + 1);
    out.push_back(zeroth_label(spec, w));
    out.insert(out.end(), w.classical.begin(), w.classical.end());
    return out;
}

namespace {

void check_rank(const AlgebraSpec& spec, const AffineWeight& w)
{
    if (w.classical.size() != spec.rank()) {
        throw ConfigError("weight rank " + std::to_string(w.classical.size()) + " does not match algebra "
            + spec.label());
    }
}

} // namespace

Rational inner_product(const AlgebraSpec& spec, const AffineWeight& a, const AffineWeight& b)
{
    check_rank(spec, a);
    check_rank(spec, b);
    const auto& g = spec.weight_gram();
    Rational out = 0;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        for (std::size_t j = 0; j < spec.rank(); ++j) {
            out += a.classical[i] * g(i, j) * b.classical[j];
        }
    }
    // (Λ_0, δ) = 1, (δ, δ) = 0, (Λ_0, Λ_0) = 0.
    out += Rational(a.level * b.grade + a.grade * b.level);
    return out;
}

AffineWeight weyl_vector(const AlgebraSpec& spec)
{
    return AffineWeight{std::vector<Rational>(spec.rank(), Rational(1)), spec.dual_coxeter(), 0};
}

std::vector<Rational> to_root_basis(const AlgebraSpec& spec, const AffineWeight& w)
{
    check_rank(spec, w);
    return mat_vec(spec.inverse_cartan(), w.classical);
}

AffineWeight from_root_basis(const AlgebraSpec& spec, std::span<const Rational> coords, const Integer& level,
    const Integer& grade)
{
    if (coords.size() != spec.rank()) {
        throw ConfigError("root-basis coordinates do not match the rank");
    }
    return AffineWeight{mat_vec(to_rational(spec.cartan()), coords), level, grade};
}

std::vector<Rational> root_labels(const AlgebraSpec& spec, std::span<const Integer> coords)
{
    const std::size_t r = spec.rank();
    if (coords.size() != r) {
        throw ConfigError("root coordinates do not match the rank");
    }
    std::vector<Rational> out(r);
    for (std::size_t i = 0; i < r; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < r; ++j) {
            acc += spec.cartan()(i, j) * coords[j];
        }
        out[i] = acc;
    }
    return out;
}

AffineWeight add(const AlgebraSpec& spec, const AffineWeight& w, const RootVector& root)
{
    check_rank(spec, w);
    AffineWeight out = w;
    const auto shift = root_labels(spec, root.classical);
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        out.classical[i] += shift[i];
    }
    out.grade += root.grade;
    return out;
}

AffineWeight add(const AffineWeight& a, const AffineWeight& b)
{
    if (a.classical.size() != b.classical.size()) {
        throw ConfigError("adding weights of different rank");
    }
    AffineWeight out = a;
    for (std::size_t i = 0; i < a.classical.size(); ++i) {
        out.classical[i] += b.classical[i];
    }
    out.level += b.level;
    out.grade += b.grade;
    return out;
}

AffineWeight subtract(const AffineWeight& a, const AffineWeight& b)
{
    if (a.classical.size() != b.classical.size()) {
        throw ConfigError("subtracting weights of different rank");
    }
    AffineWeight out = a;
    for (std::size_t i = 0; i < a.classical.size(); ++i) {
        out.classical[i] -= b.classical[i];
    }
    out.level -= b.level;
    out.grade -= b.grade;
    return out;
}

bool is_dominant(const AlgebraSpec& spec, const AffineWeight& w)
{
    for (const auto& l : affine_labels(spec, w)) {
        if (l < 0) {
            return false;
        }
    }
    return true;
}

bool is_integral(const AffineWeight& w)
{
    return std::all_of(w.classical.begin(), w.classical.end(), [](const Rational& x) { return is_integer(x); });
}

std::string format_labels(std::span<const Rational> labels)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << labels[i].get_str();
    }
    os << ')';
    return os.str();
}

std::string format_weight(const AlgebraSpec& spec, const AffineWeight& w)
{
    const auto coords = to_root_basis(spec, w);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        os << (i == 0 ? "" : ",") << coords[i].get_str();
    }
    os << ';' << w.level.get_str() << ';' << w.grade.get_str() << ')';
    return os.str();
}

} // namespace affstr
