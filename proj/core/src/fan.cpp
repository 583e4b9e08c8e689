#include "affstr/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "affstr/weyl.hpp"

namespace affstr {

bool fan_order(const FanVector& a, const FanVector& b)
{
    if (a.grade != b.grade) {
        return a.grade < b.grade;
    }
    return a.root < b.root;
}

Fan build_fan(const AlgebraSpec& spec, long cutoff, const FanOptions& opts)
{
    if (cutoff < 0) {
        throw ConfigError("fan cutoff must be non-negative");
    }
    const AffineWeight rho = weyl_vector(spec);
    const Integer floor_grade = -cutoff;

    // Orbit of ρ; every element of grade ≥ −cutoff is reachable from ρ by a
    // chain of lowering reflections whose grades never drop below its own.
    std::map<AffineWeight, int> sign_of;
    std::deque<AffineWeight> queue;
    sign_of.emplace(rho, 1);
    queue.push_back(rho);
    while (!queue.empty()) {
        const AffineWeight node = std::move(queue.front());
        queue.pop_front();
        const int sign = sign_of.at(node);
        const auto labels = affine_labels(spec, node);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] <= 0) {
                continue;  // not a lowering step
            }
            AffineWeight next = reflect(spec, i, node);
            if (next.grade < floor_grade) {
                continue;
            }
            if (sign_of.emplace(next, -sign).second) {
                if (sign_of.size() > opts.max_nodes) {
                    throw ResourceError("fan BFS exceeded " + std::to_string(opts.max_nodes) + " orbit nodes");
                }
                queue.push_back(std::move(next));
            }
        }
    }

    Fan fan{spec, cutoff, {}};
    fan.vectors.reserve(sign_of.size() - 1);
    for (const auto& [w, eps] : sign_of) {
        if (w == rho) {
            continue;
        }
        const AffineWeight gamma = subtract(rho, w);
        FanVector v;
        for (const auto& c : to_root_basis(spec, gamma)) {
            v.root.push_back(to_integer(c));
        }
        v.grade = gamma.grade;
        v.mult = -eps;
        fan.vectors.push_back(std::move(v));
    }
    std::sort(fan.vectors.begin(), fan.vectors.end(), fan_order);
    return fan;
}

namespace {

// Exponent of e^{−(α + nδ)}: grade first, then simple-root coordinates.
using Monomial = std::vector<long>;
using Series = std::map<Monomial, Integer>;

void multiply_one_minus(Series& series, const Monomial& alpha, long max_grade)
{
    Series product = series;
    for (const auto& [mono, coeff] : series) {
        Monomial shifted = mono;
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            shifted[i] += alpha[i];
        }
        if (shifted[0] > max_grade) {
            continue;
        }
        Integer& slot = product[shifted];
        slot -= coeff;
        if (slot == 0) {
            product.erase(shifted);
        }
    }
    series = std::move(product);
}

} // namespace

DenominatorReport verify_denominator(const Fan& fan)
{
    const AlgebraSpec& spec = fan.algebra;
    const std::size_t r = spec.rank();
    const long n_max = fan.cutoff;

    auto monomial = [&](long grade, const std::vector<Integer>& root, long sign) {
        Monomial m(r + 1);
        m[0] = grade;
        for (std::size_t i = 0; i < r; ++i) {
            m[i + 1] = sign * to_long(root[i]);
        }
        return m;
    };

    Series product;
    product[Monomial(r + 1, 0)] = 1;
    for (const auto& alpha : spec.positive_roots()) {
        multiply_one_minus(product, monomial(0, alpha, 1), n_max);
    }
    const std::vector<Integer> zero(r, 0);
    for (long n = 1; n <= n_max; ++n) {
        for (const auto& alpha : spec.positive_roots()) {
            multiply_one_minus(product, monomial(n, alpha, 1), n_max);
            multiply_one_minus(product, monomial(n, alpha, -1), n_max);
        }
        for (std::size_t m = 0; m < r; ++m) {
            multiply_one_minus(product, monomial(n, zero, 1), n_max);
        }
    }

    // 1 − Π(...) as expected fan coefficients.
    Series expected;
    for (const auto& [mono, coeff] : product) {
        const bool is_one = std::all_of(mono.begin(), mono.end(), [](long x) { return x == 0; });
        Integer value = is_one ? Integer(1 - coeff) : Integer(-coeff);
        if (value != 0) {
            expected.emplace(mono, std::move(value));
        }
    }
    Series actual;
    for (const auto& v : fan.vectors) {
        if (v.grade > n_max) {
            continue;
        }
        Integer& slot = actual[monomial(to_long(v.grade), v.root, 1)];
        slot += v.mult;
    }

    DenominatorReport report;
    auto note = [&](const Monomial& mono, const Integer& exp, const Integer& act) {
        if (report.first_mismatch) {
            return;
        }
        report.ok = false;
        DenominatorMismatch mm;
        mm.grade = mono[0];
        for (std::size_t i = 0; i < r; ++i) {
            mm.root.emplace_back(mono[i + 1]);
        }
        mm.expected = exp;
        mm.actual = act;
        report.first_mismatch = std::move(mm);
    };
    // Walk both maps in key order so the first mismatch is the lowest one.
    auto e = expected.begin();
    auto a = actual.begin();
    while (e != expected.end() || a != actual.end()) {
        ++report.terms_checked;
        if (a == actual.end() || (e != expected.end() && e->first < a->first)) {
            note(e->first, e->second, 0);
            ++e;
        } else if (e == expected.end() || a->first < e->first) {
            if (a->second != 0) {
                note(a->first, 0, a->second);
            }
            ++a;
        } else {
            if (e->second != a->second) {
                note(e->first, e->second, a->second);
            }
            ++e;
            ++a;
        }
    }
    return report;
}

} // namespace affstr
