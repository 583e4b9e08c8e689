// Test-only oracles. Kept deliberately naive and separate from core.
#ifndef AFFSTR_TESTS_SUPPORT_HPP
#define AFFSTR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "affstr/algebra.hpp"
#include "affstr/fan.hpp"
#include "affstr/weyl.hpp"

namespace affstr::testing {

inline std::vector<Rational> labels(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

/// Π_{n≥1} (1 − q^n)^{-power} by repeated multiplication with 1/(1 − q^n)
/// (a running prefix sum), truncated at q^n_max.
inline std::vector<Integer> naive_inverse_euler(int power, long n_max)
{
    std::vector<Integer> s(static_cast<std::size_t>(n_max + 1), Integer(0));
    s[0] = 1;
    for (int p = 0; p < power; ++p) {
        for (long n = 1; n <= n_max; ++n) {
            for (long i = n; i <= n_max; ++i) {
                s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - n)];
            }
        }
    }
    return s;
}

/// Π_{n≥1} (1 − q^n)^{power} by direct multiplication.
inline std::vector<Integer> naive_euler(int power, long n_max)
{
    std::vector<Integer> s(static_cast<std::size_t>(n_max + 1), Integer(0));
    s[0] = 1;
    for (int p = 0; p < power; ++p) {
        for (long n = 1; n <= n_max; ++n) {
            for (long i = n_max; i >= n; --i) {
                s[static_cast<std::size_t>(i)] -= s[static_cast<std::size_t>(i - n)];
            }
        }
    }
    return s;
}

using Monomial = std::pair<std::vector<Integer>, Integer>;  // (root coords, grade)

/// Fan read off 1 − Π_{β>0} (1 − e^{−β})^{mult β}, truncated at grade cutoff.
/// Real roots α + nδ for every classical root α (α > 0 when n = 0),
/// imaginary roots nδ with multiplicity rank.
inline std::map<Monomial, int> denominator_fan(const AlgebraSpec& spec, long cutoff)
{
    const std::size_t r = spec.rank();
    std::vector<Monomial> factors;
    for (const auto& a : spec.positive_roots()) {
        std::vector<Integer> neg(r);
        for (std::size_t i = 0; i < r; ++i) {
            neg[i] = -a[i];
        }
        factors.push_back({a, 0});
        for (long n = 1; n <= cutoff; ++n) {
            factors.push_back({a, n});
            factors.push_back({neg, n});
        }
    }
    for (long n = 1; n <= cutoff; ++n) {
        for (std::size_t k = 0; k < r; ++k) {
            factors.push_back({std::vector<Integer>(r, Integer(0)), n});
        }
    }

    std::map<Monomial, Integer> prod;
    prod[{std::vector<Integer>(r, Integer(0)), 0}] = 1;
    for (const auto& f : factors) {
        std::map<Monomial, Integer> next = prod;
        for (const auto& [m, c] : prod) {
            Monomial t{m.first, m.second + f.second};
            if (t.second > cutoff) {
                continue;
            }
            for (std::size_t i = 0; i < r; ++i) {
                t.first[i] += f.first[i];
            }
            next[t] -= c;
        }
        prod.clear();
        for (auto& [m, c] : next) {
            if (c != 0) {
                prod.emplace(m, c);
            }
        }
    }

    std::map<Monomial, int> fan;
    for (const auto& [m, c] : prod) {
        if (m.second == 0 && std::all_of(m.first.begin(), m.first.end(), [](const Integer& x) { return x == 0; })) {
            continue;
        }
        fan[m] = static_cast<int>(-c.get_si());
    }
    return fan;
}

inline std::map<Monomial, int> as_map(const Fan& fan)
{
    std::map<Monomial, int> out;
    for (const auto& v : fan.vectors) {
        out[{v.root, v.grade}] = v.mult;
    }
    return out;
}

/// Ordinary-action orbit of a dominant weight, restricted to grade ≥ floor.
/// Reduction paths raise the grade monotonically, so every orbit point above
/// the floor is reached without leaving the window.
inline std::set<AffineWeight> orbit_above(const AlgebraSpec& spec, const AffineWeight& dominant, long floor)
{
    std::set<AffineWeight> seen{dominant};
    std::vector<AffineWeight> todo{dominant};
    while (!todo.empty()) {
        const AffineWeight w = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i <= spec.rank(); ++i) {
            AffineWeight v = reflect(spec, i, w);
            if (v.grade < floor || seen.count(v)) {
                continue;
            }
            seen.insert(v);
            todo.push_back(std::move(v));
        }
    }
    return seen;
}

} // namespace affstr::testing

#endif
