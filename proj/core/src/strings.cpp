#include "affstr/strings.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

namespace affstr {

std::map<CongruenceClassId, BaseWeightSet> enumerate_class_weights(const AlgebraSpec& spec, const Integer& level)
{
    if (level < 1) {
        throw ConfigError("level must be >= 1");
    }
    const std::size_t r = spec.rank();
    std::map<CongruenceClassId, std::vector<AffineWeight>> grouped;
    std::vector<Rational> labels(r, Rational(0));

    // Non-negative labels with Σ a_i^∨ λ_i ≤ k, in lexicographic order.
    std::function<void(std::size_t, const Integer&)> visit = [&](std::size_t i, const Integer& remaining) {
        if (i == r) {
            AffineWeight w{labels, level, 0};
            grouped[congruence_class(spec, w.classical)].push_back(std::move(w));
            return;
        }
        for (Integer v = 0; spec.comarks()[i] * v <= remaining; ++v) {
            labels[i] = v;
            visit(i + 1, remaining - spec.comarks()[i] * v);
        }
    };
    visit(0, level);

    std::map<CongruenceClassId, BaseWeightSet> out;
    for (auto& [id, weights] : grouped) {
        out.emplace(id, make_base_weight_set(spec, level, std::move(weights)));
    }
    return out;
}

IntMatrix BlockSystem::block(std::size_t j, std::size_t s) const
{
    const auto n = static_cast<std::size_t>(depth + 1);
    IntMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            m(a, b) = eta[j][s][b - a];
        }
    }
    return m;
}

IntMatrix BlockSystem::grade0_block() const
{
    IntMatrix m(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t s = 0; s < p; ++s) {
            m(j, s) = eta[j][s][0];
        }
    }
    return m;
}

IntMatrix BlockSystem::matrix() const
{
    const auto n = static_cast<std::size_t>(depth + 1);
    IntMatrix m(p * n, p * n);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t s = 0; s < p; ++s) {
            const IntMatrix b = block(j, s);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t c = 0; c < n; ++c) {
                    m(j * n + a, s * n + c) = b(a, c);
                }
            }
        }
    }
    return m;
}

std::size_t BlockSystem::position(std::size_t j, long grade_depth) const
{
    return j * static_cast<std::size_t>(depth + 1) + static_cast<std::size_t>(depth - grade_depth);
}

BlockSystem assemble_system(const BaseWeightSet& base, std::span<const FoldedFan> folded, std::size_t mu_index,
    long depth)
{
    const std::size_t p = base.size();
    if (depth < 0) {
        throw ConfigError("string depth must be non-negative");
    }
    if (folded.size() != p) {
        throw ConfigError("need one folded fan per base weight");
    }
    if (mu_index >= p) {
        throw ConfigError("highest-weight index out of range");
    }
    BlockSystem sys;
    sys.p = p;
    sys.depth = depth;
    sys.mu_index = mu_index;
    sys.eta.assign(p, std::vector<std::vector<Integer>>(p, std::vector<Integer>(depth + 1, 0)));
    for (const auto& ff : folded) {
        if (ff.base_index >= p) {
            throw ConfigError("folded fan base index out of range");
        }
        if (ff.cutoff < depth) {
            throw ConfigError("folded fan cutoff " + std::to_string(ff.cutoff) + " is below the string depth "
                + std::to_string(depth));
        }
        for (const auto& [key, value] : ff.entries) {
            const auto& [target, offset] = key;
            if (target >= p) {
                throw ConsistencyError("folded fan target index out of range");
            }
            if (offset <= depth) {
                sys.eta[ff.base_index][target][offset] = value;
            }
        }
    }
    sys.rhs.assign(p * static_cast<std::size_t>(depth + 1), 0);
    sys.rhs[sys.position(mu_index, 0)] = -1;
    return sys;
}

std::vector<Integer> StringTable::string(std::size_t s) const
{
    const auto row = coefficients.row(s);
    return {row.begin(), row.end()};
}

StringTable solve_strings(const AlgebraSpec& spec, const BaseWeightSet& base, const BlockSystem& system)
{
    const std::size_t p = system.p;
    const RatMatrix e0 = to_rational(system.grade0_block());
    if (determinant(e0) == 0) {
        std::string dump;
        for (std::size_t j = 0; j < p; ++j) {
            dump += "\n  ";
            for (std::size_t s = 0; s < p; ++s) {
                dump += system.eta[j][s][0].get_str() + ' ';
            }
        }
        throw ConsistencyError("grade-0 block is singular:" + dump);
    }

    StringTable table{spec, base, system.mu_index, system.depth,
        IntMatrix(p, static_cast<std::size_t>(system.depth + 1))};
    for (long d = 0; d <= system.depth; ++d) {
        std::vector<Rational> rhs(p);
        for (std::size_t j = 0; j < p; ++j) {
            Integer acc = system.rhs[system.position(j, d)];
            for (std::size_t s = 0; s < p; ++s) {
                for (long n = 1; n <= d; ++n) {
                    const Integer& eta = system.eta[j][s][n];
                    if (eta != 0) {
                        acc -= eta * table.coefficients(s, d - n);
                    }
                }
            }
            rhs[j] = acc;
        }
        const auto x = solve(e0, rhs);
        for (std::size_t s = 0; s < p; ++s) {
            if (!is_integer(x[s]) || x[s] < 0) {
                throw ConsistencyError("string coefficient m[" + std::to_string(s) + "][" + std::to_string(d)
                    + "] = " + x[s].get_str() + " is not a non-negative integer");
            }
            table.coefficients(s, d) = x[s].get_num();
        }
    }
    return table;
}

Integer weight_multiplicity(const StringTable& table, const AffineWeight& w)
{
    const AlgebraSpec& spec = table.algebra;
    if (w.level != table.level()) {
        throw ConfigError("weight level " + w.level.get_str() + " differs from module level "
            + table.level().get_str());
    }
    if (!is_integral(w)) {
        return 0;
    }
    const WeylOutcome red = to_dominant(spec, w);
    if (congruence_class(spec, red.dominant.classical) != table.base.cls) {
        return 0;
    }
    const Integer depth = -red.dominant.grade;
    if (depth < 0) {
        return 0;
    }
    if (depth > table.depth) {
        throw OutOfWindowError("weight " + format_weight(spec, w) + " lies at depth " + depth.get_str()
            + ", beyond the table depth " + std::to_string(table.depth));
    }
    const auto s = table.base.index_of(red.dominant.classical);
    if (!s) {
        throw ConsistencyError("dominant weight " + format_weight(spec, red.dominant) + " missing from base set");
    }
    return table.coefficients(*s, static_cast<std::size_t>(to_long(depth)));
}

std::vector<std::pair<AffineWeight, Integer>> character(const StringTable& table, long min_depth, long max_depth)
{
    if (min_depth < 0 || max_depth < min_depth) {
        throw ConfigError("invalid character window");
    }
    if (max_depth > table.depth) {
        throw OutOfWindowError("character window depth " + std::to_string(max_depth) + " exceeds table depth "
            + std::to_string(table.depth));
    }
    const AlgebraSpec& spec = table.algebra;
    const Integer floor_grade = -max_depth;
    const Integer ceiling_grade = -min_depth;

    std::map<AffineWeight, Integer> found;
    for (std::size_t s = 0; s < table.base.size(); ++s) {
        for (long d = 0; d <= max_depth; ++d) {
            const Integer& m = table.coefficients(s, static_cast<std::size_t>(d));
            if (m == 0) {
                continue;
            }
            // The dominant representative is the top of its orbit; walk down.
            AffineWeight top = table.base.weights[s];
            top.grade = -d;
            std::set<AffineWeight> seen{top};
            std::deque<AffineWeight> queue{top};
            while (!queue.empty()) {
                AffineWeight node = std::move(queue.front());
                queue.pop_front();
                if (node.grade <= ceiling_grade) {
                    found.emplace(node, m);
                }
                const auto labels = affine_labels(spec, node);
                for (std::size_t i = 0; i < labels.size(); ++i) {
                    if (labels[i] <= 0) {
                        continue;
                    }
                    AffineWeight next = reflect(spec, i, node);
                    if (next.grade < floor_grade) {
                        continue;
                    }
                    if (seen.insert(next).second) {
                        queue.push_back(std::move(next));
                    }
                }
            }
        }
    }

    std::vector<std::pair<AffineWeight, Integer>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.grade != b.first.grade) {
            return a.first.grade > b.first.grade;
        }
        return a.first.classical < b.first.classical;
    });
    return out;
}

StringComputation compute_strings(const AlgebraSpec& spec, const Integer& level, std::span<const Rational> mu,
    long depth, const FanOptions& opts)
{
    const AffineWeight head = make_weight(spec, mu, level, 0);
    if (!is_integral(head) || !is_dominant(spec, head)) {
        throw ConfigError("highest weight " + format_labels(mu) + " is not dominant integral at level "
            + level.get_str());
    }
    auto classes = enumerate_class_weights(spec, level);
    const auto it = classes.find(congruence_class(spec, head.classical));
    if (it == classes.end()) {
        throw ConsistencyError("highest weight class missing from the enumeration");
    }
    BaseWeightSet base = std::move(it->second);
    const auto mu_index = base.index_of(head.classical);
    if (!mu_index) {
        throw ConsistencyError("highest weight missing from its class");
    }
    FoldedFans fans = build_folded_fans(spec, base, depth, opts);
    BlockSystem system = assemble_system(base, fans.folded, *mu_index, depth);
    StringTable table = solve_strings(spec, base, system);
    return {std::move(base), std::move(fans), std::move(system), std::move(table)};
}

} // namespace affstr
