#include "affstr/folding.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>
#include <tuple>

namespace affstr {

CongruenceClassId congruence_class(const AlgebraSpec& spec, std::span<const Rational> labels)
{
    if (labels.size() != spec.rank()) {
        throw ConfigError("congruence class: label count does not match rank");
    }
    const auto& v = spec.congruence_transform();
    CongruenceClassId id;
    for (std::size_t k = 0; k < spec.congruence_columns().size(); ++k) {
        const std::size_t col = spec.congruence_columns()[k];
        Integer acc = 0;
        for (std::size_t i = 0; i < spec.rank(); ++i) {
            if (!is_integer(labels[i])) {
                throw ConfigError("congruence class needs integral Dynkin labels");
            }
            acc += labels[i].get_num() * v(i, col);
        }
        Integer res;
        mpz_fdiv_r(res.get_mpz_t(), acc.get_mpz_t(), spec.congruence_moduli()[k].get_mpz_t());
        id.residues.push_back(res);
    }
    return id;
}

std::optional<std::size_t> BaseWeightSet::index_of(std::span<const Rational> classical) const
{
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (std::equal(classical.begin(), classical.end(), weights[i].classical.begin(), weights[i].classical.end())) {
            return i;
        }
    }
    return std::nullopt;
}

BaseWeightSet make_base_weight_set(const AlgebraSpec& spec, const Integer& level, std::vector<AffineWeight> weights)
{
    if (level < 1) {
        throw ConfigError("base weights need level >= 1");
    }
    if (weights.empty()) {
        throw ConfigError("base weight set is empty");
    }
    BaseWeightSet base;
    base.level = level;
    for (const auto& w : weights) {
        if (w.classical.size() != spec.rank()) {
            throw ConfigError("base weight rank mismatch");
        }
        if (w.level != level || w.grade != 0) {
            throw ConfigError("base weights must have level " + level.get_str() + " and grade 0: "
                + format_weight(spec, w));
        }
        if (!is_integral(w) || !is_dominant(spec, w)) {
            throw ConfigError("base weight is not dominant integral: " + format_weight(spec, w));
        }
    }
    base.cls = congruence_class(spec, weights.front().classical);
    for (const auto& w : weights) {
        if (congruence_class(spec, w.classical) != base.cls) {
            throw ConfigError("base weights span several congruence classes");
        }
    }

    struct Keyed {
        Rational height;
        std::vector<Rational> coords;
        AffineWeight weight;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(weights.size());
    for (auto& w : weights) {
        auto coords = to_root_basis(spec, w);
        Rational h = 0;
        for (const auto& c : coords) {
            h += c;
        }
        keyed.push_back({std::move(h), std::move(coords), std::move(w)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.height != b.height) {
            return a.height < b.height;
        }
        return a.coords < b.coords;
    });
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
        if (keyed[i].coords == keyed[i + 1].coords) {
            throw ConfigError("duplicate base weight " + format_weight(spec, keyed[i].weight));
        }
    }
    for (auto& k : keyed) {
        base.weights.push_back(std::move(k.weight));
    }
    return base;
}

Integer FoldedFan::eta(std::size_t target, long offset) const
{
    const auto it = entries.find({target, offset});
    return it == entries.end() ? Integer(0) : it->second;
}

std::optional<FoldedShift> fold_shift(const AlgebraSpec& spec, const AffineWeight& xi, const FanVector& gamma)
{
    if (xi.level < 1) {
        throw ConfigError("folding needs level >= 1");
    }
    const AffineWeight phi = add(spec, xi, gamma.shift());
    WeylOutcome outcome = to_dominant(spec, phi);
    const Integer offset = outcome.dominant.grade - xi.grade;
    if (offset < 0) {
        throw ConsistencyError("negative folded offset " + offset.get_str() + " for " + format_weight(spec, xi)
            + " + " + format_weight(spec, AffineWeight{root_labels(spec, gamma.root), 0, gamma.grade}));
    }
    FoldedShift out;
    out.target = outcome.dominant;
    out.offset = to_long(offset);
    out.contribution = gamma.mult;
    out.outcome = std::move(outcome);
    return out;
}

namespace {

void accumulate(const AlgebraSpec& spec, const BaseWeightSet& base, const AffineWeight& xi, const FanVector& gamma,
    long cutoff, FoldedFan& out)
{
    const auto shift = fold_shift(spec, xi, gamma);
    if (!shift || shift->offset > cutoff) {
        return;
    }
    const auto target = base.index_of(shift->target.classical);
    if (!target) {
        throw ConsistencyError("folded target " + format_weight(spec, shift->target)
            + " is not in the base weight set (congruence violation)");
    }
    Integer& slot = out.entries[{*target, shift->offset}];
    slot += shift->contribution;
    if (slot == 0) {
        out.entries.erase({*target, shift->offset});
    }
}

} // namespace

FoldedFan build_folded_fan(const AlgebraSpec& spec, const BaseWeightSet& base, std::size_t base_index,
    const Fan& fan, long cutoff)
{
    if (base_index >= base.size()) {
        throw ConfigError("base index out of range");
    }
    if (cutoff < 0) {
        throw ConfigError("folded-fan cutoff must be non-negative");
    }
    if (fan.cutoff < cutoff) {
        throw ConfigError("fan cutoff " + std::to_string(fan.cutoff) + " is below the folded-fan cutoff "
            + std::to_string(cutoff));
    }
    FoldedFan out;
    out.base_index = base_index;
    out.cutoff = cutoff;
    out.entries[{base_index, 0}] = -1;
    const AffineWeight& xi = base.weights[base_index];
    for (const auto& gamma : fan.vectors) {
        accumulate(spec, base, xi, gamma, cutoff, out);
    }
    return out;
}

Fan fan_for_folding(const AlgebraSpec& spec, const BaseWeightSet& base, long cutoff, const FanOptions& opts)
{
    long layer = cutoff + 1;
    for (;;) {
        Fan fan = build_fan(spec, layer, opts);
        bool reaches = false;
        for (const auto& gamma : fan.vectors) {
            if (gamma.grade != layer) {
                continue;
            }
            for (const auto& xi : base.weights) {
                const auto shift = fold_shift(spec, xi, gamma);
                if (shift && shift->offset <= cutoff) {
                    reaches = true;
                    break;
                }
            }
            if (reaches) {
                break;
            }
        }
        if (!reaches) {
            return build_fan(spec, layer + 1, opts);
        }
        ++layer;
    }
}

FoldedFans build_folded_fans(const AlgebraSpec& spec, const BaseWeightSet& base, long cutoff, const FanOptions& opts)
{
    FoldedFans out{fan_for_folding(spec, base, cutoff, opts), {}};
    std::vector<std::future<FoldedFan>> jobs;
    jobs.reserve(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
        jobs.push_back(std::async(std::launch::async,
            [&spec, &base, &out, j, cutoff] { return build_folded_fan(spec, base, j, out.fan, cutoff); }));
    }
    out.folded.reserve(base.size());
    for (auto& job : jobs) {
        out.folded.push_back(job.get());
    }
    return out;
}

bool lemma1_check(const AlgebraSpec& spec, const AffineWeight& xi, const FanVector& gamma,
    std::span<const long> probe_grades)
{
    std::optional<std::tuple<std::vector<Rational>, long, int>> reference;
    for (long probe : probe_grades) {
        AffineWeight moved = xi;
        moved.grade = xi.grade + probe;
        const auto shift = fold_shift(spec, moved, gamma);
        if (!shift) {
            return false;
        }
        // The reducing element w = t_θ∨ · s must reproduce the target grade
        // through the closed translation formula.
        const AffineWeight phi = add(spec, moved, gamma.shift());
        const TranslationDatum datum = translation_datum(spec, shift->outcome);
        if (apply_translation_datum(spec, datum, phi) != shift->target) {
            return false;
        }
        auto triple = std::make_tuple(shift->target.classical, shift->offset, shift->contribution);
        if (!reference) {
            reference = std::move(triple);
        } else if (*reference != triple) {
            return false;
        }
    }
    return true;
}

} // namespace affstr
