#include "evf/filters.hpp"

#include <algorithm>
#include <cmath>

namespace evf {

namespace {

constexpr double kRangeSlack = 1e-9;

void check_range(double value) {
    if (!(value >= -kRangeSlack && value <= 1.0 + kRangeSlack)) {
        throw Error(ErrorCode::value_out_of_range,
                    "filter value " + std::to_string(value) +
                        " lies outside [0,1]; the mass or normalization is invalid");
    }
}

int capped_threshold(FilterSpec::Weight weight, int k, SubsetMask e) {
    const int cap = std::min(k, e.count());
    return weight == FilterSpec::Weight::upper_k_capped ? std::max(1, cap) : cap;
}

}  // namespace

FilterSpec FilterSpec::contextual_prob(double normalization) {
    if (!(normalization > 0.0) || !std::isfinite(normalization)) {
        throw Error(ErrorCode::bad_normalization, "normalization K must be positive");
    }
    FilterSpec spec(Weight::contextual_prob, IndicatorKind::upper());
    spec.normalization_ = normalization;
    return spec;
}

FilterSpec FilterSpec::upper_k(int k) {
    if (k < 1) {
        throw Error(ErrorCode::bad_config, "k-threshold must be at least 1");
    }
    FilterSpec spec(Weight::upper_k_capped, IndicatorKind::upper());
    spec.k_ = k;
    return spec;
}

FilterSpec FilterSpec::lower_k(int k) {
    if (k < 1) {
        throw Error(ErrorCode::bad_config, "k-threshold must be at least 1");
    }
    FilterSpec spec(Weight::lower_k_capped, IndicatorKind::upper());
    spec.k_ = k;
    return spec;
}

FilterSpec restrict_to_family(FilterSpec spec) {
    if (spec.restricted_) {
        throw Error(ErrorCode::bad_config, "family restriction nests exactly one level");
    }
    spec.restricted_ = true;
    return spec;
}

void validate_spec(const FilterSpec& spec, const NeighbourhoodFamily& family) {
    const int n = static_cast<int>(family.universe().size());
    switch (spec.weight()) {
        case FilterSpec::Weight::indicator:
            if (spec.kind().parameterized_by_k() && spec.kind().k() > n) {
                throw Error(ErrorCode::bad_config, "k-threshold " + std::to_string(spec.kind().k()) +
                                                       " exceeds the universe size " + std::to_string(n));
            }
            break;
        case FilterSpec::Weight::pignistic:
            if (!family.is_algebra()) {
                throw Error(ErrorCode::no_atoms, "pignistic weights need a Boolean subalgebra");
            }
            break;
        case FilterSpec::Weight::contextual_mass:
            break;
        case FilterSpec::Weight::contextual_prob:
            if (!(spec.normalization() > 0.0)) {
                throw Error(ErrorCode::bad_normalization, "normalization K must be positive");
            }
            break;
        case FilterSpec::Weight::upper_k_capped:
        case FilterSpec::Weight::lower_k_capped:
            if (spec.k() > n) {
                throw Error(ErrorCode::bad_config, "k-threshold " + std::to_string(spec.k()) +
                                                       " exceeds the universe size " + std::to_string(n));
            }
            break;
    }
}

double eval_filter(const MassFunction& m, const FilterSpec& spec, SubsetMask e) {
    const auto& family = m.family();
    validate_spec(spec, family);
    if (spec.restricted_to_family() && !family.contains(e)) {
        return 0.0;
    }

    const auto& members = family.members();
    const auto& values = m.values();
    double acc = 0.0;
    switch (spec.weight()) {
        case FilterSpec::Weight::indicator: {
            const IndicatorKind& kind = spec.kind();
            for (std::size_t i = 0; i < members.size(); ++i) {
                acc += values[i] * (eval_indicator(kind, e, members[i]) ? 1.0 : 0.0);
            }
            break;
        }
        case FilterSpec::Weight::pignistic: {
            for (std::size_t i = 0; i < members.size(); ++i) {
                const SubsetMask y = members[i];
                if (y.empty()) {
                    continue;
                }
                acc += values[i] *
                       (static_cast<double>((e & y).count()) / static_cast<double>(family.noa(y)));
            }
            break;
        }
        case FilterSpec::Weight::contextual_mass: {
            for (std::size_t i = 0; i < members.size(); ++i) {
                const SubsetMask y = members[i];
                if (y.empty()) {
                    continue;
                }
                acc += values[i] * (static_cast<double>((e & y).count()) / static_cast<double>(y.count()));
            }
            break;
        }
        case FilterSpec::Weight::contextual_prob: {
            const double normalization = spec.normalization();
            for (std::size_t i = 0; i < members.size(); ++i) {
                acc += values[i] * static_cast<double>((e & members[i]).count()) / normalization;
            }
            break;
        }
        case FilterSpec::Weight::upper_k_capped: {
            const int threshold = capped_threshold(spec.weight(), spec.k(), e);
            for (std::size_t i = 0; i < members.size(); ++i) {
                acc += values[i] * ((e & members[i]).count() >= threshold ? 1.0 : 0.0);
            }
            break;
        }
        case FilterSpec::Weight::lower_k_capped: {
            const int threshold = capped_threshold(spec.weight(), spec.k(), e);
            for (std::size_t i = 0; i < members.size(); ++i) {
                const SubsetMask y = members[i];
                acc += values[i] * ((y.subset_of(e) && y.count() >= threshold) ? 1.0 : 0.0);
            }
            break;
        }
    }
    check_range(acc);
    return acc;
}

double belief(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, FilterSpec::indicator(IndicatorKind::lower()), e);
}

double plausibility(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, FilterSpec::indicator(IndicatorKind::upper()), e);
}

double belief_plus(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, FilterSpec::indicator(IndicatorKind::lower_k(1)), e);
}

double belief_min(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, restrict_to_family(FilterSpec::indicator(IndicatorKind::lower())), e);
}

double plausibility_min(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, FilterSpec::indicator(IndicatorKind::subset()), e);
}

double pignistic(const MassFunction& m, SubsetMask e) { return eval_filter(m, FilterSpec::pignistic(), e); }

double contextual_mass(const MassFunction& m, SubsetMask e) {
    return eval_filter(m, FilterSpec::contextual_mass(), e);
}

double plausibility_k(const MassFunction& m, int k, SubsetMask e) {
    return eval_filter(m, FilterSpec::upper_k(k), e);
}

double belief_k(const MassFunction& m, int k, SubsetMask e) {
    return eval_filter(m, FilterSpec::lower_k(k), e);
}

double contextual_normalization(const ProbabilityMeasure& p) {
    const auto& members = p.algebra().members();
    double normalization = 0.0;
    for (SubsetMask y : members) {
        normalization += p.measure_of(y) * static_cast<double>(y.count());
    }
    return normalization;
}

double contextual_prob(const ProbabilityMeasure& p, SubsetMask e) {
    const double normalization = contextual_normalization(p);
    if (!(normalization > 0.0)) {
        throw Error(ErrorCode::bad_normalization, "contextual normalization K is not positive");
    }
    const auto& members = p.algebra().members();
    double acc = 0.0;
    for (SubsetMask y : members) {
        acc += p.measure_of(y) * static_cast<double>((e & y).count()) / normalization;
    }
    check_range(acc);
    return acc;
}

}  // namespace evf
