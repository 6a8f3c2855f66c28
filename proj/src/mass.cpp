#include "evf/mass.hpp"

#include <cmath>
#include <sstream>

namespace evf {

namespace {

constexpr double kSumTolerance = 1e-9;

std::string format_deviation(double deviation) {
    std::ostringstream os;
    os.precision(12);
    os << deviation;
    return os.str();
}

}  // namespace

MassFunction::MassFunction(NeighbourhoodFamily family, std::vector<double> values, bool renormalized,
                           double input_deviation)
    : family_(std::move(family)),
      values_(std::move(values)),
      renormalized_(renormalized),
      input_deviation_(input_deviation) {
    if (values_.size() != family_.members().size()) {
        throw Error(ErrorCode::bad_config, "mass vector length does not match the family");
    }
    double sum = 0.0;
    for (double v : values_) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw Error(ErrorCode::negative_mass, "mass values must be finite and nonnegative");
        }
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorCode::sum_not_one,
                    "mass values sum to " + format_deviation(sum) + " (deviation " +
                        format_deviation(sum - 1.0) + ")");
    }
}

double MassFunction::value(SubsetMask y) const {
    const auto idx = family_.index_of(y);
    if (!idx) {
        throw Error(ErrorCode::not_in_family, render_subset(family_.universe(), y) + " is not a member");
    }
    return values_[*idx];
}

double MassFunction::empty_set_mass() const {
    const auto idx = family_.index_of(SubsetMask{});
    return idx ? values_[*idx] : 0.0;
}

std::vector<std::size_t> MassFunction::focal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > 0.0) {
            out.push_back(i);
        }
    }
    return out;
}

MassFunction build_mass(const NeighbourhoodFamily& family,
                        const std::vector<std::pair<SubsetMask, double>>& assignments) {
    std::vector<double> values(family.members().size(), 0.0);
    std::vector<bool> seen(values.size(), false);
    for (const auto& [mask, value] : assignments) {
        const auto idx = family.index_of(mask);
        if (!idx) {
            throw Error(ErrorCode::not_in_family,
                        "mass assigned to " + render_subset(family.universe(), mask) +
                            ", which is not a member of the family");
        }
        if (seen[*idx]) {
            throw Error(ErrorCode::duplicate_assignment,
                        "mass assigned twice to " + render_subset(family.universe(), mask));
        }
        if (value < 0.0 || !std::isfinite(value)) {
            throw Error(ErrorCode::negative_mass,
                        "mass of " + render_subset(family.universe(), mask) + " is " + format_deviation(value));
        }
        seen[*idx] = true;
        values[*idx] = value;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorCode::sum_not_one,
                    "mass values sum to " + format_deviation(sum) + " (deviation " +
                        format_deviation(sum - 1.0) + ")");
    }
    // Within tolerance: rescale to an exact unit sum. Never silent; the
    // adjustment is recorded on the result.
    const bool adjust = sum != 1.0;
    if (adjust) {
        for (double& v : values) {
            v /= sum;
        }
    }
    return MassFunction(family, std::move(values), adjust, sum - 1.0);
}

ProbabilityMeasure::ProbabilityMeasure(NeighbourhoodFamily algebra, std::vector<double> atom_probs)
    : algebra_(std::move(algebra)), atom_probs_(std::move(atom_probs)) {
    const auto& at = algebra_.atoms();  // throws no_atoms on general families
    if (atom_probs_.size() != at.size()) {
        throw Error(ErrorCode::bad_config, "need exactly one probability per atom");
    }
    double sum = 0.0;
    for (double p : atom_probs_) {
        if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
            throw Error(ErrorCode::bad_config, "atom probabilities must lie in [0,1]");
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorCode::sum_not_one, "atom probabilities sum to " + format_deviation(sum));
    }
}

double ProbabilityMeasure::measure_of(SubsetMask member) const {
    if (!algebra_.contains(member)) {
        throw Error(ErrorCode::not_a_member,
                    render_subset(algebra_.universe(), member) + " is not a member of the algebra");
    }
    const auto& at = algebra_.atoms();
    double sum = 0.0;
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (at[i].subset_of(member)) {
            sum += atom_probs_[i];
        }
    }
    return sum;
}

ProbabilityMeasure sampling_probability(const NeighbourhoodFamily& algebra) {
    const auto& at = algebra.atoms();  // throws no_atoms
    const double n = static_cast<double>(algebra.universe().size());
    std::vector<double> probs;
    probs.reserve(at.size());
    for (SubsetMask a : at) {
        probs.push_back(static_cast<double>(a.count()) / n);
    }
    return ProbabilityMeasure(algebra, std::move(probs));
}

MassFunction bayesian_mass(const ProbabilityMeasure& p) {
    const auto& family = p.algebra();
    const auto& at = family.atoms();
    std::vector<double> values(family.members().size(), 0.0);
    for (std::size_t i = 0; i < at.size(); ++i) {
        const auto idx = family.index_of(at[i]);
        values[*idx] = p.atom_probs()[i];
    }
    return MassFunction(family, std::move(values), false, 0.0);
}

ObservationCounts make_observation_counts(const NeighbourhoodFamily& family,
                                          const std::vector<std::pair<SubsetMask, std::uint64_t>>& entries) {
    std::vector<std::uint64_t> counts(family.members().size(), 0);
    std::uint64_t total = 0;
    for (const auto& [mask, count] : entries) {
        const auto idx = family.index_of(mask);
        if (!idx) {
            throw Error(ErrorCode::not_in_family,
                        "observed pattern " + render_subset(family.universe(), mask) +
                            " is not a member of the family");
        }
        counts[*idx] += count;
        total += count;
    }
    return ObservationCounts{family, std::move(counts), total};
}

MassFunction estimate_mass(const ObservationCounts& obs) {
    if (obs.total == 0) {
        throw Error(ErrorCode::zero_observations, "cannot estimate a mass from zero observations");
    }
    const double total = static_cast<double>(obs.total);
    std::vector<double> values;
    values.reserve(obs.counts.size());
    for (std::uint64_t c : obs.counts) {
        values.push_back(static_cast<double>(c) / total);
    }
    // Exact relative frequencies; the sum is one up to float rounding and is
    // deliberately left untouched.
    return MassFunction(obs.family, std::move(values), false, 0.0);
}

std::vector<double> estimate_mass_unnormalized(const ObservationCounts& obs) {
    if (obs.total == 0) {
        throw Error(ErrorCode::zero_observations, "cannot estimate from zero observations");
    }
    const double n = static_cast<double>(obs.family.universe().size());
    const auto& members = obs.family.members();
    std::vector<double> values;
    values.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        values.push_back(static_cast<double>(obs.counts[i]) * static_cast<double>(members[i].count()) / n);
    }
    return values;
}

}  // namespace evf
