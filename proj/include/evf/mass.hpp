#pragma once

// Mass functions (basic probabilities) over a neighbourhood family, the
// sampling probability of an algebra, Bayesian masses, and empirical mass
// estimation from observed pattern counts.

#include <cstdint>
#include <utility>
#include <vector>

#include "evf/universe.hpp"

namespace evf {

/// Nonnegative weights on the family members summing to one. Values are held
/// densely, aligned with family().members(), so every downstream sum runs in
/// canonical member order. m(empty set) may be positive (open world).
class MassFunction {
  public:
    MassFunction(NeighbourhoodFamily family, std::vector<double> values, bool renormalized, double input_deviation);

    const NeighbourhoodFamily& family() const { return family_; }
    const std::vector<double>& values() const { return values_; }

    /// Mass of a member; throws not_in_family for subsets outside the family.
    double value(SubsetMask y) const;

    /// m(empty set), zero when the empty set is not a member.
    double empty_set_mass() const;

    /// Indices (into values()) of the focal elements, i.e. members with
    /// strictly positive mass.
    std::vector<std::size_t> focal_indices() const;

    /// True when the input assignment was rescaled to sum exactly to one.
    /// Rescaling is only applied to deviations within the 1e-9 tolerance and
    /// is surfaced here rather than done silently.
    bool renormalized() const { return renormalized_; }
    double input_sum_deviation() const { return input_deviation_; }

  private:
    NeighbourhoodFamily family_;
    std::vector<double> values_;
    bool renormalized_ = false;
    double input_deviation_ = 0.0;
};

/// Validates an assignment list against the family and returns the mass
/// function. Assignments must name members, be nonnegative, appear once each,
/// and sum to 1 within 1e-9; unlisted members get mass zero.
MassFunction build_mass(const NeighbourhoodFamily& family,
                        const std::vector<std::pair<SubsetMask, double>>& assignments);

/// Additive probability on a Boolean subalgebra, stored as per-atom weights
/// aligned with algebra().atoms().
class ProbabilityMeasure {
  public:
    ProbabilityMeasure(NeighbourhoodFamily algebra, std::vector<double> atom_probs);

    const NeighbourhoodFamily& algebra() const { return algebra_; }
    const std::vector<double>& atom_probs() const { return atom_probs_; }

    /// p(Y) = sum of atom probabilities over atoms contained in Y; Y must be
    /// a member of the algebra.
    double measure_of(SubsetMask member) const;

  private:
    NeighbourhoodFamily algebra_;
    std::vector<double> atom_probs_;
};

/// The indifference prior: each atom gets |A_i| / n; members add up their
/// atoms. Requires an algebra.
ProbabilityMeasure sampling_probability(const NeighbourhoodFamily& algebra);

/// The mass concentrated on the atoms: m_p(Y) = p(Y) for atoms, 0 elsewhere.
MassFunction bayesian_mass(const ProbabilityMeasure& p);

/// Observed pattern counts over a family, aligned with family.members().
struct ObservationCounts {
    NeighbourhoodFamily family;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

/// Builds counts from (pattern, count) pairs; patterns must be members.
ObservationCounts make_observation_counts(const NeighbourhoodFamily& family,
                                          const std::vector<std::pair<SubsetMask, std::uint64_t>>& entries);

/// Relative-frequency estimate: m_hat(X) = obs(X) / total.
MassFunction estimate_mass(const ObservationCounts& obs);

/// Non-normalizing variant kept for comparison only: obs(X) * |X| / n per
/// member. The result is not a mass function and does not sum to one.
std::vector<double> estimate_mass_unnormalized(const ObservationCounts& obs);

}  // namespace evf
