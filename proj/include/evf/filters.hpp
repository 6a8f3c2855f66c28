#pragma once

// The general filter engine F(E) = sum over Y of m(Y) * w(E,Y), plus every
// named estimator built on it: belief and plausibility, the parameterized
// k/s families, pignistic and contextual probabilities, and the
// family-gated / empty-set-free variants used for knowledge structures.

#include "evf/indicators.hpp"
#include "evf/mass.hpp"
#include "evf/universe.hpp"

namespace evf {

/// Selects the weighting w(E,Y) of the general filter. Construct through the
/// named factories; wrap with restrict_to_family() to gate the whole sum on
/// E being a member of the family.
class FilterSpec {
  public:
    enum class Weight {
        indicator,        ///< w = ind(E,Y) for a literal IndicatorKind
        pignistic,        ///< w = |E n Y| / noa(Y), 0 for Y empty (algebras only)
        contextual_mass,  ///< w = |E n Y| / |Y|, 0 for Y empty
        contextual_prob,  ///< w = |E n Y| / K for a fixed normalization K > 0
        upper_k_capped,   ///< w = [|E n Y| >= max(1, min(k, |E|))]
        lower_k_capped,   ///< w = [Y subset of E and |Y| >= min(k, |E|)]
    };

    static FilterSpec indicator(IndicatorKind kind) { return FilterSpec(Weight::indicator, kind); }
    static FilterSpec pignistic() { return FilterSpec(Weight::pignistic, IndicatorKind::upper()); }
    static FilterSpec contextual_mass() { return FilterSpec(Weight::contextual_mass, IndicatorKind::upper()); }
    static FilterSpec contextual_prob(double normalization);

    /// The common-element demand of the upper k-filter, capped at the event
    /// size so that singletons behave like plain plausibility. This is the
    /// parameterization the simulation study runs as "upper_k".
    static FilterSpec upper_k(int k);
    /// Capped lower counterpart: members contained in E of size at least
    /// min(k, |E|).
    static FilterSpec lower_k(int k);

    Weight weight() const { return weight_; }
    const IndicatorKind& kind() const { return kind_; }
    double normalization() const { return normalization_; }
    int k() const { return k_; }
    bool restricted_to_family() const { return restricted_; }

    friend FilterSpec restrict_to_family(FilterSpec spec);

  private:
    FilterSpec(Weight weight, IndicatorKind kind) : weight_(weight), kind_(kind) {}

    Weight weight_;
    IndicatorKind kind_;
    double normalization_ = 0.0;
    int k_ = 0;
    bool restricted_ = false;
};

/// Gates the spec on family membership of the event: the filter value is 0
/// whenever E is not a member. At most one level of gating.
FilterSpec restrict_to_family(FilterSpec spec);

/// Checks a spec against a family: pignistic weights need an algebra,
/// k-thresholds must not exceed the universe size, K must be positive.
void validate_spec(const FilterSpec& spec, const NeighbourhoodFamily& family);

/// One pass over the family members in canonical order, accumulating
/// m(Y) * w(e,Y). Values outside [0,1] (beyond rounding slack) raise
/// value_out_of_range instead of being clamped.
double eval_filter(const MassFunction& m, const FilterSpec& spec, SubsetMask e);

// Named estimators. Each is exactly eval_filter with its corresponding spec,
// so values agree bit for bit with the engine.

/// Total mass of members contained in e.
double belief(const MassFunction& m, SubsetMask e);
/// Total mass of members meeting e.
double plausibility(const MassFunction& m, SubsetMask e);
/// Belief without the empty-set mass: members contained in e, excluding {}.
double belief_plus(const MassFunction& m, SubsetMask e);
/// Belief gated on e being a member of the family, else 0.
double belief_min(const MassFunction& m, SubsetMask e);
/// Total mass of members containing e.
double plausibility_min(const MassFunction& m, SubsetMask e);
/// Mass redistributed over atoms: sum of m(Y) * |e n Y| / noa(Y).
double pignistic(const MassFunction& m, SubsetMask e);
/// Overlap-weighted mass: sum of m(Y) * |e n Y| / |Y|.
double contextual_mass(const MassFunction& m, SubsetMask e);
/// Capped k-parameterized plausibility (see FilterSpec::upper_k).
double plausibility_k(const MassFunction& m, int k, SubsetMask e);
/// Capped k-parameterized belief (see FilterSpec::lower_k).
double belief_k(const MassFunction& m, int k, SubsetMask e);

/// Contextual probability of a probability measure: sum over all members of
/// p(Y) * |e n Y| / K with K = sum of p(Y) * |Y|.
double contextual_prob(const ProbabilityMeasure& p, SubsetMask e);

/// The normalization K used by contextual_prob.
double contextual_normalization(const ProbabilityMeasure& p);

}  // namespace evf
