#pragma once

// The indicator family behind the parameterized filters. Every variant is a
// total 0/1 function of a pair of subsets, evaluated literally from its
// definition; the s-thresholds compare cardinalities against s*|X| in exact
// integer arithmetic so boundary cases (e.g. s = 1/2, |X| = 2) never
// misclassify.

#include <cstdint>

#include "evf/error.hpp"
#include "evf/universe.hpp"

namespace evf {

/// Exact nonnegative rational in [0,1] used as an s-threshold.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

/// Strictly a > (s.num/s.den) * b, computed by cross-multiplication in 128-bit
/// integers. Exact for all cardinalities that fit a 64-element universe.
bool cardinality_exceeds_share(unsigned a, Ratio s, unsigned b);

bool ratio_less_equal(Ratio a, Ratio b);

/// Converts the exact binary value of a double in [0,1] to a Ratio. Values
/// below 2^-60 collapse to 2^-62, which is comparison-equivalent for any
/// universe of at most 64 elements.
Ratio ratio_from_double(double s);

class IndicatorKind {
  public:
    enum class Tag {
        upper,      ///< X and Y meet
        lower,      ///< Y contained in X
        non_empty,  ///< Y nonempty (ignores X)
        subset,     ///< X contained in Y
        equality,   ///< X equals Y
        upper_k,    ///< |X n Y| >= k
        lower_k,    ///< Y contained in X and |Y| >= k
        upper_s,    ///< X = Y, or |X n Y| > s|X| strictly
        lower_s,    ///< X = Y, or Y a proper subset of X with |Y| > s|X| strictly
    };

    static IndicatorKind upper() { return IndicatorKind(Tag::upper); }
    static IndicatorKind lower() { return IndicatorKind(Tag::lower); }
    static IndicatorKind non_empty() { return IndicatorKind(Tag::non_empty); }
    static IndicatorKind subset() { return IndicatorKind(Tag::subset); }
    static IndicatorKind equality() { return IndicatorKind(Tag::equality); }

    static IndicatorKind upper_k(int k);
    static IndicatorKind lower_k(int k);
    static IndicatorKind upper_s(Ratio s);
    static IndicatorKind lower_s(Ratio s);
    static IndicatorKind upper_s(double s) { return upper_s(ratio_from_double(s)); }
    static IndicatorKind lower_s(double s) { return lower_s(ratio_from_double(s)); }

    Tag tag() const { return tag_; }
    bool parameterized_by_k() const { return tag_ == Tag::upper_k || tag_ == Tag::lower_k; }
    bool parameterized_by_s() const { return tag_ == Tag::upper_s || tag_ == Tag::lower_s; }
    int k() const { return k_; }
    Ratio s() const { return s_; }

  private:
    explicit IndicatorKind(Tag tag) : tag_(tag) {}

    Tag tag_;
    int k_ = 0;
    Ratio s_{};
};

/// Literal evaluation of the indicator on the pair (x, y).
bool eval_indicator(const IndicatorKind& kind, SubsetMask x, SubsetMask y);

}  // namespace evf
