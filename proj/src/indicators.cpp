#include "evf/indicators.hpp"

#include <cmath>

namespace evf {

bool cardinality_exceeds_share(unsigned a, Ratio s, unsigned b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a) * s.den > static_cast<u128>(s.num) * b;
}

bool ratio_less_equal(Ratio a, Ratio b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a.num) * b.den <= static_cast<u128>(b.num) * a.den;
}

Ratio ratio_from_double(double s) {
    if (!(s >= 0.0) || !(s <= 1.0)) {
        throw Error(ErrorCode::bad_config, "s-threshold must lie in [0,1]");
    }
    if (s == 0.0) {
        return Ratio{0, 1};
    }
    if (s == 1.0) {
        return Ratio{1, 1};
    }
    int exp = 0;
    const double frac = std::frexp(s, &exp);  // s = frac * 2^exp, frac in [0.5, 1)
    const auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));  // exact 53-bit integer
    const int shift = 53 - exp;  // s = mantissa / 2^shift, shift >= 53 for s < 1
    if (shift > 62) {
        // Tiny thresholds: no a/b with b <= 64 falls between this value and
        // 2^-62, so the clamp cannot change any comparison outcome.
        return Ratio{1, std::uint64_t{1} << 62};
    }
    std::uint64_t num = mantissa;
    std::uint64_t den = std::uint64_t{1} << shift;
    while ((num & 1U) == 0 && den > 1) {
        num >>= 1;
        den >>= 1;
    }
    return Ratio{num, den};
}

IndicatorKind IndicatorKind::upper_k(int k) {
    if (k < 1) {
        throw Error(ErrorCode::bad_config, "k-threshold must be at least 1");
    }
    IndicatorKind kind(Tag::upper_k);
    kind.k_ = k;
    return kind;
}

IndicatorKind IndicatorKind::lower_k(int k) {
    if (k < 1) {
        throw Error(ErrorCode::bad_config, "k-threshold must be at least 1");
    }
    IndicatorKind kind(Tag::lower_k);
    kind.k_ = k;
    return kind;
}

IndicatorKind IndicatorKind::upper_s(Ratio s) {
    if (s.den == 0 || s.num > s.den) {
        throw Error(ErrorCode::bad_config, "s-threshold must be a rational in [0,1]");
    }
    IndicatorKind kind(Tag::upper_s);
    kind.s_ = s;
    return kind;
}

IndicatorKind IndicatorKind::lower_s(Ratio s) {
    if (s.den == 0 || s.num > s.den) {
        throw Error(ErrorCode::bad_config, "s-threshold must be a rational in [0,1]");
    }
    IndicatorKind kind(Tag::lower_s);
    kind.s_ = s;
    return kind;
}

bool eval_indicator(const IndicatorKind& kind, SubsetMask x, SubsetMask y) {
    switch (kind.tag()) {
        case IndicatorKind::Tag::upper:
            return x.intersects(y);
        case IndicatorKind::Tag::lower:
            return y.subset_of(x);
        case IndicatorKind::Tag::non_empty:
            return !y.empty();
        case IndicatorKind::Tag::subset:
            return x.subset_of(y);
        case IndicatorKind::Tag::equality:
            return x == y;
        case IndicatorKind::Tag::upper_k:
            return (x & y).count() >= kind.k();
        case IndicatorKind::Tag::lower_k:
            return y.subset_of(x) && y.count() >= kind.k();
        case IndicatorKind::Tag::upper_s:
            return x == y ||
                   cardinality_exceeds_share(static_cast<unsigned>((x & y).count()), kind.s(),
                                             static_cast<unsigned>(x.count()));
        case IndicatorKind::Tag::lower_s:
            return x == y ||
                   (y.subset_of(x) &&
                    cardinality_exceeds_share(static_cast<unsigned>(y.count()), kind.s(),
                                              static_cast<unsigned>(x.count())));
    }
    return false;
}

}  // namespace evf
