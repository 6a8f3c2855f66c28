#pragma once

// Finite-universe set machinery: subsets as single-word bitmasks, ordered
// neighbourhood families, Boolean-subalgebra detection, and the canonical
// (cardinality, then lexicographic) subset enumeration used everywhere else.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evf/error.hpp"

namespace evf {

/// A subset of the universe as a 64-bit mask; bit i set <=> element i present.
/// The universe bound (n <= 64) keeps every subset in one machine word.
struct SubsetMask {
    std::uint64_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool contains(unsigned element) const { return (bits >> element) & 1U; }
    constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(SubsetMask other) const { return (bits & other.bits) != 0; }

    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask{bits & o.bits}; }
    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask{bits | o.bits}; }
    constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask{bits & ~o.bits}; }
    constexpr SubsetMask with(unsigned element) const { return SubsetMask{bits | (std::uint64_t{1} << element)}; }

    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits != b.bits; }
};

/// Ordering key used for all member lists and event sweeps: cardinality
/// ascending, ties broken lexicographically on the sorted element indices.
bool canonical_less(SubsetMask a, SubsetMask b);

/// Fixed, ordered ground set. Labels are unique; element i of any SubsetMask
/// refers to labels()[i] for the lifetime of the universe.
class Universe {
  public:
    explicit Universe(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    unsigned size() const { return static_cast<unsigned>(labels_.size()); }

    /// Mask with every element present.
    SubsetMask full() const {
        const unsigned n = size();
        return SubsetMask{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    SubsetMask complement(SubsetMask m) const { return full().minus(m); }

    const std::string& label_of(unsigned element) const { return labels_.at(element); }
    std::optional<unsigned> index_of(const std::string& label) const;

    friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

  private:
    std::vector<std::string> labels_;
};

Universe build_universe(std::vector<std::string> labels);

/// Renders a subset as "{a,b,c}" using the universe's labels ("{}" when empty).
std::string render_subset(const Universe& u, SubsetMask m);

/// All subsets of the universe in canonical order. The empty set, when
/// requested, comes first. O(2^n) output; refused above n = 26.
std::vector<SubsetMask> enumerate_subsets(const Universe& u, bool include_empty);

/// An ordered family of distinct subsets. When the members happen to form a
/// Boolean subalgebra of 2^Q the family carries its atom list (the minimal
/// nonempty members); general families carry no atoms.
///
/// Members are always held in canonical order, so summation order downstream
/// is reproducible by construction. Immutable after construction.
class NeighbourhoodFamily {
  public:
    const Universe& universe() const { return universe_; }
    const std::vector<SubsetMask>& members() const { return members_; }

    bool is_algebra() const { return algebra_; }

    /// Atom list in canonical order; throws no_atoms for general families.
    const std::vector<SubsetMask>& atoms() const;

    bool contains(SubsetMask m) const;
    std::optional<std::size_t> index_of(SubsetMask m) const;

    /// Number of atoms contained in member y. Requires an algebra and y a member.
    int noa(SubsetMask y) const;

  private:
    NeighbourhoodFamily(Universe u, std::vector<SubsetMask> members, std::vector<SubsetMask> atoms, bool algebra)
        : universe_(std::move(u)), members_(std::move(members)), atoms_(std::move(atoms)), algebra_(algebra) {}

    Universe universe_;
    std::vector<SubsetMask> members_;
    std::vector<SubsetMask> atoms_;
    bool algebra_ = false;

    friend NeighbourhoodFamily build_algebra_from_partition(const Universe&, const std::vector<SubsetMask>&);
    friend NeighbourhoodFamily validate_family(const Universe&, std::vector<SubsetMask>);
};

/// Closes a partition of Q under union: members are all 2^k unions of blocks
/// (including the empty union), atoms are the blocks themselves.
NeighbourhoodFamily build_algebra_from_partition(const Universe& u, const std::vector<SubsetMask>& partition);

/// Accepts any duplicate-free member list, sorts it canonically, and detects
/// whether it forms a Boolean subalgebra (closure under complement and
/// pairwise union); if so the atoms are populated.
NeighbourhoodFamily validate_family(const Universe& u, std::vector<SubsetMask> members);

}  // namespace evf
