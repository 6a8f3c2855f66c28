#include "evf/universe.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace evf {

namespace {

// Practical cap for full powerset enumeration; families themselves may live
// on universes up to 64 elements.
constexpr unsigned kMaxEnumerableUniverse = 26;

void check_in_universe(const Universe& u, SubsetMask m) {
    if (!m.subset_of(u.full())) {
        throw Error(ErrorCode::out_of_universe, "subset uses element indices >= " + std::to_string(u.size()));
    }
}

}  // namespace

bool canonical_less(SubsetMask a, SubsetMask b) {
    const int ca = a.count();
    const int cb = b.count();
    if (ca != cb) {
        return ca < cb;
    }
    const std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) {
        return false;
    }
    // Equal cardinality: the set owning the lowest differing element comes
    // first in lexicographic order of the sorted index sequences.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits & lowest) != 0;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(ErrorCode::empty_universe, "a universe needs at least one element");
    }
    if (labels_.size() > 64) {
        throw Error(ErrorCode::too_large,
                    "universe has " + std::to_string(labels_.size()) + " elements, limit is 64");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::duplicate_label, "label '" + label + "' appears more than once");
        }
    }
}

std::optional<unsigned> Universe::index_of(const std::string& label) const {
    for (unsigned i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

Universe build_universe(std::vector<std::string> labels) { return Universe(std::move(labels)); }

std::string render_subset(const Universe& u, SubsetMask m) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < u.size(); ++i) {
        if (!m.contains(i)) {
            continue;
        }
        if (!first) {
            out += ',';
        }
        out += u.label_of(i);
        first = false;
    }
    out += '}';
    return out;
}

std::vector<SubsetMask> enumerate_subsets(const Universe& u, bool include_empty) {
    const unsigned n = u.size();
    if (n > kMaxEnumerableUniverse) {
        throw Error(ErrorCode::too_large,
                    "refusing to enumerate 2^" + std::to_string(n) + " subsets (limit n = " +
                        std::to_string(kMaxEnumerableUniverse) + ")");
    }
    std::vector<SubsetMask> out;
    out.reserve((std::size_t{1} << n) - (include_empty ? 0 : 1));
    if (include_empty) {
        out.emplace_back();
    }
    std::vector<unsigned> idx;
    for (unsigned c = 1; c <= n; ++c) {
        idx.resize(c);
        std::iota(idx.begin(), idx.end(), 0U);
        while (true) {
            SubsetMask m;
            for (unsigned i : idx) {
                m = m.with(i);
            }
            out.push_back(m);
            // Advance to the next c-combination in lexicographic order.
            int j = static_cast<int>(c) - 1;
            while (j >= 0 && idx[static_cast<unsigned>(j)] == n - c + static_cast<unsigned>(j)) {
                --j;
            }
            if (j < 0) {
                break;
            }
            ++idx[static_cast<unsigned>(j)];
            for (unsigned t = static_cast<unsigned>(j) + 1; t < c; ++t) {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
    return out;
}

const std::vector<SubsetMask>& NeighbourhoodFamily::atoms() const {
    if (!algebra_) {
        throw Error(ErrorCode::no_atoms, "family is not a Boolean subalgebra");
    }
    return atoms_;
}

bool NeighbourhoodFamily::contains(SubsetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

std::optional<std::size_t> NeighbourhoodFamily::index_of(SubsetMask m) const {
    const auto it = std::lower_bound(members_.begin(), members_.end(), m, canonical_less);
    if (it == members_.end() || *it != m) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - members_.begin());
}

int NeighbourhoodFamily::noa(SubsetMask y) const {
    const auto& at = atoms();  // throws no_atoms on general families
    if (!contains(y)) {
        throw Error(ErrorCode::not_a_member, "noa of a subset outside the family");
    }
    int count = 0;
    for (SubsetMask a : at) {
        if (a.subset_of(y)) {
            ++count;
        }
    }
    return count;
}

NeighbourhoodFamily build_algebra_from_partition(const Universe& u, const std::vector<SubsetMask>& partition) {
    if (partition.empty()) {
        throw Error(ErrorCode::not_a_partition, "partition has no blocks");
    }
    SubsetMask covered;
    for (SubsetMask block : partition) {
        check_in_universe(u, block);
        if (block.empty()) {
            throw Error(ErrorCode::not_a_partition, "partition contains an empty block");
        }
        if (covered.intersects(block)) {
            throw Error(ErrorCode::not_a_partition, "blocks overlap at " + render_subset(u, covered & block));
        }
        covered = covered | block;
    }
    if (covered != u.full()) {
        throw Error(ErrorCode::not_a_partition,
                    "blocks do not cover " + render_subset(u, u.full().minus(covered)));
    }

    const std::size_t k = partition.size();
    if (k > kMaxEnumerableUniverse) {
        throw Error(ErrorCode::too_large, "partition with " + std::to_string(k) + " blocks closes to 2^" +
                                              std::to_string(k) + " members");
    }
    std::vector<SubsetMask> members;
    members.reserve(std::size_t{1} << k);
    for (std::uint64_t choose = 0; choose < (std::uint64_t{1} << k); ++choose) {
        SubsetMask m;
        for (std::size_t b = 0; b < k; ++b) {
            if ((choose >> b) & 1U) {
                m = m | partition[b];
            }
        }
        members.push_back(m);
    }
    std::sort(members.begin(), members.end(), canonical_less);

    std::vector<SubsetMask> atoms = partition;
    std::sort(atoms.begin(), atoms.end(), canonical_less);
    return NeighbourhoodFamily(u, std::move(members), std::move(atoms), true);
}

NeighbourhoodFamily validate_family(const Universe& u, std::vector<SubsetMask> members) {
    if (members.empty()) {
        throw Error(ErrorCode::bad_config, "family has no members");
    }
    for (SubsetMask m : members) {
        check_in_universe(u, m);
    }
    std::sort(members.begin(), members.end(), canonical_less);
    const auto dup = std::adjacent_find(members.begin(), members.end());
    if (dup != members.end()) {
        throw Error(ErrorCode::duplicate_member, "member " + render_subset(u, *dup) + " listed twice");
    }

    const auto is_member = [&](SubsetMask m) {
        return std::binary_search(members.begin(), members.end(), m, canonical_less);
    };

    // Closure under complement and pairwise union implies a Boolean
    // subalgebra (intersections follow by De Morgan).
    bool algebra = true;
    for (SubsetMask m : members) {
        if (!is_member(u.complement(m))) {
            algebra = false;
            break;
        }
    }
    if (algebra) {
        for (std::size_t i = 0; i < members.size() && algebra; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!is_member(members[i] | members[j])) {
                    algebra = false;
                    break;
                }
            }
        }
    }

    std::vector<SubsetMask> atoms;
    if (algebra) {
        // Atoms are the minimal nonempty members; members are sorted by
        // cardinality, so candidates can only shrink as we scan forward.
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].empty()) {
                continue;
            }
            bool minimal = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (!members[j].empty() && members[j] != members[i] && members[j].subset_of(members[i])) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                atoms.push_back(members[i]);
            }
        }
    }
    return NeighbourhoodFamily(u, std::move(members), std::move(atoms), algebra);
}

}  // namespace evf
