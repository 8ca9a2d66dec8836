#ifndef MFC_PARTITION_HPP
#define MFC_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfc/dataset.hpp"
#include "mfc/errors.hpp"

namespace mfc {

// Assignment of n points into t disjoint non-empty components with
// contiguous ids 0..t-1, optionally carrying one representative each.
struct Partition {
    Index t = 0;
    std::vector<Index> assignment;       // per point, component id in [0, t)
    std::vector<Index> representatives;  // empty when unset, else size t

    bool has_representatives() const { return !representatives.empty(); }

    Index n() const { return static_cast<Index>(assignment.size()); }

    std::vector<std::vector<Index>> members() const {
        std::vector<std::vector<Index>> groups(t);
        for (Index i = 0; i < n(); ++i) groups[assignment[i]].push_back(i);
        return groups;
    }

    std::vector<Index> component_sizes() const {
        std::vector<Index> sizes(t, 0);
        for (Index c : assignment) ++sizes[c];
        return sizes;
    }

    void validate(Index expected_n) const {
        if (n() != expected_n)
            throw InputError("partition covers " + std::to_string(n()) + " points, expected " +
                             std::to_string(expected_n));
        if (t == 0) throw InputError("partition must have at least one component");
        std::vector<bool> seen(t, false);
        for (Index c : assignment) {
            if (c >= t) throw InputError("component id out of range");
            seen[c] = true;
        }
        for (Index c = 0; c < t; ++c)
            if (!seen[c]) throw InputError("component " + std::to_string(c) + " is empty");
        if (has_representatives()) {
            if (representatives.size() != t)
                throw InputError("representative list size does not match component count");
            for (Index c = 0; c < t; ++c) {
                const Index r = representatives[c];
                if (r >= expected_n || assignment[r] != c)
                    throw InputError("representative of component " + std::to_string(c) +
                                     " does not belong to it");
            }
        }
    }
};

} // namespace mfc

#endif
