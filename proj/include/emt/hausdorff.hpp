#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "emt/metric_space.hpp"

namespace emt {

// A materialized subset of a space's points: indices sorted and deduplicated,
// possibly empty.
struct SubsetSelection {
    std::vector<std::size_t> members;

    static SubsetSelection from_indices(const GenMetricSpace& base,
                                        std::vector<std::size_t> indices);
    static SubsetSelection from_labels(const GenMetricSpace& base,
                                       const std::vector<std::string>& labels);
    bool empty() const { return members.empty(); }
};

// S_M(A, B) = sup_{a in A} inf_{b in B} d(a, b). The empty-set conventions
// make this total: sup over nothing is 0, inf over nothing is +inf.
ExtReal directed_hausdorff(const GenMetricSpace& M, const SubsetSelection& A,
                           const SubsetSelection& B);

// max of the two directed values; both subsets must be nonempty.
ExtReal hausdorff(const GenMetricSpace& M, const SubsetSelection& A,
                  const SubsetSelection& B);

} // namespace emt
