#include "emt/hausdorff.hpp"

#include <algorithm>

namespace emt {

SubsetSelection SubsetSelection::from_indices(const GenMetricSpace& base,
                                              std::vector<std::size_t> indices) {
    for (std::size_t i : indices)
        if (i >= base.size())
            throw domain_error("SubsetSelection: index " + std::to_string(i) +
                               " out of range");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return SubsetSelection{std::move(indices)};
}

SubsetSelection SubsetSelection::from_labels(const GenMetricSpace& base,
                                             const std::vector<std::string>& labels) {
    std::vector<std::size_t> indices;
    indices.reserve(labels.size());
    for (const auto& lbl : labels) {
        auto idx = base.index_of(lbl);
        if (!idx) throw domain_error("SubsetSelection: unknown label '" + lbl + "'");
        indices.push_back(*idx);
    }
    return from_indices(base, std::move(indices));
}

ExtReal directed_hausdorff(const GenMetricSpace& M, const SubsetSelection& A,
                           const SubsetSelection& B) {
    if (M.kind() != SpaceKind::ClassicalMetric)
        throw domain_error("directed_hausdorff: base space must be a classical metric");
    ExtReal sup = ExtReal::zero(Flavor::NonNeg);
    for (std::size_t a : A.members) {
        ExtReal inf = ExtReal::infinity(Flavor::NonNeg);
        for (std::size_t b : B.members) inf = ext_min(inf, M.d(a, b));
        sup = ext_max(sup, inf);
    }
    return sup;
}

ExtReal hausdorff(const GenMetricSpace& M, const SubsetSelection& A,
                  const SubsetSelection& B) {
    if (A.empty() || B.empty())
        throw domain_error("hausdorff: subsets must be nonempty");
    return ext_max(directed_hausdorff(M, A, B), directed_hausdorff(M, B, A));
}

} // namespace emt
