#pragma once

#include <string>
#include <vector>

namespace preddiff {

enum class MapKind { weight_of_evidence, activation_difference, sensitivity };

const char* to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& s);

// Finalized relevance per element: accumulated window scores divided by
// coverage counts (0 where a stride > 1 left an element uncovered).
// Positive values are evidence for the target, negative against it.
struct RelevanceMap {
    std::vector<int> shape;       // spatial dims, channel dim last if present
    std::vector<double> values;
    std::vector<int> counts;
    MapKind kind = MapKind::weight_of_evidence;
    std::string target;

    std::size_t size() const { return values.size(); }
    int uncovered() const;
    double max_abs() const;
};

} // namespace preddiff
