#pragma once

#include <string>
#include <vector>

#include "polarity/graph.hpp"

namespace polarity {

// Byte string identifying the isomorphism class of a small graph:
// equal codes iff isomorphic. Supported for order <= 12.
struct CanonicalForm {
    std::string code;
    bool operator==(const CanonicalForm& o) const { return code == o.code; }
    bool operator<(const CanonicalForm& o) const { return code < o.code; }
};

CanonicalForm canonicalForm(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Apply a vertex relabeling: vertex v of g becomes perm[v].
Graph permuteGraph(const Graph& g, const std::vector<int>& perm);

// All graphs on exactly n vertices up to isomorphism, one representative
// each, built by vertex augmentation from the (n-1)-vertex list.
std::vector<Graph> allGraphsOfOrder(int n);

}  // namespace polarity

template <>
struct std::hash<polarity::CanonicalForm> {
    size_t operator()(const polarity::CanonicalForm& c) const {
        return std::hash<std::string>()(c.code);
    }
};
