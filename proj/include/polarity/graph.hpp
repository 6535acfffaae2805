#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polarity/bits.hpp"

namespace polarity {

// Finite simple graph on vertices 0..n-1, adjacency kept as n bit rows.
// Immutable in spirit: construction helpers build new graphs, operations
// never mutate shared state, so graphs are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bits(n)) {}

    int order() const { return n_; }
    int size() const {  // edge count
        long long s = 0;
        for (const Bits& r : rows_) s += r.count();
        return int(s / 2);
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bits& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    void addEdge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    Bits vertexSet() const { return Bits::full(n_); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Bits> rows_;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Construction operators.
Graph complement(const Graph& g);
Graph disjointUnion(const std::vector<Graph>& gs);
Graph join(const std::vector<Graph>& gs);
Graph inducedSubgraph(const Graph& g, const Bits& w);

// Connectivity. Each component is reported as a vertex set; the list is
// ordered by minimum vertex.
std::vector<Bits> components(const Graph& g);
std::vector<Bits> coComponents(const Graph& g);
bool isConnected(const Graph& g);

// All vertex quadruples inducing a path on four vertices, each once,
// reported as {endpoint, midpoint, midpoint, endpoint} walks.
struct P4 {
    int a, b, c, d;  // path a-b-c-d
    Bits asSet(int n) const { return Bits::ofVertices(n, {a, b, c, d}); }
};
std::vector<P4> listInducedP4s(const Graph& g);

// graph6, bit-exact per the standard format. Orders up to 2^18 accepted.
Graph parseGraph6(const std::string& text);
std::string emitGraph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parseEdgeList(const std::string& text);
std::string emitEdgeList(const Graph& g);

// Small named graphs used all over the tests and the catalog.
Graph emptyGraph(int n);
Graph completeGraph(int n);
Graph pathGraph(int n);
Graph cycleGraph(int n);
Graph completeBipartite(int a, int b);
Graph completeMultipartite(const std::vector<int>& parts);
Graph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace polarity
