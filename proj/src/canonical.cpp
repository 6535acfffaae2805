#include "polarity/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace polarity {

namespace {

// Iterated color refinement. Returns per-vertex color ids such that the
// sorted color sequence is an isomorphism invariant and classes are
// canonically ordered by their refinement signatures.
std::vector<int> refineColors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            const Bits& row = g.neighbors(v);
            for (int u = row.first(); u >= 0; u = row.next(u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids.at(sig[v]);
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> classOf;       // canonical class id per vertex
    std::vector<int> perm;          // position -> vertex
    std::vector<bool> placed;
    std::vector<uint8_t> code;      // bits appended column-major as positions fill
    std::vector<uint8_t> best;
    bool haveBest = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        classOf = refineColors(g);
        placed.assign(n, false);
        code.reserve(size_t(n) * (n - 1) / 2);
        perm.reserve(n);
    }

    // True twins / false twins relative to the unplaced remainder: swapping
    // u and v maps every completion to an identical code, so only one of
    // them needs to be tried at the current position.
    bool interchangeable(int u, int v) const {
        if (classOf[u] != classOf[v]) return false;
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
        }
        return true;
    }

    // eq: the code so far equals best on every position. Branches that
    // diverge downward lose the incremental pruning and settle at leaves
    // with a full compare; branches that diverge upward are cut.
    void search(bool eq) {
        size_t depth = perm.size();
        if (depth == size_t(n)) {
            if (!haveBest || (!eq && std::lexicographical_compare(code.begin(), code.end(),
                                                                  best.begin(), best.end()))) {
                best = code;
                haveBest = true;
            }
            return;
        }
        int wantClass = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (wantClass < 0 || classOf[v] < wantClass)) wantClass = classOf[v];

        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (placed[v] || classOf[v] != wantClass) continue;
            bool dup = false;
            for (int u : tried)
                if (interchangeable(u, v)) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);

            size_t mark = code.size();
            bool worse = false, childEq = eq && haveBest;
            for (size_t i = 0; i < depth; ++i) {
                uint8_t bit = g.adjacent(perm[i], v) ? 1 : 0;
                code.push_back(bit);
                if (childEq) {
                    uint8_t ref = best[code.size() - 1];
                    if (bit > ref) { worse = true; break; }
                    if (bit < ref) childEq = false;
                }
            }
            if (!worse) {
                perm.push_back(v);
                placed[v] = true;
                search(childEq || !haveBest);
                placed[v] = false;
                perm.pop_back();
            }
            code.resize(mark);
        }
    }
};

}  // namespace

CanonicalForm canonicalForm(const Graph& g) {
    if (g.order() > 12) throw std::invalid_argument("canonicalForm: order > 12");
    CanonSearch s(g);
    s.search();
    std::string code;
    code.push_back(char(g.order()));
    uint8_t acc = 0;
    int fill = 0;
    for (uint8_t b : s.best) {
        acc = uint8_t(acc << 1 | b);
        if (++fill == 8) {
            code.push_back(char(acc));
            acc = 0;
            fill = 0;
        }
    }
    if (fill) code.push_back(char(acc << (8 - fill)));
    return {code};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonicalForm(a) == canonicalForm(b);
}

Graph permuteGraph(const Graph& g, const std::vector<int>& perm) {
    Graph r(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
            r.addEdge(perm[v], perm[u]);
    return r;
}

std::vector<Graph> allGraphsOfOrder(int n) {
    std::vector<Graph> cur = {Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<CanonicalForm> seen;
        for (const Graph& g : cur) {
            for (uint32_t mask = 0; mask < (uint32_t(1) << (k - 1)); ++mask) {
                Graph h(k);
                for (int v = 0; v < k - 1; ++v) {
                    for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
                        h.addEdge(v, u);
                    if (mask & (uint32_t(1) << v)) h.addEdge(v, k - 1);
                }
                if (seen.insert(canonicalForm(h)).second) next.push_back(h);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace polarity
