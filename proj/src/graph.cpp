#include "polarity/graph.hpp"

#include <sstream>

namespace polarity {

Graph complement(const Graph& g) {
    int n = g.order();
    Graph r(n);
    for (int v = 0; v < n; ++v) {
        Bits row = g.neighbors(v).complemented();
        row.reset(v);
        for (int u = row.first(); u >= 0; u = row.next(u))
            if (u > v) r.addEdge(v, u);
    }
    return r;
}

Graph disjointUnion(const std::vector<Graph>& gs) {
    int n = 0;
    for (const Graph& g : gs) n += g.order();
    Graph r(n);
    int base = 0;
    for (const Graph& g : gs) {
        for (int v = 0; v < g.order(); ++v)
            for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
                r.addEdge(base + v, base + u);
        base += g.order();
    }
    return r;
}

Graph join(const std::vector<Graph>& gs) {
    Graph r = disjointUnion(gs);
    int base = 0;
    for (const Graph& g : gs) {
        for (int v = 0; v < g.order(); ++v)
            for (int u = base + g.order(); u < r.order(); ++u)
                r.addEdge(base + v, u);
        base += g.order();
    }
    return r;
}

Graph inducedSubgraph(const Graph& g, const Bits& w) {
    std::vector<int> vs = w.toVector();
    for (int v : vs)
        if (v >= g.order()) throw std::out_of_range("vertex outside host graph");
    Graph r(int(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) r.addEdge(int(i), int(j));
    return r;
}

std::vector<Bits> components(const Graph& g) {
    int n = g.order();
    std::vector<Bits> out;
    Bits seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        Bits comp(n), frontier(n);
        comp.set(s);
        frontier.set(s);
        while (frontier.any()) {
            Bits next(n);
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                next |= g.neighbors(v);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<Bits> coComponents(const Graph& g) { return components(complement(g)); }

bool isConnected(const Graph& g) { return components(g).size() == 1; }

std::vector<P4> listInducedP4s(const Graph& g) {
    // Walk middle edges b-c; a extends at b, d extends at c.
    std::vector<P4> out;
    int n = g.order();
    for (int b = 0; b < n; ++b) {
        const Bits& nb = g.neighbors(b);
        for (int c = nb.next(b); c >= 0; c = nb.next(c)) {
            Bits as = nb - g.neighbors(c);
            as.reset(c);
            Bits ds = g.neighbors(c) - nb;
            ds.reset(b);
            for (int a = as.first(); a >= 0; a = as.next(a))
                for (int d = ds.first(); d >= 0; d = ds.next(d))
                    if (a != d && !g.adjacent(a, d)) {
                        // each path found once per middle edge; orient by endpoints
                        if (a < d)
                            out.push_back({a, b, c, d});
                        else
                            out.push_back({d, c, b, a});
                    }
        }
    }
    return out;
}

namespace {

constexpr int kG6Lo = 63, kG6Hi = 126;

void packBits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int b = 0;
        for (int j = 0; j < 6; ++j)
            if (i + j < bits.size() && bits[i + j]) b |= 32 >> j;
        out.push_back(char(b + kG6Lo));
    }
}

}  // namespace

std::string emitGraph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + kG6Lo));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + kG6Lo));
    }
    std::vector<bool> bits;
    bits.reserve(size_t(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    packBits(out, bits);
    return out;
}

Graph parseGraph6(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.compare(0, 10, ">>graph6<<") == 0) s = s.substr(10);
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (s.size() < pos + k)
            throw ParseError("graph6: truncated input at byte " + std::to_string(s.size()));
    };
    auto byteAt = [&](size_t i) {
        unsigned char c = s[i];
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: byte out of range 63..126 at offset " + std::to_string(i));
        return int(c) - kG6Lo;
    };

    need(1);
    long long n;
    if (byteAt(0) != 63) {
        n = byteAt(0);
        pos = 1;
    } else {
        need(2);
        if (byteAt(1) != 63) {
            need(4);
            n = (long long(byteAt(1)) << 12) | (byteAt(2) << 6) | byteAt(3);
            pos = 4;
        } else {
            need(8);
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | byteAt(i);
            pos = 8;
        }
    }
    if (n > (1 << 18)) throw ParseError("graph6: order " + std::to_string(n) + " too large");

    long long nbits = n * (n - 1) / 2;
    size_t nbytes = size_t((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw ParseError("graph6: payload length " + std::to_string(s.size() - pos) +
                         " bytes, expected " + std::to_string(nbytes) +
                         " at offset " + std::to_string(pos));

    Graph g(int(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byteAt(pos + size_t(bit / 6));
            if (b & (32 >> (bit % 6))) g.addEdge(i, j);
        }
    // padding of the last byte must be zero
    if (nbytes > 0) {
        int used = int(nbits % 6);
        if (used != 0) {
            int last = byteAt(pos + nbytes - 1);
            if (last & ((1 << (6 - used)) - 1))
                throw ParseError("graph6: nonzero padding bits at offset " +
                                 std::to_string(pos + nbytes - 1));
        }
    }
    return g;
}

Graph parseEdgeList(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edgelist: missing 'n m' header");
    if (n < 0 || n > (1 << 20)) throw ParseError("edgelist: bad order");
    Graph g(int(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edgelist: truncated at edge " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edgelist: bad edge " + std::to_string(u) + " " + std::to_string(v));
        if (!g.adjacent(int(u), int(v))) g.addEdge(int(u), int(v));
    }
    return g;
}

std::string emitEdgeList(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (int v = 0; v < g.order(); ++v)
        for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
            out << v << ' ' << u << '\n';
    return out.str();
}

Graph emptyGraph(int n) { return Graph(n); }

Graph completeGraph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.addEdge(i, j);
    return g;
}

Graph pathGraph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.addEdge(i, i + 1);
    return g;
}

Graph cycleGraph(int n) {
    Graph g = pathGraph(n);
    if (n >= 3) g.addEdge(n - 1, 0);
    return g;
}

Graph completeBipartite(int a, int b) { return completeMultipartite({a, b}); }

Graph completeMultipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    int ai = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int bi = ai + parts[i];
        for (int u = ai; u < bi; ++u)
            for (int v = bi; v < n; ++v) g.addEdge(u, v);
        ai = bi;
    }
    return g;
}

Graph fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.addEdge(u, v);
    return g;
}

}  // namespace polarity
