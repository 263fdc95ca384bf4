#ifndef TRIFOREST_NAMED_GRAPHS_HPP
#define TRIFOREST_NAMED_GRAPHS_HPP

#include <triforest/graph.hpp>

namespace triforest::named {

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

/// Hub 0 joined to the cycle 1..n.
inline Graph wheel(int n) {
    Graph g(n + 1);
    for (int i = 1; i <= n; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % n + 1);
    }
    return g;
}

/// K_{2,2,2}; the antipodal pairs are (0,1), (2,3), (4,5).
inline Graph octahedron() {
    Graph g = complete(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return g;
}

inline Graph disjoint_octahedra(int k) {
    Graph g;
    for (int i = 0; i < k; ++i) g = disjoint_union(g, octahedron());
    return g;
}

/// Q3 on 0..7, adjacent iff the labels differ in one bit.
inline Graph cube() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 1; b < 8; b <<= 1)
            if ((v ^ b) > v) g.add_edge(v, v ^ b);
    return g;
}

/// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Graph icosahedron() {
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        const int u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(u, un);
        g.add_edge(l, ln);
        g.add_edge(11, l);
        g.add_edge(u, l);
        g.add_edge(u, ln);
    }
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// Triangles 0,1,2 and 3,4,5 joined by the matching i -- i+3.
inline Graph prism() {
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    return g;
}

inline Graph grid(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

/// Two triangles sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

}  // namespace triforest::named

#endif  // TRIFOREST_NAMED_GRAPHS_HPP
