#include "polyspectra/connectivity.hpp"

#include <algorithm>

namespace polyspectra {

namespace {

// Iterative lowpoint DFS over the graph minus `skip` (-1 = none).
// Returns true iff the remaining graph is connected, has >= 3 vertices and
// no cut vertex.
bool biconnected_excluding(const EmbeddedGraph& g, VertexId skip) {
    const int p = g.order();
    int active = (skip >= 0) ? p - 1 : p;
    if (active < 3) return false;

    std::vector<int> disc(p, -1), low(p, 0), parent(p, -1), child_count(p, 0);
    std::vector<int> edge_pos(p, 0);
    int timer = 0;
    VertexId root = -1;
    for (VertexId v = 0; v < p; ++v)
        if (v != skip) {
            root = v;
            break;
        }

    std::vector<VertexId> stack;
    stack.push_back(root);
    disc[root] = low[root] = timer++;
    int visited = 1;

    while (!stack.empty()) {
        VertexId v = stack.back();
        const auto& nbrs = g.rotation(v);
        if (edge_pos[v] < static_cast<int>(nbrs.size())) {
            VertexId u = nbrs[edge_pos[v]++];
            if (u == skip) continue;
            if (disc[u] == -1) {
                parent[u] = v;
                ++child_count[v];
                disc[u] = low[u] = timer++;
                ++visited;
                stack.push_back(u);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            VertexId pv = parent[v];
            if (pv != -1) {
                low[pv] = std::min(low[pv], low[v]);
                if (pv != root && low[v] >= disc[pv]) return false; // cut vertex pv
            }
        }
    }
    if (visited != active) return false;       // disconnected
    if (child_count[root] > 1) return false;   // root cut vertex
    return true;
}

} // namespace

bool is_biconnected(const EmbeddedGraph& g) { return biconnected_excluding(g, -1); }

bool is_sphere_triangulation(const EmbeddedGraph& g) {
    if (g.order() < 4 || !g.connected()) return false;
    auto fs = g.faces();
    if (g.order() - g.size() + static_cast<int>(fs.size()) != 2) return false;
    return std::all_of(fs.begin(), fs.end(), [](const Face& f) { return f.size() == 3; });
}

bool is_three_connected(const EmbeddedGraph& g) {
    const int p = g.order();
    if (p < 4) throw GraphError("is_three_connected: needs p >= 4");
    for (VertexId v = 0; v < p; ++v)
        if (g.degree(v) < 3) return false;
    if (is_sphere_triangulation(g)) return true;
    // kappa >= 3 iff G - v is biconnected for every v.
    if (!biconnected_excluding(g, -1)) return false;
    for (VertexId v = 0; v < p; ++v)
        if (!biconnected_excluding(g, v)) return false;
    return true;
}

bool is_polytopal(const EmbeddedGraph& g) {
    if (g.order() < 4) return false;
    try {
        g.validate();
        if (!g.euler_valid()) return false;
    } catch (const GraphError&) {
        return false;
    }
    return is_three_connected(g);
}

void require_polytopal(const EmbeddedGraph& g, const std::string& context) {
    if (g.order() < 4) throw GraphError(context + ": order < 4");
    g.validate();
    if (!g.euler_valid()) throw GraphError(context + ": rotation system is not genus 0");
    if (!is_three_connected(g)) throw GraphError(context + ": not 3-connected");
}

} // namespace polyspectra
