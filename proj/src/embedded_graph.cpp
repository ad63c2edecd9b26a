#include "polyspectra/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace polyspectra {

EmbeddedGraph EmbeddedGraph::from_rotations(std::vector<std::vector<VertexId>> rot) {
    EmbeddedGraph g;
    g.rot_ = std::move(rot);
    g.validate();
    return g;
}

EmbeddedGraph EmbeddedGraph::from_faces(int order, const std::vector<Face>& faces) {
    // succ[v][u] = w  for each face corner (u, v, w): w follows u in rot(v).
    std::vector<std::unordered_map<VertexId, VertexId>> succ(order);
    for (const Face& f : faces) {
        const int len = static_cast<int>(f.size());
        if (len < 3) throw GraphError("from_faces: face shorter than 3");
        for (int i = 0; i < len; ++i) {
            VertexId u = f[i];
            VertexId v = f[(i + 1) % len];
            VertexId w = f[(i + 2) % len];
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw GraphError("from_faces: vertex id out of range");
            auto [it, fresh] = succ[v].emplace(u, w);
            (void)it;
            if (!fresh) throw GraphError("from_faces: dart in two faces");
        }
    }
    std::vector<std::vector<VertexId>> rot(order);
    for (VertexId v = 0; v < order; ++v) {
        if (succ[v].empty()) throw GraphError("from_faces: isolated vertex");
        VertexId start = succ[v].begin()->first;
        VertexId cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw GraphError("from_faces: open rotation");
            cur = it->second;
            if (rot[v].size() > succ[v].size())
                throw GraphError("from_faces: rotation cycle shorter than degree");
        } while (cur != start);
        if (rot[v].size() != succ[v].size())
            throw GraphError("from_faces: rotation splits into several cycles");
    }
    return from_rotations(std::move(rot));
}

EmbeddedGraph EmbeddedGraph::triangle() {
    EmbeddedGraph g;
    g.rot_ = {{1, 2}, {2, 0}, {0, 1}};
    return g;
}

EmbeddedGraph EmbeddedGraph::tetrahedron() {
    EmbeddedGraph g = triangle();
    g.split_face_inplace({0, 1, 2});
    return g;
}

EmbeddedGraph EmbeddedGraph::square_pyramid() {
    EmbeddedGraph g;
    g.rot_ = {{1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {0, 4, 2}, {0, 1, 2, 3}};
    return g;
}

EmbeddedGraph EmbeddedGraph::cube() {
    // bottom 0-1-2-3, top 4-5-6-7 with i -- i+4
    EmbeddedGraph g;
    g.rot_ = {{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
              {0, 5, 7}, {1, 6, 4}, {2, 7, 5}, {3, 4, 6}};
    return g;
}

EmbeddedGraph EmbeddedGraph::octahedron() {
    // poles 0,5; equator 1-2-3-4
    EmbeddedGraph g;
    g.rot_ = {{1, 2, 3, 4},
              {0, 4, 5, 2},
              {0, 1, 5, 3},
              {0, 2, 5, 4},
              {0, 3, 5, 1},
              {1, 4, 3, 2}};
    return g;
}

EmbeddedGraph EmbeddedGraph::complete(int n) {
    EmbeddedGraph g;
    g.rot_.resize(n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u = 0; u < n; ++u)
            if (u != v) g.rot_[v].push_back(u);
    return g;
}

EmbeddedGraph EmbeddedGraph::complete_bipartite(int a, int b) {
    EmbeddedGraph g;
    g.rot_.resize(a + b);
    for (VertexId v = 0; v < a; ++v)
        for (VertexId u = a; u < a + b; ++u) g.rot_[v].push_back(u);
    for (VertexId u = a; u < a + b; ++u)
        for (VertexId v = 0; v < a; ++v) g.rot_[u].push_back(v);
    return g;
}

int EmbeddedGraph::size() const {
    std::size_t total = 0;
    for (const auto& r : rot_) total += r.size();
    return static_cast<int>(total / 2);
}

bool EmbeddedGraph::adjacent(VertexId u, VertexId v) const {
    const auto& r = rot_.at(u);
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<int> EmbeddedGraph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(rot_.size());
    for (const auto& r : rot_) d.push_back(static_cast<int>(r.size()));
    std::sort(d.rbegin(), d.rend());
    return d;
}

bool EmbeddedGraph::has_degree_range(int lo, int hi) const {
    std::vector<char> seen(std::max(0, hi + 1), 0);
    for (const auto& r : rot_) {
        int d = static_cast<int>(r.size());
        if (d <= hi) seen[d] = 1;
    }
    for (int d = lo; d <= hi; ++d)
        if (!seen[d]) return false;
    return true;
}

int EmbeddedGraph::rotation_index(VertexId v, VertexId neighbor) const {
    const auto& r = rot_.at(v);
    auto it = std::find(r.begin(), r.end(), neighbor);
    if (it == r.end()) throw GraphError("rotation_index: not a neighbor");
    return static_cast<int>(it - r.begin());
}

std::pair<VertexId, VertexId> EmbeddedGraph::next_dart(VertexId u, VertexId v) const {
    const auto& r = rot_.at(v);
    int i = rotation_index(v, u);
    return {v, r[(i + 1) % r.size()]};
}

std::vector<Face> EmbeddedGraph::faces() const {
    const int p = order();
    // Per-vertex neighbor -> position maps so each dart hop is O(1).
    std::vector<std::unordered_map<VertexId, int>> pos(p);
    for (VertexId v = 0; v < p; ++v) {
        pos[v].reserve(rot_[v].size() * 2);
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
            pos[v].emplace(rot_[v][i], i);
    }
    std::vector<int> offset(p + 1, 0);
    for (VertexId v = 0; v < p; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(rot_[v].size());
    std::vector<char> seen(offset[p], 0);

    std::vector<Face> out;
    for (VertexId u = 0; u < p; ++u) {
        for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
            if (seen[offset[u] + i]) continue;
            Face cyc;
            VertexId a = u;
            int ai = i;
            while (!seen[offset[a] + ai]) {
                seen[offset[a] + ai] = 1;
                VertexId b = rot_[a][ai];
                cyc.push_back(a);
                auto it = pos[b].find(a);
                if (it == pos[b].end()) throw GraphError("faces: asymmetric rotation");
                int bi = (it->second + 1) % static_cast<int>(rot_[b].size());
                a = b;
                ai = bi;
            }
            out.push_back(std::move(cyc));
        }
    }
    return out;
}

int EmbeddedGraph::face_count() const { return static_cast<int>(faces().size()); }

Face EmbeddedGraph::face_of_dart(VertexId u, VertexId v) const {
    Face cyc;
    VertexId a = u, b = v;
    do {
        cyc.push_back(a);
        auto [nb, nc] = next_dart(a, b);
        a = nb;
        b = nc;
        if (cyc.size() > rot_.size() * 6 + 6) throw GraphError("face_of_dart: runaway orbit");
    } while (!(a == u && b == v));
    return cyc;
}

std::optional<Face> EmbeddedGraph::triangle_face(VertexId a, VertexId b, VertexId c) const {
    if (!adjacent(a, b) || !adjacent(b, c) || !adjacent(c, a)) return std::nullopt;
    for (auto [x, y, z] : {std::array<VertexId, 3>{a, b, c}, std::array<VertexId, 3>{a, c, b}}) {
        if (next_dart(x, y).second == z && next_dart(y, z).second == x &&
            next_dart(z, x).second == y)
            return Face{x, y, z};
    }
    return std::nullopt;
}

std::vector<Face> EmbeddedGraph::faces_with_edge(VertexId u, VertexId v) const {
    if (!adjacent(u, v)) return {};
    std::vector<Face> out;
    out.push_back(face_of_dart(u, v));
    Face other = face_of_dart(v, u);
    if (out[0] != other) out.push_back(std::move(other));
    return out;
}

bool EmbeddedGraph::connected() const {
    const int p = order();
    if (p == 0) return true;
    std::vector<char> vis(p, 0);
    std::vector<VertexId> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : rot_[v])
            if (!vis[u]) {
                vis[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == p;
}

bool EmbeddedGraph::euler_valid() const {
    if (!connected()) throw GraphError("euler_valid: graph is disconnected");
    return order() - size() + face_count() == 2;
}

void EmbeddedGraph::validate() const {
    const int p = order();
    for (VertexId v = 0; v < p; ++v) {
        const auto& r = rot_[v];
        std::vector<VertexId> s(r);
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= p)
                throw GraphError("validate: neighbor id out of range");
            if (s[i] == v) throw GraphError("validate: loop at vertex " + std::to_string(v));
            if (i > 0 && s[i] == s[i - 1])
                throw GraphError("validate: repeated neighbor at vertex " + std::to_string(v));
        }
        for (VertexId u : r)
            if (!adjacent(u, v))
                throw GraphError("validate: asymmetric adjacency " + std::to_string(v) + "," +
                                 std::to_string(u));
    }
}

void EmbeddedGraph::set_label(const std::string& name, VertexId v) {
    if (v < 0 || v >= order()) throw GraphError("set_label: vertex out of range");
    labels_[name] = v;
}

std::optional<VertexId> EmbeddedGraph::label(const std::string& name) const {
    auto it = labels_.find(name);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

VertexId EmbeddedGraph::add_vertex() {
    rot_.emplace_back();
    return order() - 1;
}

VertexId EmbeddedGraph::split_face_inplace(const Face& f) {
    if (f.size() != 3) throw GraphError("split: face is not a triangle");
    auto oriented = triangle_face(f[0], f[1], f[2]);
    if (!oriented) throw GraphError("split: {" + std::to_string(f[0]) + "," +
                                    std::to_string(f[1]) + "," + std::to_string(f[2]) +
                                    "} is not a face");
    const Face& cyc = *oriented;
    VertexId d = add_vertex();
    for (int i = 0; i < 3; ++i) {
        VertexId x = cyc[i], y = cyc[(i + 1) % 3];
        int j = rotation_index(y, x);
        rot_[y].insert(rot_[y].begin() + j + 1, d);
    }
    rot_[d] = {cyc[0], cyc[2], cyc[1]};
    return d;
}

std::vector<VertexId> EmbeddedGraph::h_split_inplace(VertexId a, VertexId b, VertexId about,
                                                     int h) {
    if (h < 1) throw GraphError("h_split: h must be >= 1");
    std::vector<VertexId> chain;
    chain.reserve(h);
    VertexId prev = about;
    for (int i = 0; i < h; ++i) {
        prev = split_face_inplace({a, b, prev});
        chain.push_back(prev);
    }
    return chain;
}

void EmbeddedGraph::delete_edge_inplace(VertexId u, VertexId v) {
    int i = rotation_index(u, v);
    rot_[u].erase(rot_[u].begin() + i);
    int j = rotation_index(v, u);
    rot_[v].erase(rot_[v].begin() + j);
}

} // namespace polyspectra
