#ifndef POLYSPECTRA_EMBEDDED_GRAPH_HPP
#define POLYSPECTRA_EMBEDDED_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyspectra {

using VertexId = int;

/// A directed facial cycle; consecutive entries are edges, last wraps to first.
using Face = std::vector<VertexId>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph with a rotation system (cyclic neighbor order per
/// vertex). The rotation is the source of truth for faces; vertex ids are
/// dense 0..p-1 and stable under the mutating helpers (new vertices append).
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    static EmbeddedGraph from_rotations(std::vector<std::vector<VertexId>> rot);
    /// Reconstruct rotations from a complete set of oriented facial cycles.
    /// Fails unless every dart lies in exactly one face and the induced
    /// neighbor successors close into a single cycle per vertex.
    static EmbeddedGraph from_faces(int order, const std::vector<Face>& faces);

    static EmbeddedGraph triangle();
    static EmbeddedGraph tetrahedron();
    static EmbeddedGraph square_pyramid();
    static EmbeddedGraph cube();
    static EmbeddedGraph octahedron();
    static EmbeddedGraph complete(int n);          // K_n with circular rotations
    static EmbeddedGraph complete_bipartite(int a, int b);

    int order() const { return static_cast<int>(rot_.size()); }
    int size() const;                              // edge count
    int degree(VertexId v) const { return static_cast<int>(rot_.at(v).size()); }
    const std::vector<VertexId>& rotation(VertexId v) const { return rot_.at(v); }
    const std::vector<std::vector<VertexId>>& rotations() const { return rot_; }

    bool adjacent(VertexId u, VertexId v) const;

    /// Multiset of vertex degrees, descending.
    std::vector<int> degree_sequence() const;
    /// True iff every degree in 3..n occurs.
    bool has_degree_range(int lo, int hi) const;

    /// The dart following (u,v) in face traversal: (v, w) with w the successor
    /// of u in the rotation of v.
    std::pair<VertexId, VertexId> next_dart(VertexId u, VertexId v) const;

    /// All faces as dart orbits; every dart lies in exactly one face.
    std::vector<Face> faces() const;
    int face_count() const;

    /// The oriented face containing dart (u,v).
    Face face_of_dart(VertexId u, VertexId v) const;
    /// Oriented cycle of the triangular face with vertex set {a,b,c}, if it
    /// is one.
    std::optional<Face> triangle_face(VertexId a, VertexId b, VertexId c) const;
    /// The (at most two) faces flanking edge (u,v).
    std::vector<Face> faces_with_edge(VertexId u, VertexId v) const;

    bool connected() const;
    /// Genus-0 test: p - q + F == 2. Throws GraphError when disconnected.
    bool euler_valid() const;

    /// Structural validation: dense ids, symmetry, no loops, no repeated
    /// neighbor within one rotation. Throws GraphError describing the defect.
    void validate() const;

    // -- labels for designated vertices ("u_k", "x_0", ...) ------------------
    void set_label(const std::string& name, VertexId v);
    std::optional<VertexId> label(const std::string& name) const;
    const std::map<std::string, VertexId>& labels() const { return labels_; }
    void clear_labels() { labels_.clear(); }

    // -- mutating helpers (builders and transform wrap these; the public
    //    operation surface in transform.hpp is pure) -------------------------
    VertexId add_vertex();
    /// Insert a new vertex inside triangular face f, joined to its corners.
    VertexId split_face_inplace(const Face& f);
    /// h-split f={a,b,about} about `about`: a,b gain h, `about` gains 1.
    /// Returns the chain vertices c_1..c_h in creation order.
    std::vector<VertexId> h_split_inplace(VertexId a, VertexId b, VertexId about, int h);
    /// Remove edge (u,v); the two incident faces merge.
    void delete_edge_inplace(VertexId u, VertexId v);

    bool operator==(const EmbeddedGraph& other) const { return rot_ == other.rot_; }

private:
    std::vector<std::vector<VertexId>> rot_;
    std::map<std::string, VertexId> labels_;

    int rotation_index(VertexId v, VertexId neighbor) const;
};

} // namespace polyspectra

#endif
