#ifndef POLYSPECTRA_CONNECTIVITY_HPP
#define POLYSPECTRA_CONNECTIVITY_HPP

#include "polyspectra/embedded_graph.hpp"

namespace polyspectra {

/// Tarjan lowpoint test; p >= 3. A single edge or vertex is not biconnected.
bool is_biconnected(const EmbeddedGraph& g);

/// Exact vertex 3-connectivity. Requires p >= 4 (throws otherwise).
/// Fast path: a simple planar triangulation on >= 4 vertices is 3-connected,
/// so graphs whose rotation system triangulates the sphere skip the deletion
/// sweep; everything else runs the exact all-deletions biconnectivity test.
bool is_three_connected(const EmbeddedGraph& g);

/// True iff the rotation system triangulates the sphere: connected, simple,
/// Euler-valid and every face a triangle.
bool is_sphere_triangulation(const EmbeddedGraph& g);

/// polytopal = simple + p >= 4 + Euler-valid + 3-connected.
bool is_polytopal(const EmbeddedGraph& g);
/// Same checks, throwing GraphError with the failed clause.
void require_polytopal(const EmbeddedGraph& g, const std::string& context);

} // namespace polyspectra

#endif
