#ifndef POLYSPECTRA_CANONICAL_HPP
#define POLYSPECTRA_CANONICAL_HPP

#include "polyspectra/embedded_graph.hpp"

#include <string>

namespace polyspectra {

/// Canonical certificate of the abstract graph (embedding ignored), equal for
/// two graphs iff they are isomorphic. Degree-refined backtracking; intended
/// for graphs up to 64 vertices (throws beyond).
std::string canonical_certificate(const EmbeddedGraph& g);

bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

} // namespace polyspectra

#endif
