#pragma once

#include <string>

#include "hhkit/quiver.hpp"

namespace hhkit {

// The line-oriented algebra file format:
//
//   # comments run to the end of the line
//   field: Q              (or "field: F 2")
//   vertices: 1 2
//   arrows:
//     alpha: 1 -> 2
//     beta: 2 -> 1
//   relations:            (or "truncate: 2"; the block may be empty)
//     beta alpha
//
// Vertex and arrow ids are whitespace-free tokens; the block keywords
// (field, vertices, arrows, relations, truncate) are reserved.
MonomialAlgebra parse_algebra(const std::string& text);

// Reads and parses a file; UsageError on IO failure.
MonomialAlgebra load_algebra(const std::string& path);

// FNV-1a hash of the canonical presentation (characteristic, vertex count,
// arrows as index pairs in declaration order, sorted relation index words or
// the truncation index).  Renaming ids without reordering declarations does
// not change it.
std::string canonical_hash(const MonomialAlgebra& a);

}  // namespace hhkit
