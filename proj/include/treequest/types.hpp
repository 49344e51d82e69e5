#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace treequest {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Kernels with an OpenMP version keep a serial reference path.
enum class Execution { Serial, Parallel };

/// Malformed or unsupported input data (files, ids, parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant was violated; indicates a bug or a corrupted artifact.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace treequest
