#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qnet/graph.hpp"

namespace qnet {

/// Parse failure with the 1-based line it occurred on (0 when the error is
/// not attributable to a single line).
class ParseError : public NetworkError {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parse the line-oriented network format:
///
///     # comment
///     state <label>
///     driver <label>
///     edge <src> <dst> [intrinsic|entanglement|drive]
///
/// Vertex indices follow declaration order. A missing edge kind defaults to
/// `drive` when src is a driver and `intrinsic` otherwise.
QDigraph parse_network(std::string_view text, GraphOptions options = {});

/// Canonical text form; parse_network(to_text(g)) == g.
std::string to_text(const QDigraph& g);

/// Graphviz rendering. Drivers are boxes, entanglement edges are dashed.
std::string to_dot(const QDigraph& g);

/// Read a whole file; throws ParseError(0, ...) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace qnet
