#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qnet/graph.hpp"

namespace qnet {

/// Everything `qnetctl analyze` prints, recomputable from the network alone.
struct AnalysisReport {
    std::size_t n = 0;
    std::size_t n_u = 0;
    std::size_t m = 0;
    std::size_t n_d = 0;
    std::vector<std::string> unmatched;
    std::vector<std::string> inaccessible;
    std::vector<std::string> dilation_s;
    std::vector<std::string> dilation_t;
    bool controllable = false;
    // Cover realising the minimum driver assignment.
    std::size_t cacti = 0;
    std::size_t stems = 0;
    std::size_t buds = 0;
};

/// Throws NetworkError for a network without state vertices.
AnalysisReport analyze(const QDigraph& g);

/// `key: value` lines in a fixed order.
std::string to_text(const AnalysisReport& r);

}  // namespace qnet
