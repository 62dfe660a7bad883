#include "qnet/bipartite.hpp"

#include <deque>
#include <limits>

namespace qnet {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteGraph& g)
        : g_(g),
          dist_(g.left_size()),
          next_(g.left_size()) {
        m_.mate_of_left.assign(g.left_size(), BipartiteMatching::kFree);
        m_.mate_of_right.assign(g.right_size, BipartiteMatching::kFree);
    }

    BipartiteMatching run() {
        while (layer()) {
            for (std::size_t u = 0; u < g_.left_size(); ++u) next_[u] = 0;
            for (std::uint32_t u = 0; u < g_.left_size(); ++u) {
                if (m_.mate_of_left[u] == BipartiteMatching::kFree && augment(u)) ++m_.size;
            }
        }
        return std::move(m_);
    }

private:
    // BFS from every free left vertex; returns true if some free right
    // vertex is reachable along alternating paths.
    bool layer() {
        std::deque<std::uint32_t> queue;
        for (std::uint32_t u = 0; u < g_.left_size(); ++u) {
            if (m_.mate_of_left[u] == BipartiteMatching::kFree) {
                dist_[u] = 0;
                queue.push_back(u);
            } else {
                dist_[u] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto r : g_.adjacency[u]) {
                auto w = m_.mate_of_right[r];
                if (w == BipartiteMatching::kFree) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    // Iterative DFS along the BFS layers.
    bool augment(std::uint32_t root) {
        std::vector<std::uint32_t> stack{root};
        while (!stack.empty()) {
            auto u = stack.back();
            const auto& adj = g_.adjacency[u];
            bool advanced = false;
            while (next_[u] < adj.size()) {
                auto r = adj[next_[u]];
                auto w = m_.mate_of_right[r];
                if (w == BipartiteMatching::kFree) {
                    // Flip the path root .. u -> r.
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        auto left = stack[i];
                        auto right = g_.adjacency[left][next_[left]];
                        m_.mate_of_left[left] = right;
                        m_.mate_of_right[right] = left;
                    }
                    return true;
                }
                if (dist_[w] == dist_[u] + 1) {
                    stack.push_back(w);
                    advanced = true;
                    break;
                }
                ++next_[u];
            }
            if (!advanced) {
                dist_[u] = kInf;
                stack.pop_back();
                if (!stack.empty()) ++next_[stack.back()];
            }
        }
        return false;
    }

    const BipartiteGraph& g_;
    BipartiteMatching m_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::size_t> next_;
};

}  // namespace

BipartiteMatching hopcroft_karp(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

}  // namespace qnet
