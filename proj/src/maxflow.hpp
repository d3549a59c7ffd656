#ifndef EHCUT_SRC_MAXFLOW_HPP
#define EHCUT_SRC_MAXFLOW_HPP

#include <cstdint>
#include <vector>

// Unit-capacity max-flow via BFS augmenting paths. Flows here never exceed
// the graph degree bound, so Edmonds-Karp with an augmentation limit is all
// the Menger computations need. Arc i and i^1 are mutual reverses.

namespace ehcut::detail {

class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

    void add_arc_pair(int u, int v, int cap_uv, int cap_vu) {
        push_arc(u, v, cap_uv);
        push_arc(v, u, cap_vu);
    }

    // Saves current capacities as the pristine state to reset() back to.
    void freeze() { pristine_cap_ = cap_; }
    void reset() { cap_ = pristine_cap_; }

    // Augments until no path remains or `limit` units are flowing.
    int max_flow(int s, int t, int limit);

    // Residual-reachable set from s after max_flow.
    std::vector<char> reachable(int s) const;

    int node_count() const { return static_cast<int>(head_.size()); }

private:
    void push_arc(int u, int v, int cap) {
        to_.push_back(v);
        cap_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs_augment(int s, int t);

    std::vector<int> head_;
    std::vector<int> next_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> pristine_cap_;
    std::vector<int> parent_arc_;
    std::vector<int> queue_;
};

} // namespace ehcut::detail

#endif
