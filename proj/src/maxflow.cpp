#include "maxflow.hpp"

namespace ehcut::detail {

bool FlowNetwork::bfs_augment(int s, int t) {
    parent_arc_.assign(head_.size(), -1);
    parent_arc_[s] = -2;
    queue_.clear();
    queue_.push_back(s);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        int u = queue_[qi];
        for (int a = head_[u]; a != -1; a = next_[a]) {
            int v = to_[a];
            if (cap_[a] <= 0 || parent_arc_[v] != -1) continue;
            parent_arc_[v] = a;
            if (v == t) {
                for (int node = t; node != s;) {
                    int arc = parent_arc_[node];
                    --cap_[arc];
                    ++cap_[arc ^ 1];
                    node = to_[arc ^ 1];
                }
                return true;
            }
            queue_.push_back(v);
        }
    }
    return false;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs_augment(s, t)) ++flow;
    return flow;
}

std::vector<char> FlowNetwork::reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int a = head_[u]; a != -1; a = next_[a]) {
            if (cap_[a] <= 0 || seen[to_[a]]) continue;
            seen[to_[a]] = 1;
            queue.push_back(to_[a]);
        }
    }
    return seen;
}

} // namespace ehcut::detail
