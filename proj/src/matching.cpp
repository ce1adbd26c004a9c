#include "antikit/matching.hpp"

#include <algorithm>
#include <deque>

namespace antikit {

namespace {

class Blossom {
public:
    Blossom(int n, const std::vector<std::vector<int>>& adj)
        : n_(n), adj_(adj), mate_(n, -1), parent_(n), base_(n), in_queue_(n), in_blossom_(n) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            const int end = find_augmenting_path(v);
            if (end != -1) augment(end);
        }
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        std::deque<int> queue{root};
        in_queue_[root] = 1;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!in_queue_[i]) {
                            in_queue_[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    in_queue_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent_[v];
            const int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> in_queue_;
    std::vector<char> in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(int n, const std::vector<std::vector<int>>& adjacency) {
    return Blossom(n, adjacency).run();
}

}  // namespace antikit
