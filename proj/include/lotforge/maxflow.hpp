#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace lotforge {

// Dinic's algorithm; edges are kept in insertion order so tie-breaking is reproducible
class MaxFlow {
 public:
  using Cap = long long;
  static constexpr Cap kInf = Cap(1) << 50;

  explicit MaxFlow(int n) : head_(size_t(n), -1), tail_(size_t(n), -1), level_(size_t(n)), iter_(size_t(n)) {}

  int add_edge(int u, int v, Cap cap) {
    int id = int(to_.size());
    push(u, v, cap);
    push(v, u, 0);
    return id;
  }

  Cap run(int s, int t) {
    Cap total = 0;
    while (bfs(s, t)) {
      for (size_t i = 0; i < iter_.size(); ++i) iter_[i] = head_[i];
      while (Cap f = dfs(s, t, kInf)) {
        total += f;
        if (total >= kInf) return total;
      }
    }
    return total;
  }

  Cap flow(int edge) const { return cap_[size_t(edge ^ 1)]; }

  // nodes reachable from s in the residual graph after run()
  std::vector<uint8_t> reachable(int s) const {
    std::vector<uint8_t> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[size_t(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[size_t(u)]; e >= 0; e = next_[size_t(e)]) {
        int v = to_[size_t(e)];
        if (cap_[size_t(e)] > 0 && !seen[size_t(v)]) {
          seen[size_t(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  void push(int u, int v, Cap c) {
    // append at the tail of u's list to keep insertion order
    int id = int(to_.size());
    to_.push_back(v);
    cap_.push_back(c);
    next_.push_back(-1);
    if (head_[size_t(u)] < 0)
      head_[size_t(u)] = id;
    else
      next_[size_t(tail_[size_t(u)])] = id;
    tail_[size_t(u)] = id;
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> q{s};
    level_[size_t(s)] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int e = head_[size_t(u)]; e >= 0; e = next_[size_t(e)]) {
        int v = to_[size_t(e)];
        if (cap_[size_t(e)] > 0 && level_[size_t(v)] < 0) {
          level_[size_t(v)] = level_[size_t(u)] + 1;
          q.push_back(v);
        }
      }
    }
    return level_[size_t(t)] >= 0;
  }

  Cap dfs(int u, int t, Cap f) {
    if (u == t) return f;
    for (int& e = iter_[size_t(u)]; e >= 0; e = next_[size_t(e)]) {
      int v = to_[size_t(e)];
      if (cap_[size_t(e)] <= 0 || level_[size_t(v)] != level_[size_t(u)] + 1) continue;
      Cap d = dfs(v, t, std::min(f, cap_[size_t(e)]));
      if (d > 0) {
        cap_[size_t(e)] -= d;
        cap_[size_t(e ^ 1)] += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<int> head_, tail_, level_, iter_;
  std::vector<int> to_, next_;
  std::vector<Cap> cap_;
};

}  // namespace lotforge
