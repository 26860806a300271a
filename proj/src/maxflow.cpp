#include "maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace gff::detail {

MaxFlow::MaxFlow(int nodes)
    : adj_(static_cast<size_t>(nodes)),
      level_(static_cast<size_t>(nodes)),
      iter_(static_cast<size_t>(nodes)) {}

int MaxFlow::addArc(int from, int to, long long cap) {
  int fi = static_cast<int>(adj_[static_cast<size_t>(from)].size());
  int ri = static_cast<int>(adj_[static_cast<size_t>(to)].size());
  adj_[static_cast<size_t>(from)].push_back({to, ri, cap});
  adj_[static_cast<size_t>(to)].push_back({from, fi, 0});
  return fi;
}

bool MaxFlow::buildLevels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[static_cast<size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& a : adj_[static_cast<size_t>(v)]) {
      if (a.cap > 0 && level_[static_cast<size_t>(a.to)] < 0) {
        level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(v)] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[static_cast<size_t>(sink)] >= 0;
}

long long MaxFlow::augment(int v, int sink, long long limit) {
  if (v == sink) return limit;
  for (int& i = iter_[static_cast<size_t>(v)];
       i < static_cast<int>(adj_[static_cast<size_t>(v)].size()); ++i) {
    Arc& a = adj_[static_cast<size_t>(v)][static_cast<size_t>(i)];
    if (a.cap <= 0 ||
        level_[static_cast<size_t>(a.to)] != level_[static_cast<size_t>(v)] + 1)
      continue;
    long long pushed = augment(a.to, sink, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      adj_[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

long long MaxFlow::run(int source, int sink) {
  long long total = 0;
  while (buildLevels(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (long long pushed = augment(
               source, sink, std::numeric_limits<long long>::max()))
      total += pushed;
  }
  return total;
}

long long MaxFlow::flowOn(int from, int arcIndex) const {
  const Arc& a = adj_[static_cast<size_t>(from)][static_cast<size_t>(arcIndex)];
  return adj_[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap;
}

}  // namespace gff::detail
