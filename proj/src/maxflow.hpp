#pragma once

#include <vector>

namespace gff::detail {

// Dinic max-flow on exact integers. Internal to the solver.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  // Returns the index of the forward arc within from's list.
  int addArc(int from, int to, long long cap);
  long long run(int source, int sink);
  // Flow pushed through an arc previously returned by addArc.
  long long flowOn(int from, int arcIndex) const;

 private:
  struct Arc {
    int to;
    int rev;
    long long cap;
  };

  bool buildLevels(int source, int sink);
  long long augment(int v, int sink, long long limit);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace gff::detail
