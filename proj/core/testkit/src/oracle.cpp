#include "atplanar/error.hpp"
#include "atplanar/testkit/testkit.hpp"

namespace atplanar::testkit {

ParityCount brute_force_eulerian_diff_oracle(const Orientation& d) {
  const int m = d.arc_count();
  if (m > 20) throw Error(ErrorCode::CapExceeded, "oracle handles at most 20 arcs");
  auto arcs = d.arcs();
  std::vector<int> last(static_cast<std::size_t>(d.vertex_count()), -1);
  for (int i = 0; i < m; ++i) {
    last[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].tail)] = i;
    last[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].head)] = i;
  }
  std::vector<int> balance(static_cast<std::size_t>(d.vertex_count()), 0);
  ParityCount count;

  // Explicit stack of (arc index, choice); choice 0 = skip, 1 = take.
  std::vector<int> choice;
  int taken = 0;
  auto closes = [&](int i) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    for (Vertex v : {a.tail, a.head})
      if (last[static_cast<std::size_t>(v)] == i && balance[static_cast<std::size_t>(v)] != 0) return false;
    return true;
  };
  auto apply = [&](int i, int sign) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    balance[static_cast<std::size_t>(a.tail)] += sign;
    balance[static_cast<std::size_t>(a.head)] -= sign;
    taken += sign;
  };

  if (m == 0) {
    count.even = 1;
    return count;
  }
  choice.push_back(-1);
  while (!choice.empty()) {
    int i = static_cast<int>(choice.size()) - 1;
    int& c = choice.back();
    if (c == 1) apply(i, -1);
    if (++c > 1) {
      choice.pop_back();
      continue;
    }
    if (c == 1) apply(i, +1);
    if (!closes(i)) continue;
    if (i + 1 == m) {
      (taken % 2 == 0 ? count.even : count.odd) += 1;
      continue;
    }
    choice.push_back(-1);
  }
  return count;
}

}  // namespace atplanar::testkit
