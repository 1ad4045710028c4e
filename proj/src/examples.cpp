#include "linfmap/examples.hpp"

namespace linfmap::examples {

LInfinity regular_sequence_target(int i_max) {
  std::vector<BasisElement> basis{{"z", 1}};
  for (int i = 1; i <= i_max; ++i) basis.push_back({"u" + std::to_string(i), 4 * i - 2});
  for (int i = 1; i <= i_max; ++i) basis.push_back({"y" + std::to_string(i), 2 * i - 1});
  GradedSpace space(basis);
  LInfinity L(space, 2 * i_max);
  for (int i = 1; i <= i_max; ++i) {
    const std::size_t u = space.index_of("u" + std::to_string(i));
    const std::size_t y = space.index_of("y" + std::to_string(i));
    L.add_bracket(ArgTuple(2 * i, space.index_of("z")), GradedVector::unit(u, -1));
    L.add_bracket({y, y}, GradedVector::unit(u));
  }
  return L;
}

LInfinity connected_sum_target(int n) {
  GradedSpace space({{"a", 1}, {"b", 1}, {"c", 2}, {"v", 2 * n}});
  LInfinity L(space, std::max(2, n + 1));
  L.add_bracket({0, 1}, GradedVector::unit(2));
  L.add_bracket(ArgTuple(n + 1, 0), GradedVector::unit(3));
  L.add_bracket(ArgTuple(n + 1, 1), GradedVector::unit(3));
  return L;
}

LInfinity s3y_target() {
  GradedSpace space({{"a", 1}, {"b", 2}, {"r", 2}, {"s", 6}});
  LInfinity L(space, 3);
  L.add_bracket({0, 1, 2}, GradedVector::unit(3));
  return L;
}

LInfinity free_lie_target() {
  GradedSpace space({{"a1", 2}, {"a2", 2}, {"a12", 4}, {"a112", 6}, {"a212", 6}});
  LInfinity L(space, 2);
  L.add_bracket({0, 1}, GradedVector::unit(2));
  L.add_bracket({0, 2}, GradedVector::unit(3));
  L.add_bracket({1, 2}, GradedVector::unit(4));
  return L;
}

}  // namespace linfmap::examples
