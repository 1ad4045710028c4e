#include "linfmap/exactlin.hpp"

namespace linfmap {

std::size_t HomologyResult::dimension(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? 0 : it->second.dimension;
}

HomologyResult homology(const GradedLinearMap& d, DegreeWindow window) {
  if (d.degree() != -1) throw AlgebraError("homology: differential must have degree -1");
  if (!(d.source() == d.target())) throw AlgebraError("homology: differential must be an endomorphism");
  const GradedSpace& space = d.source();

  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!window.contains(space.degree(i)) && !window.contains(space.degree(i) - 1)) continue;
    if (!d.apply(d.column(i)).is_zero())
      throw AlgebraError("homology: d∘d is nonzero on '" + space.name(i) + "'");
  }

  HomologyResult result;
  for (int n = window.lo; n <= window.hi; ++n) {
    HomologyInDegree h;
    h.degree = n;
    h.trusted = window.trusted(n);

    const auto here = space.indices_in_degree(n);
    std::vector<GradedVector> images;
    images.reserve(here.size());
    for (std::size_t i : here) images.push_back(d.column(i));
    std::vector<GradedVector> cycles;
    for (const auto& local : kernel_basis(images)) {
      GradedVector global;
      for (const auto& [k, c] : local.terms()) global.add_term(here[k], c);
      cycles.push_back(std::move(global));
    }
    h.cycles = cycles.size();

    Subspace boundaries;
    if (n + 1 <= window.hi)
      for (std::size_t i : space.indices_in_degree(n + 1)) boundaries.insert(d.column(i));
    h.boundaries = boundaries.dimension();

    Subspace spanned = boundaries;
    for (const auto& z : cycles) {
      if (!spanned.insert(z)) continue;
      GradedVector rep = boundaries.reduce(z);
      rep.normalize_sign();
      h.representatives.push_back(std::move(rep));
    }
    h.dimension = h.representatives.size();
    result.degrees.emplace(n, std::move(h));
  }
  return result;
}

}  // namespace linfmap
