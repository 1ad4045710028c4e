#include <algorithm>
#include <numeric>

#include "linfmap/exactlin.hpp"

namespace linfmap {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v - 1])
      throw AlgebraError("not a permutation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw AlgebraError("compose: permutation sizes differ");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  if (degrees.size() != sigma.size()) throw AlgebraError("koszul_sign: size mismatch");
  long parity = 0;
  const auto& img = sigma.images();
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) parity += static_cast<long>(degrees[img[i] - 1]) * degrees[img[j] - 1];
  return (parity % 2 == 0) ? 1 : -1;
}

int skew_sign(const Permutation& sigma, std::span<const int> degrees) {
  return sigma.sign() * koszul_sign(sigma, degrees);
}

std::vector<Permutation> shuffles(int i, int n) {
  if (n < 0 || i < 0 || i > n) throw AlgebraError("shuffles: block size out of range");
  std::vector<Permutation> out;
  std::vector<int> first(i);
  std::iota(first.begin(), first.end(), 1);
  while (true) {
    std::vector<int> images = first;
    for (int v = 1; v <= n; ++v)
      if (!std::binary_search(first.begin(), first.end(), v)) images.push_back(v);
    out.emplace_back(std::move(images));
    // next combination in lexicographic order
    int k = i - 1;
    while (k >= 0 && first[k] == n - i + k + 1) --k;
    if (k < 0) break;
    ++first[k];
    for (int m = k + 1; m < i; ++m) first[m] = first[m - 1] + 1;
  }
  return out;
}

}  // namespace linfmap
