#include "ggs/perm.hpp"

#include <algorithm>

#include "ggs/errors.hpp"

namespace ggs {

Permutation::Permutation(unsigned degree) : images_(degree) {
  for (unsigned i = 0; i < degree; ++i)
    images_[i] = i;
}

Permutation::Permutation(std::vector<unsigned> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw usage_error("image table is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::cycle(unsigned degree,
                               const std::vector<unsigned>& points) {
  Permutation g(degree);
  if (points.empty())
    return g;
  for (std::size_t i = 0; i < points.size(); ++i)
    g.images_[points[i]] = points[(i + 1) % points.size()];
  std::vector<bool> seen(degree, false);
  for (unsigned v : g.images_) {
    if (seen[v])
      throw usage_error("cycle points repeat");
    seen[v] = true;
  }
  return g;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw usage_error("permutation degrees differ");
  std::vector<unsigned> out(degree());
  for (unsigned i = 0; i < degree(); ++i)
    out[i] = other.images_[images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> out(degree());
  for (unsigned i = 0; i < degree(); ++i)
    out[images_[i]] = i;
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::conjugate(const Permutation& by) const {
  return by.inverse() * (*this) * by;
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g.inverse() * h.inverse() * g * h;
}

} // namespace ggs
