#include "braidkit/closure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidkit {

Permutation::Permutation(int size) : images_(size) {
  if (size < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int x : images) {
    if (x < 1 || x > static_cast<int>(images.size()) || seen[x]) {
      throw std::invalid_argument("not a bijection on {1..n}");
    }
    seen[x] = true;
  }
  Permutation p(static_cast<int>(images.size()));
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("size mismatch");
  Permutation out(size());
  for (int p = 1; p <= size(); ++p) out.images_[p - 1] = other.image(image(p));
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[p]; p = image(p)) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation permutation(const BraidWord& w) {
  // Track which strand occupies each position, then invert.
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 1);
  for (int g : w.letters()) {
    const int i = std::abs(g);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> images(w.strands());
  for (int pos = 1; pos <= w.strands(); ++pos) images[at[pos - 1] - 1] = pos;
  return Permutation::from_images(std::move(images));
}

ClosureSummary closure_summary(const BraidWord& w) {
  ClosureSummary s;
  s.components = static_cast<int>(permutation(w).cycles().size());
  s.exponent_sum = w.exponent_sum();
  s.self_linking = s.exponent_sum - w.strands();
  return s;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign == 0) throw std::invalid_argument("stabilization sign must be nonzero");
  std::vector<int> letters = w.letters();
  letters.push_back(sign > 0 ? w.strands() : -w.strands());
  return BraidWord(w.strands() + 1, std::move(letters));
}

BraidWord conjugate_closure(const BraidWord& w, const BraidWord& u) {
  return conjugate(w, u);
}

BraidWord delete_strands(const BraidWord& w, const std::set<int>& components) {
  const auto cycles = permutation(w).cycles();
  std::vector<bool> deleted(w.strands() + 1, false);
  int removed = 0;
  for (int id : components) {
    if (id < 0 || id >= static_cast<int>(cycles.size())) {
      throw std::out_of_range("invalid component id " + std::to_string(id) +
                              " (closure has " + std::to_string(cycles.size()) +
                              " components)");
    }
    for (int p : cycles[id]) deleted[p] = true;
    removed += static_cast<int>(cycles[id].size());
  }
  const int remaining = w.strands() - removed;
  if (remaining < 1) {
    throw std::invalid_argument("cannot delete every strand");
  }

  // A strand is named by its starting position; that name lies in the cycle
  // that contains the position, so deletion by starting position is exact.
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> letters;
  for (int g : w.letters()) {
    const int i = std::abs(g);
    const int a = at[i - 1];
    const int b = at[i];
    if (!deleted[a] && !deleted[b]) {
      int rank = 0;
      for (int p = 0; p < i - 1; ++p) rank += deleted[at[p]] ? 0 : 1;
      letters.push_back(g > 0 ? rank + 1 : -(rank + 1));
    }
    std::swap(at[i - 1], at[i]);
  }
  return BraidWord(remaining, std::move(letters));
}

}  // namespace braidkit
