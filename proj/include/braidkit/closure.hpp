#pragma once

#include <set>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

// Bijection on strand positions {1..n}. image(p) is the position where the
// strand entering at position p leaves the braid.
class Permutation {
public:
  explicit Permutation(int size = 1);  // identity
  static Permutation from_images(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int image(int position) const { return images_.at(position - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  // this first, then other
  Permutation then(const Permutation& other) const;

  // Cycles ordered by smallest element, each starting at its smallest element.
  // A cycle's index in this list is its component id.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths, sorted ascending.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// Letters act left to right: sigma_{+-i} swaps positions i and i+1.
Permutation permutation(const BraidWord& w);

struct ClosureSummary {
  int components = 0;
  int exponent_sum = 0;
  int self_linking = 0;  // exponent_sum - strands

  friend bool operator==(const ClosureSummary&, const ClosureSummary&) = default;
};

ClosureSummary closure_summary(const BraidWord& w);

// Appends sigma_n^{+-1}; the result lives in B_{n+1}.
BraidWord stabilize(const BraidWord& w, int sign);
// u w u^{-1}; same closure as w.
BraidWord conjugate_closure(const BraidWord& w, const BraidWord& u);

// Removes the strands of the listed closure components (ids as in
// Permutation::cycles). Surviving strands keep their relative order and the
// signs of the crossings among them.
BraidWord delete_strands(const BraidWord& w, const std::set<int>& components);

}  // namespace braidkit
