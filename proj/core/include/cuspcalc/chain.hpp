#pragma once

#include <string>
#include <vector>

#include "cuspcalc/numeric.hpp"

namespace cuspcalc {

/// A directed weighted linear dual graph, stored as [-D_1^2,...,-D_r^2].
/// The empty chain is a first-class value with discriminant 1.
class LinearChain {
 public:
  LinearChain() = default;
  explicit LinearChain(std::vector<Int> weights) : weights_(std::move(weights)) {}
  LinearChain(std::initializer_list<Int> weights) : weights_(weights) {}

  static LinearChain parse(const std::string& bracket_syntax);

  const std::vector<Int>& weights() const { return weights_; }
  bool empty() const { return weights_.empty(); }
  std::size_t size() const { return weights_.size(); }
  const Int& operator[](std::size_t i) const { return weights_[i]; }

  /// Non-empty and every entry >= 2.
  bool admissible() const;

  std::string to_string() const;

  friend bool operator==(const LinearChain&, const LinearChain&) = default;

 private:
  std::vector<Int> weights_;
};

/// Determinant of the r x r matrix (-D_i D_j); d(empty) = 1.
Int discriminant(const LinearChain& c);

/// e(A) = d(head_removed(A)) / d(A), reduced; requires admissibility.
Rat inductance(const LinearChain& c);

/// The unique admissible chain A with e(A) = q, for q in (0,1).
LinearChain inverse_inductance(const Rat& q);

/// A* = e^{-1}(1 - e(transpose(A))); requires admissibility.
LinearChain adjoint(const LinearChain& c);

/// A * B = [tail_removed(A), a_r + b_1 - 1, head_removed(B)]; associative.
LinearChain star(const LinearChain& a, const LinearChain& b);

LinearChain transpose(const LinearChain& c);
LinearChain head_removed(const LinearChain& c);
LinearChain tail_removed(const LinearChain& c);

/// TW(n) = [2,...,2] with n entries; tw(0) is the empty chain.
LinearChain tw(std::size_t n);

/// [c, extra] — append one weight.
LinearChain appended(const LinearChain& c, const Int& extra);

}  // namespace cuspcalc
