#pragma once

// Weight lattice and root data of type A_{n-1}.
//
// A weight is an integer n-vector modulo the all-ones vector; the stored
// representative has last coordinate 0, so dominant weights are exactly
// partitions with at most n-1 non-zero parts.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "macd/exactalg.hpp"

namespace macd {

/// A documented precondition was violated (range, dominance, invariance).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands of different rank.
class RankError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords);
  Weight(std::initializer_list<int> coords) : Weight(std::vector<int>(coords)) {}

  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// e_i - e_j (0-based)
  static Weight root(int n, int i, int j);
  /// omega_r = e_1 + ... + e_r
  static Weight fundamental(int n, int r);
  /// "2,1,0" -> (2,1,0); any representative accepted.
  static Weight parse(std::string_view text);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_dominant() const;
  /// Coordinate sum of the canonical representative.
  int size() const;
  std::string to_string() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int c, const Weight& w);

  /// w permuted: result[i] = w[perm[i]].
  Weight permuted(const std::vector<int>& perm) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  void canonicalize();
  std::vector<int> coords_;
};

/// Bilinear form with (alpha, alpha) = 2 for every root.
Fraction pairing(const Weight& a, const Weight& b);

/// mu <= lam in the dominance order (lam - mu in Q^+).
bool dominance_leq(const Weight& mu, const Weight& lam);

/// Sum of the simple-root coefficients of lam - mu (requires mu <= lam).
int height_difference(const Weight& mu, const Weight& lam);

struct RootData {
  int n = 0;
  std::vector<Weight> positive_roots;  // e_i - e_j, i < j, lexicographic in (i, j)
  std::vector<Weight> simple_roots;
  Weight rho;

  explicit RootData(int n);
  /// All roots, positive ones first.
  std::vector<Weight> roots() const;
};

const RootData& root_data(int n);

/// Dominant mu <= lam, strongest first (height of lam - mu, then lexicographic).
std::vector<Weight> dominant_below(const Weight& lam);

/// Distinct images of lam under coordinate permutations, sorted.
std::vector<Weight> weyl_orbit(const Weight& lam);

/// Weights of the r-th exterior power of C^n, one per r-subset.
std::vector<Weight> lambda_r_weights(int n, int r);

/// Dominant representative of the orbit of w.
Weight dominant_of(const Weight& w);

/// Dominant weights with canonical coordinate sum <= max_size.
std::vector<Weight> dominant_weights_up_to(int n, int max_size);

}  // namespace macd
