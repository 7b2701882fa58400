#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "permutiple/error.hpp"

namespace permutiple {

// A permutation on {0,...,k}, stored as an image table.
//
// Vector action convention (load-bearing, do not flip):
//
//     act_on_vector(p, x)[j] == x[p(j)]
//
// so act_on_vector(a, act_on_vector(b, x)) == act_on_vector(compose(b, a), x)
// and conjugate(inverse(p), t) acts as the matrix product P_{p^-1} P_t P_p.
class Permutation {
 public:
  Permutation() = default;

  // The identity on {0,...,k}.
  static Permutation identity(int k);
  // The (k+1)-cycle j -> j+1 (mod k+1).
  static Permutation cycle_shift(int k);
  // The reversal j -> k-j.
  static Permutation reversal(int k);
  // Validates that images is a bijection on {0,...,images.size()-1}.
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int max_index() const { return size() - 1; }
  int operator()(int j) const { return images_[static_cast<size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image tables; used for all canonical orderings.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct trusted {};
  Permutation(std::vector<int> images, trusted) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// (a o b)(j) = a(b(j)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
// p o t o p^-1.
Permutation conjugate(const Permutation& p, const Permutation& t);
// p composed with itself e times; negative e uses the inverse.
Permutation power(const Permutation& p, long long e);

template <typename T>
std::vector<T> act_on_vector(const Permutation& p, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != p.size())
    throw Error(Errc::LengthMismatch, "act_on_vector: length mismatch");
  std::vector<T> y(x.size());
  for (int j = 0; j < p.size(); ++j) y[static_cast<size_t>(j)] = x[static_cast<size_t>(p(j))];
  return y;
}

// Cycle notation: "(0,3,2,4,1)", "(1,2)(0,4)", or "e" for the identity.
// Elements must lie in {0,...,k} and may not repeat across cycles.
Permutation parse_cycles(std::string_view text, int k);

// Canonical form: each cycle starts at its smallest element, cycles are
// ordered by smallest element, fixed points are omitted, identity is "e".
std::string format_cycles(const Permutation& p);

// Two-line table: indices on the first line, images on the second.
std::string format_image_table(const Permutation& p);

// True when p consists of a single cycle covering all of {0,...,k}.
bool is_full_cycle(const Permutation& p);

// All pi with pi o cycle_shift o pi^-1 == gamma. Nonempty only when gamma is
// a full (k+1)-cycle, in which case there are exactly k+1 solutions, one per
// choice of pi(0), returned in increasing pi(0) order.
std::vector<Permutation> solve_conjugation_to_shift(const Permutation& gamma);

}  // namespace permutiple
