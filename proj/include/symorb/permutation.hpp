#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symorb/scalars.hpp"

namespace symorb {

// Permutation of {0,...,n-1}, stored as the image word.  Serialized forms are
// 1-based ("2,1,3") to match the usual cycle-notation conventions.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> zero_based);
  static Permutation from_one_based(const std::vector<int>& images);
  static Permutation parse(const std::string& text);
  static Permutation transposition(int n, int a, int b);
  // cycle(5, {0,1,2}) sends 0->1->2->0 and fixes 3,4
  static Permutation cycle(int n, std::span<const int> points);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// Applies p first: compose(p,q)(i) = q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// conjugate(p,k) = k^-1 p k under the compose convention above; it relabels
// the points of p by k, so orbits map to k(orbits).
Permutation conjugate(const Permutation& p, const Permutation& k);

// Lexicographic by image word; identity first.
std::vector<Permutation> all_permutations(int n);

// Multiset of cycle lengths, stored as length -> count.
class CycleType {
 public:
  CycleType() = default;
  static CycleType of(const Permutation& p);
  static CycleType from_parts(std::vector<int> parts);

  const std::map<int, int, std::greater<int>>& counts() const { return counts_; }
  int total() const { return n_; }
  int count(int length) const;
  int cycle_count() const;
  std::string str() const;  // "2^1 1^1", lengths descending

  auto operator<=>(const CycleType&) const = default;

 private:
  std::map<int, int, std::greater<int>> counts_;
  int n_ = 0;
};

// All cycle types of S_n, parts non-increasing, listed in decreasing
// lexicographic order of the part sequence: [n] first, [1^n] last.
std::vector<CycleType> partitions(int n);

Int centralizer_order(const CycleType& ct);
Int conjugacy_class_size(const CycleType& ct);

// Canonical class representative: cycles laid out left to right in the order
// partitions() lists the parts, e.g. 3^1 1^1 -> images 2,3,1,4.
Permutation representative(const CycleType& ct);

// Generators of the centralizer of representative(ct): one rotation per
// cycle block plus swaps of adjacent equal-length blocks.
std::vector<Permutation> centralizer_generators(const CycleType& ct);

// Partition of {0,...,n-1} into orbits of a permutation list.  Orbits are
// indexed by increasing minimal element.
struct OrbitStructure {
  std::vector<int> orbit_of;
  std::vector<int> orbit_sizes;

  int degree() const { return static_cast<int>(orbit_of.size()); }
  int orbit_count() const { return static_cast<int>(orbit_sizes.size()); }
  std::vector<std::vector<int>> orbits() const;
  // True when every orbit of `finer` lies inside a single orbit of *this.
  bool coarsens(const OrbitStructure& finer) const;

  bool operator==(const OrbitStructure&) const = default;
};

OrbitStructure orbit_structure(std::span<const Permutation> generators, int n);
OrbitStructure orbit_structure(const Permutation& p);
OrbitStructure orbit_structure(const Permutation& p, const Permutation& q);
OrbitStructure singleton_orbits(int n);

// Degree of the excess normal bundle class attached to a sector pair over a
// d-dimensional base: d * (n + orbits<p,q> - orbits<p> - orbits<q>).
int excess_euler_degree(const Permutation& p, const Permutation& q, int d);

// Age-style degree shift of the pair; requires d even, result is
// (d/2) * (n + 2*orbits<p,q> - orbits<p> - orbits<q> - orbits<pq>).
int chen_ruan_degree(const Permutation& p, const Permutation& q, int d);

// Per-orbit multiplicities of the excess class, one entry per orbit of
// <p,q> in min-element order; entry = |orbit| + 1 - (#p-orbits inside)
// - (#q-orbits inside).  Sums to n + orbits<p,q> - orbits<p> - orbits<q>.
std::vector<int> excess_multiplicities(const Permutation& p, const Permutation& q);

}  // namespace symorb
