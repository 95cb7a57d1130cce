#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symorb/linalg.hpp"
#include "symorb/permutation.hpp"
#include "symorb/series.hpp"

namespace symorb {

inline constexpr std::size_t kDefaultMaxCells = 1'000'000;
inline constexpr int kMaxOraclePower = 6;

// Basis bookkeeping for the m-fold tensor power of a graded space: one
// generator per unit of dimension, listed by ascending degree.  Words are
// indexed big-endian: the first tensor factor varies slowest.
class TensorWordSpace {
 public:
  TensorWordSpace(const GradedDimension& phi, int m,
                  std::size_t max_cells = kDefaultMaxCells);

  int power() const { return m_; }
  int generator_count() const { return static_cast<int>(degrees_.size()); }
  int generator_degree(int g) const { return degrees_[static_cast<size_t>(g)]; }
  std::size_t word_count() const { return words_; }

  std::vector<int> word_at(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& word) const;
  int word_degree(std::size_t index) const;
  int max_word_degree() const;

 private:
  std::vector<int> degrees_;
  int m_ = 0;
  std::size_t words_ = 1;
};

// A signed permutation of basis words: source word i maps to
// sign[i] * word target[i].
struct SignedPermutationMatrix {
  std::size_t dimension = 0;
  std::vector<std::size_t> target;
  std::vector<int> sign;

  RatMat dense() const;
};

// Action of sigma on tensor words by moving factor k to slot sigma(k), with
// the sign given by the parity of odd-odd inversions the move creates.
SignedPermutationMatrix koszul_action(const TensorWordSpace& space,
                                      const Permutation& sigma);

// Graded dimension of the invariant subspace of the m-fold tensor power,
// computed by averaging all m! signed actions and reading the exact trace of
// the projector degree by degree.
GradedDimension invariant_dimension(const GradedDimension& phi, int m,
                                    std::size_t max_cells = kDefaultMaxCells);

// Dense averaging projector (1/m!) sum of all actions; test-sized inputs.
RatMat averaging_projector(const GradedDimension& phi, int m,
                           std::size_t max_cells = kDefaultMaxCells);

struct MacdonaldCheck {
  int m = 0;
  int degree = 0;
  long expected = 0;  // brute-force invariant count
  long got = 0;       // series coefficient
  bool pass = false;
};

struct MacdonaldReport {
  GradedDimension phi;
  std::vector<MacdonaldCheck> cases;
  bool pass = true;

  std::string str() const;
};

// Compares macdonald_series coefficients against invariant_dimension for all
// m <= max_power, degree by degree.
MacdonaldReport verify_macdonald(const GradedDimension& phi, int max_power,
                                 std::size_t max_cells = kDefaultMaxCells);

}  // namespace symorb
