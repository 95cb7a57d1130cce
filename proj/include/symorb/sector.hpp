#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symorb/model.hpp"
#include "symorb/permutation.hpp"

namespace symorb {

// Default bound on the number of tensor-word cells a ring computation may
// allocate (the identity sector needs rank^n); SYMORB_MAX_CELLS raises it.
inline constexpr std::size_t kDefaultRingCells = 1024;

// Tensor words over the model basis: k factors, big-endian indexing (factor 0
// varies slowest).
std::size_t checked_word_count(const CohomologyModel& model, int factors,
                               std::size_t max_cells);
std::vector<int> word_letters(const CohomologyModel& model, int factors,
                              std::size_t index);
std::size_t word_index(const CohomologyModel& model, const std::vector<int>& letters);
int word_degree(const CohomologyModel& model, int factors, std::size_t index);
std::string word_name(const CohomologyModel& model, int factors, std::size_t index);

// Cup product in the k-factor word algebra, with the Koszul sign
// (-1)^{sum over j<i of |v_j||u_i|} on each word pair.
RatVec word_cup(const CohomologyModel& model, int factors, const RatVec& u,
                const RatVec& v);

// Pairing matrix of the word algebra: entry (u,v) is the coefficient of the
// all-top word in word_cup(e_u, e_v).
RatMat word_gram(const CohomologyModel& model, int factors);

// Common degree of the nonzero coordinates; nullopt for the zero vector,
// throws when the vector is not homogeneous.
std::optional<int> homogeneous_degree(const CohomologyModel& model, int factors,
                                      const RatVec& v);

// One twisted-sector class: a tensor word vector whose factors are indexed by
// the orbits of the label, in increasing minimal-element order.
struct SectorVector {
  Permutation label;
  OrbitStructure orbits;
  RatVec v;
};

SectorVector sector_zero(const CohomologyModel& model, const Permutation& label,
                         std::size_t max_cells = kDefaultRingCells);
SectorVector sector_unit(const CohomologyModel& model, const Permutation& label,
                         std::size_t max_cells = kDefaultRingCells);
SectorVector sector_basis_vector(const CohomologyModel& model,
                                 const Permutation& label, std::size_t word,
                                 std::size_t max_cells = kDefaultRingCells);
std::size_t sector_dimension(const CohomologyModel& model, const Permutation& label,
                             std::size_t max_cells = kDefaultRingCells);

// Cohomological degree of the class; nullopt when zero.
std::optional<int> sector_degree(const CohomologyModel& model, const SectorVector& sv);
// Degree of the fixed locus minus the cohomological degree.
std::optional<int> sector_homological_degree(const CohomologyModel& model,
                                             const SectorVector& sv);

// Diagonal pullback along orbit merging: cup-multiplies, with Koszul reorder
// signs, the components of the fine orbits merged into each coarse orbit.
RatMat restrict_matrix(const CohomologyModel& model, const OrbitStructure& fine,
                       const OrbitStructure& coarse,
                       std::size_t max_cells = kDefaultRingCells);
RatVec restrict_to(const CohomologyModel& model, const SectorVector& sv,
                   const OrbitStructure& target,
                   std::size_t max_cells = kDefaultRingCells);

// Pairing-adjoint of restriction in the opposite direction:
// <pushforward(v), w>_fine = <v, restrict(w)>_coarse for all w.
RatMat pushforward_matrix(const CohomologyModel& model, const OrbitStructure& coarse,
                          const OrbitStructure& fine,
                          std::size_t max_cells = kDefaultRingCells);
SectorVector pushforward_to(const CohomologyModel& model, const RatVec& v,
                            const OrbitStructure& source, const Permutation& target,
                            std::size_t max_cells = kDefaultRingCells);

// Correction class of a sector pair over the joint orbit structure: the
// euler class to the power m_o in the factor of each joint orbit o.
RatVec excess_class(const Permutation& tau, const Permutation& sigma,
                    const CohomologyModel& model,
                    std::size_t max_cells = kDefaultRingCells);

// restrict both factors to the joint orbits, cup with the excess class, push
// forward into the product sector.
SectorVector vip_product(const SectorVector& a, const SectorVector& b,
                         const CohomologyModel& model,
                         std::size_t max_cells = kDefaultRingCells);

// Independent route: push both factors all the way into the untwisted word
// algebra, cup there, then solve exactly for the preimage under the product
// sector's pushforward (which is injective; failure to lift is a hard error).
// Matches vip_product entrywise on even-dimensional models.  On odd-dimensional
// models the canonical factor order orients each sector on its own and the two
// routes differ by an orientation sign, constant per sector pair and parity of
// deg(a); that route is then not equivariant, so it has no invariant table.
SectorVector cs_product(const SectorVector& a, const SectorVector& b,
                        const CohomologyModel& model,
                        std::size_t max_cells = kDefaultRingCells);

// Symmetric-group action: the label is conjugated, orbit factors are carried
// along the relabeling, Koszul reorder signs apply.
SectorVector act(const Permutation& h, const SectorVector& sv,
                 const CohomologyModel& model,
                 std::size_t max_cells = kDefaultRingCells);

// act on a single basis word, returning the target word and its sign.
struct SignedWord {
  Permutation label;
  std::size_t word = 0;
  int sign = 1;
};
SignedWord act_basis(const Permutation& h, const Permutation& label,
                     std::size_t word, const CohomologyModel& model,
                     std::size_t max_cells = kDefaultRingCells);

// Finite sum of sector classes, keyed by label.
struct InertiaElement {
  std::map<Permutation, SectorVector> sectors;

  void add(const SectorVector& sv);
  void add_scaled(const SectorVector& sv, const Rat& c);
  void scale(const Rat& c);
  bool is_zero() const;
};

InertiaElement sn_project(const InertiaElement& e, const CohomologyModel& model,
                          std::size_t max_cells = kDefaultRingCells);

// Signed orbit sums of basis words under the full group action; elements are
// listed by their lexicographically least (label, word) root, coefficients
// are +-1 with +1 at the root.  Orbits whose signs conflict average to zero
// and are omitted.
struct InvariantBasisElement {
  InertiaElement element;
  Permutation root_label;
  std::size_t root_word = 0;
  int degree = 0;             // cohomological, uniform across components
  int homological_degree = 0; // fixed-locus dimension minus degree
};

std::vector<InvariantBasisElement> invariant_basis(
    const CohomologyModel& model, int n, std::size_t max_cells = kDefaultRingCells);

enum class ProductKind { Vip, Cs };

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

// All products of basis words of two sectors, as sparse columns over the
// words of the product sector.
struct SectorPairTable {
  Permutation tau, sigma, product;
  std::vector<std::vector<SparseVec>> entry;  // [word_a][word_b]
};

SectorPairTable sector_pair_table(const CohomologyModel& model,
                                  const Permutation& tau, const Permutation& sigma,
                                  ProductKind kind,
                                  std::size_t max_cells = kDefaultRingCells);

struct TableBasisInfo {
  std::string label;
  std::string cycle_type;
  std::string word;
  int degree = 0;
  int homological_degree = 0;
};

struct MultiplicationTable {
  std::string model_label;
  int n = 0;
  ProductKind kind = ProductKind::Vip;
  std::vector<TableBasisInfo> basis;
  // entries[i][j] = coefficients of basis elements in the product i*j
  std::vector<std::vector<SparseVec>> entries;
  bool integral = true;

  std::string str() const;
  nlohmann::json to_json() const;
};

MultiplicationTable multiplication_table(const CohomologyModel& model, int n,
                                         ProductKind kind,
                                         std::size_t max_cells = kDefaultRingCells);

}  // namespace symorb
