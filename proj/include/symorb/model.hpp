#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "symorb/linalg.hpp"

namespace symorb {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-dimensional graded-commutative ring with a perfect pairing against
// the top degree: the coefficient data every product construction consumes.
// The pairing matrix is derived, entry (a,b) being the top-degree coefficient
// of cup(a,b); it is validated to be invertible but is not symmetric when odd
// degrees are present.
class CohomologyModel {
 public:
  enum class Kind { Sphere, Torus, Custom };

  static CohomologyModel sphere(int dimension);
  static CohomologyModel torus(int dimension);
  static CohomologyModel from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }
  int unit_index() const { return unit_; }
  int top_index() const { return top_; }
  int index_of(const std::string& name) const;

  const RatVec& cup(int a, int b) const {
    return cup_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  RatVec cup(const RatVec& u, const RatVec& v) const;
  const RatMat& pairing() const { return pairing_; }
  const RatVec& euler_class() const { return euler_; }

 private:
  CohomologyModel() = default;
  void finalize();  // derives pairing/unit/top and validates every axiom

  Kind kind_ = Kind::Custom;
  std::string label_;
  int dimension_ = 0;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<std::vector<RatVec>> cup_;
  RatMat pairing_;
  RatVec euler_;
  int unit_ = -1;
  int top_ = -1;
};

}  // namespace symorb
