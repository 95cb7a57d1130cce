#include "symorb/koszul.hpp"

#include <stdexcept>

namespace symorb {

TensorWordSpace::TensorWordSpace(const GradedDimension& phi, int m,
                                 std::size_t max_cells) {
  if (m < 0) throw std::invalid_argument("negative tensor power");
  if (m > kMaxOraclePower)
    throw std::invalid_argument("tensor power exceeds the oracle bound of " +
                                std::to_string(kMaxOraclePower));
  m_ = m;
  for (auto& [u, b] : phi.table())
    for (long rep = 0; rep < b; ++rep) degrees_.push_back(u);
  const std::size_t d = degrees_.size();
  words_ = 1;
  for (int k = 0; k < m; ++k) {
    if (d != 0 && words_ > max_cells / d)
      throw std::invalid_argument(
          "tensor word space exceeds the cell bound of " + std::to_string(max_cells));
    words_ *= d;
  }
}

std::vector<int> TensorWordSpace::word_at(std::size_t index) const {
  std::vector<int> word(static_cast<size_t>(m_));
  const std::size_t d = degrees_.size();
  for (int k = m_; k-- > 0;) {
    word[static_cast<size_t>(k)] = static_cast<int>(index % d);
    index /= d;
  }
  return word;
}

std::size_t TensorWordSpace::index_of(const std::vector<int>& word) const {
  const std::size_t d = degrees_.size();
  std::size_t idx = 0;
  for (int g : word) idx = idx * d + static_cast<std::size_t>(g);
  return idx;
}

int TensorWordSpace::word_degree(std::size_t index) const {
  const std::size_t d = degrees_.size();
  int total = 0;
  for (int k = 0; k < m_; ++k) {
    total += degrees_[index % d];
    index /= d;
  }
  return total;
}

int TensorWordSpace::max_word_degree() const {
  if (degrees_.empty()) return 0;
  int top = 0;
  for (int u : degrees_) top = std::max(top, u);
  return top * m_;
}

RatMat SignedPermutationMatrix::dense() const {
  RatMat m = RatMat::Zero(static_cast<Eigen::Index>(dimension),
                          static_cast<Eigen::Index>(dimension));
  for (std::size_t src = 0; src < dimension; ++src)
    m(static_cast<Eigen::Index>(target[src]), static_cast<Eigen::Index>(src)) =
        Rat(sign[src]);
  return m;
}

SignedPermutationMatrix koszul_action(const TensorWordSpace& space,
                                      const Permutation& sigma) {
  if (sigma.degree() != space.power())
    throw std::invalid_argument("permutation degree does not match tensor power");
  const std::size_t n = space.word_count();
  SignedPermutationMatrix out;
  out.dimension = n;
  out.target.resize(n);
  out.sign.resize(n);
  const int m = space.power();
  std::vector<int> moved(static_cast<size_t>(m));
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::vector<int> word = space.word_at(idx);
    // factor k moves to slot sigma(k)
    for (int k = 0; k < m; ++k)
      moved[static_cast<size_t>(sigma(k))] = word[static_cast<size_t>(k)];
    // parity of odd-odd pairs whose order flips
    int inversions = 0;
    for (int a = 0; a < m; ++a) {
      if (space.generator_degree(word[static_cast<size_t>(a)]) % 2 == 0) continue;
      for (int b = a + 1; b < m; ++b) {
        if (space.generator_degree(word[static_cast<size_t>(b)]) % 2 == 0) continue;
        if (sigma(a) > sigma(b)) ++inversions;
      }
    }
    out.target[idx] = space.index_of(moved);
    out.sign[idx] = (inversions % 2 == 0) ? 1 : -1;
  }
  return out;
}

GradedDimension invariant_dimension(const GradedDimension& phi, int m,
                                    std::size_t max_cells) {
  const TensorWordSpace space(phi, m, max_cells);
  const Int order = factorial(static_cast<unsigned>(m));

  // signed diagonal count per degree, summed over the whole group
  std::map<int, Int> trace;
  for (const Permutation& sigma : all_permutations(m)) {
    const SignedPermutationMatrix action = koszul_action(space, sigma);
    for (std::size_t idx = 0; idx < action.dimension; ++idx)
      if (action.target[idx] == idx)
        trace[space.word_degree(idx)] += action.sign[idx];
  }

  GradedDimension out;
  for (auto& [degree, sum] : trace) {
    if (sum == 0) continue;
    if (sum % order != 0 || sum < 0)
      throw std::logic_error("projector trace is not a nonnegative integer");
    const Int dim = sum / order;
    if (!fits_int64(dim)) throw std::overflow_error("invariant dimension overflows");
    out.set(degree, static_cast<long>(to_int64(dim)));
  }
  return out;
}

RatMat averaging_projector(const GradedDimension& phi, int m,
                           std::size_t max_cells) {
  const TensorWordSpace space(phi, m, max_cells);
  const std::size_t n = space.word_count();
  RatMat acc = RatMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const Permutation& sigma : all_permutations(m)) {
    const SignedPermutationMatrix action = koszul_action(space, sigma);
    for (std::size_t src = 0; src < n; ++src)
      acc(static_cast<Eigen::Index>(action.target[src]),
          static_cast<Eigen::Index>(src)) += Rat(action.sign[src]);
  }
  const Rat scale = make_rat(Int(1), factorial(static_cast<unsigned>(m)));
  for (Eigen::Index c = 0; c < acc.cols(); ++c)
    for (Eigen::Index r = 0; r < acc.rows(); ++r) acc(r, c) *= scale;
  return acc;
}

std::string MacdonaldReport::str() const {
  std::string out = "phi=" + phi.str() + "\n";
  for (const MacdonaldCheck& c : cases) {
    out += "  m=" + std::to_string(c.m) + " degree=" + std::to_string(c.degree) +
           " invariants=" + std::to_string(c.expected) +
           " series=" + std::to_string(c.got) + " " + (c.pass ? "ok" : "MISMATCH") +
           "\n";
  }
  out += pass ? "pass" : "FAIL";
  return out;
}

MacdonaldReport verify_macdonald(const GradedDimension& phi, int max_power,
                                 std::size_t max_cells) {
  if (max_power < 0) throw std::invalid_argument("negative power bound");
  MacdonaldReport report;
  report.phi = phi;
  const TruncatedSeries series = macdonald_series(phi, max_power);
  for (int m = 0; m <= max_power; ++m) {
    const GradedDimension brute = invariant_dimension(phi, m, max_cells);
    const YPoly& predicted = series.coeff(m);
    int top = std::max(brute.max_degree(), predicted.degree());
    for (int u = 0; u <= top; ++u) {
      MacdonaldCheck check;
      check.m = m;
      check.degree = u;
      check.expected = brute.betti(u);
      const Int& c = predicted.coeff(u);
      check.got = fits_int64(c) ? static_cast<long>(to_int64(c)) : -1;
      check.pass = (Int(check.expected) == c);
      report.pass = report.pass && check.pass;
      report.cases.push_back(check);
    }
  }
  return report;
}

}  // namespace symorb
