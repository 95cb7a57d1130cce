#include "symorb/sector.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symorb {

namespace {

std::size_t checked_pow(int rank, int factors, std::size_t max_cells,
                        const char* what) {
  std::size_t count = 1;
  for (int k = 0; k < factors; ++k) {
    if (rank > 0 && count > max_cells / static_cast<std::size_t>(rank))
      throw std::invalid_argument(std::string(what) +
                                  " exceeds the cell bound of " +
                                  std::to_string(max_cells) +
                                  " (raise SYMORB_MAX_CELLS to override)");
    count *= static_cast<std::size_t>(rank);
  }
  return count;
}

// scale * (factors[0] tensor ... tensor factors[k-1]) added into out
void add_tensor_rec(const std::vector<const RatVec*>& factors, int rank, int pos,
                    std::size_t idx, const Rat& coeff, RatVec& out) {
  if (pos == static_cast<int>(factors.size())) {
    out[static_cast<Eigen::Index>(idx)] += coeff;
    return;
  }
  const RatVec& f = *factors[static_cast<size_t>(pos)];
  for (int c = 0; c < rank; ++c) {
    if (f[c] == 0) continue;
    add_tensor_rec(factors, rank, pos + 1,
                   idx * static_cast<std::size_t>(rank) + static_cast<std::size_t>(c),
                   coeff * f[c], out);
  }
}

void add_tensor(const std::vector<const RatVec*>& factors, int rank,
                const Rat& scale, RatVec& out) {
  if (scale == 0) return;
  add_tensor_rec(factors, rank, 0, 0, scale, out);
}

int koszul_pair_sign(const CohomologyModel& model, const std::vector<int>& u,
                     const std::vector<int>& v) {
  int inversions = 0;
  const int k = static_cast<int>(u.size());
  for (int i = 0; i < k; ++i) {
    if (model.degree(u[static_cast<size_t>(i)]) % 2 == 0) continue;
    for (int j = 0; j < i; ++j)
      if (model.degree(v[static_cast<size_t>(j)]) % 2 == 1) ++inversions;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// cup of a general coefficient vector with one basis element
RatVec cup_with_basis(const CohomologyModel& model, const RatVec& u, int b) {
  RatVec out = RatVec::Zero(model.rank());
  for (int a = 0; a < model.rank(); ++a) {
    if (u[a] == 0) continue;
    const RatVec& prod = model.cup(a, b);
    for (int c = 0; c < model.rank(); ++c)
      if (prod[c] != 0) out[c] += u[a] * prod[c];
  }
  return out;
}

std::vector<int> orbit_minima(const OrbitStructure& os) {
  std::vector<int> mins(static_cast<size_t>(os.orbit_count()), -1);
  for (int i = os.degree(); i-- > 0;)
    mins[static_cast<size_t>(os.orbit_of[static_cast<size_t>(i)])] = i;
  return mins;
}

RatVec apply_matrix(const RatMat& m, const RatVec& v) {
  RatVec out = RatVec::Zero(m.rows());
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[r] += m(r, c) * v[c];
  }
  return out;
}

// Exact solver for M z = rhs with M injective; prefers the direct path when
// every row of M has at most one nonzero entry.
class ExactLift {
 public:
  explicit ExactLift(RatMat m) : m_(std::move(m)) {
    const Eigen::Index rows = m_.rows(), cols = m_.cols();
    row_entry_.assign(static_cast<size_t>(rows), {-1, Rat(0)});
    std::vector<char> covered(static_cast<size_t>(cols), 0);
    row_mode_ = true;
    for (Eigen::Index r = 0; r < rows && row_mode_; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        if (m_(r, c) == 0) continue;
        if (row_entry_[static_cast<size_t>(r)].first >= 0) {
          row_mode_ = false;
          break;
        }
        row_entry_[static_cast<size_t>(r)] = {c, m_(r, c)};
        covered[static_cast<size_t>(c)] = 1;
      }
    }
    if (row_mode_)
      for (Eigen::Index c = 0; c < cols; ++c)
        if (!covered[static_cast<size_t>(c)]) row_mode_ = false;
    if (!row_mode_) {
      lu_.compute(m_);
      if (lu_.rank() < cols)
        throw std::logic_error("sector pushforward is not injective");
    }
  }

  RatVec solve(const RatVec& rhs) const {
    const Eigen::Index cols = m_.cols();
    if (row_mode_) {
      RatVec z = RatVec::Zero(cols);
      std::vector<char> seen(static_cast<size_t>(cols), 0);
      for (Eigen::Index r = 0; r < m_.rows(); ++r) {
        const auto& [c, val] = row_entry_[static_cast<size_t>(r)];
        if (c < 0) {
          if (rhs[r] != 0)
            throw std::logic_error(
                "product escaped the image of the sector pushforward");
          continue;
        }
        const Rat want = rhs[r] / val;
        if (seen[static_cast<size_t>(c)]) {
          if (z[c] != want)
            throw std::logic_error(
                "product escaped the image of the sector pushforward");
        } else {
          z[c] = want;
          seen[static_cast<size_t>(c)] = 1;
        }
      }
      return z;
    }
    RatVec z = lu_.solve(rhs);
    RatVec residual = m_ * z - rhs;
    for (Eigen::Index i = 0; i < residual.size(); ++i)
      if (residual[i] != 0)
        throw std::logic_error(
            "product escaped the image of the sector pushforward");
    return z;
  }

 private:
  RatMat m_;
  bool row_mode_ = false;
  std::vector<std::pair<Eigen::Index, Rat>> row_entry_;
  Eigen::FullPivLU<RatMat> lu_;
};

}  // namespace

std::size_t checked_word_count(const CohomologyModel& model, int factors,
                               std::size_t max_cells) {
  if (factors < 0) throw std::invalid_argument("negative factor count");
  return checked_pow(model.rank(), factors, max_cells, "tensor word space");
}

std::vector<int> word_letters(const CohomologyModel& model, int factors,
                              std::size_t index) {
  std::vector<int> letters(static_cast<size_t>(factors));
  const std::size_t r = static_cast<std::size_t>(model.rank());
  for (int k = factors; k-- > 0;) {
    letters[static_cast<size_t>(k)] = static_cast<int>(index % r);
    index /= r;
  }
  return letters;
}

std::size_t word_index(const CohomologyModel& model, const std::vector<int>& letters) {
  std::size_t idx = 0;
  for (int g : letters)
    idx = idx * static_cast<std::size_t>(model.rank()) + static_cast<std::size_t>(g);
  return idx;
}

int word_degree(const CohomologyModel& model, int factors, std::size_t index) {
  int total = 0;
  const std::size_t r = static_cast<std::size_t>(model.rank());
  for (int k = 0; k < factors; ++k) {
    total += model.degree(static_cast<int>(index % r));
    index /= r;
  }
  return total;
}

std::string word_name(const CohomologyModel& model, int factors, std::size_t index) {
  if (factors == 0) return "1";
  const std::vector<int> letters = word_letters(model, factors, index);
  std::string out;
  for (int g : letters) {
    if (!out.empty()) out += "&";
    out += model.name(g);
  }
  return out;
}

RatVec word_cup(const CohomologyModel& model, int factors, const RatVec& u,
                const RatVec& v) {
  const std::size_t count = static_cast<std::size_t>(u.size());
  RatVec out = RatVec::Zero(static_cast<Eigen::Index>(count));
  std::vector<const RatVec*> cups(static_cast<size_t>(factors));
  for (std::size_t wa = 0; wa < count; ++wa) {
    if (u[static_cast<Eigen::Index>(wa)] == 0) continue;
    const std::vector<int> la = word_letters(model, factors, wa);
    for (std::size_t wb = 0; wb < count; ++wb) {
      if (v[static_cast<Eigen::Index>(wb)] == 0) continue;
      const std::vector<int> lb = word_letters(model, factors, wb);
      bool dead = false;
      for (int i = 0; i < factors && !dead; ++i) {
        cups[static_cast<size_t>(i)] =
            &model.cup(la[static_cast<size_t>(i)], lb[static_cast<size_t>(i)]);
        dead = is_zero(*cups[static_cast<size_t>(i)]);
      }
      if (dead) continue;
      const int sign = koszul_pair_sign(model, la, lb);
      const Rat scale = u[static_cast<Eigen::Index>(wa)] *
                        v[static_cast<Eigen::Index>(wb)] * Rat(sign);
      add_tensor(cups, model.rank(), scale, out);
    }
  }
  return out;
}

RatMat word_gram(const CohomologyModel& model, int factors) {
  const std::size_t count =
      checked_pow(model.rank(), factors, kDefaultRingCells, "word pairing");
  RatMat g = RatMat::Zero(static_cast<Eigen::Index>(count),
                          static_cast<Eigen::Index>(count));
  for (std::size_t wa = 0; wa < count; ++wa) {
    const std::vector<int> la = word_letters(model, factors, wa);
    for (std::size_t wb = 0; wb < count; ++wb) {
      const std::vector<int> lb = word_letters(model, factors, wb);
      Rat value = 1;
      for (int i = 0; i < factors && value != 0; ++i)
        value *= model.pairing()(la[static_cast<size_t>(i)], lb[static_cast<size_t>(i)]);
      if (value == 0) continue;
      value *= Rat(koszul_pair_sign(model, la, lb));
      g(static_cast<Eigen::Index>(wa), static_cast<Eigen::Index>(wb)) = value;
    }
  }
  return g;
}

std::optional<int> homogeneous_degree(const CohomologyModel& model, int factors,
                                      const RatVec& v) {
  std::optional<int> degree;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const int d = word_degree(model, factors, static_cast<std::size_t>(i));
    if (degree && *degree != d)
      throw std::logic_error("vector is not homogeneous");
    degree = d;
  }
  return degree;
}

SectorVector sector_zero(const CohomologyModel& model, const Permutation& label,
                         std::size_t max_cells) {
  SectorVector sv;
  sv.label = label;
  sv.orbits = orbit_structure(label);
  const std::size_t dim =
      checked_pow(model.rank(), sv.orbits.orbit_count(), max_cells, "sector");
  sv.v = RatVec::Zero(static_cast<Eigen::Index>(dim));
  return sv;
}

SectorVector sector_unit(const CohomologyModel& model, const Permutation& label,
                         std::size_t max_cells) {
  SectorVector sv = sector_zero(model, label, max_cells);
  std::vector<int> letters(static_cast<size_t>(sv.orbits.orbit_count()),
                           model.unit_index());
  sv.v[static_cast<Eigen::Index>(word_index(model, letters))] = 1;
  return sv;
}

SectorVector sector_basis_vector(const CohomologyModel& model,
                                 const Permutation& label, std::size_t word,
                                 std::size_t max_cells) {
  SectorVector sv = sector_zero(model, label, max_cells);
  if (word >= static_cast<std::size_t>(sv.v.size()))
    throw std::invalid_argument("word index out of range");
  sv.v[static_cast<Eigen::Index>(word)] = 1;
  return sv;
}

std::size_t sector_dimension(const CohomologyModel& model, const Permutation& label,
                             std::size_t max_cells) {
  return checked_pow(model.rank(), orbit_structure(label).orbit_count(), max_cells,
                     "sector");
}

std::optional<int> sector_degree(const CohomologyModel& model,
                                 const SectorVector& sv) {
  return homogeneous_degree(model, sv.orbits.orbit_count(), sv.v);
}

std::optional<int> sector_homological_degree(const CohomologyModel& model,
                                             const SectorVector& sv) {
  const auto deg = sector_degree(model, sv);
  if (!deg) return std::nullopt;
  return model.dimension() * sv.orbits.orbit_count() - *deg;
}

RatMat restrict_matrix(const CohomologyModel& model, const OrbitStructure& fine,
                       const OrbitStructure& coarse, std::size_t max_cells) {
  if (fine.degree() != coarse.degree())
    throw std::invalid_argument("orbit structures have different degrees");
  if (!coarse.coarsens(fine))
    throw std::invalid_argument("restriction target does not coarsen the source");

  const int p = fine.orbit_count();
  const int q = coarse.orbit_count();
  const std::vector<int> fine_min = orbit_minima(fine);

  std::vector<std::vector<int>> members(static_cast<size_t>(q));
  for (int r = 0; r < p; ++r)
    members[static_cast<size_t>(
                coarse.orbit_of[static_cast<size_t>(fine_min[static_cast<size_t>(r)])])]
        .push_back(r);
  std::vector<int> pos(static_cast<size_t>(p));
  {
    int next = 0;
    for (const auto& group : members)
      for (int r : group) pos[static_cast<size_t>(r)] = next++;
  }

  const std::size_t fwords = checked_pow(model.rank(), p, max_cells, "restriction");
  const std::size_t cwords = checked_pow(model.rank(), q, max_cells, "restriction");
  RatMat out = RatMat::Zero(static_cast<Eigen::Index>(cwords),
                            static_cast<Eigen::Index>(fwords));

  std::vector<RatVec> group_vec(static_cast<size_t>(q));
  std::vector<const RatVec*> factors(static_cast<size_t>(q));
  for (std::size_t w = 0; w < fwords; ++w) {
    const std::vector<int> letters = word_letters(model, p, w);
    int inversions = 0;
    for (int r = 0; r < p; ++r) {
      if (model.degree(letters[static_cast<size_t>(r)]) % 2 == 0) continue;
      for (int s = r + 1; s < p; ++s)
        if (model.degree(letters[static_cast<size_t>(s)]) % 2 == 1 &&
            pos[static_cast<size_t>(r)] > pos[static_cast<size_t>(s)])
          ++inversions;
    }
    bool dead = false;
    for (int o = 0; o < q && !dead; ++o) {
      const auto& group = members[static_cast<size_t>(o)];
      RatVec cur = RatVec::Unit(model.rank(), letters[static_cast<size_t>(group[0])]);
      for (size_t gi = 1; gi < group.size(); ++gi)
        cur = cup_with_basis(model, cur, letters[static_cast<size_t>(group[gi])]);
      dead = is_zero(cur);
      group_vec[static_cast<size_t>(o)] = std::move(cur);
      factors[static_cast<size_t>(o)] = &group_vec[static_cast<size_t>(o)];
    }
    if (dead) continue;
    RatVec column = RatVec::Zero(static_cast<Eigen::Index>(cwords));
    add_tensor(factors, model.rank(), Rat(inversions % 2 == 0 ? 1 : -1), column);
    out.col(static_cast<Eigen::Index>(w)) = column;
  }
  return out;
}

RatVec restrict_to(const CohomologyModel& model, const SectorVector& sv,
                   const OrbitStructure& target, std::size_t max_cells) {
  return apply_matrix(restrict_matrix(model, sv.orbits, target, max_cells), sv.v);
}

namespace {

// one nonzero per row and per column
struct MonomialGram {
  bool ok = false;
  std::vector<Eigen::Index> col_of_row;
  std::vector<Rat> val_of_row;
  std::vector<Eigen::Index> row_of_col;
};

MonomialGram detect_monomial(const RatMat& g) {
  MonomialGram m;
  const Eigen::Index n = g.rows();
  m.col_of_row.assign(static_cast<size_t>(n), -1);
  m.val_of_row.assign(static_cast<size_t>(n), Rat(0));
  m.row_of_col.assign(static_cast<size_t>(n), -1);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      if (g(r, c) == 0) continue;
      if (m.col_of_row[static_cast<size_t>(r)] >= 0 ||
          m.row_of_col[static_cast<size_t>(c)] >= 0)
        return m;
      m.col_of_row[static_cast<size_t>(r)] = c;
      m.val_of_row[static_cast<size_t>(r)] = g(r, c);
      m.row_of_col[static_cast<size_t>(c)] = r;
    }
  for (Eigen::Index r = 0; r < n; ++r)
    if (m.col_of_row[static_cast<size_t>(r)] < 0) return m;
  m.ok = true;
  return m;
}

}  // namespace

RatMat pushforward_matrix(const CohomologyModel& model, const OrbitStructure& coarse,
                          const OrbitStructure& fine, std::size_t max_cells) {
  const RatMat r = restrict_matrix(model, fine, coarse, max_cells);
  const Eigen::Index fwords = r.cols();
  const Eigen::Index cwords = r.rows();
  const RatMat gf = word_gram(model, fine.orbit_count());
  const RatMat gc = word_gram(model, coarse.orbit_count());

  const MonomialGram mf = detect_monomial(gf);
  const MonomialGram mc = detect_monomial(gc);
  if (mf.ok && mc.ok) {
    // Y = R^T Gc^T: column w of Y is Gc(w, v0) * R^T column v0
    RatMat y = RatMat::Zero(fwords, cwords);
    for (Eigen::Index w = 0; w < cwords; ++w) {
      const Eigen::Index v0 = mc.col_of_row[static_cast<size_t>(w)];
      const Rat& scale = mc.val_of_row[static_cast<size_t>(w)];
      for (Eigen::Index f = 0; f < fwords; ++f)
        if (r(v0, f) != 0) y(f, w) = scale * r(v0, f);
    }
    // Gf^T X = Y: column i of Gf has its nonzero at row j0 with value d,
    // hence X.row(j0) = Y.row(i) / d
    RatMat x = RatMat::Zero(fwords, cwords);
    for (Eigen::Index i = 0; i < fwords; ++i) {
      const Eigen::Index j0 = mf.row_of_col[static_cast<size_t>(i)];
      const Rat& d = mf.val_of_row[static_cast<size_t>(j0)];
      for (Eigen::Index w = 0; w < cwords; ++w)
        if (y(i, w) != 0) x(j0, w) = y(i, w) / d;
    }
    return x;
  }
  return solve_exact_matrix(gf.transpose(), r.transpose() * gc.transpose());
}

SectorVector pushforward_to(const CohomologyModel& model, const RatVec& v,
                            const OrbitStructure& source, const Permutation& target,
                            std::size_t max_cells) {
  SectorVector out;
  out.label = target;
  out.orbits = orbit_structure(target);
  out.v = apply_matrix(pushforward_matrix(model, source, out.orbits, max_cells), v);
  return out;
}

RatVec excess_class(const Permutation& tau, const Permutation& sigma,
                    const CohomologyModel& model, std::size_t max_cells) {
  if (tau.degree() != sigma.degree())
    throw std::invalid_argument("sector labels live in different symmetric groups");
  const OrbitStructure joint = orbit_structure(tau, sigma);
  const std::vector<int> mult = excess_multiplicities(tau, sigma);

  int top_power = 0;
  for (int m : mult) top_power = std::max(top_power, m);
  std::vector<RatVec> euler_pow(static_cast<size_t>(top_power) + 1);
  euler_pow[0] = RatVec::Unit(model.rank(), model.unit_index());
  for (int j = 1; j <= top_power; ++j)
    euler_pow[static_cast<size_t>(j)] =
        model.cup(euler_pow[static_cast<size_t>(j - 1)], model.euler_class());

  const std::size_t words =
      checked_pow(model.rank(), joint.orbit_count(), max_cells, "excess class");
  RatVec out = RatVec::Zero(static_cast<Eigen::Index>(words));
  std::vector<const RatVec*> factors(static_cast<size_t>(joint.orbit_count()));
  for (size_t o = 0; o < mult.size(); ++o)
    factors[o] = &euler_pow[static_cast<size_t>(mult[o])];
  add_tensor(factors, model.rank(), Rat(1), out);
  return out;
}

SectorVector vip_product(const SectorVector& a, const SectorVector& b,
                         const CohomologyModel& model, std::size_t max_cells) {
  if (a.label.degree() != b.label.degree())
    throw std::invalid_argument("sector labels live in different symmetric groups");
  const OrbitStructure joint = orbit_structure(a.label, b.label);
  const int jk = joint.orbit_count();
  const RatVec ra = restrict_to(model, a, joint, max_cells);
  const RatVec rb = restrict_to(model, b, joint, max_cells);
  const RatVec cupped = word_cup(model, jk, ra, rb);
  const RatVec with_excess =
      word_cup(model, jk, cupped, excess_class(a.label, b.label, model, max_cells));
  return pushforward_to(model, with_excess, joint, compose(a.label, b.label),
                        max_cells);
}

SectorVector cs_product(const SectorVector& a, const SectorVector& b,
                        const CohomologyModel& model, std::size_t max_cells) {
  if (a.label.degree() != b.label.degree())
    throw std::invalid_argument("sector labels live in different symmetric groups");
  const int n = a.label.degree();
  const OrbitStructure full = singleton_orbits(n);
  const RatVec pa =
      apply_matrix(pushforward_matrix(model, a.orbits, full, max_cells), a.v);
  const RatVec pb =
      apply_matrix(pushforward_matrix(model, b.orbits, full, max_cells), b.v);
  const RatVec cupped = word_cup(model, n, pa, pb);

  SectorVector out;
  out.label = compose(a.label, b.label);
  out.orbits = orbit_structure(out.label);
  const ExactLift lift(pushforward_matrix(model, out.orbits, full, max_cells));
  out.v = lift.solve(cupped);
  return out;
}

SignedWord act_basis(const Permutation& h, const Permutation& label,
                     std::size_t word, const CohomologyModel& model,
                     std::size_t max_cells) {
  const OrbitStructure src = orbit_structure(label);
  const Permutation target_label = conjugate(label, h);
  const OrbitStructure dst = orbit_structure(target_label);
  const int p = src.orbit_count();
  const std::vector<int> mins = orbit_minima(src);
  std::vector<int> to(static_cast<size_t>(p));
  for (int r = 0; r < p; ++r)
    to[static_cast<size_t>(r)] =
        dst.orbit_of[static_cast<size_t>(h(mins[static_cast<size_t>(r)]))];

  const std::vector<int> letters = word_letters(model, p, word);
  std::vector<int> moved(static_cast<size_t>(p));
  for (int r = 0; r < p; ++r)
    moved[static_cast<size_t>(to[static_cast<size_t>(r)])] =
        letters[static_cast<size_t>(r)];
  int inversions = 0;
  for (int r = 0; r < p; ++r) {
    if (model.degree(letters[static_cast<size_t>(r)]) % 2 == 0) continue;
    for (int s = r + 1; s < p; ++s)
      if (model.degree(letters[static_cast<size_t>(s)]) % 2 == 1 &&
          to[static_cast<size_t>(r)] > to[static_cast<size_t>(s)])
        ++inversions;
  }
  SignedWord out;
  out.label = target_label;
  out.word = word_index(model, moved);
  out.sign = (inversions % 2 == 0) ? 1 : -1;
  (void)max_cells;
  return out;
}

SectorVector act(const Permutation& h, const SectorVector& sv,
                 const CohomologyModel& model, std::size_t max_cells) {
  SectorVector out;
  out.label = conjugate(sv.label, h);
  out.orbits = orbit_structure(out.label);
  out.v = RatVec::Zero(sv.v.size());
  for (Eigen::Index idx = 0; idx < sv.v.size(); ++idx) {
    if (sv.v[idx] == 0) continue;
    const SignedWord sw =
        act_basis(h, sv.label, static_cast<std::size_t>(idx), model, max_cells);
    out.v[static_cast<Eigen::Index>(sw.word)] += Rat(sw.sign) * sv.v[idx];
  }
  return out;
}

void InertiaElement::add(const SectorVector& sv) { add_scaled(sv, Rat(1)); }

void InertiaElement::add_scaled(const SectorVector& sv, const Rat& c) {
  if (c == 0 || symorb::is_zero(sv.v)) return;
  auto it = sectors.find(sv.label);
  if (it == sectors.end()) {
    SectorVector copy = sv;
    for (Eigen::Index i = 0; i < copy.v.size(); ++i) copy.v[i] *= c;
    sectors.emplace(sv.label, std::move(copy));
    return;
  }
  if (it->second.v.size() != sv.v.size())
    throw std::logic_error("sector dimension mismatch in accumulation");
  for (Eigen::Index i = 0; i < sv.v.size(); ++i) it->second.v[i] += c * sv.v[i];
}

void InertiaElement::scale(const Rat& c) {
  for (auto& [label, sv] : sectors)
    for (Eigen::Index i = 0; i < sv.v.size(); ++i) sv.v[i] *= c;
}

bool InertiaElement::is_zero() const {
  for (const auto& [label, sv] : sectors)
    if (!symorb::is_zero(sv.v)) return false;
  return true;
}

namespace {

void prune_zero_sectors(InertiaElement& e) {
  for (auto it = e.sectors.begin(); it != e.sectors.end();) {
    if (is_zero(it->second.v))
      it = e.sectors.erase(it);
    else
      ++it;
  }
}

}  // namespace

InertiaElement sn_project(const InertiaElement& e, const CohomologyModel& model,
                          std::size_t max_cells) {
  InertiaElement out;
  if (e.sectors.empty()) return out;
  const int n = e.sectors.begin()->first.degree();
  const std::vector<Permutation> group = all_permutations(n);
  for (const Permutation& h : group)
    for (const auto& [label, sv] : e.sectors) out.add(act(h, sv, model, max_cells));
  out.scale(make_rat(Int(1), factorial(static_cast<unsigned>(n))));
  prune_zero_sectors(out);
  return out;
}

std::vector<InvariantBasisElement> invariant_basis(const CohomologyModel& model,
                                                   int n, std::size_t max_cells) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const std::vector<Permutation> group = all_permutations(n);
  std::set<std::pair<Permutation, std::size_t>> visited;
  std::vector<InvariantBasisElement> out;

  for (const Permutation& label : group) {
    const std::size_t dim = sector_dimension(model, label, max_cells);
    const int orbit_count = orbit_structure(label).orbit_count();
    for (std::size_t word = 0; word < dim; ++word) {
      if (visited.count({label, word})) continue;
      std::map<std::pair<Permutation, std::size_t>, int> signs;
      bool dead = false;
      for (const Permutation& h : group) {
        const SignedWord sw = act_basis(h, label, word, model, max_cells);
        auto [it, inserted] = signs.try_emplace({sw.label, sw.word}, sw.sign);
        if (!inserted && it->second != sw.sign) dead = true;
      }
      for (const auto& [node, sign] : signs) visited.insert(node);
      if (dead) continue;

      InvariantBasisElement elem;
      elem.root_label = label;
      elem.root_word = word;
      elem.degree = word_degree(model, orbit_count, word);
      elem.homological_degree = model.dimension() * orbit_count - elem.degree;
      for (const auto& [node, sign] : signs)
        elem.element.add_scaled(
            sector_basis_vector(model, node.first, node.second, max_cells),
            Rat(sign));
      out.push_back(std::move(elem));
    }
  }
  return out;
}

namespace {

// Per-pair product machinery shared by the pair tables and the invariant
// multiplication table.
class PairEngine {
 public:
  PairEngine(const CohomologyModel& model, const Permutation& tau,
             const Permutation& sigma, ProductKind kind, std::size_t max_cells)
      : model_(model), kind_(kind), tau_(tau), sigma_(sigma) {
    product_ = compose(tau, sigma);
    product_orbits_ = orbit_structure(product_);
    tau_orbits_ = orbit_structure(tau);
    sigma_orbits_ = orbit_structure(sigma);
    if (kind_ == ProductKind::Vip) {
      joint_ = orbit_structure(tau, sigma);
      ra_ = restrict_matrix(model, tau_orbits_, joint_, max_cells);
      rb_ = restrict_matrix(model, sigma_orbits_, joint_, max_cells);
      excess_ = excess_class(tau, sigma, model, max_cells);
      pf_ = pushforward_matrix(model, joint_, product_orbits_, max_cells);
    } else {
      const OrbitStructure full = singleton_orbits(tau.degree());
      fa_ = pushforward_matrix(model, tau_orbits_, full, max_cells);
      fb_ = pushforward_matrix(model, sigma_orbits_, full, max_cells);
      lift_.emplace(pushforward_matrix(model, product_orbits_, full, max_cells));
    }
  }

  const Permutation& product() const { return product_; }
  const OrbitStructure& product_orbits() const { return product_orbits_; }

  RatVec column(std::size_t wa, std::size_t wb) const {
    if (kind_ == ProductKind::Vip) {
      const RatVec u = ra_.col(static_cast<Eigen::Index>(wa));
      const RatVec v = rb_.col(static_cast<Eigen::Index>(wb));
      const int jk = joint_.orbit_count();
      const RatVec cupped = word_cup(model_, jk, u, v);
      const RatVec with_excess = word_cup(model_, jk, cupped, excess_);
      return apply_matrix(pf_, with_excess);
    }
    const RatVec u = fa_.col(static_cast<Eigen::Index>(wa));
    const RatVec v = fb_.col(static_cast<Eigen::Index>(wb));
    const RatVec cupped = word_cup(model_, tau_.degree(), u, v);
    return lift_->solve(cupped);
  }

 private:
  const CohomologyModel& model_;
  ProductKind kind_;
  Permutation tau_, sigma_, product_;
  OrbitStructure tau_orbits_, sigma_orbits_, product_orbits_, joint_;
  RatMat ra_, rb_, pf_, fa_, fb_;
  RatVec excess_;
  std::optional<ExactLift> lift_;
};

}  // namespace

SectorPairTable sector_pair_table(const CohomologyModel& model,
                                  const Permutation& tau, const Permutation& sigma,
                                  ProductKind kind, std::size_t max_cells) {
  const PairEngine engine(model, tau, sigma, kind, max_cells);
  SectorPairTable table;
  table.tau = tau;
  table.sigma = sigma;
  table.product = engine.product();
  const std::size_t da = sector_dimension(model, tau, max_cells);
  const std::size_t db = sector_dimension(model, sigma, max_cells);
  table.entry.assign(da, std::vector<SparseVec>(db));
  for (std::size_t wa = 0; wa < da; ++wa)
    for (std::size_t wb = 0; wb < db; ++wb) {
      const RatVec col = engine.column(wa, wb);
      SparseVec sparse;
      for (Eigen::Index i = 0; i < col.size(); ++i)
        if (col[i] != 0) sparse.emplace_back(static_cast<std::size_t>(i), col[i]);
      table.entry[wa][wb] = std::move(sparse);
    }
  return table;
}

namespace {

std::string format_coeff_term(const Rat& c, const std::string& name, bool first) {
  const bool negative = c < 0;
  Rat mag = negative ? Rat(-c) : c;
  std::string out;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (mag != 1) out += to_string(mag) + " ";
  out += name;
  return out;
}

}  // namespace

std::string MultiplicationTable::str() const {
  std::ostringstream out;
  out << "model: " << model_label << "  n: " << n << "  product: "
      << (kind == ProductKind::Vip ? "vip" : "cs") << "\n";
  out << "invariant basis (" << basis.size() << " elements):\n";
  for (size_t i = 0; i < basis.size(); ++i) {
    const TableBasisInfo& b = basis[i];
    out << "  [" << i << "] sector " << b.label << " (" << b.cycle_type << ")  word "
        << b.word << "  degree " << b.degree << "  homological "
        << b.homological_degree << "\n";
  }
  out << "structure constants integral: " << (integral ? "yes" : "no") << "\n";
  out << "table:\n";
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries[i].size(); ++j) {
      out << "  [" << i << "]*[" << j << "] = ";
      const SparseVec& result = entries[i][j];
      if (result.empty()) {
        out << "0\n";
        continue;
      }
      std::string line;
      for (size_t t = 0; t < result.size(); ++t)
        line += format_coeff_term(result[t].second,
                                  "[" + std::to_string(result[t].first) + "]",
                                  t == 0);
      out << line << "\n";
    }
  return out.str();
}

nlohmann::json MultiplicationTable::to_json() const {
  nlohmann::json doc;
  doc["model"] = model_label;
  doc["n"] = n;
  doc["product"] = kind == ProductKind::Vip ? "vip" : "cs";
  nlohmann::json basis_json = nlohmann::json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    basis_json.push_back({{"index", i},
                          {"label", basis[i].label},
                          {"cycle_type", basis[i].cycle_type},
                          {"word", basis[i].word},
                          {"degree", basis[i].degree},
                          {"homological_degree", basis[i].homological_degree}});
  }
  doc["sector_basis"] = basis_json;
  nlohmann::json entry_json = nlohmann::json::array();
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries[i].size(); ++j) {
      nlohmann::json result = nlohmann::json::array();
      for (const auto& [k, c] : entries[i][j])
        result.push_back({{"basis", k}, {"coeff", to_string(c)}});
      entry_json.push_back({{"left", i}, {"right", j}, {"result", result}});
    }
  doc["entries"] = entry_json;
  doc["integral"] = integral;
  return doc;
}

MultiplicationTable multiplication_table(const CohomologyModel& model, int n,
                                         ProductKind kind, std::size_t max_cells) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const int bound = model.kind() == CohomologyModel::Kind::Sphere ? 5 : 4;
  if (n > bound)
    throw std::invalid_argument("size bound: n <= " + std::to_string(bound) +
                                " for this model");
  checked_word_count(model, n, max_cells);

  const std::vector<InvariantBasisElement> basis = invariant_basis(model, n, max_cells);
  const size_t count = basis.size();

  // node -> (owning basis element, its +-1 coefficient there)
  std::map<std::pair<Permutation, std::size_t>, std::pair<size_t, Rat>> node_of;
  std::map<Permutation, std::vector<std::pair<std::size_t, size_t>>> nodes_by_label;
  for (size_t k = 0; k < count; ++k)
    for (const auto& [label, sv] : basis[k].element.sectors)
      for (Eigen::Index w = 0; w < sv.v.size(); ++w) {
        if (sv.v[w] == 0) continue;
        node_of[{label, static_cast<std::size_t>(w)}] = {k, sv.v[w]};
        nodes_by_label[label].emplace_back(static_cast<std::size_t>(w), k);
      }

  // raw accumulation of every pairwise product, keyed by (label, word)
  std::vector<std::vector<std::map<std::pair<Permutation, std::size_t>, Rat>>> acc(
      count, std::vector<std::map<std::pair<Permutation, std::size_t>, Rat>>(count));

  for (const auto& [tau, a_nodes] : nodes_by_label)
    for (const auto& [sigma, b_nodes] : nodes_by_label) {
      const PairEngine engine(model, tau, sigma, kind, max_cells);
      for (const auto& [wa, ka] : a_nodes) {
        const Rat ca = node_of.at({tau, wa}).second;
        for (const auto& [wb, kb] : b_nodes) {
          const Rat cb = node_of.at({sigma, wb}).second;
          const RatVec col = engine.column(wa, wb);
          const Rat scale = ca * cb;
          for (Eigen::Index i = 0; i < col.size(); ++i) {
            if (col[i] == 0) continue;
            acc[ka][kb][{engine.product(), static_cast<std::size_t>(i)}] +=
                scale * col[i];
          }
        }
      }
    }

  MultiplicationTable table;
  table.model_label = model.label();
  table.n = n;
  table.kind = kind;
  for (const InvariantBasisElement& b : basis) {
    TableBasisInfo info;
    info.label = b.root_label.str();
    info.cycle_type = CycleType::of(b.root_label).str();
    info.word = word_name(model, orbit_structure(b.root_label).orbit_count(),
                          b.root_word);
    info.degree = b.degree;
    info.homological_degree = b.homological_degree;
    table.basis.push_back(std::move(info));
  }

  table.entries.assign(count, std::vector<SparseVec>(count));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j) {
      std::map<size_t, Rat> coeffs;
      for (const auto& [node, value] : acc[i][j]) {
        if (value == 0) continue;
        auto it = node_of.find(node);
        if (it == node_of.end())
          throw std::logic_error("product left the invariant subspace");
        if (node.first == basis[it->second.first].root_label &&
            node.second == basis[it->second.first].root_word)
          coeffs[it->second.first] = value;  // root carries coefficient +1
      }
      // verify the full expansion, not only the roots
      for (const auto& [node, value] : acc[i][j]) {
        if (value == 0) continue;
        const auto& [k, sign] = node_of.at(node);
        auto cit = coeffs.find(k);
        const Rat expect = (cit == coeffs.end()) ? Rat(0) : Rat(cit->second * sign);
        if (value != expect)
          throw std::logic_error("product left the invariant subspace");
      }
      SparseVec entry;
      for (const auto& [k, c] : coeffs) {
        if (c == 0) continue;
        entry.emplace_back(k, c);
        if (c.get_den() != 1) table.integral = false;
      }
      table.entries[i][j] = std::move(entry);
    }
  return table;
}

}  // namespace symorb
