#include "symorb/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "symorb/model.hpp"
#include "symorb/series.hpp"

namespace symorb {

namespace {

constexpr unsigned kSampleSeed = 20250819u;
constexpr int kSampleCount = 100000;

// Betti vectors over degrees 0..4 with bounded total dimension.
std::vector<GradedDimension> betti_battery(long total_cap) {
  std::vector<GradedDimension> out;
  std::vector<long> betti(5, 0);
  auto walk = [&](auto&& self, int degree, long used) -> void {
    if (degree == 5) {
      out.push_back(GradedDimension::from_list(betti));
      return;
    }
    for (long b = 0; b + used <= total_cap; ++b) {
      betti[static_cast<size_t>(degree)] = b;
      self(self, degree + 1, used + b);
    }
    betti[static_cast<size_t>(degree)] = 0;
  };
  walk(walk, 0, 0);
  return out;
}

Permutation random_permutation(int n, std::mt19937& gen) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(gen() % static_cast<unsigned>(i + 1));
    std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
  }
  return Permutation::from_images(std::move(img));
}

// apply `first`, then `then`
SignedPermutationMatrix compose_actions(const SignedPermutationMatrix& first,
                                        const SignedPermutationMatrix& then) {
  SignedPermutationMatrix out;
  out.dimension = first.dimension;
  out.target.resize(first.dimension);
  out.sign.resize(first.dimension);
  for (std::size_t i = 0; i < first.dimension; ++i) {
    out.target[i] = then.target[first.target[i]];
    out.sign[i] = first.sign[i] * then.sign[first.target[i]];
  }
  return out;
}

bool same_action(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b) {
  return a.dimension == b.dimension && a.target == b.target && a.sign == b.sign;
}

bool inertia_equal(const InertiaElement& a, const InertiaElement& b) {
  std::set<Permutation> labels;
  for (const auto& [label, sv] : a.sectors) labels.insert(label);
  for (const auto& [label, sv] : b.sectors) labels.insert(label);
  for (const Permutation& label : labels) {
    const auto ia = a.sectors.find(label);
    const auto ib = b.sectors.find(label);
    if (ia == a.sectors.end()) {
      if (!is_zero(ib->second.v)) return false;
    } else if (ib == b.sectors.end()) {
      if (!is_zero(ia->second.v)) return false;
    } else if (!equal(ia->second.v, ib->second.v)) {
      return false;
    }
  }
  return true;
}

std::map<std::size_t, Rat> sparse_map(const SparseVec& v) {
  std::map<std::size_t, Rat> out;
  for (const auto& [i, c] : v)
    if (c != 0) out[i] = c;
  return out;
}

void check(SuiteReport& report, const std::string& name, bool pass,
           const std::string& detail) {
  report.checks.push_back({name, pass, detail});
}

std::vector<CohomologyModel> builtin_models() {
  std::vector<CohomologyModel> models;
  models.push_back(CohomologyModel::sphere(2));
  models.push_back(CohomologyModel::sphere(4));
  models.push_back(CohomologyModel::torus(1));
  models.push_back(CohomologyModel::torus(2));
  return models;
}

GradedDimension model_betti(const CohomologyModel& model) {
  GradedDimension phi;
  for (int i = 0; i < model.rank(); ++i)
    phi.set(model.degree(i), phi.betti(model.degree(i)) + 1);
  return phi;
}

using PairKey = std::pair<Permutation, Permutation>;
using PairTables = std::map<PairKey, SectorPairTable>;

PairTables build_tables(const CohomologyModel& model, int n, ProductKind kind,
                        std::size_t cells) {
  PairTables tables;
  const std::vector<Permutation> group = all_permutations(n);
  for (const Permutation& tau : group)
    for (const Permutation& sigma : group)
      tables.emplace(PairKey{tau, sigma},
                     sector_pair_table(model, tau, sigma, kind, cells));
  return tables;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::str() const {
  std::ostringstream out;
  out << "[suite " << suite << "]\n";
  int passed = 0;
  for (const CheckResult& c : checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (c.pass) ++passed;
  }
  out << "suite " << suite << ": " << passed << "/" << checks.size()
      << " checks passed\n";
  return out.str();
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const CheckResult& c : checks)
    checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", suite}, {"checks", checks_json}, {"pass", pass()}};
}

SuiteReport verify_macdonald_suite(const VerifyOptions& opt) {
  SuiteReport report{"macdonald", {}};
  const std::vector<GradedDimension> battery = betti_battery(3);

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery) {
      const MacdonaldReport r = verify_macdonald(phi, 4, opt.oracle_cells);
      if (!r.pass) {
        pass = false;
        detail = "first failure at betti " + phi.str();
        break;
      }
    }
    if (pass)
      detail = std::to_string(battery.size()) + " betti inputs, powers up to 4";
    check(report, "series coefficients match the projector ranks", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    for (const GradedDimension& phi : battery) {
      for (int m = 1; m <= 4 && pass; ++m) {
        const TensorWordSpace space(phi, m, opt.oracle_cells);
        const std::vector<Permutation> group = all_permutations(m);
        std::vector<SignedPermutationMatrix> actions;
        actions.reserve(group.size());
        for (const Permutation& g : group) actions.push_back(koszul_action(space, g));
        for (size_t a = 0; a < group.size() && pass; ++a)
          for (size_t b = 0; b < group.size(); ++b) {
            const SignedPermutationMatrix direct =
                koszul_action(space, compose(group[a], group[b]));
            if (!same_action(direct, compose_actions(actions[a], actions[b]))) {
              pass = false;
              detail = "betti " + phi.str() + ", m=" + std::to_string(m);
              break;
            }
            ++cases;
          }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " composition pairs";
    check(report, "word action is a group action", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery) {
      for (int m = 0; m <= 4 && pass; ++m) {
        const TensorWordSpace space(phi, m, opt.oracle_cells);
        const SignedPermutationMatrix id_action =
            koszul_action(space, Permutation::identity(m));
        for (std::size_t i = 0; i < id_action.dimension; ++i)
          if (id_action.target[i] != i || id_action.sign[i] != 1) {
            pass = false;
            detail = "betti " + phi.str() + ", m=" + std::to_string(m);
            break;
          }
      }
      if (!pass) break;
    }
    if (pass) detail = "powers up to 4";
    check(report, "identity acts trivially", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    for (const GradedDimension& phi : betti_battery(2)) {
      for (int m = 1; m <= 3 && pass; ++m) {
        const RatMat p = averaging_projector(phi, m, opt.oracle_cells);
        if (!equal(RatMat(p * p), p)) {
          pass = false;
          detail = "betti " + phi.str() + ", m=" + std::to_string(m);
        }
        ++cases;
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " projectors squared";
    check(report, "averaging projector is idempotent", pass, detail);
  }

  return report;
}

SuiteReport verify_series_suite(const VerifyOptions& opt) {
  (void)opt;
  SuiteReport report{"series", {}};
  const std::vector<GradedDimension> battery = betti_battery(4);

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery) {
      const TruncatedSeries series = orbifold_series(phi, 8);
      for (int n = 0; n <= 8; ++n)
        if (series.coeff(n) != direct_orbifold_coefficient(phi, n)) {
          pass = false;
          detail = "betti " + phi.str() + ", n=" + std::to_string(n);
          break;
        }
      if (!pass) break;
    }
    if (pass)
      detail = std::to_string(battery.size()) + " betti inputs, orders up to 8";
    check(report, "product form equals the partition sum", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery)
      if (loop_series(phi, 8) != orbifold_series(phi, 8)) {
        pass = false;
        detail = "betti " + phi.str();
        break;
      }
    if (pass) detail = std::to_string(battery.size()) + " betti inputs";
    check(report, "loop series shares the orbifold factor shape", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery) {
      const std::vector<Int> lhs = euler_specialize(orbifold_series(phi, 10));
      const std::vector<Int> rhs =
          euler_specialize(equivariant_euler_series(phi.euler_characteristic(), 10));
      if (lhs != rhs) {
        pass = false;
        detail = "betti " + phi.str();
        break;
      }
    }
    if (pass) detail = std::to_string(battery.size()) + " betti inputs, order 10";
    check(report, "specialization agrees with the euler product", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : battery)
      if (macdonald_series(phi, 2).coeff(1) != phi.poincare_poly()) {
        pass = false;
        detail = "betti " + phi.str();
        break;
      }
    if (pass) detail = std::to_string(battery.size()) + " betti inputs";
    check(report, "first coefficient recovers the input", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const GradedDimension& phi : betti_battery(3)) {
      if (macdonald_series(phi, 10).truncated(6) != macdonald_series(phi, 6) ||
          orbifold_series(phi, 10).truncated(6) != orbifold_series(phi, 6)) {
        pass = false;
        detail = "betti " + phi.str();
        break;
      }
    }
    if (pass) detail = "orders 10 vs 6";
    check(report, "truncation is stable", pass, detail);
  }

  {
    const GradedDimension sphere = GradedDimension::from_list({1, 0, 1});
    const std::vector<Int> chi = euler_specialize(macdonald_series(sphere, 10));
    const std::vector<Int> geom = euler_specialize(euler_series(2, 10));
    bool pass = chi == geom;
    for (int n = 0; n <= 10 && pass; ++n)
      if (chi[static_cast<size_t>(n)] != n + 1) pass = false;
    check(report, "sphere symmetric powers count n+1", pass, "orders up to 10");
  }

  {
    const std::vector<Int> got = euler_specialize(equivariant_euler_series(1, 10));
    const std::vector<long> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    bool pass = got.size() == expected.size();
    for (size_t i = 0; pass && i < expected.size(); ++i)
      if (got[i] != expected[i]) pass = false;
    check(report, "point quotients count partitions", pass, "orders up to 10");
  }

  return report;
}

SuiteReport verify_degrees_suite(const VerifyOptions& opt) {
  SuiteReport report{"degrees", {}};
  const int max_n = std::min(opt.max_n, 6);

  {
    bool pass = true;
    std::string detail;
    long pairs = 0;
    for (int n = 1; n <= max_n && pass; ++n) {
      const std::vector<Permutation> group = all_permutations(n);
      for (const Permutation& tau : group) {
        for (const Permutation& sigma : group) {
          const int slack =
              excess_euler_degree(tau, sigma, 2) - 2 * chen_ruan_degree(tau, sigma, 2);
          const bool equality = orbit_structure(compose(tau, sigma)).orbit_count() ==
                                orbit_structure(tau, sigma).orbit_count();
          if (slack < 0 || (slack == 0) != equality) {
            pass = false;
            detail = "n=" + std::to_string(n) + ", tau=" + tau.str() +
                     ", sigma=" + sigma.str();
            break;
          }
          ++pairs;
        }
        if (!pass) break;
      }
    }
    if (pass)
      detail = std::to_string(pairs) + " pairs, n up to " + std::to_string(max_n);
    check(report, "slack is nonnegative, zero exactly on closed pairs", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long pairs = 0;
    for (int n = 1; n <= max_n && pass; ++n) {
      const std::vector<Permutation> group = all_permutations(n);
      for (const Permutation& tau : group) {
        for (const Permutation& sigma : group) {
          const std::vector<int> mult = excess_multiplicities(tau, sigma);
          int total = 0;
          bool nonneg = true;
          for (int m : mult) {
            total += m;
            nonneg = nonneg && m >= 0;
          }
          if (!nonneg || total != excess_euler_degree(tau, sigma, 1)) {
            pass = false;
            detail = "n=" + std::to_string(n) + ", tau=" + tau.str() +
                     ", sigma=" + sigma.str();
            break;
          }
          ++pairs;
        }
        if (!pass) break;
      }
    }
    if (pass)
      detail = std::to_string(pairs) + " pairs, n up to " + std::to_string(max_n);
    check(report, "multiplicities are nonnegative and sum to the rank", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    const int scale_n = std::min(opt.max_n, 4);
    for (int n = 1; n <= scale_n && pass; ++n) {
      const std::vector<Permutation> group = all_permutations(n);
      for (const Permutation& tau : group) {
        for (const Permutation& sigma : group) {
          const int base = excess_euler_degree(tau, sigma, 1);
          if (excess_euler_degree(tau, sigma, 2) != 2 * base ||
              excess_euler_degree(tau, sigma, 4) != 4 * base ||
              chen_ruan_degree(tau, sigma, 4) != 2 * chen_ruan_degree(tau, sigma, 2)) {
            pass = false;
            detail = "n=" + std::to_string(n) + ", tau=" + tau.str() +
                     ", sigma=" + sigma.str();
            break;
          }
        }
        if (!pass) break;
      }
    }
    if (pass) detail = "dims 1,2,4, n up to " + std::to_string(scale_n);
    check(report, "degrees scale linearly in the base dimension", pass, detail);
  }

  return report;
}

namespace {

// the two regroupings of the triple-rank expression, written out in full
bool cocycle_identity_holds(int n, const Permutation& g, const Permutation& h,
                            const Permutation& k) {
  const Permutation gh = compose(g, h);
  const Permutation hk = compose(h, k);
  const std::vector<Permutation> triple{g, h, k};
  const int o_g = orbit_structure(g).orbit_count();
  const int o_h = orbit_structure(h).orbit_count();
  const int o_k = orbit_structure(k).orbit_count();
  const int o_gh = orbit_structure(gh).orbit_count();
  const int o_hk = orbit_structure(hk).orbit_count();
  const int o_g_h = orbit_structure(g, h).orbit_count();
  const int o_h_k = orbit_structure(h, k).orbit_count();
  const int o_gh_k = orbit_structure(gh, k).orbit_count();
  const int o_g_hk = orbit_structure(g, hk).orbit_count();
  const int o_ghk =
      orbit_structure(std::span<const Permutation>(triple), n).orbit_count();

  const int lhs = (n + o_g_h - o_g - o_h) + (n + o_gh_k - o_gh - o_k) +
                  (o_gh + o_ghk - o_g_h - o_gh_k);
  const int rhs = (n + o_h_k - o_h - o_k) + (n + o_g_hk - o_g - o_hk) +
                  (o_hk + o_ghk - o_h_k - o_g_hk);
  return lhs == rhs;
}

}  // namespace

SuiteReport verify_cocycle_suite(const VerifyOptions& opt) {
  SuiteReport report{"cocycle", {}};

  {
    bool pass = true;
    std::string detail;
    long triples = 0;
    const int max_n = std::min(opt.max_n, 4);
    for (int n = 1; n <= max_n && pass; ++n) {
      const std::vector<Permutation> group = all_permutations(n);
      for (const Permutation& g : group) {
        for (const Permutation& h : group) {
          for (const Permutation& k : group) {
            if (!cocycle_identity_holds(n, g, h, k)) {
              pass = false;
              detail = "n=" + std::to_string(n) + ": " + g.str() + " | " + h.str() +
                       " | " + k.str();
              break;
            }
            ++triples;
          }
          if (!pass) break;
        }
        if (!pass) break;
      }
    }
    if (pass)
      detail = std::to_string(triples) + " triples, n up to " + std::to_string(max_n);
    check(report, "rank regrouping identity, exhaustive", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long triples = 0;
    std::mt19937 gen(kSampleSeed);
    for (int n = 5; n <= std::min(opt.max_n, 6) && pass; ++n) {
      for (int t = 0; t < kSampleCount; ++t) {
        const Permutation g = random_permutation(n, gen);
        const Permutation h = random_permutation(n, gen);
        const Permutation k = random_permutation(n, gen);
        if (!cocycle_identity_holds(n, g, h, k)) {
          pass = false;
          detail = "n=" + std::to_string(n) + ": " + g.str() + " | " + h.str() +
                   " | " + k.str();
          break;
        }
        ++triples;
      }
    }
    if (pass)
      detail = opt.max_n >= 5 ? std::to_string(triples) + " sampled triples"
                              : "not exercised below n=5";
    check(report, "rank regrouping identity, sampled", pass, detail);
  }

  return report;
}

SuiteReport verify_ring_suite(const VerifyOptions& opt) {
  SuiteReport report{"ring", {}};
  const std::size_t cells = opt.ring_cells;
  const int nr = std::min(opt.max_n, 3);
  const int na = std::min(opt.max_n, 4);
  const std::vector<CohomologyModel> models = builtin_models();

  {
    bool pass = true;
    std::string detail;
    for (const CohomologyModel& model : models) {
      const CohomologyModel round = CohomologyModel::from_json(model.to_json());
      bool same = round.rank() == model.rank() && round.dimension() == model.dimension();
      for (int a = 0; same && a < model.rank(); ++a) {
        same = round.name(a) == model.name(a) && round.degree(a) == model.degree(a);
        for (int b = 0; same && b < model.rank(); ++b)
          same = equal(round.cup(a, b), model.cup(a, b));
      }
      same = same && equal(round.pairing(), model.pairing()) &&
             equal(round.euler_class(), model.euler_class());
      if (!same) {
        pass = false;
        detail = model.label();
        break;
      }
    }
    bool odd_rejected = false;
    try {
      CohomologyModel::sphere(3);
    } catch (const ModelError&) {
      odd_rejected = true;
    }
    if (!odd_rejected) {
      pass = false;
      detail = "odd sphere accepted";
    }
    if (pass) detail = std::to_string(models.size()) + " builtin models";
    check(report, "models validate and round-trip through json", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long coarsenings = 0;
    std::vector<CohomologyModel> adj_models;
    adj_models.push_back(CohomologyModel::sphere(2));
    adj_models.push_back(CohomologyModel::torus(1));
    for (const CohomologyModel& model : adj_models) {
      for (int n = 1; n <= na && pass; ++n) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        std::vector<std::pair<OrbitStructure, OrbitStructure>> arising;
        const std::vector<Permutation> group = all_permutations(n);
        const OrbitStructure full = singleton_orbits(n);
        auto note = [&](const OrbitStructure& fine, const OrbitStructure& coarse) {
          if (seen.insert({fine.orbit_of, coarse.orbit_of}).second)
            arising.emplace_back(fine, coarse);
        };
        for (const Permutation& tau : group) {
          const OrbitStructure ot = orbit_structure(tau);
          note(full, ot);
          for (const Permutation& sigma : group) {
            const OrbitStructure joint = orbit_structure(tau, sigma);
            note(ot, joint);
            note(orbit_structure(compose(tau, sigma)), joint);
          }
        }
        for (const auto& [fine, coarse] : arising) {
          const RatMat r = restrict_matrix(model, fine, coarse, cells);
          const RatMat pf = pushforward_matrix(model, coarse, fine, cells);
          const RatMat gf = word_gram(model, fine.orbit_count());
          const RatMat gc = word_gram(model, coarse.orbit_count());
          if (!equal(RatMat(pf.transpose() * gf), RatMat(gc * r))) {
            pass = false;
            detail = model.label() + ", n=" + std::to_string(n);
            break;
          }
          ++coarsenings;
        }
      }
      if (!pass) break;
    }
    if (pass)
      detail = std::to_string(coarsenings) + " coarsenings, n up to " +
               std::to_string(na);
    check(report, "pushforward is the pairing adjoint of restriction", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    for (const CohomologyModel& model : models) {
      for (int n = 1; n <= nr && pass; ++n) {
        const Permutation id = Permutation::identity(n);
        const SectorVector unit = sector_unit(model, id, cells);
        for (const Permutation& tau : all_permutations(n)) {
          const std::size_t dim = sector_dimension(model, tau, cells);
          for (std::size_t w = 0; w < dim; ++w) {
            const SectorVector a = sector_basis_vector(model, tau, w, cells);
            const SectorVector left = vip_product(unit, a, model, cells);
            const SectorVector right = vip_product(a, unit, model, cells);
            const SectorVector cleft = cs_product(unit, a, model, cells);
            if (left.label != tau || right.label != tau || !equal(left.v, a.v) ||
                !equal(right.v, a.v) || !equal(cleft.v, a.v)) {
              pass = false;
              detail = model.label() + ", n=" + std::to_string(n) +
                       ", sector " + tau.str() + ", word " + std::to_string(w);
              break;
            }
            ++cases;
          }
          if (!pass) break;
        }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " sector words";
    check(report, "untwisted unit is a two-sided unit", pass, detail);
  }

  // per-model vip tables at n <= nr, reused by the next few checks
  std::map<std::pair<std::string, int>, PairTables> vip_cache;
  for (const CohomologyModel& model : models)
    for (int n = 1; n <= nr; ++n)
      vip_cache.emplace(std::make_pair(model.label(), n),
                        build_tables(model, n, ProductKind::Vip, cells));

  {
    bool pass = true;
    std::string detail;
    long triples = 0;
    for (const CohomologyModel& model : models) {
      for (int n = 1; n <= nr && pass; ++n) {
        const PairTables& tables = vip_cache.at({model.label(), n});
        const std::vector<Permutation> group = all_permutations(n);
        for (const Permutation& tau : group) {
          const std::size_t da = sector_dimension(model, tau, cells);
          for (const Permutation& sigma : group) {
            const std::size_t db = sector_dimension(model, sigma, cells);
            const SectorPairTable& tab_ab = tables.at({tau, sigma});
            const Permutation ts = compose(tau, sigma);
            for (const Permutation& rho : group) {
              const std::size_t dc = sector_dimension(model, rho, cells);
              const SectorPairTable& tab_ab_c = tables.at({ts, rho});
              const Permutation sr = compose(sigma, rho);
              const SectorPairTable& tab_bc = tables.at({sigma, rho});
              const SectorPairTable& tab_a_bc = tables.at({tau, sr});
              for (std::size_t wa = 0; wa < da && pass; ++wa)
                for (std::size_t wb = 0; wb < db && pass; ++wb) {
                  const SparseVec& ab = tab_ab.entry[wa][wb];
                  for (std::size_t wc = 0; wc < dc; ++wc) {
                    std::map<std::size_t, Rat> lhs, rhs;
                    for (const auto& [w, c] : ab)
                      for (const auto& [u, d] : tab_ab_c.entry[w][wc]) {
                        Rat& slot = lhs[u];
                        slot += c * d;
                        if (slot == 0) lhs.erase(u);
                      }
                    for (const auto& [w, c] : tab_bc.entry[wb][wc])
                      for (const auto& [u, d] : tab_a_bc.entry[wa][w]) {
                        Rat& slot = rhs[u];
                        slot += c * d;
                        if (slot == 0) rhs.erase(u);
                      }
                    if (lhs != rhs) {
                      pass = false;
                      detail = model.label() + ", n=" + std::to_string(n) + ", " +
                               tau.str() + " | " + sigma.str() + " | " + rho.str();
                      break;
                    }
                    ++triples;
                  }
                }
              if (!pass) break;
            }
            if (!pass) break;
          }
          if (!pass) break;
        }
      }
      if (!pass) break;
    }
    if (pass)
      detail = std::to_string(triples) + " basis triples, n up to " +
               std::to_string(nr);
    check(report, "product is associative", pass, detail);
  }

  {
    // The two routes produce identical vectors on even-dimensional models.  On
    // odd-dimensional models the canonical tensor-factor order orients each
    // sector on its own, so the cs route differs from the vip route by an
    // orientation sign: constant on each sector pair for each parity of the
    // left degree, and flipping the left parity multiplies it by
    // (-1)^{d*(orbits(tau)-orbits(<tau,sigma>))}.
    bool even_pass = true;
    bool sign_pass = true;
    std::string even_detail;
    std::string sign_detail;
    long even_entries = 0;
    long sign_entries = 0;
    for (const CohomologyModel& model : models) {
      const int d = model.dimension();
      for (int n = 1; n <= nr; ++n) {
        const PairTables& vip_tables = vip_cache.at({model.label(), n});
        const PairTables cs_tables = build_tables(model, n, ProductKind::Cs, cells);
        for (const auto& [key, vip_table] : vip_tables) {
          const SectorPairTable& cs_table = cs_tables.at(key);
          const int o_tau = orbit_structure(key.first).orbit_count();
          const int o_joint = orbit_structure(key.first, key.second).orbit_count();
          const std::string where = model.label() + ", n=" + std::to_string(n) +
                                    ", " + key.first.str() + " | " +
                                    key.second.str();
          int eps[2] = {0, 0};
          bool ok = true;
          for (size_t wa = 0; wa < vip_table.entry.size(); ++wa) {
            const int par = word_degree(model, o_tau, wa) % 2;
            for (size_t wb = 0; wb < vip_table.entry[wa].size(); ++wb) {
              const std::map<std::size_t, Rat> v =
                  sparse_map(vip_table.entry[wa][wb]);
              const std::map<std::size_t, Rat> c =
                  sparse_map(cs_table.entry[wa][wb]);
              if (d % 2 == 0) {
                if (even_pass && v != c) {
                  even_pass = false;
                  even_detail = where + ", words " + std::to_string(wa) + "," +
                                std::to_string(wb);
                }
                ++even_entries;
              }
              if (v.size() != c.size()) {
                ok = false;
                continue;
              }
              for (const auto& [w, x] : v) {
                const auto it = c.find(w);
                int s = 0;
                if (it != c.end()) s = it->second == x ? 1 : (it->second == -x ? -1 : 0);
                if (s == 0) {
                  ok = false;
                  break;
                }
                if (eps[par] == 0) eps[par] = s;
                else if (eps[par] != s) ok = false;
              }
              ++sign_entries;
            }
          }
          if (ok && eps[0] != 0 && eps[1] != 0 &&
              eps[0] * eps[1] != ((d * (o_tau - o_joint)) % 2 != 0 ? -1 : 1))
            ok = false;
          if (!ok && sign_pass) {
            sign_pass = false;
            sign_detail = where;
          }
        }
      }
    }
    if (even_pass)
      even_detail = std::to_string(even_entries) + " pair products, n up to " +
                    std::to_string(nr);
    if (sign_pass)
      sign_detail = std::to_string(sign_entries) + " pair products, n up to " +
                    std::to_string(nr);
    check(report, "both product routes agree on even-dimensional models",
          even_pass, even_detail);
    check(report, "product routes differ only by a sector orientation sign",
          sign_pass, sign_detail);
  }

  {
    bool pass = true;
    std::string detail;
    long entries = 0;
    for (const CohomologyModel& model : models) {
      const int d = model.dimension();
      for (int n = 1; n <= nr && pass; ++n) {
        const PairTables& tables = vip_cache.at({model.label(), n});
        for (const auto& [key, table] : tables) {
          const auto& [tau, sigma] = key;
          const int o_tau = orbit_structure(tau).orbit_count();
          const int o_sigma = orbit_structure(sigma).orbit_count();
          const int o_joint = orbit_structure(tau, sigma).orbit_count();
          const OrbitStructure prod_orbits = orbit_structure(table.product);
          const int shift = excess_euler_degree(tau, sigma, d) +
                            d * (prod_orbits.orbit_count() - o_joint);
          for (size_t wa = 0; wa < table.entry.size() && pass; ++wa) {
            const int deg_a = word_degree(model, o_tau, wa);
            for (size_t wb = 0; wb < table.entry[wa].size(); ++wb) {
              const int deg_b = word_degree(model, o_sigma, wb);
              for (const auto& [w, c] : table.entry[wa][wb]) {
                if (c == 0) continue;
                const int deg_out =
                    word_degree(model, prod_orbits.orbit_count(), w);
                if (deg_out != deg_a + deg_b + shift) {
                  pass = false;
                  detail = model.label() + ", n=" + std::to_string(n) + ", " +
                           tau.str() + " | " + sigma.str();
                  break;
                }
                ++entries;
              }
              if (!pass) break;
            }
          }
          if (!pass) break;
        }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(entries) + " nonzero product terms";
    check(report, "products satisfy the degree shift law", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    std::vector<const CohomologyModel*> eq_models{&models[0], &models[3]};
    for (const CohomologyModel* model : eq_models) {
      for (int n = 1; n <= nr && pass; ++n) {
        const PairTables& tables = vip_cache.at({model->label(), n});
        const std::vector<Permutation> group = all_permutations(n);
        for (const Permutation& h : group) {
          for (const auto& [key, table] : tables) {
            const auto& [tau, sigma] = key;
            const std::size_t da = table.entry.size();
            for (std::size_t wa = 0; wa < da && pass; ++wa) {
              const SignedWord swa = act_basis(h, tau, wa, *model, cells);
              const std::size_t db = table.entry[wa].size();
              for (std::size_t wb = 0; wb < db; ++wb) {
                const SignedWord swb = act_basis(h, sigma, wb, *model, cells);
                const SectorPairTable& moved_table =
                    tables.at({swa.label, swb.label});
                std::map<std::size_t, Rat> rhs;
                for (const auto& [w, c] : moved_table.entry[swa.word][swb.word]) {
                  const Rat value = Rat(swa.sign * swb.sign) * c;
                  if (value != 0) rhs[w] = value;
                }
                std::map<std::size_t, Rat> lhs;
                for (const auto& [w, c] : table.entry[wa][wb]) {
                  const SignedWord moved = act_basis(h, table.product, w, *model, cells);
                  const Rat value = Rat(moved.sign) * c;
                  if (value != 0) lhs[moved.word] = value;
                }
                if (lhs != rhs) {
                  pass = false;
                  detail = model->label() + ", n=" + std::to_string(n) + ", h=" +
                           h.str() + ", " + tau.str() + " | " + sigma.str();
                  break;
                }
                ++cases;
              }
            }
            if (!pass) break;
          }
          if (!pass) break;
        }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " moved pair products";
    check(report, "group action commutes with the product", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    std::vector<const CohomologyModel*> proj_models{&models[0], &models[3]};
    for (const CohomologyModel* model : proj_models) {
      for (int n = 1; n <= nr && pass; ++n) {
        for (const Permutation& tau : all_permutations(n)) {
          const std::size_t dim = sector_dimension(*model, tau, cells);
          for (std::size_t w = 0; w < dim; ++w) {
            InertiaElement e;
            e.add(sector_basis_vector(*model, tau, w, cells));
            const InertiaElement p = sn_project(e, *model, cells);
            if (!inertia_equal(p, sn_project(p, *model, cells))) {
              pass = false;
              detail = model->label() + ", n=" + std::to_string(n) + ", sector " +
                       tau.str() + ", word " + std::to_string(w);
              break;
            }
            ++cases;
          }
          if (!pass) break;
        }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " projected words";
    check(report, "group averaging is idempotent", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long cases = 0;
    for (const CohomologyModel& model : models) {
      const GradedDimension phi = model_betti(model);
      const int cap = model.rank() <= 2 ? na : nr;
      for (int n = 1; n <= cap && pass; ++n) {
        std::map<int, long> counts;
        for (const InvariantBasisElement& b : invariant_basis(model, n, cells))
          ++counts[b.degree];
        const YPoly expected = direct_orbifold_coefficient(phi, n);
        bool same = true;
        for (int u = 0; u <= expected.degree(); ++u)
          same = same && expected.coeff(u) == Int(counts.count(u) ? counts[u] : 0);
        for (const auto& [u, c] : counts)
          same = same && u <= expected.degree();
        if (!same) {
          pass = false;
          detail = model.label() + ", n=" + std::to_string(n);
          break;
        }
        ++cases;
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(cases) + " graded counts";
    check(report, "invariant dimensions match the series coefficients", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    long entries = 0;
    for (const CohomologyModel& model : models) {
      const bool even_d = model.dimension() % 2 == 0;
      for (int n = 1; n <= nr && pass; ++n) {
        // building a table already proves closure of the invariant span; the
        // cs product is not equivariant on odd-dimensional models, so its
        // table is only required to exist there for n = 1
        const MultiplicationTable vip = multiplication_table(model, n, ProductKind::Vip, cells);
        bool same = true;
        if (even_d || n == 1) {
          const MultiplicationTable cs = multiplication_table(model, n, ProductKind::Cs, cells);
          same = vip.basis.size() == cs.basis.size();
          for (size_t i = 0; same && i < vip.entries.size(); ++i)
            for (size_t j = 0; same && j < vip.entries[i].size(); ++j) {
              same = sparse_map(vip.entries[i][j]) == sparse_map(cs.entries[i][j]);
              ++entries;
            }
        }
        if (n == 1 && same) {
          // the one-copy table must be the cup table itself
          for (int a = 0; same && a < model.rank(); ++a)
            for (int b = 0; same && b < model.rank(); ++b) {
              std::map<std::size_t, Rat> expected;
              const RatVec& cup = model.cup(a, b);
              for (int c = 0; c < model.rank(); ++c)
                if (cup[c] != 0) expected[static_cast<std::size_t>(c)] = cup[c];
              same = sparse_map(vip.entries[static_cast<size_t>(a)]
                                           [static_cast<size_t>(b)]) == expected;
            }
        }
        if (!same) {
          pass = false;
          detail = model.label() + ", n=" + std::to_string(n);
        }
      }
      if (!pass) break;
    }
    if (pass) detail = std::to_string(entries) + " invariant table entries";
    check(report, "invariant tables close and agree on even-dimensional models",
          pass, detail);
  }

  return report;
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyOptions& opt) {
  if (name == "macdonald") return {verify_macdonald_suite(opt)};
  if (name == "series") return {verify_series_suite(opt)};
  if (name == "degrees") return {verify_degrees_suite(opt)};
  if (name == "cocycle") return {verify_cocycle_suite(opt)};
  if (name == "ring") return {verify_ring_suite(opt)};
  if (name == "all")
    return {verify_macdonald_suite(opt), verify_series_suite(opt),
            verify_degrees_suite(opt), verify_cocycle_suite(opt),
            verify_ring_suite(opt)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  for (const SuiteReport& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string report_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  for (const SuiteReport& r : reports) out += r.str();
  out += all_pass(reports) ? "verification: PASSED\n" : "verification: FAILED\n";
  return out;
}

nlohmann::json report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteReport& r : reports) suites.push_back(r.to_json());
  return {{"suites", suites}, {"pass", all_pass(reports)}};
}

}  // namespace symorb
