#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "symorb/model.hpp"
#include "symorb/permutation.hpp"
#include "symorb/sector.hpp"
#include "symorb/series.hpp"
#include "symorb/verify.hpp"

namespace {

using namespace symorb;

struct CellCaps {
  std::size_t oracle = kDefaultMaxCells;
  std::size_t ring = kDefaultRingCells;
};

CellCaps read_cell_caps() {
  CellCaps caps;
  const char* raw = std::getenv("SYMORB_MAX_CELLS");
  if (raw == nullptr || *raw == '\0') return caps;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    std::cerr << "warning: ignoring malformed SYMORB_MAX_CELLS value\n";
    return caps;
  }
  caps.oracle = std::max<std::size_t>(caps.oracle, v);
  caps.ring = std::max<std::size_t>(caps.ring, v);
  return caps;
}

nlohmann::json int_json(const Int& value) {
  if (fits_int64(value)) return nlohmann::json(to_int64(value));
  return nlohmann::json(to_string(value));
}

nlohmann::json series_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n) {
    nlohmann::json poly = nlohmann::json::array();
    for (const Int& c : s.coeff(n).coeffs()) poly.push_back(int_json(c));
    coeffs.push_back(poly);
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

void emit_series(const TruncatedSeries& s, bool json) {
  if (json)
    std::cout << series_json(s).dump(2) << "\n";
  else
    std::cout << s.str() << "\n";
}

int run_series(const std::string& mode, const std::string& betti_text, long chi,
               bool equivariant, int order, bool json) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (mode == "euler") {
    emit_series(equivariant ? equivariant_euler_series(chi, order)
                            : euler_series(chi, order),
                json);
    return 0;
  }
  const GradedDimension phi = GradedDimension::parse(betti_text);
  if (mode == "macdonald")
    emit_series(macdonald_series(phi, order), json);
  else if (mode == "orbifold")
    emit_series(orbifold_series(phi, order), json);
  else
    emit_series(loop_series(phi, order), json);
  return 0;
}

struct DegreeRow {
  Permutation tau, sigma;
  int o_tau, o_sigma, o_pair, o_prod, deg_e, deg_cr, slack;
};

DegreeRow degree_row(const Permutation& tau, const Permutation& sigma, int dim) {
  DegreeRow row;
  row.tau = tau;
  row.sigma = sigma;
  row.o_tau = orbit_structure(tau).orbit_count();
  row.o_sigma = orbit_structure(sigma).orbit_count();
  row.o_pair = orbit_structure(tau, sigma).orbit_count();
  row.o_prod = orbit_structure(compose(tau, sigma)).orbit_count();
  row.deg_e = excess_euler_degree(tau, sigma, dim);
  row.deg_cr = chen_ruan_degree(tau, sigma, dim);
  row.slack = row.deg_e - 2 * row.deg_cr;
  return row;
}

int run_degrees(int n, int dim, bool up_to_conjugacy, bool json) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("degree table size bound: 1 <= n <= 7");
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument(
        "the age-style degree column requires an even positive --dim");

  std::vector<DegreeRow> rows;
  if (up_to_conjugacy) {
    for (const CycleType& ct : partitions(n)) {
      const Permutation t = representative(ct);
      const std::vector<Permutation> gens = centralizer_generators(ct);
      std::set<Permutation> visited;
      for (const Permutation& sigma : all_permutations(n)) {
        if (visited.count(sigma)) continue;
        std::vector<Permutation> queue{sigma};
        visited.insert(sigma);
        while (!queue.empty()) {
          const Permutation cur = queue.back();
          queue.pop_back();
          for (const Permutation& g : gens) {
            const Permutation moved = conjugate(cur, g);
            if (visited.insert(moved).second) queue.push_back(moved);
          }
        }
        rows.push_back(degree_row(t, sigma, dim));
      }
    }
  } else {
    const std::vector<Permutation> group = all_permutations(n);
    for (const Permutation& tau : group)
      for (const Permutation& sigma : group)
        rows.push_back(degree_row(tau, sigma, dim));
  }

  if (json) {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const DegreeRow& r : rows)
      rows_json.push_back({{"tau", r.tau.str()},
                           {"sigma", r.sigma.str()},
                           {"orbits_tau", r.o_tau},
                           {"orbits_sigma", r.o_sigma},
                           {"orbits_pair", r.o_pair},
                           {"orbits_product", r.o_prod},
                           {"excess_degree", r.deg_e},
                           {"chen_ruan_degree", r.deg_cr},
                           {"slack", r.slack}});
    const nlohmann::json doc = {{"n", n},
                                {"dim", dim},
                                {"up_to_conjugacy", up_to_conjugacy},
                                {"rows", rows_json}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "tau\tsigma\to_tau\to_sigma\to_pair\to_prod\tdeg_e\tdeg_cr\tslack\n";
    for (const DegreeRow& r : rows)
      std::cout << r.tau.str() << "\t" << r.sigma.str() << "\t" << r.o_tau << "\t"
                << r.o_sigma << "\t" << r.o_pair << "\t" << r.o_prod << "\t"
                << r.deg_e << "\t" << r.deg_cr << "\t" << r.slack << "\n";
  }
  return 0;
}

CohomologyModel resolve_model(const std::string& model_file,
                              const std::string& model_kind, int dim) {
  if (!model_file.empty()) {
    std::ifstream in(model_file);
    if (!in)
      throw std::invalid_argument("cannot read model file '" + model_file + "'");
    nlohmann::json doc;
    in >> doc;
    return CohomologyModel::from_json(doc);
  }
  if (dim <= 0)
    throw std::invalid_argument("builtin models need a positive --dim");
  if (model_kind == "sphere") return CohomologyModel::sphere(dim);
  if (model_kind == "torus") return CohomologyModel::torus(dim);
  throw std::invalid_argument("unknown model '" + model_kind + "'");
}

std::vector<std::string> table_diff(const MultiplicationTable& vip,
                                    const MultiplicationTable& cs) {
  std::vector<std::string> diff;
  if (vip.basis.size() != cs.basis.size()) {
    diff.push_back("basis sizes differ: " + std::to_string(vip.basis.size()) +
                   " vs " + std::to_string(cs.basis.size()));
    return diff;
  }
  auto render = [](const SparseVec& entry) {
    if (entry.empty()) return std::string("0");
    std::string out;
    for (size_t t = 0; t < entry.size(); ++t) {
      if (t > 0) out += " + ";
      out += to_string(entry[t].second) + "*[" + std::to_string(entry[t].first) + "]";
    }
    return out;
  };
  for (size_t i = 0; i < vip.entries.size(); ++i)
    for (size_t j = 0; j < vip.entries[i].size(); ++j)
      if (vip.entries[i][j] != cs.entries[i][j])
        diff.push_back("[" + std::to_string(i) + "]*[" + std::to_string(j) +
                       "]: vip = " + render(vip.entries[i][j]) +
                       ", cs = " + render(cs.entries[i][j]));
  return diff;
}

int run_ring(const std::string& model_file, const std::string& model_kind, int dim,
             int n, const std::string& product, bool json, std::size_t ring_cells) {
  const CohomologyModel model = resolve_model(model_file, model_kind, dim);
  if (product == "vip" || product == "cs") {
    const ProductKind kind = product == "vip" ? ProductKind::Vip : ProductKind::Cs;
    const MultiplicationTable table = multiplication_table(model, n, kind, ring_cells);
    if (json)
      std::cout << table.to_json().dump(2) << "\n";
    else
      std::cout << table.str();
    return 0;
  }
  if (product != "both")
    throw std::invalid_argument("unknown product '" + product + "'");

  const MultiplicationTable vip =
      multiplication_table(model, n, ProductKind::Vip, ring_cells);
  const MultiplicationTable cs =
      multiplication_table(model, n, ProductKind::Cs, ring_cells);
  const std::vector<std::string> diff = table_diff(vip, cs);
  if (json) {
    nlohmann::json doc = {{"vip", vip.to_json()},
                          {"cs", cs.to_json()},
                          {"diff", diff},
                          {"match", diff.empty()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << vip.str();
    std::cout << cs.str();
    std::cout << "diff (vip vs cs):\n";
    for (const std::string& line : diff) std::cout << "  " << line << "\n";
    if (diff.empty()) std::cout << "  none\n";
  }
  return diff.empty() ? 0 : 1;
}

int run_verify(const std::string& suite, int max_n, bool json,
               const CellCaps& caps) {
  if (max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
  VerifyOptions opt;
  opt.max_n = max_n;
  opt.oracle_cells = caps.oracle;
  opt.ring_cells = caps.ring;
  const std::vector<SuiteReport> reports = run_suites(suite, opt);
  if (json)
    std::cout << report_json(reports).dump(2) << "\n";
  else
    std::cout << report_text(reports);
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric product orbifold series and ring calculator"};
  app.require_subcommand(1);

  std::string betti_text;
  long chi = 0;
  bool equivariant = false;
  int order = 0;
  bool series_json_flag = false;

  CLI::App* series_cmd =
      app.add_subcommand("series", "truncated generating series");
  series_cmd->require_subcommand(1);
  CLI::App* mac = series_cmd->add_subcommand(
      "macdonald", "symmetric product series from a betti list");
  mac->add_option("--betti", betti_text, "betti list b0,b1,...")->required();
  mac->add_option("--order", order, "truncation order")->required();
  mac->add_flag("--json", series_json_flag, "emit json");
  CLI::App* orb = series_cmd->add_subcommand(
      "orbifold", "all-sector series from a betti list");
  orb->add_option("--betti", betti_text, "betti list b0,b1,...")->required();
  orb->add_option("--order", order, "truncation order")->required();
  orb->add_flag("--json", series_json_flag, "emit json");
  CLI::App* loop = series_cmd->add_subcommand(
      "loop", "loop-space series from a loop betti list");
  loop->add_option("--loop-betti", betti_text, "betti list of the loop space")
      ->required();
  loop->add_option("--order", order, "truncation order")->required();
  loop->add_flag("--json", series_json_flag, "emit json");
  CLI::App* euler = series_cmd->add_subcommand(
      "euler", "euler-characteristic specialization series");
  euler->add_option("--chi", chi, "euler characteristic")->required();
  euler->add_option("--order", order, "truncation order")->required();
  euler->add_flag("--equivariant", equivariant,
                  "product over all twist levels instead of (1-q)^-chi");
  euler->add_flag("--json", series_json_flag, "emit json");

  int degrees_n = 0;
  int degrees_dim = 0;
  bool up_to_conjugacy = false;
  bool degrees_json_flag = false;
  CLI::App* degrees_cmd =
      app.add_subcommand("degrees", "degree table over all sector pairs");
  degrees_cmd->add_option("--n", degrees_n, "symmetric group degree (1..7)")
      ->required();
  degrees_cmd->add_option("--dim", degrees_dim, "base dimension (even)")->required();
  degrees_cmd->add_flag("--up-to-conjugacy", up_to_conjugacy,
                        "one row per simultaneous conjugacy class");
  degrees_cmd->add_flag("--json", degrees_json_flag, "emit json");

  std::string ring_model = "sphere";
  std::string ring_model_file;
  int ring_dim = 0;
  int ring_n = 0;
  std::string ring_product = "both";
  bool ring_json_flag = false;
  CLI::App* ring_cmd = app.add_subcommand("ring", "sector ring computations");
  ring_cmd->require_subcommand(1);
  CLI::App* table_cmd =
      ring_cmd->add_subcommand("table", "invariant multiplication table");
  table_cmd->add_option("--model", ring_model, "builtin model: sphere or torus");
  table_cmd->add_option("--dim", ring_dim, "builtin model dimension");
  table_cmd->add_option("--model-file", ring_model_file,
                        "json cohomology model document");
  table_cmd->add_option("--n", ring_n, "symmetric group degree")->required();
  table_cmd->add_option("--product", ring_product, "vip, cs, or both");
  table_cmd->add_flag("--json", ring_json_flag, "emit json");

  std::string suite;
  int max_n = 4;
  bool verify_json_flag = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "invariant suites");
  verify_cmd
      ->add_option("--suite", suite,
                   "macdonald, series, degrees, cocycle, ring, or all")
      ->required();
  verify_cmd->add_option(
      "--max-n", max_n,
      "symmetric group bound for the degrees/cocycle/ring suites");
  verify_cmd->add_flag("--json", verify_json_flag, "emit json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const CellCaps caps = read_cell_caps();
  try {
    if (series_cmd->parsed()) {
      std::string mode;
      if (mac->parsed()) mode = "macdonald";
      if (orb->parsed()) mode = "orbifold";
      if (loop->parsed()) mode = "loop";
      if (euler->parsed()) mode = "euler";
      return run_series(mode, betti_text, chi, equivariant, order,
                        series_json_flag);
    }
    if (degrees_cmd->parsed())
      return run_degrees(degrees_n, degrees_dim, up_to_conjugacy,
                         degrees_json_flag);
    if (table_cmd->parsed())
      return run_ring(ring_model_file, ring_model, ring_dim, ring_n, ring_product,
                      ring_json_flag, caps.ring);
    if (verify_cmd->parsed())
      return run_verify(suite, max_n, verify_json_flag, caps);
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
