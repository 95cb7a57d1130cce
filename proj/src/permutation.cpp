#include "symorb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symorb {

namespace {

void check_degree_match(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degrees differ: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

}  // namespace

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::from_images(std::vector<int> zero_based) {
  const int n = static_cast<int>(zero_based.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : zero_based) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("image word is not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
  Permutation p;
  p.img_ = std::move(zero_based);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (int v : images) img.push_back(v - 1);
  return from_images(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> images;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation: '" + text + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw std::invalid_argument("malformed permutation: '" + text + "'");
    images.push_back(v);
  }
  if (images.empty())
    throw std::invalid_argument("malformed permutation: '" + text + "'");
  return from_one_based(images);
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("transposition point out of range");
  std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
  return p;
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  Permutation p = identity(n);
  const size_t k = points.size();
  for (size_t i = 0; i < k; ++i) {
    int from = points[i];
    int to = points[(i + 1) % k];
    if (from < 0 || from >= n)
      throw std::invalid_argument("cycle point out of range");
    p.img_[static_cast<size_t>(from)] = to;
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : p.img_) {
    if (seen[static_cast<size_t>(v)])
      throw std::invalid_argument("cycle points repeat");
    seen[static_cast<size_t>(v)] = 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i] + 1);
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_degree_match(p, q);
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<size_t>(i)] = q(p(i));
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<size_t>(p(i))] = i;
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& k) {
  check_degree_match(p, k);
  std::vector<int> img(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<size_t>(k(i))] = k(p(i));
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

CycleType CycleType::of(const Permutation& p) {
  CycleType ct;
  ct.n_ = p.degree();
  std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
      seen[static_cast<size_t>(j)] = 1;
      ++len;
    }
    ++ct.counts_[len];
  }
  return ct;
}

CycleType CycleType::from_parts(std::vector<int> parts) {
  CycleType ct;
  for (int part : parts) {
    if (part <= 0) throw std::invalid_argument("cycle length must be positive");
    ++ct.counts_[part];
    ct.n_ += part;
  }
  return ct;
}

int CycleType::count(int length) const {
  auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

int CycleType::cycle_count() const {
  int total = 0;
  for (auto& [len, mult] : counts_) total += mult;
  return total;
}

std::string CycleType::str() const {
  if (counts_.empty()) return "()";
  std::string out;
  for (auto& [len, mult] : counts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len) + "^" + std::to_string(mult);
  }
  return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& parts,
                    std::vector<CycleType>& out) {
  if (n == 0) {
    out.push_back(CycleType::from_parts(parts));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    parts.push_back(k);
    partitions_rec(n - k, k, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<CycleType> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<CycleType> out;
  std::vector<int> parts;
  partitions_rec(n, n == 0 ? 1 : n, parts, out);
  return out;
}

Int centralizer_order(const CycleType& ct) {
  Int order = 1;
  for (auto& [len, mult] : ct.counts())
    order *= int_pow(Int(len), static_cast<unsigned>(mult)) *
             factorial(static_cast<unsigned>(mult));
  return order;
}

Int conjugacy_class_size(const CycleType& ct) {
  Int cls = factorial(static_cast<unsigned>(ct.total())) / centralizer_order(ct);
  return cls;
}

Permutation representative(const CycleType& ct) {
  std::vector<int> img(static_cast<size_t>(ct.total()));
  int base = 0;
  for (auto& [len, mult] : ct.counts()) {
    for (int rep = 0; rep < mult; ++rep) {
      for (int i = 0; i < len; ++i)
        img[static_cast<size_t>(base + i)] = base + (i + 1) % len;
      base += len;
    }
  }
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> centralizer_generators(const CycleType& ct) {
  const int n = ct.total();
  std::vector<Permutation> gens;
  int base = 0;
  for (auto& [len, mult] : ct.counts()) {
    for (int rep = 0; rep < mult; ++rep) {
      if (len > 1) {
        std::vector<int> pts(static_cast<size_t>(len));
        std::iota(pts.begin(), pts.end(), base);
        gens.push_back(Permutation::cycle(n, pts));
      }
      if (rep + 1 < mult) {
        Permutation swap = Permutation::identity(n);
        std::vector<int> img = swap.images();
        for (int i = 0; i < len; ++i) {
          img[static_cast<size_t>(base + i)] = base + len + i;
          img[static_cast<size_t>(base + len + i)] = base + i;
        }
        gens.push_back(Permutation::from_images(std::move(img)));
      }
      base += len;
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return gens;
}

std::vector<std::vector<int>> OrbitStructure::orbits() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(orbit_count()));
  for (int i = 0; i < degree(); ++i)
    out[static_cast<size_t>(orbit_of[static_cast<size_t>(i)])].push_back(i);
  return out;
}

bool OrbitStructure::coarsens(const OrbitStructure& finer) const {
  if (degree() != finer.degree()) return false;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (finer.orbit_of[static_cast<size_t>(i)] == finer.orbit_of[static_cast<size_t>(j)] &&
          orbit_of[static_cast<size_t>(i)] != orbit_of[static_cast<size_t>(j)])
        return false;
  return true;
}

OrbitStructure orbit_structure(std::span<const Permutation> generators, int n) {
  for (const Permutation& g : generators)
    if (g.degree() != n)
      throw std::invalid_argument("generator degree does not match n");
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;  // keep the minimal element as root
  };
  for (const Permutation& g : generators)
    for (int i = 0; i < n; ++i) unite(i, g(i));

  OrbitStructure os;
  os.orbit_of.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (os.orbit_of[static_cast<size_t>(root)] < 0) {
      os.orbit_of[static_cast<size_t>(root)] = static_cast<int>(os.orbit_sizes.size());
      os.orbit_sizes.push_back(0);
    }
    os.orbit_of[static_cast<size_t>(i)] = os.orbit_of[static_cast<size_t>(root)];
    ++os.orbit_sizes[static_cast<size_t>(os.orbit_of[static_cast<size_t>(i)])];
  }
  return os;
}

OrbitStructure orbit_structure(const Permutation& p) {
  return orbit_structure(std::span<const Permutation>(&p, 1), p.degree());
}

OrbitStructure orbit_structure(const Permutation& p, const Permutation& q) {
  check_degree_match(p, q);
  const Permutation gens[2] = {p, q};
  return orbit_structure(std::span<const Permutation>(gens, 2), p.degree());
}

OrbitStructure singleton_orbits(int n) {
  return orbit_structure(std::span<const Permutation>(), n);
}

int excess_euler_degree(const Permutation& p, const Permutation& q, int d) {
  check_degree_match(p, q);
  if (d < 0) throw std::invalid_argument("negative fiber dimension");
  const int n = p.degree();
  const int joint = orbit_structure(p, q).orbit_count();
  const int op = orbit_structure(p).orbit_count();
  const int oq = orbit_structure(q).orbit_count();
  return d * (n + joint - op - oq);
}

int chen_ruan_degree(const Permutation& p, const Permutation& q, int d) {
  check_degree_match(p, q);
  if (d < 0 || d % 2 != 0)
    throw std::invalid_argument("degree shift needs even fiber dimension");
  const int n = p.degree();
  const int joint = orbit_structure(p, q).orbit_count();
  const int op = orbit_structure(p).orbit_count();
  const int oq = orbit_structure(q).orbit_count();
  const int opq = orbit_structure(compose(p, q)).orbit_count();
  return (d / 2) * (n + 2 * joint - op - oq - opq);
}

std::vector<int> excess_multiplicities(const Permutation& p, const Permutation& q) {
  check_degree_match(p, q);
  const OrbitStructure joint = orbit_structure(p, q);
  const OrbitStructure po = orbit_structure(p);
  const OrbitStructure qo = orbit_structure(q);
  std::vector<int> mult(static_cast<size_t>(joint.orbit_count()));
  std::vector<char> p_seen(static_cast<size_t>(po.orbit_count()), 0);
  std::vector<char> q_seen(static_cast<size_t>(qo.orbit_count()), 0);
  for (size_t o = 0; o < mult.size(); ++o)
    mult[o] = joint.orbit_sizes[o] + 1;
  for (int i = 0; i < p.degree(); ++i) {
    const size_t o = static_cast<size_t>(joint.orbit_of[static_cast<size_t>(i)]);
    if (!p_seen[static_cast<size_t>(po.orbit_of[static_cast<size_t>(i)])]) {
      p_seen[static_cast<size_t>(po.orbit_of[static_cast<size_t>(i)])] = 1;
      --mult[o];
    }
    if (!q_seen[static_cast<size_t>(qo.orbit_of[static_cast<size_t>(i)])]) {
      q_seen[static_cast<size_t>(qo.orbit_of[static_cast<size_t>(i)])] = 1;
      --mult[o];
    }
  }
  return mult;
}

}  // namespace symorb
