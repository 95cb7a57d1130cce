#include "symorb/model.hpp"

#include <algorithm>
#include <optional>

namespace symorb {

namespace {

using nlohmann::json;

Rat read_rat(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rat(value.get<long>());
    if (value.is_string()) return parse_rat(value.get<std::string>());
  } catch (const std::exception&) {
  }
  throw ModelError("parse error: bad rational in " + where);
}

json rat_json(const Rat& value) { return to_string(value); }

}  // namespace

int CohomologyModel::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  throw ModelError("unknown basis name '" + name + "'");
}

RatVec CohomologyModel::cup(const RatVec& u, const RatVec& v) const {
  RatVec out = RatVec::Zero(rank());
  for (int a = 0; a < rank(); ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < rank(); ++b) {
      if (v[b] == 0) continue;
      const Rat scale = u[a] * v[b];
      const RatVec& basis = cup(a, b);
      for (int c = 0; c < rank(); ++c)
        if (basis[c] != 0) out[c] += scale * basis[c];
    }
  }
  return out;
}

void CohomologyModel::finalize() {
  const int r = rank();
  if (r == 0) throw ModelError("basis is empty");
  if (dimension_ <= 0) throw ModelError("dimension must be positive");
  for (int i = 0; i < r; ++i) {
    if (names_[static_cast<size_t>(i)].empty()) throw ModelError("empty basis name");
    for (int j = i + 1; j < r; ++j)
      if (names_[static_cast<size_t>(i)] == names_[static_cast<size_t>(j)])
        throw ModelError("duplicate basis name '" + names_[static_cast<size_t>(i)] + "'");
    if (degree(i) < 0 || degree(i) > dimension_)
      throw ModelError("basis degree out of range at '" + name(i) + "'");
  }

  int units = 0, tops = 0;
  for (int i = 0; i < r; ++i) {
    if (degree(i) == 0) {
      unit_ = i;
      ++units;
    }
    if (degree(i) == dimension_) {
      top_ = i;
      ++tops;
    }
  }
  if (units != 1) throw ModelError("unit: degree 0 component must be one-dimensional");
  if (tops != 1) throw ModelError("degree d component must be one-dimensional");

  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const RatVec& prod = cup(a, b);
      if (prod.size() != r) throw ModelError("cup table has a malformed entry");
      for (int c = 0; c < r; ++c)
        if (prod[c] != 0 && degree(c) != degree(a) + degree(b))
          throw ModelError("graded commutativity: cup not graded at (" + name(a) +
                           ", " + name(b) + ")");
    }

  for (int a = 0; a < r; ++a) {
    const RatVec expect = RatVec::Unit(r, a);
    if (!equal(cup(unit_, a), expect) || !equal(cup(a, unit_), expect))
      throw ModelError("unit law fails at '" + name(a) + "'");
  }

  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const int sign = (degree(a) % 2 == 1 && degree(b) % 2 == 1) ? -1 : 1;
      const RatVec expect = cup(a, b) * Rat(sign);
      if (!equal(cup(b, a), expect))
        throw ModelError("graded commutativity fails at (" + name(a) + ", " +
                         name(b) + ")");
    }

  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const RatVec left = cup(cup(a, b), RatVec(RatVec::Unit(r, c)));
        const RatVec right = cup(RatVec(RatVec::Unit(r, a)), cup(b, c));
        if (!equal(left, right))
          throw ModelError("associativity fails at (" + name(a) + ", " + name(b) +
                           ", " + name(c) + ")");
      }

  RatMat derived = RatMat::Zero(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) derived(a, b) = cup(a, b)[top_];
  if (pairing_.size() != 0) {
    if (pairing_.rows() != r || pairing_.cols() != r)
      throw ModelError("pairing matrix has the wrong shape");
    if (!equal(pairing_, derived))
      throw ModelError("pairing inconsistent with the cup table");
  }
  pairing_ = derived;
  if (rank_exact(pairing_) != r) throw ModelError("pairing degenerate");

  if (euler_.size() == 0) euler_ = RatVec::Zero(r);
  if (euler_.size() != r) throw ModelError("euler class has the wrong shape");
  for (int c = 0; c < r; ++c)
    if (euler_[c] != 0 && degree(c) != dimension_)
      throw ModelError("euler class must be homogeneous of degree d");
}

CohomologyModel CohomologyModel::sphere(int dimension) {
  if (dimension <= 0 || dimension % 2 != 0)
    throw ModelError("sphere model needs positive even dimension");
  CohomologyModel m;
  m.kind_ = Kind::Sphere;
  m.label_ = "sphere(" + std::to_string(dimension) + ")";
  m.dimension_ = dimension;
  m.names_ = {"1", "x"};
  m.degrees_ = {0, dimension};
  m.cup_.assign(2, std::vector<RatVec>(2, RatVec::Zero(2)));
  m.cup_[0][0] = RatVec::Unit(2, 0);
  m.cup_[0][1] = RatVec::Unit(2, 1);
  m.cup_[1][0] = RatVec::Unit(2, 1);
  m.cup_[1][1] = RatVec::Zero(2);
  m.euler_ = RatVec::Zero(2);
  m.euler_[1] = 2;
  m.finalize();
  return m;
}

CohomologyModel CohomologyModel::torus(int dimension) {
  if (dimension <= 0) throw ModelError("torus model needs positive dimension");
  if (dimension > 10) throw ModelError("torus model dimension too large");
  CohomologyModel m;
  m.kind_ = Kind::Torus;
  m.label_ = "torus(" + std::to_string(dimension) + ")";
  m.dimension_ = dimension;

  // basis = subsets of the generators, ordered by degree then bitmask
  const int r = 1 << dimension;
  std::vector<unsigned> masks;
  masks.reserve(static_cast<size_t>(r));
  for (unsigned mask = 0; mask < static_cast<unsigned>(r); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> position(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) position[masks[static_cast<size_t>(i)]] = i;

  for (unsigned mask : masks) {
    std::string name;
    if (mask == 0) {
      name = "1";
    } else {
      for (int g = 0; g < dimension; ++g)
        if (mask & (1u << g)) name += "t" + std::to_string(g + 1);
    }
    m.names_.push_back(name);
    m.degrees_.push_back(__builtin_popcount(mask));
  }

  m.cup_.assign(static_cast<size_t>(r), std::vector<RatVec>(static_cast<size_t>(r)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      RatVec prod = RatVec::Zero(r);
      const unsigned ma = masks[static_cast<size_t>(a)];
      const unsigned mb = masks[static_cast<size_t>(b)];
      if ((ma & mb) == 0) {
        // sign of interleaving the two ordered generator lists
        int inversions = 0;
        for (int ga = 0; ga < dimension; ++ga)
          if (ma & (1u << ga))
            for (int gb = 0; gb < ga; ++gb)
              if (mb & (1u << gb)) ++inversions;
        prod[position[ma | mb]] = (inversions % 2 == 0) ? 1 : -1;
      }
      m.cup_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(prod);
    }
  m.euler_ = RatVec::Zero(r);
  m.finalize();
  return m;
}

CohomologyModel CohomologyModel::from_json(const json& doc) {
  CohomologyModel m;
  m.kind_ = Kind::Custom;
  m.label_ = "custom";
  try {
    m.dimension_ = doc.at("dimension").get<int>();
    for (const json& entry : doc.at("basis")) {
      m.names_.push_back(entry.at("name").get<std::string>());
      m.degrees_.push_back(entry.at("degree").get<int>());
    }
  } catch (const json::exception& e) {
    throw ModelError(std::string("parse error: ") + e.what());
  }
  const int r = m.rank();
  if (r == 0) throw ModelError("basis is empty");
  // validate the basis block before resolving cup references into it
  for (int i = 0; i < r; ++i) {
    if (m.names_[static_cast<size_t>(i)].empty())
      throw ModelError("empty basis name");
    for (int j = 0; j < i; ++j)
      if (m.names_[static_cast<size_t>(j)] == m.names_[static_cast<size_t>(i)])
        throw ModelError("duplicate basis name '" +
                         m.names_[static_cast<size_t>(i)] + "'");
  }

  auto resolve = [&](const std::string& name) { return m.index_of(name); };

  std::vector<std::vector<char>> given(static_cast<size_t>(r),
                                       std::vector<char>(static_cast<size_t>(r), 0));
  m.cup_.assign(static_cast<size_t>(r),
                std::vector<RatVec>(static_cast<size_t>(r), RatVec::Zero(r)));
  try {
    for (const json& entry : doc.at("cup")) {
      const int a = resolve(entry.at("a").get<std::string>());
      const int b = resolve(entry.at("b").get<std::string>());
      RatVec prod = RatVec::Zero(r);
      for (const json& term : entry.at("result")) {
        const int c = resolve(term.at("basis").get<std::string>());
        prod[c] = read_rat(term.at("coeff"), "cup result");
      }
      m.cup_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(prod);
      given[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    }

    // entries omitted from the document follow by graded commutativity
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        if (given[static_cast<size_t>(a)][static_cast<size_t>(b)] ||
            !given[static_cast<size_t>(b)][static_cast<size_t>(a)])
          continue;
        const int sign =
            (m.degree(a) % 2 == 1 && m.degree(b) % 2 == 1) ? -1 : 1;
        m.cup_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            m.cup_[static_cast<size_t>(b)][static_cast<size_t>(a)] * Rat(sign);
      }

    if (doc.contains("pairing")) {
      const json& rows = doc.at("pairing");
      if (!rows.is_array() || rows.size() != static_cast<size_t>(r))
        throw ModelError("pairing matrix has the wrong shape");
      m.pairing_ = RatMat::Zero(r, r);
      for (int a = 0; a < r; ++a) {
        const json& row = rows[static_cast<size_t>(a)];
        if (!row.is_array() || row.size() != static_cast<size_t>(r))
          throw ModelError("pairing matrix has the wrong shape");
        for (int b = 0; b < r; ++b)
          m.pairing_(a, b) = read_rat(row[static_cast<size_t>(b)], "pairing");
      }
    }

    m.euler_ = RatVec::Zero(r);
    if (doc.contains("euler_class"))
      for (const json& term : doc.at("euler_class")) {
        const int c = resolve(term.at("basis").get<std::string>());
        m.euler_[c] = read_rat(term.at("coeff"), "euler_class");
      }
  } catch (const json::exception& e) {
    throw ModelError(std::string("parse error: ") + e.what());
  }

  m.finalize();

  if (doc.contains("unit")) {
    const std::string declared = doc.at("unit").get<std::string>();
    if (m.index_of(declared) != m.unit_)
      throw ModelError("unit: declared unit '" + declared +
                       "' is not the degree 0 generator");
  }
  return m;
}

nlohmann::json CohomologyModel::to_json() const {
  json doc;
  doc["dimension"] = dimension_;
  json basis = json::array();
  for (int i = 0; i < rank(); ++i)
    basis.push_back({{"name", name(i)}, {"degree", degree(i)}});
  doc["basis"] = basis;
  doc["unit"] = name(unit_);
  json cup_entries = json::array();
  for (int a = 0; a < rank(); ++a)
    for (int b = 0; b < rank(); ++b) {
      const RatVec& prod = cup(a, b);
      json result = json::array();
      for (int c = 0; c < rank(); ++c)
        if (prod[c] != 0)
          result.push_back({{"basis", name(c)}, {"coeff", rat_json(prod[c])}});
      if (!result.empty())
        cup_entries.push_back({{"a", name(a)}, {"b", name(b)}, {"result", result}});
    }
  doc["cup"] = cup_entries;
  json pairing_rows = json::array();
  for (int a = 0; a < rank(); ++a) {
    json row = json::array();
    for (int b = 0; b < rank(); ++b) row.push_back(rat_json(pairing_(a, b)));
    pairing_rows.push_back(row);
  }
  doc["pairing"] = pairing_rows;
  json euler = json::array();
  for (int c = 0; c < rank(); ++c)
    if (euler_[c] != 0)
      euler.push_back({{"basis", name(c)}, {"coeff", rat_json(euler_[c])}});
  doc["euler_class"] = euler;
  return doc;
}

}  // namespace symorb
