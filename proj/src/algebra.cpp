#include "aisr/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace aisr {

struct SemiringBuilder {
  static FiniteSemiring make(std::vector<std::string> elements, Table add, Table mul) {
    return FiniteSemiring(std::move(elements), std::move(add), std::move(mul));
  }
};

struct CongruenceBuilder {
  static Congruence make(std::vector<Congruence::Block> blocks, std::size_t n) {
    Congruence c;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    c.block_of_.assign(n, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (Element e : blocks[i]) c.block_of_[e] = i;
    c.blocks_ = std::move(blocks);
    return c;
  }
};

namespace {

void check_table(const Table& t, std::size_t n, const char* which) {
  if (t.size() != n)
    throw StructureError(std::string(which) + " table has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n)
      throw StructureError(std::string(which) + " table row " + std::to_string(r) + " has " +
                           std::to_string(t[r].size()) + " entries, expected " +
                           std::to_string(n));
    for (std::size_t c = 0; c < n; ++c)
      if (t[r][c] >= n)
        throw StructureError(std::string(which) + " table cell (" + std::to_string(r) + "," +
                             std::to_string(c) + ") is out of range");
  }
}

std::optional<AxiomViolation> first_violation(std::size_t n, const Table& add, const Table& mul) {
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) return AxiomViolation{Axiom::AddCommutative, a, b, 0};
  for (Element a = 0; a < n; ++a)
    if (add[a][a] != a) return AxiomViolation{Axiom::AddIdempotent, a, a, 0};

  auto scan = [&](Axiom axiom, auto&& holds) -> std::optional<AxiomViolation> {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!holds(a, b, c)) return AxiomViolation{axiom, a, b, c};
    return std::nullopt;
  };
  if (auto v = scan(Axiom::AddAssociative,
                    [&](Element a, Element b, Element c) {
                      return add[add[a][b]][c] == add[a][add[b][c]];
                    }))
    return v;
  if (auto v = scan(Axiom::MulAssociative,
                    [&](Element a, Element b, Element c) {
                      return mul[mul[a][b]][c] == mul[a][mul[b][c]];
                    }))
    return v;
  if (auto v = scan(Axiom::LeftDistributive,
                    [&](Element a, Element b, Element c) {
                      return mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]];
                    }))
    return v;
  return scan(Axiom::RightDistributive, [&](Element a, Element b, Element c) {
    return mul[add[a][b]][c] == add[mul[a][c]][mul[b][c]];
  });
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::AddCommutative: return "additive commutativity";
    case Axiom::AddIdempotent: return "additive idempotency";
    case Axiom::AddAssociative: return "additive associativity";
    case Axiom::MulAssociative: return "multiplicative associativity";
    case Axiom::LeftDistributive: return "left distributivity";
    case Axiom::RightDistributive: return "right distributivity";
  }
  return "?";
}

std::optional<Element> FiniteSemiring::find(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

Element FiniteSemiring::index_of(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw StructureError("unknown element '" + std::string(name) + "'");
}

ValidationResult validate_ai_semiring(std::vector<std::string> elements, Table add, Table mul) {
  const std::size_t n = elements.size();
  if (n == 0) throw StructureError("carrier is empty");
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (e.empty()) throw StructureError("element names must be nonempty");
    if (!seen.insert(e).second) throw StructureError("duplicate element name '" + e + "'");
  }
  check_table(add, n, "add");
  check_table(mul, n, "mul");

  ValidationResult result;
  result.elements = elements;
  if (auto v = first_violation(n, add, mul)) {
    result.violation = v;
  } else {
    result.semiring = SemiringBuilder::make(std::move(elements), std::move(add), std::move(mul));
  }
  return result;
}

FiniteSemiring make_semiring(std::vector<std::string> elements, Table add, Table mul) {
  auto r = validate_ai_semiring(std::move(elements), std::move(add), std::move(mul));
  if (!r.ok()) throw StructureError("not an ai-semiring: " + describe(r.elements, *r.violation));
  return std::move(*r.semiring);
}

std::string describe(const std::vector<std::string>& elements, const AxiomViolation& v) {
  auto nm = [&](Element e) { return e < elements.size() ? elements[e] : std::to_string(e); };
  std::ostringstream os;
  os << axiom_name(v.axiom) << " fails for ";
  switch (v.axiom) {
    case Axiom::AddCommutative: os << "a=" << nm(v.a) << ", b=" << nm(v.b); break;
    case Axiom::AddIdempotent: os << "a=" << nm(v.a); break;
    default: os << "a=" << nm(v.a) << ", b=" << nm(v.b) << ", c=" << nm(v.c); break;
  }
  return os.str();
}

FiniteSemiring adjoin_zero(const FiniteSemiring& s, std::string zero_name) {
  if (s.find(zero_name))
    throw StructureError("element '" + zero_name + "' already exists");
  const std::size_t n = s.size();
  const Element z = n;
  auto elements = s.elements();
  elements.push_back(std::move(zero_name));
  Table add(n + 1, std::vector<Element>(n + 1));
  Table mul(n + 1, std::vector<Element>(n + 1));
  for (Element a = 0; a <= n; ++a)
    for (Element b = 0; b <= n; ++b) {
      if (a == z) {
        add[a][b] = b;
        mul[a][b] = z;
      } else if (b == z) {
        add[a][b] = a;
        mul[a][b] = z;
      } else {
        add[a][b] = s.add(a, b);
        mul[a][b] = s.mul(a, b);
      }
    }
  return make_semiring(std::move(elements), std::move(add), std::move(mul));
}

std::optional<ZeroSplit> split_adjoined_zero(const FiniteSemiring& s) {
  const std::size_t n = s.size();
  if (n < 2) return std::nullopt;
  for (Element z = 0; z < n; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = s.add(z, x) == x && s.mul(z, x) == z && s.mul(x, z) == z;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        if (a != z && b != z) ok = s.add(a, b) != z && s.mul(a, b) != z;
    if (!ok) continue;

    std::vector<Element> keep;
    for (Element e = 0; e < n; ++e)
      if (e != z) keep.push_back(e);
    auto pos = [&](Element e) {
      return static_cast<Element>(std::find(keep.begin(), keep.end(), e) - keep.begin());
    };
    std::vector<std::string> names;
    Table add(keep.size(), std::vector<Element>(keep.size()));
    Table mul = add;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      names.push_back(s.name(keep[i]));
      for (std::size_t j = 0; j < keep.size(); ++j) {
        add[i][j] = pos(s.add(keep[i], keep[j]));
        mul[i][j] = pos(s.mul(keep[i], keep[j]));
      }
    }
    return ZeroSplit{z, make_semiring(std::move(names), std::move(add), std::move(mul))};
  }
  return std::nullopt;
}

CongruenceResult validate_congruence(const FiniteSemiring& s,
                                     const std::vector<std::vector<Element>>& partition) {
  const std::size_t n = s.size();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw StructureError("partition has an empty block");
    for (Element e : partition[i]) {
      if (e >= n) throw StructureError("partition mentions an element outside the carrier");
      if (owner[e] != -1) throw StructureError("element '" + s.name(e) + "' is in two blocks");
      owner[e] = static_cast<int>(i);
    }
  }
  for (Element e = 0; e < n; ++e)
    if (owner[e] == -1) throw StructureError("element '" + s.name(e) + "' is in no block");

  CongruenceResult result;
  for (Element a = 0; a < n; ++a)
    for (Element a2 = 0; a2 < n; ++a2) {
      if (owner[a] != owner[a2]) continue;
      for (Element b = 0; b < n; ++b)
        for (Element b2 = 0; b2 < n; ++b2) {
          if (owner[b] != owner[b2]) continue;
          if (owner[s.add(a, b)] != owner[s.add(a2, b2)]) {
            result.violation = CongruenceViolation{false, a, a2, b, b2};
            return result;
          }
          if (owner[s.mul(a, b)] != owner[s.mul(a2, b2)]) {
            result.violation = CongruenceViolation{true, a, a2, b, b2};
            return result;
          }
        }
    }
  result.congruence = CongruenceBuilder::make(partition, n);
  return result;
}

CongruenceResult validate_congruence(const FiniteSemiring& s,
                                     const std::vector<std::vector<std::string>>& partition) {
  std::vector<std::vector<Element>> idx;
  for (const auto& block : partition) {
    auto& out = idx.emplace_back();
    for (const auto& name : block) out.push_back(s.index_of(name));
  }
  return validate_congruence(s, idx);
}

std::string describe(const FiniteSemiring& s, const CongruenceViolation& v) {
  const char* op = v.multiplicative ? "*" : "+";
  std::ostringstream os;
  os << s.name(v.a) << " ~ " << s.name(v.a_prime) << " and " << s.name(v.b) << " ~ "
     << s.name(v.b_prime) << " but " << s.name(v.a) << op << s.name(v.b) << " = "
     << s.name(v.multiplicative ? s.mul(v.a, v.b) : s.add(v.a, v.b)) << " is not related to "
     << s.name(v.a_prime) << op << s.name(v.b_prime) << " = "
     << s.name(v.multiplicative ? s.mul(v.a_prime, v.b_prime) : s.add(v.a_prime, v.b_prime));
  return os.str();
}

FiniteSemiring quotient(const FiniteSemiring& s, const Congruence& rho) {
  const auto& blocks = rho.blocks();
  const std::size_t m = blocks.size();
  std::vector<std::string> names;
  for (const auto& b : blocks) {
    std::string nm = "{";
    for (std::size_t i = 0; i < b.size(); ++i) nm += (i ? "," : "") + s.name(b[i]);
    names.push_back(nm + "}");
  }
  Table add(m, std::vector<Element>(m));
  Table mul = add;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = rho.block_of(s.add(blocks[i].front(), blocks[j].front()));
      mul[i][j] = rho.block_of(s.mul(blocks[i].front(), blocks[j].front()));
    }
  return make_semiring(std::move(names), std::move(add), std::move(mul));
}

Congruence identity_congruence(const FiniteSemiring& s) {
  std::vector<Congruence::Block> blocks;
  for (Element e = 0; e < s.size(); ++e) blocks.push_back({e});
  return CongruenceBuilder::make(std::move(blocks), s.size());
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteSemiring& s,
                                                     const FiniteSemiring& t, std::size_t cap) {
  if (s.size() > cap || t.size() > cap)
    throw SizeError("isomorphism search is capped at " + std::to_string(cap) + " elements");
  if (s.size() != t.size()) return std::nullopt;
  const std::size_t n = s.size();
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), Element{0});
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        ok = f[s.add(a, b)] == t.add(f[a], f[b]) && f[s.mul(a, b)] == t.mul(f[a], f[b]);
    if (ok) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

FiniteSemiring builtin(std::string_view name) {
  if (name == "S7") {
    // 1, a, 0
    return make_semiring({"1", "a", "0"},
                         {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}},
                         {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
  }
  if (name == "S7_0") {
    // 1, a, 0, ∞
    return make_semiring({"1", "a", "0", "∞"},
                         {{0, 2, 2, 0}, {2, 1, 2, 1}, {2, 2, 2, 2}, {0, 1, 2, 3}},
                         {{0, 1, 2, 3}, {1, 2, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}});
  }
  if (name == "D2") {
    // 0, 1 with + as join and * as meet
    return make_semiring({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
  }
  if (name == "trivial") return make_semiring({"1"}, {{0}}, {{0}});
  throw std::invalid_argument("unknown built-in semiring '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"S7", "S7_0", "D2", "trivial"}; }

std::string to_json(const FiniteSemiring& s) {
  nlohmann::ordered_json doc;
  doc["elements"] = s.elements();
  auto table = [&](const Table& t) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t) {
      auto r = nlohmann::ordered_json::array();
      for (Element e : row) r.push_back(s.name(e));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  doc["add"] = table(s.add_table());
  doc["mul"] = table(s.mul_table());
  return doc.dump(2) + "\n";
}

ValidationResult semiring_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructureError(std::string("semiring file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StructureError("semiring file must be a JSON object");
  for (const char* key : {"elements", "add", "mul"})
    if (!doc.contains(key) || !doc[key].is_array())
      throw StructureError(std::string("semiring file needs an array field '") + key + "'");

  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw StructureError("element names must be strings");
    elements.push_back(e.get<std::string>());
  }
  auto lookup = [&](const nlohmann::json& cell) -> Element {
    if (!cell.is_string()) throw StructureError("table entries must be element names");
    auto name = cell.get<std::string>();
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw StructureError("table entry '" + name + "' is not an element");
    return static_cast<Element>(it - elements.begin());
  };
  auto table = [&](const nlohmann::json& rows) {
    Table t;
    for (const auto& row : rows) {
      if (!row.is_array()) throw StructureError("table rows must be arrays");
      auto& out = t.emplace_back();
      for (const auto& cell : row) out.push_back(lookup(cell));
    }
    return t;
  };
  return validate_ai_semiring(std::move(elements), table(doc["add"]), table(doc["mul"]));
}

}  // namespace aisr
