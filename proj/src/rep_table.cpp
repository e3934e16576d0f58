#include <limits>

#include "pureartin/errors.hpp"
#include "pureartin/lkb.hpp"

namespace pureartin {

namespace {

using json = nlohmann::ordered_json;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InvalidInput("coefficient does not fit a 64-bit JSON integer");
  return z.get_si();
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw InvalidInput(std::string("table is missing field '") + key + "'");
  return obj.at(key);
}

long as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return v.get<long>();
}

}  // namespace

RepTable parse_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("table parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("table must be a JSON object");

  RepTable table;
  const auto& type = require(doc, "type");
  if (!type.is_string()) throw InvalidInput("table field 'type' must be a string");
  table.type = TypeId::parse(type.get<std::string>());
  const long dim = as_int(require(doc, "dimension"), "dimension");
  if (dim < 1) throw InvalidInput("table dimension must be positive");
  table.dimension = static_cast<std::size_t>(dim);
  const auto& basis = require(doc, "basis");
  if (!basis.is_string()) throw InvalidInput("table field 'basis' must be a string");
  table.basis = basis.get<std::string>();
  if (doc.contains("metadata")) table.metadata = doc.at("metadata");

  const auto& gens = require(doc, "generators");
  if (!gens.is_array()) throw InvalidInput("table field 'generators' must be an array");
  const int rank = table.type.rank();
  std::vector<std::optional<MatrixL>> slots(static_cast<std::size_t>(rank));
  for (const auto& g : gens) {
    const long index = as_int(require(g, "index"), "generator index");
    if (index < 1 || index > rank)
      throw InvalidInput("generator index " + std::to_string(index) + " out of range for " +
                         table.type.name());
    auto& slot = slots[static_cast<std::size_t>(index - 1)];
    if (slot) throw InvalidInput("generator " + std::to_string(index) + " listed twice");
    MatrixL m(table.dimension, table.dimension);
    const auto& entries = require(g, "entries");
    if (!entries.is_array()) throw InvalidInput("generator entries must be an array");
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3) throw InvalidInput("entry must be [row, col, terms]");
      const long r = as_int(e[0], "row"), c = as_int(e[1], "col");
      if (r < 0 || c < 0 || r >= dim || c >= dim)
        throw InvalidInput("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                           ") outside dimension " + std::to_string(dim));
      if (!e[2].is_array()) throw InvalidInput("entry terms must be an array");
      std::vector<LaurentQT::Term> terms;
      for (const auto& t : e[2]) {
        if (!t.is_array() || t.size() != 4)
          throw InvalidInput("term must be [num, den, e_q, e_t]");
        const long num = as_int(t[0], "numerator"), den = as_int(t[1], "denominator");
        const long eq = as_int(t[2], "e_q"), et = as_int(t[3], "e_t");
        if (eq < std::numeric_limits<int>::min() || eq > std::numeric_limits<int>::max() ||
            et < std::numeric_limits<int>::min() || et > std::numeric_limits<int>::max())
          throw InvalidInput("exponent out of range");
        terms.emplace_back(Monomial{static_cast<int>(eq), static_cast<int>(et)},
                           make_rational(num, den));
      }
      if (m.find(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
        throw InvalidInput("duplicate entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
            LaurentQT::from_terms(std::move(terms)));
    }
    slot = std::move(m);
  }
  for (int i = 0; i < rank; ++i) {
    if (!slots[static_cast<std::size_t>(i)])
      throw InvalidInput("table lacks generator " + std::to_string(i + 1));
    table.generators.push_back(std::move(*slots[static_cast<std::size_t>(i)]));
  }
  return table;
}

std::string emit_table(const RepTable& table) {
  json doc = json::object();
  doc["type"] = table.type.name();
  doc["dimension"] = table.dimension;
  doc["basis"] = table.basis;
  if (!table.metadata.is_null()) doc["metadata"] = table.metadata;
  json gens = json::array();
  for (std::size_t g = 0; g < table.generators.size(); ++g) {
    json entries = json::array();
    const MatrixL& m = table.generators[g];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& [c, p] : m.row(r)) {
        json terms = json::array();
        for (const auto& [mono, coef] : p.terms())
          terms.push_back({to_int64(coef.get_num()), to_int64(coef.get_den()), mono.q_exp,
                           mono.t_exp});
        entries.push_back({r, c, std::move(terms)});
      }
    }
    json gen = json::object();
    gen["index"] = g + 1;
    gen["entries"] = std::move(entries);
    gens.push_back(std::move(gen));
  }
  doc["generators"] = std::move(gens);
  return doc.dump() + "\n";
}

RepTable builtin_typeA_table(int n) {
  const TypeId type = TypeId::make(Family::A, n);
  auto rs = root_system(type);
  const std::size_t dim = rs->size();
  // x_{j,k} (1 ≤ j < k ≤ n+1) is the root α_j + … + α_{k−1}.
  std::vector<std::vector<std::size_t>> idx(static_cast<std::size_t>(n + 2),
                                            std::vector<std::size_t>(static_cast<std::size_t>(n + 2)));
  for (int j = 1; j <= n + 1; ++j)
    for (int k = j + 1; k <= n + 1; ++k) {
      std::vector<QuadElem> coords(static_cast<std::size_t>(n), QuadElem(5));
      for (int l = j; l < k; ++l) coords[static_cast<std::size_t>(l - 1)] = QuadElem(5, Rational(1));
      idx[j][k] = *rs->index_of(coords);
    }

  const LaurentQT q = LaurentQT::q();
  const LaurentQT t = LaurentQT::t();
  const LaurentQT one(1);
  auto qpow = [](int e) { return LaurentQT::monomial(1, e, 0); };

  RepTable table;
  table.type = type;
  table.dimension = dim;
  table.metadata = nlohmann::ordered_json{{"convention", "krammer"},
                                          {"basis_labels", "x_{j,k} <-> reflection (j k)"}};
  for (int i = 1; i <= n; ++i) {
    MatrixL m(dim, dim);
    for (int j = 1; j <= n + 1; ++j) {
      for (int k = j + 1; k <= n + 1; ++k) {
        const std::size_t col = idx[j][k];
        auto put = [&](int a, int b, const LaurentQT& v) { m.add_to(idx[a][b], col, v); };
        if (i < j - 1 || i > k) {
          put(j, k, one);
        } else if (i == j - 1) {
          put(j - 1, k, one);
          put(j, k, one - q);
        } else if (i == j && j < k - 1) {
          put(i, i + 1, t * q * (q - one));
          put(j + 1, k, q);
        } else if (i == j && j == k - 1) {
          put(j, k, t * qpow(2));
        } else if (j < i && i < k - 1) {
          put(j, k, one);
          put(i, i + 1, t * qpow(i - j) * (q - one) * (q - one));
        } else if (i == k - 1 && k - 1 > j) {
          put(j, k - 1, one);
          put(i, i + 1, t * qpow(k - j) * (q - one));
        } else {  // i == k
          put(j, k, one - q);
          put(j, k + 1, q);
        }
      }
    }
    table.generators.push_back(std::move(m));
  }
  return table;
}

}  // namespace pureartin
