#include "affq/jsonio.hpp"

#include <fstream>

namespace affq {

namespace {

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

std::string need_string(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t need_int(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

ItemKind kind_from_string(const std::string& s, const std::string& where) {
  if (s == "preprojective") return ItemKind::preprojective;
  if (s == "preinjective") return ItemKind::preinjective;
  if (s == "regular") return ItemKind::regular;
  throw ParseError(where + ": unknown kind '" + s + "'");
}

std::string kind_to_string(ItemKind k) {
  switch (k) {
    case ItemKind::preprojective: return "preprojective";
    case ItemKind::preinjective: return "preinjective";
    case ItemKind::regular: return "regular";
  }
  return "?";
}

ModuleClass class_from_string(const std::string& s, const std::string& where) {
  if (s == "preprojective") return ModuleClass::preprojective;
  if (s == "regular-homogeneous") return ModuleClass::regular_homogeneous;
  if (s == "regular-inhomogeneous") return ModuleClass::regular_inhomogeneous;
  if (s == "preinjective") return ModuleClass::preinjective;
  throw ParseError(where + ": unknown class '" + s + "'");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& w : q.arrows)
    arrows.push_back({{"id", w.id},
                      {"tail", q.vertices[w.tail]},
                      {"head", q.vertices[w.head]}});
  return Json{{"vertices", q.vertices}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  const Json& vs = need(j, "vertices", "quiver");
  if (!vs.is_array() || vs.empty()) throw ParseError("quiver: 'vertices' must be a nonempty array");
  Quiver q;
  for (const Json& v : vs) {
    if (!v.is_string()) throw ParseError("quiver: 'vertices' entries must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  const Json& as = need(j, "arrows", "quiver");
  if (!as.is_array()) throw ParseError("quiver: 'arrows' must be an array");
  for (const Json& a : as) {
    Arrow w;
    w.id = need_string(a, "id", "arrow");
    const std::string tail = need_string(a, "tail", "arrow '" + w.id + "'");
    const std::string head = need_string(a, "head", "arrow '" + w.id + "'");
    w.tail = q.vertex_index(tail);
    w.head = q.vertex_index(head);
    q.arrows.push_back(w);
  }
  q.validate();
  return q;
}

Json field_to_json(const Field& f) {
  if (f.is_prime()) return Json{{"type", "prime"}, {"p", f.p()}};
  return Json{{"type", "rational"}};
}

Field field_from_json(const Json& j) {
  const std::string type = need_string(j, "type", "field");
  if (type == "prime") return Field::prime(need_int(j, "p", "field"));
  if (type == "rational") return Field::rational();
  throw ParseError("field: unknown type '" + type + "'");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) {
      if (m.field().is_prime())
        row.push_back(std::get<std::int64_t>(m.get(r, c)));
      else
        row.push_back(rat_to_string(std::get<Rat>(m.get(r, c))));
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f, int rows, int cols,
                        const std::string& where) {
  Matrix m(f, rows, cols);
  if (rows == 0 || cols == 0) {
    if (!j.is_array()) throw ParseError(where + ": matrix must be an array");
    return m;  // no entries to read; accept [] or rows of empties
  }
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) + " columns");
    for (int c = 0; c < cols; ++c) {
      const Json& e = row[c];
      if (e.is_number_integer())
        m.set_int(r, c, e.get<std::int64_t>());
      else if (e.is_string() && !f.is_prime())
        m.set(r, c, Scalar(rat_from_string(e.get<std::string>())));
      else
        throw ParseError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be an integer" + (f.is_prime() ? "" : " or 'a/b' string"));
    }
  }
  return m;
}

Json rep_to_json(const Representation& m) {
  Json dims = Json::object();
  for (int i = 0; i < m.quiver.n(); ++i) dims[m.quiver.vertices[i]] = m.dims[i];
  Json maps = Json::object();
  for (std::size_t w = 0; w < m.quiver.arrows.size(); ++w)
    if (m.maps[w].rows() > 0 && m.maps[w].cols() > 0)
      maps[m.quiver.arrows[w].id] = matrix_to_json(m.maps[w]);
  return Json{{"quiver", quiver_to_json(m.quiver)},
              {"field", field_to_json(m.field)},
              {"dims", dims},
              {"maps", maps}};
}

Representation rep_from_json(const Json& j) {
  const Quiver q = quiver_from_json(need(j, "quiver", "representation"));
  const Field f = field_from_json(need(j, "field", "representation"));
  const Json& dims = need(j, "dims", "representation");
  DimVec d(q.n(), 0);
  for (int i = 0; i < q.n(); ++i) {
    const Json& v = need(dims, q.vertices[i], "dims");
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw ParseError("dims: key '" + q.vertices[i] + "' must be a nonnegative integer");
    d[i] = v.get<std::int64_t>();
  }
  const Json& maps = need(j, "maps", "representation");
  if (!maps.is_object()) throw ParseError("representation: 'maps' must be an object");
  for (auto it = maps.begin(); it != maps.end(); ++it) q.arrow_index(it.key());  // throws on stray keys
  std::vector<Matrix> ms;
  for (const Arrow& w : q.arrows) {
    const int rows = static_cast<int>(d[w.head]), cols = static_cast<int>(d[w.tail]);
    auto it = maps.find(w.id);
    if (it == maps.end()) {
      if (rows > 0 && cols > 0) throw ParseError("maps: missing key '" + w.id + "'");
      ms.emplace_back(f, rows, cols);
    } else {
      ms.push_back(matrix_from_json(*it, f, rows, cols, "maps '" + w.id + "'"));
    }
  }
  return make_rep(q, f, d, ms);
}

Json tube_to_json(const Tube& t) {
  Json simples = Json::array();
  for (const Representation& s : t.simples) simples.push_back(rep_to_json(s));
  Json ext = Json::object();
  for (std::size_t z = 0; z < t.ext_maps.size(); ++z) {
    Json per_arrow = Json::object();
    for (std::size_t w = 0; w < t.quiver.arrows.size(); ++w)
      if (t.ext_maps[z][w].rows() > 0 && t.ext_maps[z][w].cols() > 0)
        per_arrow[t.quiver.arrows[w].id] = matrix_to_json(t.ext_maps[z][w]);
    ext[std::to_string(z)] = per_arrow;
  }
  return Json{{"period", t.period}, {"simples", simples}, {"ext_maps", ext}};
}

Tube tube_from_json(const Json& j) {
  Tube t;
  t.period = static_cast<int>(need_int(j, "period", "tube"));
  const Json& simples = need(j, "simples", "tube");
  if (!simples.is_array() || static_cast<int>(simples.size()) != t.period)
    throw ParseError("tube: 'simples' must list exactly 'period' representations");
  for (const Json& s : simples) t.simples.push_back(rep_from_json(s));
  t.quiver = t.simples.at(0).quiver;
  t.field = t.simples.at(0).field;
  const Json& ext = need(j, "ext_maps", "tube");
  for (int z = 0; z < t.period; ++z) {
    const Json& per_arrow = need(ext, std::to_string(z), "ext_maps");
    const Representation& from = t.simples[z];
    const Representation& to = t.simples[(z + t.period - 1) % t.period];
    std::vector<Matrix> row;
    for (const Arrow& w : t.quiver.arrows) {
      const int rows = static_cast<int>(to.dims[w.head]);
      const int cols = static_cast<int>(from.dims[w.tail]);
      auto it = per_arrow.find(w.id);
      if (it == per_arrow.end()) {
        if (rows > 0 && cols > 0)
          throw ParseError("ext_maps: missing arrow '" + w.id + "' at z=" + std::to_string(z));
        row.emplace_back(t.field, rows, cols);
      } else {
        row.push_back(matrix_from_json(*it, t.field, rows, cols,
                                       "ext_maps '" + w.id + "' at z=" + std::to_string(z)));
      }
    }
    t.ext_maps.push_back(row);
  }
  return t;
}

namespace {
constexpr int kInventoryVersion = 1;
}

Json inventory_to_json(const IndecomposableInventory& inv, std::uint64_t seed) {
  Json items = Json::array();
  for (const InventoryItem& it : inv.items) {
    items.push_back({{"label", it.label},
                     {"kind", kind_to_string(it.kind)},
                     {"chain", it.chain},
                     {"power", it.power},
                     {"tube", it.tube},
                     {"z", it.z},
                     {"len", it.len},
                     {"dims", it.dims},
                     {"class", module_class_name(it.cls.cls)},
                     {"defect", it.cls.defect_value},
                     {"period", it.cls.period},
                     {"rep", rep_to_json(it.rep)}});
  }
  Json tubes = Json::array();
  for (const Tube& t : inv.tubes) tubes.push_back(tube_to_json(t));
  return Json{{"version", kInventoryVersion},
              {"quiver", quiver_to_json(inv.quiver)},
              {"field", field_to_json(inv.field)},
              {"bound", inv.bound},
              {"seed", seed},
              {"items", items},
              {"tubes", tubes}};
}

IndecomposableInventory inventory_from_json(const Json& j) {
  if (need_int(j, "version", "inventory") != kInventoryVersion)
    throw ParseError("inventory: version mismatch");
  IndecomposableInventory inv;
  inv.quiver = quiver_from_json(need(j, "quiver", "inventory"));
  inv.field = field_from_json(need(j, "field", "inventory"));
  const Json& bound = need(j, "bound", "inventory");
  if (!bound.is_array() || static_cast<int>(bound.size()) != inv.quiver.n())
    throw ParseError("inventory: 'bound' must match the vertex count");
  for (const Json& b : bound) inv.bound.push_back(b.get<std::int64_t>());
  for (const Json& t : need(j, "tubes", "inventory")) inv.tubes.push_back(tube_from_json(t));
  for (const Json& it : need(j, "items", "inventory")) {
    InventoryItem item;
    item.label = need_string(it, "label", "item");
    const std::string where = "item '" + item.label + "'";
    item.kind = kind_from_string(need_string(it, "kind", where), where);
    item.chain = static_cast<int>(need_int(it, "chain", where));
    item.power = static_cast<int>(need_int(it, "power", where));
    item.tube = static_cast<int>(need_int(it, "tube", where));
    item.z = static_cast<int>(need_int(it, "z", where));
    item.len = static_cast<int>(need_int(it, "len", where));
    for (const Json& d : need(it, "dims", where)) item.dims.push_back(d.get<std::int64_t>());
    item.cls.cls = class_from_string(need_string(it, "class", where), where);
    item.cls.defect_value = need_int(it, "defect", where);
    item.cls.period = static_cast<int>(need_int(it, "period", where));
    item.rep = rep_from_json(need(it, "rep", where));
    if (item.rep.quiver != inv.quiver || dim_vector(item.rep) != item.dims)
      throw ParseError(where + ": representation does not match its metadata");
    inv.items.push_back(item);
  }
  return inv;
}

Json param_to_json(const CanonicalParam& p) {
  Json sigma = Json::object();
  for (const auto& [label, mult] : p.sigma) sigma[label] = mult;
  return Json{{"sigma", sigma}, {"lambda", p.lambda}};
}

Json hall_element_to_json(const HallElement& x) {
  Json terms = Json::array();
  for (const HallTerm& t : x.terms)
    terms.push_back({{"rep", rep_to_json(t.rep)},
                     {"coeff", Json{{"a", rat_to_string(t.coeff.a)}, {"b", rat_to_string(t.coeff.b)}}}});
  return Json{{"q", x.field.p()}, {"terms", terms}};
}

}  // namespace affq
