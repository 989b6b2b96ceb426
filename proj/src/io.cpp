#include "absolim/io.hpp"

#include <functional>
#include <initializer_list>

#include "json.hpp"

namespace absolim {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw CatError(msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing field '" + key + "'");
  return *it;
}

void only_fields(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) known = true;
    if (!known) fail(where + ": unknown field '" + item.key() + "'");
  }
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) fail(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) fail(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

BaseTag tag_from_name(const std::string& s, const std::string& where) {
  if (s == "finset") return BaseTag::finset;
  if (s == "finset_ptd") return BaseTag::finset_ptd;
  if (s == "matq") return BaseTag::matq;
  if (s == "suplat") return BaseTag::suplat;
  fail(where + ": unknown base '" + s + "'");
}

// --- objects -----------------------------------------------------------------

json emit_object(const BaseObject& o) {
  json j = json::object();
  switch (o.tag) {
    case BaseTag::finset:
    case BaseTag::finset_ptd:
      j["size"] = o.n;
      break;
    case BaseTag::matq:
      j["dim"] = o.n;
      break;
    case BaseTag::suplat: {
      j["size"] = o.n;
      json rows = json::array();
      for (int x = 0; x < o.n; ++x) {
        json row = json::array();
        for (int y = 0; y < o.n; ++y) row.push_back(int(o.lat.le(x, y)));
        rows.push_back(std::move(row));
      }
      j["leq"] = std::move(rows);
      break;
    }
  }
  return j;
}

// Wraps a library constructor so its complaint carries the document position.
template <typename F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
}

BaseObject parse_object(BaseTag tag, const json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": object description must be a JSON object");
  switch (tag) {
    case BaseTag::finset: {
      only_fields(j, {"size"}, where);
      int n = int_field(j, "size", where);
      return located(where, [&] { return finset_obj(n); });
    }
    case BaseTag::finset_ptd: {
      only_fields(j, {"size"}, where);
      int n = int_field(j, "size", where);
      return located(where, [&] { return finset_ptd_obj(n); });
    }
    case BaseTag::matq: {
      only_fields(j, {"dim"}, where);
      int n = int_field(j, "dim", where);
      return located(where, [&] { return matq_obj(n); });
    }
    case BaseTag::suplat: {
      only_fields(j, {"size", "leq"}, where);
      Lat l;
      l.n = int_field(j, "size", where);
      const json& rows = field(j, "leq", where);
      if (!rows.is_array() || int(rows.size()) != l.n)
        fail(where + ": leq must have one row per element");
      for (const json& row : rows) {
        if (!row.is_array() || int(row.size()) != l.n)
          fail(where + ": leq rows must have one entry per element");
        for (const json& v : row) {
          if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
            fail(where + ": leq entries must be 0 or 1");
          l.leq.push_back(uint8_t(v.get<int>()));
        }
      }
      std::string why = validate_lattice(l);
      if (!why.empty()) fail(where + ": " + why);
      return suplat_obj(std::move(l));
    }
  }
  fail(where + ": unknown base tag");
}

// --- morphisms (endpoints implied by context) ----------------------------------

json emit_morphism(const BaseMorphism& m) {
  json j = json::object();
  if (m.tag == BaseTag::matq) {
    json rows = json::array();
    for (int r = 0; r < m.cod.n; ++r) {
      json row = json::array();
      for (int c = 0; c < m.dom.n; ++c) row.push_back(rat_to_string(m.mat.at(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  } else {
    j["table"] = m.table;
  }
  return j;
}

BaseMorphism parse_morphism(const json& j, const BaseObject& dom, const BaseObject& cod,
                            const std::string& where) {
  if (!j.is_object()) fail(where + ": morphism must be a JSON object");
  if (dom.tag == BaseTag::matq) {
    only_fields(j, {"matrix"}, where);
    const json& rows = field(j, "matrix", where);
    if (!rows.is_array() || int(rows.size()) != cod.n)
      fail(where + ": matrix must have one row per codomain dimension (" +
           std::to_string(cod.n) + ")");
    QMat q(cod.n, dom.n);
    for (int r = 0; r < cod.n; ++r) {
      const json& row = rows[size_t(r)];
      if (!row.is_array() || int(row.size()) != dom.n)
        fail(where + ": matrix rows must have one entry per domain dimension (" +
             std::to_string(dom.n) + ")");
      for (int c = 0; c < dom.n; ++c) {
        const json& v = row[size_t(c)];
        if (!v.is_string()) fail(where + ": matrix entries must be rational strings");
        q.at(r, c) = located(where, [&] { return rat_from_string(v.get<std::string>()); });
      }
    }
    return located(where, [&] { return make_matq_morphism(dom, cod, std::move(q)); });
  }
  only_fields(j, {"table"}, where);
  const json& tj = field(j, "table", where);
  if (!tj.is_array()) fail(where + ": table must be an array");
  std::vector<int> t;
  for (const json& v : tj) {
    if (!v.is_number_integer()) fail(where + ": table entries must be integers");
    t.push_back(v.get<int>());
  }
  return located(where, [&] { return make_table_morphism(dom, cod, std::move(t)); });
}

std::vector<BaseMorphism> parse_morphism_list(
    const json& j, const char* key, size_t count, const std::string& where,
    const std::function<std::pair<BaseObject, BaseObject>(size_t)>& endpoints) {
  const json& arr = field(j, key, where);
  if (!arr.is_array() || arr.size() != count)
    fail(where + ": field '" + key + "' must list exactly " + std::to_string(count) +
         " morphisms");
  std::vector<BaseMorphism> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    auto [dom, cod] = endpoints(i);
    out.push_back(parse_morphism(arr[i], dom, cod,
                                 where + "." + key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json emit_morphism_list(const std::vector<BaseMorphism>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(emit_morphism(m));
  return arr;
}

json emit_object_list(const std::vector<BaseObject>& os) {
  json arr = json::array();
  for (const auto& o : os) arr.push_back(emit_object(o));
  return arr;
}

std::vector<BaseObject> parse_object_list(BaseTag tag, const json& j, const char* key,
                                          const std::string& where) {
  const json& arr = field(j, key, where);
  if (!arr.is_array()) fail(where + ": field '" + key + "' must be an array");
  std::vector<BaseObject> out;
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(
        parse_object(tag, arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
  return out;
}

// --- section emitters ----------------------------------------------------------

json emit_cat(const CatDecl& d) {
  json j = json::object();
  if (d.self_enriched) {
    j["self_enriched"] = true;
    j["objects"] = emit_object_list(d.objects);
    return j;
  }
  j["objects"] = emit_object_list(d.objects);
  j["hom"] = emit_object_list(d.hom);
  j["unit"] = emit_morphism_list(d.unit);
  j["comp"] = emit_morphism_list(d.comp);
  return j;
}

json emit_functor(const FunctorDecl& d) {
  json j = json::object();
  j["dom"] = d.dom;
  j["cod"] = d.cod;
  j["objects"] = d.objects;
  j["action"] = emit_morphism_list(d.action);
  return j;
}

json emit_prof(const ProfDecl& d) {
  json j = json::object();
  switch (d.kind) {
    case ProfKind::identity_of:
      j["identity_of"] = d.a;
      return j;
    case ProfKind::hom_of:
      j["hom"] = json::array({d.a, d.b});
      return j;
    case ProfKind::tensor_of:
      j["tensor"] = json::array({d.a, d.b});
      return j;
    case ProfKind::explicit_form:
      break;
  }
  j["source"] = d.source;
  j["target"] = d.target;
  j["components"] = emit_object_list(d.components);
  j["left_action"] = emit_morphism_list(d.left_action);
  j["right_action"] = emit_morphism_list(d.right_action);
  return j;
}

json emit_map(const MapDecl& d) {
  json j = json::object();
  j["dom"] = d.dom;
  j["cod"] = d.cod;
  j["components"] = emit_morphism_list(d.components);
  return j;
}

json emit_adj(const AdjDecl& d) {
  json j = json::object();
  j["weight"] = d.weight;
  j["coweight"] = d.coweight;
  j["unit"] = emit_morphism_list(d.unit);
  j["counit"] = emit_morphism_list(d.counit);
  return j;
}

json emit_case(const CaseDecl& d) {
  json j = json::object();
  j["adjunction"] = d.adjunction;
  j["diagram"] = d.diagram;
  j["apex"] = d.apex;
  if (!d.cocone.empty()) j["cocone"] = d.cocone;
  if (!d.cone.empty()) j["cone"] = d.cone;
  return j;
}

}  // namespace

// --- lookups --------------------------------------------------------------------

const VCategory& Document::category(const std::string& name) const {
  auto it = cat_values.find(name);
  if (it == cat_values.end()) fail("unknown category '" + name + "'");
  return it->second;
}

const VFunctor& Document::functor(const std::string& name) const {
  auto it = fun_values.find(name);
  if (it == fun_values.end()) fail("unknown functor '" + name + "'");
  return it->second;
}

const Profunctor& Document::profunctor(const std::string& name) const {
  auto it = prof_values.find(name);
  if (it == prof_values.end()) fail("unknown profunctor '" + name + "'");
  return it->second;
}

const ProfMap& Document::map(const std::string& name) const {
  auto it = map_values.find(name);
  if (it == map_values.end()) fail("unknown map '" + name + "'");
  return it->second;
}

const Adjunction& Document::adjunction(const std::string& name) const {
  auto it = adj_values.find(name);
  if (it == adj_values.end()) fail("unknown adjunction '" + name + "'");
  return it->second;
}

// --- parse ------------------------------------------------------------------------

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("json parse error: ") + e.what());
  }
  if (!root.is_object()) fail("document root must be an object");
  only_fields(root,
              {"format_version", "base", "categories", "functors", "profunctors", "maps",
               "adjunctions", "cases"},
              "document");
  if (str_field(root, "format_version", "document") != "1")
    fail("document: unsupported format_version");

  Document doc;
  doc.base = tag_from_name(str_field(root, "base", "document"), "document");
  const BaseTag tag = doc.base;

  auto section = [&](const char* key) -> json {
    auto it = root.find(key);
    if (it == root.end()) return json::object();
    if (!it->is_object()) fail(std::string("document: section '") + key + "' must be an object");
    return *it;
  };

  const json sec_categories = section("categories");
  for (const auto& item : sec_categories.items()) {
    const std::string where = "category '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    CatDecl d;
    VCategory v;
    v.tag = tag;
    if (j.contains("self_enriched")) {
      only_fields(j, {"self_enriched", "objects"}, where);
      if (!field(j, "self_enriched", where).is_boolean() || !j["self_enriched"].get<bool>())
        fail(where + ": self_enriched must be true when present");
      d.self_enriched = true;
      d.objects = parse_object_list(tag, j, "objects", where);
      v = located(where, [&] { return self_enriched_category(tag, d.objects); });
    } else {
      only_fields(j, {"objects", "hom", "unit", "comp"}, where);
      d.objects = parse_object_list(tag, j, "objects", where);
      d.hom = parse_object_list(tag, j, "hom", where);
      const size_t n = d.objects.size();
      if (d.hom.size() != n * n) fail(where + ": hom must list size*size objects");
      auto hom_ob = [&](size_t b, size_t a) -> const BaseObject& { return d.hom[b * n + a]; };
      d.unit = parse_morphism_list(j, "unit", n, where, [&](size_t a) {
        return std::make_pair(unit_obj(tag), hom_ob(a, a));
      });
      d.comp = parse_morphism_list(j, "comp", n * n * n, where, [&](size_t i) {
        size_t a = i % n, b = (i / n) % n, c = i / (n * n);
        return std::make_pair(tensor_obj(hom_ob(c, b), hom_ob(b, a)), hom_ob(c, a));
      });
      v.objects = d.objects;
      v.hom = d.hom;
      v.unit = d.unit;
      v.comp = d.comp;
    }
    if (doc.cat_values.count(item.key())) fail(where + ": duplicate name");
    doc.categories.emplace_back(item.key(), std::move(d));
    doc.cat_values.emplace(item.key(), std::move(v));
  }

  const json sec_functors = section("functors");
  for (const auto& item : sec_functors.items()) {
    const std::string where = "functor '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    only_fields(j, {"dom", "cod", "objects", "action"}, where);
    FunctorDecl d;
    d.dom = str_field(j, "dom", where);
    d.cod = str_field(j, "cod", where);
    VFunctor v;
    v.dom = located(where, [&]() -> const VCategory& { return doc.category(d.dom); });
    v.cod = located(where, [&]() -> const VCategory& { return doc.category(d.cod); });
    const json& obs = field(j, "objects", where);
    if (!obs.is_array() || int(obs.size()) != v.dom.size())
      fail(where + ": objects must list one target index per domain object");
    for (const json& o : obs) {
      if (!o.is_number_integer() || o.get<int>() < 0 || o.get<int>() >= v.cod.size())
        fail(where + ": object index out of range");
      d.objects.push_back(o.get<int>());
    }
    const size_t n = size_t(v.dom.size());
    d.action = parse_morphism_list(j, "action", n * n, where, [&](size_t i) {
      size_t a = i % n, b = i / n;
      return std::make_pair(v.dom.hom_ob(int(b), int(a)),
                            v.cod.hom_ob(d.objects[b], d.objects[a]));
    });
    v.object_map = d.objects;
    v.action = d.action;
    if (doc.fun_values.count(item.key())) fail(where + ": duplicate name");
    doc.functors.emplace_back(item.key(), std::move(d));
    doc.fun_values.emplace(item.key(), std::move(v));
  }

  const json sec_profunctors = section("profunctors");
  for (const auto& item : sec_profunctors.items()) {
    const std::string where = "profunctor '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    ProfDecl d;
    Profunctor v;
    auto two_names = [&](const char* key) {
      const json& arr = field(j, key, where);
      if (!arr.is_array() || arr.size() != 2 || !arr[0].is_string() || !arr[1].is_string())
        fail(where + ": field '" + std::string(key) + "' must be a pair of names");
      d.a = arr[0].get<std::string>();
      d.b = arr[1].get<std::string>();
    };
    if (j.contains("identity_of")) {
      only_fields(j, {"identity_of"}, where);
      d.kind = ProfKind::identity_of;
      d.a = str_field(j, "identity_of", where);
      v = located(where, [&] { return identity_profunctor(doc.category(d.a)); });
    } else if (j.contains("hom")) {
      only_fields(j, {"hom"}, where);
      d.kind = ProfKind::hom_of;
      two_names("hom");
      v = located(where, [&] { return hom_profunctor(doc.functor(d.a), doc.functor(d.b)); });
    } else if (j.contains("tensor")) {
      only_fields(j, {"tensor"}, where);
      d.kind = ProfKind::tensor_of;
      two_names("tensor");
      v = located(where,
                  [&] { return tensor_over(doc.profunctor(d.a), doc.profunctor(d.b)).result; });
    } else {
      only_fields(j, {"source", "target", "components", "left_action", "right_action"},
                  where);
      d.kind = ProfKind::explicit_form;
      d.source = str_field(j, "source", where);
      d.target = str_field(j, "target", where);
      v.source = located(where, [&]() -> const VCategory& { return doc.category(d.source); });
      v.target = located(where, [&]() -> const VCategory& { return doc.category(d.target); });
      d.components = parse_object_list(tag, j, "components", where);
      const size_t ns = size_t(v.source.size()), nt = size_t(v.target.size());
      if (d.components.size() != nt * ns)
        fail(where + ": components must list target*source objects");
      auto comp_ob = [&](size_t t, size_t s) -> const BaseObject& {
        return d.components[t * ns + s];
      };
      d.left_action =
          parse_morphism_list(j, "left_action", nt * nt * ns, where, [&](size_t i) {
            size_t s = i % ns, t = (i / ns) % nt, t2 = i / (ns * nt);
            return std::make_pair(
                tensor_obj(v.target.hom_ob(int(t2), int(t)), comp_ob(t, s)),
                comp_ob(t2, s));
          });
      d.right_action =
          parse_morphism_list(j, "right_action", nt * ns * ns, where, [&](size_t i) {
            size_t s2 = i % ns, s = (i / ns) % ns, t = i / (ns * ns);
            return std::make_pair(
                tensor_obj(comp_ob(t, s), v.source.hom_ob(int(s), int(s2))),
                comp_ob(t, s2));
          });
      v.components = d.components;
      v.left_action = d.left_action;
      v.right_action = d.right_action;
    }
    if (doc.prof_values.count(item.key())) fail(where + ": duplicate name");
    doc.profunctors.emplace_back(item.key(), std::move(d));
    doc.prof_values.emplace(item.key(), std::move(v));
  }

  const json sec_maps = section("maps");
  for (const auto& item : sec_maps.items()) {
    const std::string where = "map '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    only_fields(j, {"dom", "cod", "components"}, where);
    MapDecl d;
    d.dom = str_field(j, "dom", where);
    d.cod = str_field(j, "cod", where);
    ProfMap v;
    v.dom = located(where, [&]() -> const Profunctor& { return doc.profunctor(d.dom); });
    v.cod = located(where, [&]() -> const Profunctor& { return doc.profunctor(d.cod); });
    if (v.dom.source != v.cod.source || v.dom.target != v.cod.target)
      fail(where + ": dom and cod are modules over different categories");
    const size_t nt = size_t(v.dom.nt()), ns = size_t(v.dom.ns());
    d.components = parse_morphism_list(j, "components", nt * ns, where, [&](size_t i) {
      int t = int(i / ns), s = int(i % ns);
      return std::make_pair(v.dom.at(t, s), v.cod.at(t, s));
    });
    v.components = d.components;
    if (doc.map_values.count(item.key())) fail(where + ": duplicate name");
    doc.maps.emplace_back(item.key(), std::move(d));
    doc.map_values.emplace(item.key(), std::move(v));
  }

  const json sec_adjunctions = section("adjunctions");
  for (const auto& item : sec_adjunctions.items()) {
    const std::string where = "adjunction '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    only_fields(j, {"weight", "coweight", "unit", "counit"}, where);
    AdjDecl d;
    d.weight = str_field(j, "weight", where);
    d.coweight = str_field(j, "coweight", where);
    Adjunction v;
    v.weight = located(where, [&]() -> const Profunctor& { return doc.profunctor(d.weight); });
    v.coweight =
        located(where, [&]() -> const Profunctor& { return doc.profunctor(d.coweight); });
    if (v.coweight.source != v.weight.target || v.coweight.target != v.weight.source)
      fail(where + ": coweight endpoints must mirror the weight");
    Profunctor ida = identity_profunctor(v.weight.source);
    Profunctor idb = identity_profunctor(v.weight.target);
    Profunctor ucod = located(where, [&] { return tensor_over(v.coweight, v.weight).result; });
    Profunctor cdom = located(where, [&] { return tensor_over(v.weight, v.coweight).result; });
    const size_t na = size_t(ida.nt()), nb = size_t(idb.nt());
    d.unit = parse_morphism_list(j, "unit", na * na, where, [&](size_t i) {
      int t = int(i / na), s = int(i % na);
      return std::make_pair(ida.at(t, s), ucod.at(t, s));
    });
    d.counit = parse_morphism_list(j, "counit", nb * nb, where, [&](size_t i) {
      int t = int(i / nb), s = int(i % nb);
      return std::make_pair(cdom.at(t, s), idb.at(t, s));
    });
    v.unit_map = ProfMap{std::move(ida), std::move(ucod), d.unit};
    v.counit_map = ProfMap{std::move(cdom), std::move(idb), d.counit};
    if (doc.adj_values.count(item.key())) fail(where + ": duplicate name");
    doc.adjunctions.emplace_back(item.key(), std::move(d));
    doc.adj_values.emplace(item.key(), std::move(v));
  }

  const json sec_cases = section("cases");
  for (const auto& item : sec_cases.items()) {
    const std::string where = "case '" + item.key() + "'";
    const json& j = item.value();
    if (!j.is_object()) fail(where + ": must be an object");
    only_fields(j, {"adjunction", "diagram", "apex", "cocone", "cone"}, where);
    CaseDecl d;
    d.adjunction = str_field(j, "adjunction", where);
    d.diagram = str_field(j, "diagram", where);
    d.apex = str_field(j, "apex", where);
    if (j.contains("cocone")) d.cocone = str_field(j, "cocone", where);
    if (j.contains("cone")) d.cone = str_field(j, "cone", where);
    located(where, [&]() -> const Adjunction& { return doc.adjunction(d.adjunction); });
    located(where, [&]() -> const VFunctor& { return doc.functor(d.diagram); });
    located(where, [&]() -> const VFunctor& { return doc.functor(d.apex); });
    if (!d.cocone.empty())
      located(where, [&]() -> const ProfMap& { return doc.map(d.cocone); });
    if (!d.cone.empty()) located(where, [&]() -> const ProfMap& { return doc.map(d.cone); });
    for (const auto& [name, decl] : doc.cases)
      if (name == item.key()) fail(where + ": duplicate name");
    doc.cases.emplace_back(item.key(), std::move(d));
  }

  return doc;
}

// --- emit ------------------------------------------------------------------------

std::string emit_document(const Document& doc) {
  json root = json::object();
  root["format_version"] = "1";
  root["base"] = tag_name(doc.base);
  auto put = [&](const char* key, const auto& decls, auto&& emit_one) {
    if (decls.empty()) return;
    json sec = json::object();
    for (const auto& [name, d] : decls) sec[name] = emit_one(d);
    root[key] = std::move(sec);
  };
  put("categories", doc.categories, emit_cat);
  put("functors", doc.functors, emit_functor);
  put("profunctors", doc.profunctors, emit_prof);
  put("maps", doc.maps, emit_map);
  put("adjunctions", doc.adjunctions, emit_adj);
  put("cases", doc.cases, emit_case);
  return root.dump(2) + "\n";
}

// --- fixtures ----------------------------------------------------------------------

Document document_from_fixture(const Fixture& fx) {
  const SquaresCase& sc = fx.scase;
  Document doc;
  doc.base = sc.diag.cod.tag;

  auto add_cat = [&](const std::string& name, const VCategory& c) {
    CatDecl d;
    d.objects = c.objects;
    d.hom = c.hom;
    d.unit = c.unit;
    d.comp = c.comp;
    doc.categories.emplace_back(name, std::move(d));
    doc.cat_values.emplace(name, c);
  };
  add_cat("ambient", sc.diag.cod);
  add_cat("shape", sc.diag.dom);
  add_cat("point", sc.apex.dom);

  auto add_fun = [&](const std::string& name, const VFunctor& f, const std::string& dom,
                     const std::string& cod) {
    FunctorDecl d;
    d.dom = dom;
    d.cod = cod;
    d.objects = f.object_map;
    d.action = f.action;
    doc.functors.emplace_back(name, std::move(d));
    doc.fun_values.emplace(name, f);
  };
  add_fun("diagram", sc.diag, "shape", "ambient");
  add_fun("apex", sc.apex, "point", "ambient");

  auto add_prof_explicit = [&](const std::string& name, const Profunctor& p,
                               const std::string& source, const std::string& target) {
    ProfDecl d;
    d.kind = ProfKind::explicit_form;
    d.source = source;
    d.target = target;
    d.components = p.components;
    d.left_action = p.left_action;
    d.right_action = p.right_action;
    doc.profunctors.emplace_back(name, std::move(d));
    doc.prof_values.emplace(name, p);
  };
  add_prof_explicit("weight", sc.adj.weight, "point", "shape");
  add_prof_explicit("coweight", sc.adj.coweight, "shape", "point");

  ProfDecl ccod;
  ccod.kind = ProfKind::hom_of;
  ccod.a = "apex";
  ccod.b = "diagram";
  doc.profunctors.emplace_back("cocone_target", ccod);
  doc.prof_values.emplace("cocone_target", sc.cocone.cod);
  ProfDecl lcod;
  lcod.kind = ProfKind::hom_of;
  lcod.a = "diagram";
  lcod.b = "apex";
  doc.profunctors.emplace_back("cone_target", lcod);
  doc.prof_values.emplace("cone_target", sc.cone.cod);

  auto add_map = [&](const std::string& name, const ProfMap& m, const std::string& dom,
                     const std::string& cod) {
    MapDecl d;
    d.dom = dom;
    d.cod = cod;
    d.components = m.components;
    doc.maps.emplace_back(name, std::move(d));
    doc.map_values.emplace(name, m);
  };
  add_map("cocone", sc.cocone, "weight", "cocone_target");
  add_map("cone", sc.cone, "coweight", "cone_target");

  AdjDecl ad;
  ad.weight = "weight";
  ad.coweight = "coweight";
  ad.unit = sc.adj.unit_map.components;
  ad.counit = sc.adj.counit_map.components;
  doc.adjunctions.emplace_back("adj", std::move(ad));
  doc.adj_values.emplace("adj", sc.adj);

  CaseDecl cd;
  cd.adjunction = "adj";
  cd.diagram = "diagram";
  cd.apex = "apex";
  cd.cocone = "cocone";
  cd.cone = "cone";
  doc.cases.emplace_back("main", std::move(cd));

  return doc;
}

std::string emit_components_json(const ProfMap& m) {
  json j = json::object();
  j["components"] = emit_morphism_list(m.components);
  return j.dump(2) + "\n";
}

const CaseDecl& find_case(const Document& doc, const std::string& name) {
  if (name.empty()) {
    if (doc.cases.size() != 1)
      fail("document has " + std::to_string(doc.cases.size()) +
           " cases; pick one with --case");
    return doc.cases.front().second;
  }
  for (const auto& [n, d] : doc.cases)
    if (n == name) return d;
  fail("unknown case '" + name + "'");
}

ResolvedCase resolve_case(const Document& doc, const CaseDecl& c) {
  ResolvedCase r;
  r.adj = doc.adjunction(c.adjunction);
  r.diag = doc.functor(c.diagram);
  r.apex = doc.functor(c.apex);
  if (r.diag.cod != r.apex.cod) fail("case: diagram and apex land in different categories");
  if (r.apex.dom != r.adj.weight.source)
    fail("case: apex shape does not match the weight's source");
  if (r.diag.dom != r.adj.weight.target)
    fail("case: diagram shape does not match the weight's target");
  if (!c.cocone.empty()) {
    r.cocone = doc.map(c.cocone);
    r.has_cocone = true;
    if (r.cocone.dom != r.adj.weight) fail("case: cocone domain is not the weight");
    if (r.cocone.cod != hom_profunctor(r.apex, r.diag))
      fail("case: cocone does not land in the hom module from the diagram to the apex");
  }
  if (!c.cone.empty()) {
    r.cone = doc.map(c.cone);
    r.has_cone = true;
    if (r.cone.dom != r.adj.coweight) fail("case: cone domain is not the coweight");
    if (r.cone.cod != hom_profunctor(r.diag, r.apex))
      fail("case: cone does not land in the hom module from the apex to the diagram");
  }
  return r;
}

}  // namespace absolim
