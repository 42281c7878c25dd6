#include "invkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace invkit::io {

namespace {

Scalar scalar_from_json(const Json& v, const Field& field) {
  if (v.is_number_integer()) return Scalar(v.get<long>()).in(field);
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), field.prime);
  throw std::invalid_argument("expected an integer or a rational string, got " + v.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

RationalMatrix matrix_from_json(const Json& j, const Field& field) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(v, field));
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows, field);
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

GroupActionSpec group_from_json(const Json& j, const Field& field) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "finite") {
    std::vector<RationalMatrix> mats;
    for (const auto& m : require(j, "matrices")) mats.push_back(matrix_from_json(m, field));
    if (j.value("generators_only", false)) return FiniteMatrixGroup::generated_by(mats);
    return FiniteMatrixGroup(std::move(mats));
  }
  const ClassicalKind k = parse_classical_kind(kind);
  const int m = require(j, "m").get<int>();
  if (!j.contains("form") || j.at("form").is_null() || k == ClassicalKind::Sl) {
    if (k == ClassicalKind::Sl && j.contains("form") && !j.at("form").is_null())
      throw std::invalid_argument("Sl takes no form");
    return ClassicalGroupSpec::standard(k, m);
  }
  RationalMatrix form = matrix_from_json(j.at("form"), field);
  if (form.rows() != static_cast<std::size_t>(m)) throw std::invalid_argument("form size differs from m");
  if (k == ClassicalKind::Sp) return ClassicalGroupSpec::symplectic(std::move(form));
  return ClassicalGroupSpec::orthogonal(std::move(form), k == ClassicalKind::SO);
}

Json classical_to_json(const ClassicalGroupSpec& g) {
  Json out{{"kind", to_string(g.kind)}, {"m", g.m}};
  out["form"] = g.kind == ClassicalKind::Sl ? Json(nullptr) : matrix_to_json(g.form);
  return out;
}

Json group_to_json(const GroupActionSpec& g) {
  if (const auto* c = std::get_if<ClassicalGroupSpec>(&g)) return classical_to_json(*c);
  const auto& f = std::get<FiniteMatrixGroup>(g);
  Json mats = Json::array();
  for (const auto& m : f.elements()) mats.push_back(matrix_to_json(m));
  return Json{{"kind", "finite"}, {"order", f.order()}, {"matrices", std::move(mats)}};
}

GradedPresentation presentation_from_json(const Json& j, const Field& field) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& g : require(j, "generators")) {
    names.push_back(require(g, "name").get<std::string>());
    degrees.push_back(require(g, "degree").get<int>());
  }
  RingPtr ring = PolynomialRing::make(names, degrees, field);
  std::vector<std::string> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) rels.push_back(r.is_string() ? r.get<std::string>() : require(r, "relation").get<std::string>());
  std::optional<int> t;
  if (j.contains("t_bound") && !j.at("t_bound").is_null()) t = j.at("t_bound").get<int>();
  return GradedPresentation::parse(ring, rels, t);
}

Json presentation_to_json(const GradedPresentation& p) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.ring()->size(); ++i) gens.push_back({{"name", p.ring()->name(i)}, {"degree", p.ring()->weight(i)}});
  Json rels = Json::array();
  for (const auto& r : p.relations()) rels.push_back(r.to_string());
  return Json{{"field", p.field().name()},
              {"generators", std::move(gens)},
              {"relations", std::move(rels)},
              {"t_bound", p.t_bound()}};
}

Json generator_table_to_json(const GeneratorTable& t) {
  Json gens = Json::array();
  for (const auto& e : t.entries)
    gens.push_back({{"name", e.name}, {"degree", e.degree}, {"realization", e.realization.to_string()}});
  return Json{{"group", classical_to_json(t.spec)}, {"n", t.n}, {"generators", std::move(gens)}};
}

Json classical_presentation_to_json(const ClassicalPresentation& p) {
  Json out = generator_table_to_json(p.table);
  Json rels = Json::array();
  for (const auto& r : p.presentation.relations()) rels.push_back(r.to_string());
  out["relations"] = std::move(rels);
  out["t_claimed"] = p.t_claimed;
  out["t_ambient"] = p.t_ambient ? Json(*p.t_ambient) : Json(nullptr);
  return out;
}

Json verification_to_json(const VerificationReport& r) {
  Json inv = Json::array(), rel = Json::array(), dims = Json::array();
  for (const auto& c : r.invariance) inv.push_back({{"generator", c.subject}, {"passed", c.passed}, {"detail", c.detail}});
  for (const auto& c : r.relations) rel.push_back({{"relation", c.subject}, {"passed", c.passed}});
  for (const auto& d : r.dimensions)
    dims.push_back({{"d", d.d}, {"presentation", d.presentation}, {"invariants", d.invariants}, {"agree", d.presentation == d.invariants}});
  return Json{{"passed", r.passed()},
              {"invariance_ok", r.invariance_ok},
              {"relations_ok", r.relations_ok},
              {"dimensions_ok", r.dimensions_ok},
              {"invariance", std::move(inv)},
              {"relations", std::move(rel)},
              {"dimensions", std::move(dims)},
              {"failures", r.failures()}};
}

std::string route_name(PggRoute r) {
  switch (r) {
    case PggRoute::Automatic: return "automatic";
    case PggRoute::Presentation: return "presentation";
    case PggRoute::Literal: return "literal";
  }
  return "?";
}

Json certificate_to_json(const PggCertificate& c) {
  Json degrees = Json::array();
  for (const auto& r : c.degrees)
    degrees.push_back({{"d", r.d},
                       {"dim_sym", r.dim_sym},
                       {"dim_A", r.dim_A},
                       {"rank_mu", r.rank_mu},
                       {"dim_kernel", r.dim_kernel},
                       {"dim_kernel_generated", r.dim_generated},
                       {"surjective", r.surjective},
                       {"kernel_generated", r.kernel_generated}});
  Json out{{"t", c.t}, {"D", c.D}, {"route", route_name(c.route)}, {"degrees", std::move(degrees)}, {"verdict", c.verdict()}};
  out["certified"] = c.certified;
  out["failed_degree"] = c.failed_degree ? Json(*c.failed_degree) : Json(nullptr);
  out["failed_condition"] = c.certified ? Json(nullptr) : Json(c.failed_condition);
  return out;
}

Json chart_to_json(const EmbeddingChart& c) {
  Json coords = Json::array(), names = Json::array(), eqs = Json::array();
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    coords.push_back(c.coordinates[i].to_string());
    names.push_back(c.coordinate_ring->name(i));
  }
  for (const auto& e : c.equations) eqs.push_back({{"degree", e.degree}, {"form", e.form.to_string()}});
  return Json{{"t", c.t},
              {"e", c.e},
              {"dmax", c.dmax},
              {"affine", c.affine},
              {"presentation", presentation_to_json(c.presentation)},
              {"coordinate_names", std::move(names)},
              {"coordinates", std::move(coords)},
              {"equations", std::move(eqs)}};
}

Json veronese_to_json(const VeroneseReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"n", l.n}, {"rank", l.rank}, {"target", l.target}, {"surjective", l.surjective()}});
  return Json{{"t", r.t}, {"e", r.e}, {"N", r.N}, {"passed", r.passed},
              {"failed_n", r.failed_n ? Json(*r.failed_n) : Json(nullptr)}, {"levels", std::move(levels)}};
}

Json semistability_to_json(const SemistabilityReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"point", matrix_to_json(r.point)},
              {"rank", r.rank},
              {"minors", scalars_to_json(r.minors)},
              {"witnesses", r.witnesses},
              {"verdict", r.semistable ? "semistable" : "unstable"},
              {"criteria_agree", r.consistent}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace invkit::io
