#include "invkit/cli.hpp"

#include <stdexcept>

namespace invkit::cli {

using io::Json;

namespace {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing --") + flag);
  return *v;
}

int positive(const std::optional<int>& v, const char* flag) {
  int x = need(v, flag);
  if (x < 1) throw InvalidInput(std::string("--") + flag + " must be >= 1");
  return x;
}

GroupActionSpec load_group(const JobConfig& c) {
  if (!c.group) throw InvalidInput("missing --group");
  const std::string& g = *c.group;
  if (g == "Sl" || g == "SL" || g == "Sp" || g == "O" || g == "SO")
    return ClassicalGroupSpec::standard(parse_classical_kind(g), positive(c.m, "m"));
  GroupActionSpec spec = io::group_from_json(io::read_json_file(g), c.field);
  if (c.m) {
    const std::size_t dim = std::holds_alternative<ClassicalGroupSpec>(spec)
                                ? static_cast<std::size_t>(std::get<ClassicalGroupSpec>(spec).m)
                                : std::get<FiniteMatrixGroup>(spec).dimension();
    if (dim != static_cast<std::size_t>(*c.m)) throw InvalidInput("--m disagrees with the group file");
  }
  return spec;
}

ClassicalGroupSpec load_classical(const JobConfig& c) {
  GroupActionSpec g = load_group(c);
  if (!std::holds_alternative<ClassicalGroupSpec>(g)) throw InvalidInput(c.command + " needs a classical group");
  return std::get<ClassicalGroupSpec>(g);
}

FiniteMatrixGroup load_finite(const JobConfig& c) {
  GroupActionSpec g = load_group(c);
  if (!std::holds_alternative<FiniteMatrixGroup>(g)) throw InvalidInput(c.command + " needs a finite group");
  return std::get<FiniteMatrixGroup>(g);
}

// A presentation file, or the classical presentation for --group and --n.
GradedPresentation load_presentation(const JobConfig& c, Json& out) {
  if (c.presentation) {
    if (c.group) throw InvalidInput("give either --presentation or --group, not both");
    return io::presentation_from_json(io::read_json_file(*c.presentation), c.field);
  }
  auto p = build_presentation(load_classical(c), positive(c.n, "n"), c.field);
  out["group"] = io::classical_to_json(p.table.spec);
  out["n"] = p.table.n;
  return p.presentation;
}

PggOptions pgg_options(const JobConfig& c) {
  PggOptions o;
  o.threads = c.threads;
  if (c.route == "automatic") o.route = PggRoute::Automatic;
  else if (c.route == "presentation") o.route = PggRoute::Presentation;
  else if (c.route == "literal") o.route = PggRoute::Literal;
  else throw InvalidInput("unknown --route '" + c.route + "'");
  return o;
}

RationalMatrix load_matrix(const JobConfig& c) {
  if (!c.matrix) throw InvalidInput("missing --matrix");
  Json j;
  try {
    j = Json::parse(*c.matrix);
  } catch (const nlohmann::json::exception&) {
    j = io::read_json_file(*c.matrix);
  }
  return io::matrix_from_json(j, c.field);
}

JobResult cmd_fft(const JobConfig& c) {
  auto t = fft_generators(load_classical(c), positive(c.n, "n"), c.field);
  return {kOk, io::generator_table_to_json(t)};
}

JobResult cmd_sft(const JobConfig& c) {
  auto t = fft_generators(load_classical(c), positive(c.n, "n"), c.field);
  Json rels = Json::array();
  for (const auto& r : sft_relations(t)) rels.push_back({{"degree", r.degree()}, {"relation", r.to_string()}});
  return {kOk, Json{{"group", io::classical_to_json(t.spec)}, {"n", t.n}, {"relations", std::move(rels)}}};
}

JobResult cmd_present(const JobConfig& c) {
  return {kOk, io::classical_presentation_to_json(build_presentation(load_classical(c), positive(c.n, "n"), c.field))};
}

JobResult cmd_verify(const JobConfig& c) {
  auto spec = load_classical(c);
  const int D = need(c.max_degree, "max-degree");
  if (D < 0) throw InvalidInput("--max-degree must be >= 0");
  auto p = build_presentation(spec, positive(c.n, "n"), c.field);
  auto report = verify_presentation(p, D, c.threads);
  Json out{{"group", io::classical_to_json(spec)}, {"n", p.table.n}, {"D", D}};
  out.update(io::verification_to_json(report));
  out["t_claimed"] = p.t_claimed;
  out["t_ambient"] = p.t_ambient ? Json(*p.t_ambient) : Json(nullptr);
  if (p.t_ambient) {
    // the two recorded t values for the orthogonal families, tested against the certificate
    Json exp{{"D", D}};
    for (auto [key, t] : {std::pair{"t_claimed", p.t_claimed}, std::pair{"t_ambient", *p.t_ambient}}) {
      if (t > D) {
        exp[key] = {{"t", t}, {"verdict", "not checked (t > D)"}};
        continue;
      }
      auto cert = check_tpgg(p.presentation, t, D, {PggRoute::Automatic, c.threads});
      exp[key] = {{"t", t}, {"certified", cert.certified}, {"verdict", cert.verdict()}};
    }
    auto min = min_tpgg(p.presentation, std::max(D, 1), {PggRoute::Automatic, c.threads});
    exp["t_min"] = min.t_min ? Json(*min.t_min) : Json(nullptr);
    exp["note"] =
        "two candidate t values are recorded for orthogonal groups: m+2 and 2(m+1), the degree of the minor "
        "relations; the certificates above are bounded evidence up to D, not a resolution";
    out["t_experiment"] = std::move(exp);
  }
  return {report.passed() ? kOk : kRefuted, std::move(out)};
}

JobResult cmd_invariants(const JobConfig& c) {
  GroupActionSpec g = load_group(c);
  const int n = positive(c.n, "n");
  const int D = need(c.max_degree, "max-degree");
  if (D < 0) throw InvalidInput("--max-degree must be >= 0");
  Json degrees = Json::array();
  const int m = std::holds_alternative<ClassicalGroupSpec>(g) ? std::get<ClassicalGroupSpec>(g).m
                                                             : static_cast<int>(std::get<FiniteMatrixGroup>(g).dimension());
  Field field = std::holds_alternative<FiniteMatrixGroup>(g) ? std::get<FiniteMatrixGroup>(g).field() : c.field;
  InducedAction action(m, n, field);
  for (int d = 0; d <= D; ++d) {
    std::vector<Polynomial> basis = std::holds_alternative<FiniteMatrixGroup>(g)
                                        ? fixed_space_basis(std::get<FiniteMatrixGroup>(g), action, d)
                                        : infinitesimal_invariant_basis(std::get<ClassicalGroupSpec>(g), action, d);
    Json b = Json::array();
    for (const auto& f : basis) b.push_back(f.to_string());
    degrees.push_back({{"d", d}, {"dimension", basis.size()}, {"basis", std::move(b)}});
  }
  return {kOk, Json{{"group", io::group_to_json(g)}, {"n", n}, {"degrees", std::move(degrees)}}};
}

JobResult cmd_molien(const JobConfig& c) {
  auto g = load_finite(c);
  const int D = need(c.max_degree, "max-degree");
  if (D < 0) throw InvalidInput("--max-degree must be >= 0");
  const int copies = c.n ? positive(c.n, "n") : 1;
  Json coeffs = Json::array();
  for (const auto& x : molien_series(g, D, copies)) {
    if (!x.fits_slong_p()) throw std::overflow_error("molien coefficient too large");
    coeffs.push_back(x.get_si());
  }
  return {kOk, Json{{"order", g.order()}, {"m", g.dimension()}, {"n", copies}, {"D", D}, {"coefficients", std::move(coeffs)}}};
}

void check_t_and_D(int t, int D) {
  if (t < 1) throw InvalidInput("--t must be >= 1");
  if (D < t) throw InvalidInput("--max-degree must be >= --t");
}

JobResult cmd_pgg_check(const JobConfig& c) {
  Json out;
  auto p = load_presentation(c, out);
  const int t = c.t.value_or(p.t_bound());
  const int D = need(c.max_degree, "max-degree");
  check_t_and_D(t, D);
  auto cert = check_tpgg(p, t, D, pgg_options(c));
  out["presentation"] = io::presentation_to_json(p);
  out.update(io::certificate_to_json(cert));
  return {cert.certified ? kOk : kRefuted, std::move(out)};
}

JobResult cmd_pgg_min(const JobConfig& c) {
  Json out;
  auto p = load_presentation(c, out);
  const int D = positive(c.max_degree, "max-degree");
  auto r = min_tpgg(p, D, pgg_options(c));
  out["presentation"] = io::presentation_to_json(p);
  out["D"] = D;
  out["t_min"] = r.t_min ? Json(*r.t_min) : Json(nullptr);
  out["t_bound"] = p.t_bound();
  out["certificate"] = io::certificate_to_json(r.certificate);
  return {r.t_min ? kOk : kRefuted, std::move(out)};
}

JobResult cmd_embed(const JobConfig& c, bool affine) {
  Json out;
  auto p = load_presentation(c, out);
  const int t = c.t.value_or(p.t_bound());
  if (t < 1) throw InvalidInput("--t must be >= 1");
  const int e = positive(c.exponent, "exponent");
  const int dmax = c.dmax ? positive(c.dmax, "dmax") : (affine ? std::max(t + 1, 2) : std::max(t, 2));
  auto chart = affine ? spec_embedding_data(p, t, e, dmax) : image_equations(p, t, e, dmax);
  auto veronese = veronese_generation_check(chart.presentation, t, e, dmax);
  out.update(io::chart_to_json(chart));
  out["veronese"] = io::veronese_to_json(veronese);
  return {veronese.passed ? kOk : kRefuted, std::move(out)};
}

JobResult cmd_semistable(const JobConfig& c) {
  auto point = load_matrix(c);
  auto r = semistable_test(static_cast<int>(point.rows()), static_cast<int>(point.cols()), point);
  return {r.semistable ? kOk : kRefuted, io::semistability_to_json(r)};
}

JobResult cmd_plucker(const JobConfig& c) {
  auto point = load_matrix(c);
  const int m = static_cast<int>(point.rows()), n = static_cast<int>(point.cols());
  auto r = semistable_test(m, n, point);
  Json out = io::semistability_to_json(r);
  if (!r.semistable) return {kRefuted, std::move(out)};
  auto coords = plucker_point(m, n, point);
  Json sets = Json::array();
  for (const auto& e : fft_generators(ClassicalGroupSpec::special_linear(m), n).entries) sets.push_back(e.name);
  out["index_sets"] = std::move(sets);
  out["coordinates"] = io::scalars_to_json(coords);
  out["relations_vanish"] = plucker_relations_vanish(m, n, coords);
  return {kOk, std::move(out)};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"fft",     "sft",     "present", "verify", "invariants", "molien",
                                             "pgg-check", "pgg-min", "embed", "embed-spec", "semistable", "plucker"};
  return list;
}

JobResult run(const JobConfig& c) {
  JobResult r;
  try {
    if (c.m && *c.m < 1) throw InvalidInput("--m must be >= 1");
    if (c.n && *c.n < 1) throw InvalidInput("--n must be >= 1");
    if (c.threads < 1) throw InvalidInput("--threads must be >= 1");
    const std::string& cmd = c.command;
    if (cmd == "fft") r = cmd_fft(c);
    else if (cmd == "sft") r = cmd_sft(c);
    else if (cmd == "present") r = cmd_present(c);
    else if (cmd == "verify") r = cmd_verify(c);
    else if (cmd == "invariants") r = cmd_invariants(c);
    else if (cmd == "molien") r = cmd_molien(c);
    else if (cmd == "pgg-check") r = cmd_pgg_check(c);
    else if (cmd == "pgg-min") r = cmd_pgg_min(c);
    else if (cmd == "embed") r = cmd_embed(c, false);
    else if (cmd == "embed-spec") r = cmd_embed(c, true);
    else if (cmd == "semistable") r = cmd_semistable(c);
    else if (cmd == "plucker") r = cmd_plucker(c);
    else throw InvalidInput("unknown command '" + cmd + "'");
  } catch (const std::invalid_argument& e) {
    r = {kInvalidInput, Json{{"error", e.what()}}};
  } catch (const std::domain_error& e) {
    r = {kInvalidInput, Json{{"error", e.what()}}};
  } catch (const std::out_of_range& e) {
    r = {kInvalidInput, Json{{"error", e.what()}}};
  } catch (const nlohmann::json::exception& e) {
    r = {kInvalidInput, Json{{"error", std::string("malformed JSON input: ") + e.what()}}};
  }
  Json out{{"schema_version", io::kSchemaVersion}, {"command", c.command}};
  out.update(r.output);
  r.output = std::move(out);
  return r;
}

}  // namespace invkit::cli
