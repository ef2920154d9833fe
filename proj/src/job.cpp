#include "grim/job.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grim/imageclass.hpp"
#include "grim/parse.hpp"
#include "grim/pencil.hpp"
#include "grim/subspace.hpp"
#include "grim/veronese.hpp"

namespace grim {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string rational_field(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::BadInput, where + ": expected an integer or a \"p/q\" string");
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw Error(ErrorCode::BadInput, where + ": missing string field \"" + key + "\"");
  return obj[key].get<std::string>();
}

std::vector<std::string> strings(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json ring_names(const RingPtr& ring) { return Json(ring->names()); }

/// Runs `fn`, tagging any library error with the stage name.
template <class F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(e, name);
  }
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

Json stats_json(const GbStats& s) {
  Json j;
  j["bases"] = s.bases;
  j["pairs_considered"] = s.pairs_considered;
  j["pairs_reduced"] = s.pairs_reduced;
  j["zero_reductions"] = s.zero_reductions;
  j["reduction_steps"] = s.reduction_steps;
  j["max_basis_size"] = s.max_basis_size;
  return j;
}

ChernPair job_chern(const Presentation& p) {
  std::vector<long> source{-1};
  std::vector<long> target{-1L + p.a().degree(), -1L + p.b().degree(), -1L + p.q().degree()};
  return chern_of_cokernel(source, target);
}

Json strata_json(const std::vector<RankStratum>& strata) {
  Json out = Json::array();
  for (const auto& s : strata) {
    Json j;
    j["parameter"] = s.parameter_string();
    j["rank"] = s.rank;
    if (s.degenerate) {
      j["degenerate"] = true;
    } else if (s.point) {
      j["point"] = {to_string(s.point->first), to_string(s.point->second)};
    } else {
      j["polynomial"] = s.polynomial.to_string("t");
      j["irreducible"] = s.irreducible;
    }
    j["members"] = s.degenerate ? 0 : s.member_count();
    out.push_back(j);
  }
  return out;
}

Json locus_json(const SingularLocus& s) {
  Json j;
  j["kind"] = locus_name(s.kind);
  j["witness"] = s.witness;
  j["ring"] = ring_names(s.ideal.ring());
  j["ideal"] = strings(s.ideal.generators());
  j["dimension"] = s.hilbert.projective_dimension;
  j["degree"] = s.hilbert.degree;
  j["linear_forms"] = strings(s.linear_forms);
  j["jacobian_ideal"] = strings(s.jacobian.generators());
  return j;
}

Json build_report(const Job& job, bool timings) {
  GbStats stats;
  GbOptions opts = job.options;
  opts.stats = &stats;
  RationalSampler rng(job.seed);
  Json t;
  Json r;
  r["schema_version"] = kSchemaVersion;
  Json jj;
  jj["variables"] = job.spec.variables;
  jj["presentation"] = {{"A", job.presentation.a().to_string()},
                        {"B", job.presentation.b().to_string()},
                        {"Q", job.presentation.q().to_string()}};
  jj["seed"] = job.seed;
  jj["order"] = job.ring->order().tag();
  r["job"] = jj;

  ChernPair cp = stage("bundle", [&] { return job_chern(job.presentation); });
  r["chern"] = {{"c1", cp.c1}, {"c2", cp.c2}};

  Clock clock;
  PluckerMap m = stage("plucker", [&] { return plucker_map(job.quadruple, job.presentation); });
  r["plucker_quadrics"] = strings(m.as_vector());
  t["plucker_ms"] = clock.ms();

  clock = Clock{};
  CaseReport rep = stage("imageclass", [&] { return classify(m, opts); });
  r["span_dim"] = rep.span_dim;
  r["case"] = case_name(rep.case_tag);
  r["hyperplanes"] = strings(rep.hyperplanes);
  r["image_ideal"] = {{"ring", ring_names(rep.image_ideal.ring())},
                      {"generators", strings(stage("imageclass", [&] { return minimal_generators(rep.image_ideal, opts); }))},
                      {"groebner_basis", strings(rep.image_ideal.basis(opts))}};
  r["restricted_quadric_rank"] = rep.restricted_quadric_rank ? Json(*rep.restricted_quadric_rank) : Json();
  r["extra_quadric"] = rep.extra_quadric ? Json(rep.extra_quadric->to_string()) : Json();
  t["classify_ms"] = clock.ms();

  if (rep.case_tag == ImageCase::OutOfScope) {
    r["image_degree"] = Json();
    r["map_degree"] = Json();
    r["pencil"] = Json();
    r["singular_locus"] = Json();
  } else {
    clock = Clock{};
    auto params = m.as_vector();
    r["image_degree"] = stage("imageclass", [&] { return image_degree(rep.image_ideal, opts); });
    std::uint64_t map_seed = rng.next_seed();
    r["map_degree"] = stage("imageclass", [&] { return map_degree(params, map_seed, 5, opts); });
    t["degrees_ms"] = clock.ms();

    clock = Clock{};
    if (rep.case_tag == ImageCase::B) {
      std::uint64_t pencil_seed = rng.next_seed();
      r["pencil"] = stage("pencil", [&] {
        QuadricPencil p = case_b_pencil(rep);
        GenericRank gr = pencil_generic_rank(p, pencil_seed);
        Json j;
        j["ring"] = ring_names(p.ring);
        j["q1"] = p.q1.to_string();
        j["q2"] = p.q2.to_string();
        j["generic_rank"] = gr.rank;
        j["determinant"] = gr.determinant.to_string();
        j["strata"] = strata_json(rank_strata(p, gr.rank));
        return j;
      });
    } else {
      r["pencil"] = Json();
    }
    t["pencil_ms"] = clock.ms();

    clock = Clock{};
    r["singular_locus"] = locus_json(stage("imageclass", [&] { return singular_locus(rep.image_ideal, opts); }));
    t["singular_locus_ms"] = clock.ms();
  }
  r["gb_stats"] = stats_json(stats);
  if (timings) r["timings"] = t;
  return r;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> json_strings(const Json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

std::string report_text(const Json& r) {
  std::ostringstream os;
  const auto& p = r["job"]["presentation"];
  os << "presentation   (A, B, Q) = (" << p["A"].get<std::string>() << ", " << p["B"].get<std::string>() << ", "
     << p["Q"].get<std::string>() << ")\n";
  os << "chern classes  c1 = " << r["chern"]["c1"] << ", c2 = " << r["chern"]["c2"] << "\n";
  os << "pluecker map   (" << join(json_strings(r["plucker_quadrics"])) << ")\n";
  os << "linear span    dimension " << r["span_dim"] << " of the quadrics";
  if (!r["hyperplanes"].empty()) os << "; relations " << join(json_strings(r["hyperplanes"]));
  os << "\n";
  std::string c = r["case"].get<std::string>();
  if (c == "A") {
    os << "case A         image = Gr(2,4) cut by two independent hyperplanes: a quadric surface in P^3,\n"
       << "               Grassmann quadric restricted to that P^3 has rank " << r["restricted_quadric_rank"] << "\n";
  } else if (c == "B") {
    os << "case B         image = Gr(2,4) cut by one hyperplane and one further quadric,\n"
       << "               extra quadric " << r["extra_quadric"].get<std::string>() << "\n";
  } else {
    os << "out of scope   the quadrics span at most 4 dimensions; the morphism is special\n";
  }
  os << "image ideal    (" << join(json_strings(r["image_ideal"]["generators"])) << ")\n";
  if (!r["image_degree"].is_null()) {
    os << "degrees        image " << r["image_degree"] << ", map " << r["map_degree"] << " (product "
       << r["image_degree"].get<long>() * r["map_degree"].get<long>() << ")\n";
  }
  if (!r["pencil"].is_null()) {
    const auto& pen = r["pencil"];
    os << "pencil         l*(" << pen["q1"].get<std::string>() << ") + m*(" << pen["q2"].get<std::string>()
       << ") on the hyperplane\n";
    os << "               generic rank " << pen["generic_rank"] << ", det = " << pen["determinant"].get<std::string>()
       << "\n";
    for (const auto& s : pen["strata"])
      os << "               rank " << s["rank"] << " at " << s["parameter"].get<std::string>() << "\n";
  }
  if (!r["singular_locus"].is_null()) {
    os << "singular locus " << r["singular_locus"]["witness"].get<std::string>() << "\n";
  }
  if (r.contains("timings")) {
    os << "timings (ms)  ";
    for (const auto& [k, v] : r["timings"].items()) os << " " << k << "=" << v.get<double>();
    os << "\n";
  }
  return os.str();
}

void print_diagnostic(std::ostream& err, const std::string& format, ErrorCode code, const std::string& stage_name,
                      const std::string& message) {
  if (format == "json") {
    Json d;
    d["schema_version"] = kSchemaVersion;
    d["status"] = "error";
    d["code"] = error_code_name(code);
    d["stage"] = stage_name;
    d["message"] = message;
    err << d.dump(2) << "\n";
  } else {
    err << "error[" << error_code_name(code) << "]";
    if (!stage_name.empty()) err << " in " << stage_name;
    err << ": " << message << "\n";
  }
}

struct Common {
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;
  std::uint64_t max_steps = GbOptions{}.max_steps;
  bool timings = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--seed", c.seed, "Seed for all randomized steps (overrides the job file)");
  sub->add_option("--order", c.order, "Monomial order of the domain ring")->check(CLI::IsMember({"grevlex", "lex"}));
  sub->add_option("--max-steps", c.max_steps, "Cap on reduction steps per Groebner basis");
}

std::vector<Poly> parse_list(const std::vector<std::string>& items, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : items) out.push_back(parse_poly(s, ring));
  return out;
}

Json checks_json(const std::vector<RemarkCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

void print_checks(std::ostream& out, const std::vector<RemarkCheck>& checks) {
  for (const auto& c : checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "\n     " << c.detail << "\n";
}

}  // namespace

JobSpec parse_job(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("job file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "job file must hold a JSON object");
  JobSpec spec;
  if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].size() != 3)
    throw Error(ErrorCode::BadInput, "\"variables\" must list exactly three names");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw Error(ErrorCode::BadInput, "variable names must be strings");
    spec.variables.push_back(v.get<std::string>());
  }
  if (!j.contains("presentation") || !j["presentation"].is_object())
    throw Error(ErrorCode::BadInput, "missing \"presentation\" object");
  const auto& p = j["presentation"];
  spec.a = string_field(p, "A", "presentation");
  spec.b = string_field(p, "B", "presentation");
  spec.q = string_field(p, "Q", "presentation");
  if (!j.contains("sections") || !j["sections"].is_array() || j["sections"].size() != 4)
    throw Error(ErrorCode::BadInput, "\"sections\" must hold four coordinate vectors");
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = j["sections"][i];
    if (!row.is_array() || row.size() != 5)
      throw Error(ErrorCode::BadInput, "section " + std::to_string(i + 1) + " must have five coordinates");
    for (std::size_t k = 0; k < 5; ++k)
      spec.sections[i][k] = rational_field(row[k], "section " + std::to_string(i + 1));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw Error(ErrorCode::BadInput, "\"seed\" must be a non-negative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("order")) {
    if (!j["order"].is_string()) throw Error(ErrorCode::BadInput, "\"order\" must be a string");
    spec.order = j["order"].get<std::string>();
  }
  return spec;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read job file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

Job build_job(const JobSpec& spec, const JobOverrides& overrides) {
  std::string order_name = overrides.order.value_or(spec.order);
  if (order_name != "grevlex" && order_name != "lex")
    throw Error(ErrorCode::BadInput, "order must be grevlex or lex, got " + order_name);
  RingPtr ring = Ring::make(spec.variables, parse_order(order_name));
  GbOptions opts;
  opts.max_steps = overrides.max_steps;
  Presentation pres = stage("bundle", [&] {
    return Presentation::make(parse_poly(spec.a, ring), parse_poly(spec.b, ring), parse_poly(spec.q, ring), opts);
  });
  SectionQuadruple quad = stage("plucker", [&] {
    RatMatrix c(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 5; ++k) c(i, k) = parse_rational(spec.sections[i][k]);
    return SectionQuadruple::from_coefficients(c, ring);
  });
  return Job{spec, ring, pres, quad, overrides.seed.value_or(spec.seed), opts};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResourceLimit: return 2;
    case ErrorCode::Internal: return 3;
    default: return 1;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pluecker images of rank-2 bundles on P^2 and projections of the Veronese surface", "grim"};
  app.require_subcommand(1);

  Common common;
  std::string input;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a job file: presentation, independence, generation");
  validate->add_option("--input", input, "Job file (JSON)")->required();
  add_common(validate, common);

  auto* report = app.add_subcommand("report", "Run the full pipeline on a job file");
  report->add_option("--input", input, "Job file (JSON)")->required();
  report->add_flag("--timings", common.timings, "Include wall-clock timings (not byte-deterministic)");
  add_common(report, common);

  std::vector<std::string> variables{"x", "y", "z"};
  auto* veronese = app.add_subcommand("veronese", "Projections of the Veronese surface");
  veronese->require_subcommand(1);
  std::string conic;
  std::vector<std::string> chart, through, special;
  auto* vpoint = veronese->add_subcommand("point", "Project from a point of sec(V) \\ V");
  vpoint->add_option("--conic", conic, "Center as a conic, e.g. x*y")->required();
  vpoint->add_option("--chart", chart, "Five linear forms in Z0..Z5 vanishing at the center")->delimiter(',');
  vpoint->add_option("--variables", variables, "Names of the plane coordinates")->delimiter(',')->expected(3);
  add_common(vpoint, common);
  auto* vline = veronese->add_subcommand("line", "Project from a line of sec(V) missing V");
  auto* through_opt = vline->add_option("--through", through, "Two conics spanning the line")->delimiter(',')->expected(2);
  auto* special_opt = vline->add_option("--special", special, "Linear forms L0,m1,m2: the line through [L0*m1], [L0*m2]")
                          ->delimiter(',')
                          ->expected(3);
  through_opt->excludes(special_opt);
  vline->add_option("--chart", chart, "Four linear forms in Z0..Z5 vanishing on the line")->delimiter(',');
  vline->add_option("--variables", variables, "Names of the plane coordinates")->delimiter(',')->expected(3);
  add_common(vline, common);

  auto* chern = app.add_subcommand("chern", "Chern classes of a cokernel presentation");
  std::vector<std::string> presentation;
  std::vector<long> source, target;
  long source_twist = -1;
  auto* pres_opt = chern->add_option("--presentation", presentation, "Entries of the map O(s) -> sum O(s + deg)")
                       ->delimiter(',');
  chern->add_option("--source-twist", source_twist, "Twist s of the source line bundle");
  chern->add_option("--variables", variables, "Names of the plane coordinates")->delimiter(',')->expected(3);
  auto* source_opt = chern->add_option("--source", source, "Twists of the source summands")->delimiter(',');
  auto* target_opt = chern->add_option("--target", target, "Twists of the target summands")->delimiter(',');
  auto* input_opt = chern->add_option("--input", input, "Take the presentation from a job file");
  pres_opt->excludes(target_opt)->excludes(input_opt);
  source_opt->excludes(input_opt)->excludes(pres_opt);
  add_common(chern, common);

  std::vector<const char*> argv{"grim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto overrides = [&] {
    JobOverrides o;
    o.seed = common.seed;
    o.order = common.order;
    o.max_steps = common.max_steps;
    return o;
  };
  auto plane_ring = [&] { return Ring::make(variables, parse_order(common.order.value_or("grevlex"))); };
  GbOptions opts;
  opts.max_steps = common.max_steps;

  try {
    if (validate->parsed()) {
      Job job = build_job(load_job(input), overrides());
      PluckerMap m = stage("plucker", [&] { return plucker_map(job.quadruple, job.presentation); });
      bool ok = stage("plucker", [&] { return generates_check(m, job.options); });
      if (!ok) throw StageError(Error(ErrorCode::NotGenerating, "the four sections do not generate Q everywhere"), "plucker");
      if (common.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["status"] = "valid";
        j["plucker_quadrics"] = strings(m.as_vector());
        out << j.dump(2) << "\n";
      } else {
        out << "valid: presentation has no common zero, sections are independent and generate\n";
      }
      return 0;
    }
    if (report->parsed()) {
      Job job = build_job(load_job(input), overrides());
      Json r = build_report(job, common.timings);
      if (common.format == "json")
        out << r.dump(2) << "\n";
      else
        out << report_text(r);
      return 0;
    }
    if (vpoint->parsed()) {
      RingPtr ring = plane_ring();
      ConicPoint p = stage("veronese", [&] { return ConicPoint::from_poly(parse_poly(conic, ring)); });
      std::optional<std::vector<Poly>> ch;
      if (!chart.empty()) ch = parse_list(chart, plucker_ring());
      PointRemarkReport rep = stage("veronese", [&] { return verify_point_remark(p, ring, common.seed.value_or(0), ch, opts); });
      if (common.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["center"] = p.to_poly(ring).to_string();
        j["map"] = strings(rep.projection.map);
        j["chart"] = strings(rep.projection.chart);
        j["image_ideal"] = strings(rep.image.generators());
        j["image_degree"] = rep.image_degree;
        j["map_degree"] = rep.map_degree;
        j["pencil"] = {{"generic_rank", rep.pencil_generic_rank},
                       {"determinant", rep.pencil_determinant.to_string()},
                       {"strata", strata_json(rep.strata)}};
        j["singular_locus"] = locus_json(rep.singular);
        j["exceptional_conic"] = rep.exceptional_conic ? Json(strings(rep.exceptional_conic->generators())) : Json();
        j["exceptional_line"] = rep.exceptional_line ? Json(rep.exceptional_line->to_string()) : Json();
        j["checks"] = checks_json(rep.checks);
        j["passed"] = rep.passed();
        out << j.dump(2) << "\n";
      } else {
        out << "center  [" << p.to_poly(ring) << "], rank 2\n";
        out << "map     (" << join(strings(rep.projection.map)) << ")\n";
        print_checks(out, rep.checks);
      }
      return rep.passed() ? 0 : 3;
    }
    if (vline->parsed()) {
      RingPtr ring = plane_ring();
      SecantLine l = stage("veronese", [&] {
        if (special.size() == 3)
          return special_line(parse_poly(special[0], ring), parse_poly(special[1], ring), parse_poly(special[2], ring));
        if (through.size() == 2)
          return secant_line(ConicPoint::from_poly(parse_poly(through[0], ring)),
                             ConicPoint::from_poly(parse_poly(through[1], ring)));
        throw Error(ErrorCode::BadInput, "give the line with --through C1,C2 or --special L0,m1,m2");
      });
      std::optional<std::vector<Poly>> ch;
      if (!chart.empty()) ch = parse_list(chart, plucker_ring());
      LineRemarkReport rep = stage("veronese", [&] { return verify_line_remark(l, ring, common.seed.value_or(0), ch, opts); });
      if (common.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["endpoints"] = {l.endpoints[0].to_poly(ring).to_string(), l.endpoints[1].to_poly(ring).to_string()};
        j["map"] = strings(rep.projection.map);
        j["chart"] = strings(rep.projection.chart);
        j["image_ideal"] = strings(rep.image.generators());
        j["quadric_rank"] = rep.quadric_rank;
        j["image_degree"] = rep.image_degree;
        j["map_degree"] = rep.map_degree;
        j["singular_locus"] = locus_json(rep.singular);
        j["checks"] = checks_json(rep.checks);
        j["passed"] = rep.passed();
        out << j.dump(2) << "\n";
      } else {
        out << "line    [" << l.endpoints[0].to_poly(ring) << "] -- [" << l.endpoints[1].to_poly(ring) << "]\n";
        out << "map     (" << join(strings(rep.projection.map)) << ")\n";
        print_checks(out, rep.checks);
      }
      return rep.passed() ? 0 : 3;
    }
    if (chern->parsed()) {
      ChernPair cp = stage("bundle", [&] {
        if (!input.empty()) return job_chern(build_job(load_job(input), overrides()).presentation);
        if (!presentation.empty()) {
          RingPtr ring = plane_ring();
          std::vector<long> src{source_twist}, tgt;
          for (const auto& e : parse_list(presentation, ring)) {
            if (e.is_zero() || !e.is_homogeneous())
              throw Error(ErrorCode::DegreeMismatch, "presentation entries must be nonzero forms");
            tgt.push_back(source_twist + e.degree());
          }
          return chern_of_cokernel(src, tgt);
        }
        if (!target.empty()) return chern_of_cokernel(source, target);
        throw Error(ErrorCode::BadInput, "give --presentation, --source/--target or --input");
      });
      if (common.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["c1"] = cp.c1;
        j["c2"] = cp.c2;
        out << j.dump(2) << "\n";
      } else {
        out << "(c1, c2) = (" << cp.c1 << ", " << cp.c2 << ")\n";
      }
      return 0;
    }
  } catch (const StageError& e) {
    print_diagnostic(err, common.format, e.code(), e.stage(), e.what());
    return exit_code_for(e.code());
  } catch (const Error& e) {
    print_diagnostic(err, common.format, e.code(), "", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_diagnostic(err, common.format, ErrorCode::Internal, "", e.what());
    return 3;
  }
  return 1;
}

std::string render_report(const Job& job, const std::string& format, bool timings) {
  Json r = build_report(job, timings);
  return format == "json" ? r.dump(2) + "\n" : report_text(r);
}

}  // namespace grim
