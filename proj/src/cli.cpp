#include "cubedet/cli.hpp"

#include "cubedet/curve.hpp"
#include "cubedet/error.hpp"
#include "cubedet/exactmat.hpp"
#include "cubedet/generators.hpp"
#include "cubedet/identity.hpp"
#include "cubedet/search.hpp"
#include "cubedet/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>

namespace cubedet::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Output {
  Format format = Format::Text;
  std::ostream& out;
};

json to_json(const Integer& v) { return v.str(); }

json to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Triple& t) { return json::array({t[0].str(), t[1].str(), t[2].str()}); }

json property_json(const Mat3& m) {
  const auto r = check_property(m);
  return {{"matrix", to_json(m)},     {"det", to_json(r.det)},
          {"cube_det", to_json(r.cube_det)}, {"holds", r.holds},
          {"has_zero", r.has_zero},   {"has_unit", r.has_unit}};
}

void print_property_text(std::ostream& out, const Mat3& m) {
  const auto r = check_property(m);
  out << format_matrix(m) << "\n"
      << "det: " << r.det << "\n"
      << "cube_det: " << r.cube_det << "\n"
      << "holds: " << (r.holds ? "true" : "false") << "\n"
      << "has_zero: " << (r.has_zero ? "true" : "false") << "\n"
      << "has_unit: " << (r.has_unit ? "true" : "false") << "\n";
}

json ok_document(const std::string& command) {
  return {{"command", command}, {"status", "ok"}};
}

void emit(const Output& o, const json& doc) { o.out << doc.dump() << "\n"; }

std::vector<Integer> parse_params(const std::string& text, std::size_t expected,
                                  const std::string& flag) {
  auto values = parse_integer_list(text);
  if (values.size() != expected)
    throw Error(ErrorCode::Parse, flag + ": expected " + std::to_string(expected) +
                                      " comma-separated integers, got " +
                                      std::to_string(values.size()));
  return values;
}

std::pair<Triple, Triple> parse_rows(const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos || text.find(';', sep + 1) != std::string::npos)
    throw Error(ErrorCode::Parse, "--rows: expected \"p q r; u v w\"");
  return {parse_triple(text.substr(0, sep)), parse_triple(text.substr(sep + 1))};
}

// --- verify -----------------------------------------------------------------

void cmd_verify(const Output& o, const std::string& matrix_text) {
  const Mat3 m = parse_matrix(matrix_text);
  if (o.format == Format::Json) {
    json doc = ok_document("verify");
    doc.update(property_json(m));
    emit(o, doc);
  } else {
    print_property_text(o.out, m);
  }
}

// --- gen --------------------------------------------------------------------

void emit_matrix_doc(const Output& o, json doc, const Mat3& m) {
  if (o.format == Format::Json) {
    doc.update(property_json(m));
    emit(o, doc);
  } else {
    print_property_text(o.out, m);
  }
}

void cmd_gen_quintuple(const Output& o, const std::string& params) {
  const auto v = parse_params(params, 4, "--params");
  const auto q = quintuple(v[0], v[1], v[2], v[3]);
  Integer sum = 0, cube_sum = 0;
  for (const auto& x : q.x) {
    sum += x;
    cube_sum += cube(x);
  }
  if (o.format == Format::Json) {
    json doc = ok_document("gen quintuple");
    doc["params"] = {{"p", to_json(v[0])}, {"q", to_json(v[1])}, {"r", to_json(v[2])},
                     {"s", to_json(v[3])}};
    doc["x"] = json::array();
    for (const auto& x : q.x) doc["x"].push_back(to_json(x));
    doc["sum"] = to_json(sum);
    doc["cube_sum"] = to_json(cube_sum);
    emit(o, doc);
  } else {
    o.out << q.x[0] << " " << q.x[1] << " " << q.x[2] << " " << q.x[3] << " " << q.x[4] << "\n"
          << "sum: " << sum << "\n"
          << "cube_sum: " << cube_sum << "\n";
  }
}

void cmd_gen_bordered(const Output& o, const std::string& params) {
  const auto v = parse_params(params, 4, "--params");
  json doc = ok_document("gen bordered");
  doc["params"] = {{"p", to_json(v[0])}, {"q", to_json(v[1])}, {"r", to_json(v[2])},
                   {"s", to_json(v[3])}};
  emit_matrix_doc(o, doc, bordered_matrix(v[0], v[1], v[2], v[3]));
}

void cmd_gen_c(const Output& o, const std::string& t_text) {
  const Integer t = parse_integer(t_text);
  json doc = ok_document("gen c");
  doc["t"] = to_json(t);
  emit_matrix_doc(o, doc, matrix_c(t));
}

void cmd_gen_a(const Output& o, const std::string& t_text, bool via_chain) {
  const Integer t = parse_integer(t_text);
  json doc = ok_document("gen a");
  doc["t"] = to_json(t);
  doc["via_chain"] = via_chain;
  emit_matrix_doc(o, doc, via_chain ? matrix_a_chain(t) : matrix_a_closed(t));
}

void cmd_gen_theorem2(const Output& o, const std::string& params, bool normalize) {
  const auto v = parse_params(params, 6, "--params");
  const Theorem2Result r = theorem2_matrix({v[0], v[1], v[2], v[3], v[4], v[5]}, normalize);
  if (o.format == Format::Json) {
    json doc = ok_document("gen theorem2");
    doc["params"] = {{"p", to_json(v[0])}, {"q", to_json(v[1])}, {"r", to_json(v[2])},
                     {"u", to_json(v[3])}, {"v", to_json(v[4])}, {"w", to_json(v[5])}};
    doc["normalized"] = normalize;
    doc["k"] = to_json(r.k);
    doc["row_gcd"] = to_json(r.row_gcd);
    doc.update(property_json(r.matrix));
    emit(o, doc);
  } else {
    print_property_text(o.out, r.matrix);
    o.out << "k: " << r.k << "\n"
          << "row_gcd: " << r.row_gcd << "\n";
  }
}

// --- transform --------------------------------------------------------------

void cmd_transform(const Output& o, const std::string& matrix_text,
                   const std::vector<std::string>& specs, bool canonical) {
  const Mat3 input = parse_matrix(matrix_text);
  std::vector<TransformSpec> parsed;
  for (const auto& s : specs) parsed.push_back(parse_transform(s));
  Mat3 m = input;
  for (const auto& t : parsed) m = apply_transform(m, t);
  const auto before = check_property(input);
  if (o.format == Format::Json) {
    json doc = ok_document("transform");
    doc["input"] = to_json(input);
    doc["steps"] = json::array();
    for (const auto& t : parsed) doc["steps"].push_back(format_transform(t));
    doc["input_det"] = to_json(before.det);
    doc["input_cube_det"] = to_json(before.cube_det);
    doc.update(property_json(m));
    if (canonical) doc["canonical"] = to_json(orbit_canonical(m));
    emit(o, doc);
  } else {
    print_property_text(o.out, m);
    if (canonical) o.out << "canonical: " << format_matrix(orbit_canonical(m)) << "\n";
  }
}

// --- curve ------------------------------------------------------------------

CubicForm parse_form(const std::string& text) {
  const auto values = parse_integer_list(text);
  if (values.size() != 10)
    throw Error(ErrorCode::Parse, "--form: expected 10 coefficients, got " +
                                      std::to_string(values.size()));
  std::array<Integer, 10> c;
  std::copy(values.begin(), values.end(), c.begin());
  return CubicForm::from_coefficients(c);
}

json form_json(const CubicForm& f) {
  json a = json::array();
  for (const auto& c : f.coeffs) a.push_back(to_json(c));
  return a;
}

struct CurveInput {
  CubicForm form;
  ProjPoint point;
  std::optional<std::pair<Triple, Triple>> rows;
};

CurveInput curve_input(const std::string& rows, const std::string& form, const std::string& point) {
  if (!rows.empty()) {
    if (!form.empty()) throw Error(ErrorCode::InvalidArgument, "--rows and --form are exclusive");
    auto r = parse_rows(rows);
    const auto f = cubic_from_rows(r.first, r.second);
    const ProjPoint p = point.empty() ? ProjPoint::from(r.first) : ProjPoint::from(parse_triple(point));
    return {f, p, r};
  }
  if (form.empty() || point.empty())
    throw Error(ErrorCode::InvalidArgument, "need --rows, or both --form and --point");
  return {parse_form(form), ProjPoint::from(parse_triple(point)), std::nullopt};
}

void cmd_curve(const Output& o, const std::string& action, const std::string& rows,
               const std::string& form, const std::string& point) {
  const CurveInput in = curve_input(rows, form, point);
  json doc = ok_document("curve " + action);
  doc["form"] = form_json(in.form);
  doc["point"] = to_json(in.point.coords());
  if (in.rows) doc["rows"] = json::array({to_json(in.rows->first), to_json(in.rows->second)});

  if (action == "eval") {
    const auto eg = eval_and_gradient(in.form, in.point);
    doc["value"] = to_json(eg.value);
    doc["gradient"] = to_json(eg.gradient);
    if (o.format == Format::Json) {
      emit(o, doc);
    } else {
      o.out << "value: " << eg.value << "\n"
            << "gradient: " << eg.gradient[0] << " " << eg.gradient[1] << " " << eg.gradient[2]
            << "\n";
    }
    return;
  }

  ProjPoint third = ProjPoint::from(1, 0, 0);
  if (action == "tangent") {
    third = tangent_third_point(in.form, in.point);
  } else {
    if (!in.rows) throw Error(ErrorCode::InvalidArgument, "curve chord needs --rows");
    third = chord_third_point(in.form, ProjPoint::from(in.rows->first),
                              ProjPoint::from(in.rows->second));
  }
  doc["third_point"] = to_json(third.coords());
  std::optional<Integer> linear;
  if (in.rows) {
    const Triple l = linear_cofactors(in.rows->first, in.rows->second);
    linear = l[0] * third.x() + l[1] * third.y() + l[2] * third.z();
    doc["linear_form_value"] = to_json(*linear);
  }
  if (o.format == Format::Json) {
    emit(o, doc);
  } else {
    o.out << third.x() << " " << third.y() << " " << third.z() << "\n";
    if (linear) o.out << "linear_form_value: " << *linear << "\n";
  }
}

// --- identity-check ---------------------------------------------------------

void cmd_identity(const Output& o, const std::string& name, const std::string& mode,
                  std::size_t samples, std::int64_t bound, std::uint64_t seed,
                  double budget_seconds) {
  VerifyOptions opt;
  opt.mode = mode == "symbolic" ? VerifyMode::Symbolic : VerifyMode::Sampled;
  opt.samples = samples;
  opt.bound = bound;
  opt.seed = seed;
  if (budget_seconds > 0)
    opt.budget = std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000));
  const auto r = verify_identity(name, opt);
  if (o.format == Format::Json) {
    json doc = ok_document("identity-check");
    doc["name"] = r.name;
    doc["mode"] = std::string(to_string(r.mode));
    doc["verdict"] = std::string(to_string(r.verdict));
    if (r.witness) {
      json w = json::object();
      for (const auto& [k, v] : *r.witness) w[k] = to_json(v);
      doc["witness"] = w;
    } else {
      doc["witness"] = nullptr;
    }
    doc["stats"] = {{"lhs_terms", r.lhs_terms},   {"rhs_terms", r.rhs_terms},
                    {"difference_terms", r.difference_terms}, {"max_degree", r.max_degree},
                    {"samples", r.samples},       {"elapsed_seconds", r.elapsed_seconds}};
    emit(o, doc);
  } else {
    o.out << r.name << " [" << to_string(r.mode) << "]: " << to_string(r.verdict) << "\n";
    if (r.witness) {
      o.out << "witness:";
      for (const auto& [k, v] : *r.witness) o.out << " " << k << "=" << v;
      o.out << "\n";
    }
    if (r.mode == VerifyMode::Symbolic)
      o.out << "terms: lhs " << r.lhs_terms << ", rhs " << r.rhs_terms << ", difference "
            << r.difference_terms << "; max degree " << r.max_degree << "\n";
    else
      o.out << "samples: " << r.samples << "\n";
  }
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
  std::string mode = "two-rows";
  std::int64_t bound = 1;
  std::int64_t row_bound = 1;
  std::string rows;
  std::string k, k_min, k_max;
  bool forbid_units = false;
  bool forbid_zero = false;
  unsigned jobs = 1;
  std::uint64_t work_budget = 0;
  std::uint64_t resume_from = 0;
};

void cmd_search(const Output& o, const SearchArgs& a) {
  SearchConfig cfg;
  if (a.mode == "bordered")
    cfg.mode = SearchMode::Bordered;
  else if (a.mode == "two-rows")
    cfg.mode = SearchMode::TwoRows;
  else if (a.mode == "rows-enum")
    cfg.mode = SearchMode::RowsEnumerate;
  else
    cfg.mode = SearchMode::Brute;
  cfg.bound = a.bound;
  cfg.row_bound = a.row_bound;
  cfg.forbid_units = a.forbid_units;
  cfg.forbid_zero = a.forbid_zero;
  cfg.jobs = std::max(1u, a.jobs);
  if (!a.k.empty()) {
    if (!a.k_min.empty() || !a.k_max.empty())
      throw Error(ErrorCode::InvalidArgument, "--k excludes --k-min/--k-max");
    cfg.k_target = KRange::exactly(parse_integer(a.k));
  } else if (!a.k_min.empty() || !a.k_max.empty()) {
    if (a.k_min.empty() || a.k_max.empty())
      throw Error(ErrorCode::InvalidArgument, "--k-min and --k-max go together");
    cfg.k_target = KRange{parse_integer(a.k_min), parse_integer(a.k_max)};
  }
  if (!a.rows.empty()) {
    auto r = parse_rows(a.rows);
    cfg.row2 = r.first;
    cfg.row3 = r.second;
  }
  if (a.work_budget) cfg.work_budget = a.work_budget;
  cfg.resume_from = a.resume_from;

  const auto start = std::chrono::steady_clock::now();
  std::vector<SearchHit> hits;
  bool complete = true;
  std::optional<std::uint64_t> next_pair;
  std::optional<std::uint64_t> total_pairs;
  try {
    hits = search(cfg);
  } catch (const WorkBudgetExceeded& e) {
    hits = e.partial();
    complete = false;
    next_pair = e.next_pair();
    total_pairs = e.total_pairs();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& h : hits) {
    if (o.format == Format::Json) {
      emit(o, {{"type", "hit"},
               {"matrix", to_json(h.matrix)},
               {"k", to_json(h.k)},
               {"canonical", to_json(h.canonical)}});
    } else {
      o.out << "k=" << h.k << ": " << format_matrix(h.matrix) << "\n";
    }
  }

  json bounds = {{"bound", cfg.bound}};
  if (cfg.mode == SearchMode::RowsEnumerate) bounds["row_bound"] = cfg.row_bound;
  if (o.format == Format::Json) {
    json summary = {{"type", "summary"},
                    {"status", "ok"},
                    {"mode", a.mode},
                    {"hits", hits.size()},
                    {"complete", complete},
                    {"elapsed_seconds", elapsed},
                    {"bounds", bounds}};
    if (cfg.k_target)
      summary["k"] = {{"min", to_json(cfg.k_target->min)}, {"max", to_json(cfg.k_target->max)}};
    else
      summary["k"] = "nonzero";
    summary["forbid_units"] = cfg.forbid_units;
    summary["forbid_zero"] = cfg.forbid_zero;
    if (next_pair) {
      summary["next_pair"] = *next_pair;
      summary["total_pairs"] = *total_pairs;
    }
    emit(o, summary);
  } else {
    o.out << "hits: " << hits.size() << (complete ? "" : " (incomplete)") << "\n";
    if (next_pair) o.out << "resume with --resume-from " << *next_pair << " of " << *total_pairs << "\n";
  }
}

bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::Parse || code == ErrorCode::InvalidArgument ||
         code == ErrorCode::InvalidTransform;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and verification of 3x3 integer matrices with det(A) = k and "
               "det(A^(3)) = k^3, where A^(3) cubes each entry."};
  app.name("cubedet");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<void(const Output&)> action;

  // verify
  std::string matrix_text;
  auto* verify = app.add_subcommand("verify", "Determinant and cube-determinant of a matrix");
  verify->add_option("matrix", matrix_text, "Matrix, e.g. \"7 11 2; 13 20 3; 2 3 0\"")->required();
  verify->callback([&] { action = [&](const Output& o) { cmd_verify(o, matrix_text); }; });

  // gen
  auto* gen = app.add_subcommand("gen", "Constructive families");
  gen->require_subcommand(1);
  std::string params, t_text;
  bool via_chain = false, normalize = false;
  auto* gq = gen->add_subcommand("quintuple", "Five values with zero sum and zero cube sum");
  gq->add_option("--params", params, "p,q,r,s")->required();
  gq->callback([&] { action = [&](const Output& o) { cmd_gen_quintuple(o, params); }; });
  auto* gb = gen->add_subcommand("bordered", "Bordered matrix from p,q,r,s");
  gb->add_option("--params", params, "p,q,r,s")->required();
  gb->callback([&] { action = [&](const Output& o) { cmd_gen_bordered(o, params); }; });
  auto* gc = gen->add_subcommand("c", "Bordered unimodular family C(t)");
  gc->add_option("--t", t_text, "Integer parameter")->required();
  gc->callback([&] { action = [&](const Output& o) { cmd_gen_c(o, t_text); }; });
  auto* ga = gen->add_subcommand("a", "Unimodular family A(t)");
  ga->add_option("--t", t_text, "Integer parameter")->required();
  ga->add_flag("--via-chain", via_chain, "Derive from C(t) by scaling conjugations");
  ga->callback([&] { action = [&](const Output& o) { cmd_gen_a(o, t_text, via_chain); }; });
  auto* g2 = gen->add_subcommand("theorem2", "Tangent-point family with det k, cube det k^3");
  g2->add_option("--params", params, "p,q,r,u,v,w")->required();
  g2->add_flag("--normalize", normalize, "Divide row 1 by its gcd");
  g2->callback([&] { action = [&](const Output& o) { cmd_gen_theorem2(o, params, normalize); }; });

  // transform
  std::vector<std::string> specs;
  bool canonical = false;
  auto* tr = app.add_subcommand("transform", "Apply property-preserving transforms");
  tr->add_option("matrix", matrix_text, "Input matrix")->required();
  tr->add_option("--apply", specs,
                 "Transform, repeatable: transpose | negrows i j | negcols i j | "
                 "swap rows|cols i j rows|cols k l | conj i j num/den");
  tr->add_flag("--canonical", canonical, "Also print the orbit representative");
  tr->callback([&] {
    action = [&](const Output& o) { cmd_transform(o, matrix_text, specs, canonical); };
  });

  // curve
  std::string rows, form, point;
  auto* curve = app.add_subcommand("curve", "Cubic curve of two fixed rows");
  curve->require_subcommand(1);
  for (const char* name : {"tangent", "eval", "chord"}) {
    auto* sub = curve->add_subcommand(name, std::string(name) == "tangent"
                                                ? "Third point of the tangent at a point"
                                            : std::string(name) == "eval"
                                                ? "Value and gradient at a point"
                                                : "Third point of the chord through both rows");
    sub->add_option("--rows", rows, "\"p q r; u v w\"");
    sub->add_option("--form", form, "10 coefficients: x3 x2y x2z xy2 xyz xz2 y3 y2z yz2 z3");
    sub->add_option("--point", point, "\"x y z\" (defaults to the first row with --rows)");
    const std::string action_name = name;
    sub->callback([&, action_name] {
      action = [&, action_name](const Output& o) { cmd_curve(o, action_name, rows, form, point); };
    });
  }

  // identity-check
  std::string id_name, id_mode = "sampled";
  std::size_t samples = 100;
  std::int64_t id_bound = 10000;
  std::uint64_t seed = 20240101;
  double budget_seconds = 0;
  auto* idc = app.add_subcommand("identity-check", "Verify a polynomial identity");
  idc->add_option("name", id_name, "Identity name")
      ->required()
      ->check(CLI::IsMember(identity_names()));
  idc->add_option("--mode", id_mode, "symbolic or sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}));
  idc->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  idc->add_option("--bound", id_bound, "Sample entries in [-B, B]")->check(CLI::PositiveNumber);
  idc->add_option("--seed", seed, "Random seed");
  idc->add_option("--budget-seconds", budget_seconds, "Wall-clock budget (0 = none)");
  idc->callback([&] {
    action = [&](const Output& o) {
      cmd_identity(o, id_name, id_mode, samples, id_bound, seed, budget_seconds);
    };
  });

  // search
  SearchArgs sa;
  auto* se = app.add_subcommand("search", "Bounded exhaustive searches");
  se->add_option("--mode", sa.mode, "bordered | two-rows | rows-enum | brute")
      ->check(CLI::IsMember({"bordered", "two-rows", "rows-enum", "brute"}));
  se->add_option("--bound", sa.bound, "Entry bound for the searched entries")
      ->required()
      ->check(CLI::PositiveNumber);
  se->add_option("--row-bound", sa.row_bound, "Entry bound for rows 2, 3 (rows-enum)")
      ->check(CLI::PositiveNumber);
  se->add_option("--rows", sa.rows, "Fixed rows 2, 3 (two-rows): \"p q r; u v w\"");
  se->add_option("--k", sa.k, "Target determinant");
  se->add_option("--k-min", sa.k_min, "Lower end of determinant range");
  se->add_option("--k-max", sa.k_max, "Upper end of determinant range");
  se->add_flag("--forbid-units", sa.forbid_units, "No entry may be 1 or -1");
  se->add_flag("--forbid-zero", sa.forbid_zero, "No entry may be 0");
  se->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
  se->add_option("--work-budget", sa.work_budget, "Max row pairs this run (rows-enum)");
  se->add_option("--resume-from", sa.resume_from, "First row pair index (rows-enum)");
  se->callback([&] { action = [&](const Output& o) { cmd_search(o, sa); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (format == "json")
      err << json{{"status", "error"}, {"code", "Usage"}, {"message", e.what()}}.dump() << "\n";
    else
      err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Output output{format == "json" ? Format::Json : Format::Text, out};
  try {
    action(output);
    return kExitOk;
  } catch (const Error& e) {
    const int code = is_usage_error(e.code()) ? kExitUsage : kExitDomainError;
    if (output.format == Format::Json) {
      err << json{{"status", "error"}, {"code", std::string(to_string(e.code()))},
                  {"message", e.what()}}.dump()
          << "\n";
    } else {
      err << (code == kExitUsage ? "usage error: " : "error: ") << to_string(e.code()) << ": "
          << e.what() << "\n";
    }
    return code;
  }
}

}  // namespace cubedet::cli
