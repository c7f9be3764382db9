#include "noether/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "noether/error.hpp"
#include "noether/gallery.hpp"
#include "noether/json_io.hpp"

namespace noether::cli {

namespace {

struct Outcome {
  json result;
  std::string csv;
  int exit_code = 0;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::input_parse:
    case errc::io:
    case errc::out_of_range:
    case errc::shape_mismatch:
    case errc::space_mismatch:
    case errc::singular_s:
    case errc::not_unitary: return 2;
    default: return 1;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::input_parse, path + ": " + e.what());
  }
}

struct Source {
  AOperator op;
  std::optional<NamedFamily> family;
  std::string label;
  std::optional<int> m_max;  // horizon for operators built from the named families
};

Source resolve_operator(const RunConfig& c) {
  const int given = !c.family.empty() + !c.op.empty() + !c.input.empty();
  if (given != 1) throw error(errc::input_parse, "give exactly one of --family, --op, --input");
  if (!c.family.empty()) {
    NamedFamily fam = make_named_family(c.family, c.truncation);
    AOperator op = fam.op;
    const int horizon = fam.m_max();
    return {std::move(op), std::move(fam), c.family, horizon};
  }
  if (!c.op.empty()) {
    std::optional<int> horizon;
    if (c.op.find("eq") != std::string::npos) horizon = c.truncation - 1;
    return {named_operator(c.op, c.truncation), std::nullopt, c.op, horizon};
  }
  return {operator_from_json(read_json_file(c.input)), std::nullopt, c.input, std::nullopt};
}

std::optional<AOperator> resolve_parametrix(const RunConfig& c) {
  if (!c.parametrix.empty() && !c.parametrix_input.empty()) {
    throw error(errc::input_parse, "give at most one of --parametrix, --parametrix-input");
  }
  if (!c.parametrix.empty()) return named_operator(c.parametrix, c.truncation);
  if (!c.parametrix_input.empty()) return operator_from_json(read_json_file(c.parametrix_input));
  return std::nullopt;
}

json config_json(const RunConfig& c) {
  json j = {{"M", c.truncation}, {"eps", c.eps}, {"margin", c.margin}};
  if (!c.family.empty()) j["family"] = c.family;
  if (!c.op.empty()) j["op"] = c.op;
  if (!c.input.empty()) j["input"] = c.input;
  if (!c.parametrix.empty()) j["parametrix"] = c.parametrix;
  if (!c.parametrix_input.empty()) j["parametrix_input"] = c.parametrix_input;
  if (c.m_max) j["m_max"] = *c.m_max;
  if (c.command == "scaling") j["levels"] = c.levels;
  if (c.command == "topology") j["topology"] = c.topology;
  return j;
}

Outcome cmd_compactness(const RunConfig& c) {
  const Source src = resolve_operator(c);
  const std::optional<int> m_max = c.m_max ? c.m_max : src.m_max;
  const CompactnessVerdict k = is_compact(src.op, c.eps, m_max);
  const CompactnessVerdict ka = is_adjointable_compact(src.op, c.eps, m_max);
  Outcome out;
  out.result = {{"operator", src.label}, {"compact", to_json(k)}, {"adjointable", to_json(ka)}};
  std::ostringstream csv;
  csv << "m,qK,qKq,Kq\n";
  const auto& p = k.profile;
  for (std::size_t i = 0; i < p.m_values.size(); ++i) {
    csv << p.m_values[i] << ',' << num(p.qk_norms[i].hi) << ',' << num(p.qkq_norms[i].hi) << ','
        << num(p.kq_norms[i].hi) << '\n';
  }
  out.csv = csv.str();
  return out;
}

NoetherDecomposition decompose_source(const RunConfig& c, const Source& src) {
  if (auto g = resolve_parametrix(c)) return decompose_fredholm(src.op, *g, c.eps, c.margin);
  return decompose_id_plus_K(src.op - AOperator::identity(src.op.space()), c.margin,
                             c.m_max ? c.m_max : src.m_max, c.eps);
}

Outcome cmd_decompose(const RunConfig& c, bool index_only) {
  const Source src = resolve_operator(c);
  const NoetherDecomposition dec = decompose_source(c, src);
  const ExternalDecomposition ext = inner_to_external(dec);
  const NoetherDecomposition back = external_to_inner(ext);
  const IndexElement inner = index(dec);
  const IndexElement outer = index(ext);
  const IndexElement round = index(back);
  const bool agree = inner == outer && inner == round;
  const SequentialSpace& sp = *src.op.space();

  Outcome out;
  out.exit_code = agree ? 0 : 1;
  out.result = {{"operator", src.label},
                {"index", to_json(inner)},
                {"external_index", to_json(outer)},
                {"agree", agree}};
  if (!index_only) {
    out.result["decomposition"] = to_json(dec);
    out.result["external"] = to_json(ext);
    out.result["round_trip"] = to_json(back);
  }
  std::ostringstream csv;
  const auto n1 = dec.n1_dims();
  const auto n2 = dec.n2_dims();
  csv << (index_only ? "point,index,classical\n" : "point,N1,N2,index\n");
  for (std::size_t p = 0; p < n1.size(); ++p) {
    csv << sp.name(p) << ',';
    if (index_only) {
      csv << inner.values[p] << ',' << -inner.values[p] << '\n';
    } else {
      csv << n1[p] << ',' << n2[p] << ',' << inner.values[p] << '\n';
    }
  }
  out.csv = csv.str();
  return out;
}

Outcome cmd_topology(const RunConfig& c) {
  const Source src = resolve_operator(c);
  std::vector<topology> which;
  if (c.topology == "all") {
    which = {topology::uniform, topology::strong, topology::f, topology::im};
  } else {
    which = {parse_topology(c.topology)};
  }
  const int dim = std::max(src.op.support(), c.truncation);
  const Family k = to_family(src.op, dim);
  const Family fk = src.family ? src.family->fredholm_family() : k;
  const SpaceRef& sp = src.op.space();
  Outcome out;
  json diags = json::array();
  std::ostringstream csv;
  csv << "topology,net,point,membership,value\n";
  for (topology t : which) {
    const ContinuityDiagnostic d =
        family_continuity(t == topology::f ? fk : k, sp, t, c.eps, c.seed);
    diags.push_back(to_json(d, *sp));
    for (const auto& n : d.nets) {
      const Net& net = sp->nets()[n.net];
      for (std::size_t i = 0; i < n.trace.size(); ++i) {
        csv << to_string(t) << ',' << n.net << ',' << sp->name(net.sequence[i]) << ','
            << to_string(n.kinds[i]) << ',' << num(n.trace[i]) << '\n';
      }
    }
  }
  out.result = {{"operator", src.label},
                {"F_family", src.family ? "id + K" : "as given"},
                {"diagnostics", diags}};
  out.csv = csv.str();
  return out;
}

Outcome cmd_gallery(const RunConfig& c) {
  Outcome out;
  std::ostringstream csv;
  csv << "check,expected,observed,ok\n";
  if (c.family == "fredprime") {
    const FredPrimeReport r = fredprime_compare(c.truncation, c.eps, c.seed);
    out.result = to_json(r, *make_sequence_space(c.truncation));
    out.exit_code = r.witness ? 0 : 1;
    auto row = [&](const char* what, bool v) {
      csv << what << ",true," << (v ? "true" : "false") << ',' << (v ? "true" : "false") << '\n';
    };
    row("IM-acceptable defects", r.im_acceptable);
    row("defects fail uniform continuity", r.fails_uniform);
    row("A and B F-continuous", r.f_continuous);
    row("decompose_fredholm(A, B)", r.fredholm);
  } else {
    const NamedFamily fam = make_named_family(c.family, c.truncation);
    const GalleryReport r = verify_expectations(fam, c.eps, c.seed);
    out.result = to_json(r, *fam.space);
    out.exit_code = r.ok ? 0 : 1;
    for (const auto& ch : r.checks) {
      csv << ch.what << ',' << ch.expected << ',' << ch.observed << ','
          << (ch.ok ? "true" : "false") << '\n';
    }
  }
  out.csv = csv.str();
  return out;
}

Outcome cmd_scaling(const RunConfig& c) {
  if (c.family.empty()) throw error(errc::input_parse, "scaling needs --family");
  const std::string name = c.family;
  make_named_family(name, 1);
  const ScalingReport r =
      scaling_study([&](int level) { return make_named_family(name, level).op; }, c.levels, c.eps);
  Outcome out;
  out.result = {{"family", name}, {"scaling", to_json(r)}};
  std::ostringstream csv;
  csv << "level,m,norm_lo,norm_hi\n";
  for (std::size_t li = 0; li < r.levels.size(); ++li) {
    for (std::size_t mi = 0; mi < r.m_grid.size(); ++mi) {
      csv << r.levels[li] << ',' << r.m_grid[mi] << ',' << num(r.norms[li][mi].lo) << ','
          << num(r.norms[li][mi].hi) << '\n';
    }
  }
  out.csv = csv.str();
  return out;
}

void validate(const RunConfig& c) {
  if (!(c.eps > 0.0)) throw error(errc::input_parse, "--eps must be positive");
  if (!(c.margin > 0.0 && c.margin < 1.0)) throw error(errc::input_parse, "--margin must lie in (0, 1)");
  if (c.truncation < 1) throw error(errc::input_parse, "--M must be >= 1");
  if (c.format != "json" && c.format != "csv") throw error(errc::input_parse, "--format json|csv");
  if (c.m_max && *c.m_max < 0) throw error(errc::input_parse, "--m-max must be >= 0");
}

}  // namespace

RunResult run(const RunConfig& c) {
  RunResult res;
  try {
    validate(c);
    static const std::map<std::string, std::function<Outcome(const RunConfig&)>> commands = {
        {"compactness", cmd_compactness},
        {"decompose", [](const RunConfig& r) { return cmd_decompose(r, false); }},
        {"index", [](const RunConfig& r) { return cmd_decompose(r, true); }},
        {"topology", cmd_topology},
        {"gallery", cmd_gallery},
        {"scaling", cmd_scaling},
    };
    const auto it = commands.find(c.command);
    if (it == commands.end()) throw error(errc::input_parse, "unknown command '" + c.command + "'");
    const Outcome o = it->second(c);
    res.exit_code = o.exit_code;
    if (c.format == "csv") {
      res.report = "# schema=" + std::string(schema) + " command=" + c.command +
                   " seed=" + std::to_string(c.seed) + "\n" + o.csv;
    } else {
      const json report = {{"schema", schema},
                           {"command", c.command},
                           {"seed", c.seed},
                           {"config", config_json(c)},
                           {"result", o.result}};
      res.report = report.dump(2) + "\n";
    }
  } catch (const error& e) {
    res.exit_code = exit_code_for(e.code());
    res.message = e.what();
    const json report = {{"schema", schema},
                         {"command", c.command},
                         {"seed", c.seed},
                         {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    res.report = report.dump(2) + "\n";
  }
  return res;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Noether decompositions, compactness and index of A-operators"};
  app.add_option("command", c.command, "compactness|decompose|index|topology|gallery|scaling")
      ->required()
      ->check(CLI::IsMember({"compactness", "decompose", "index", "topology", "gallery", "scaling"}));
  app.add_option("--family", c.family, "eq50 | eqAA (gallery also: fredprime)");
  app.add_option("--input", c.input, "operator JSON file");
  app.add_option("--op", c.op, "named operator: id, zero, shiftK, shiftmK, eq50, eqAA, id+eqAA, ...");
  app.add_option("--parametrix", c.parametrix, "named parametrix operator");
  app.add_option("--parametrix-input", c.parametrix_input, "parametrix operator JSON file");
  app.add_option("--M", c.truncation, "truncation (sequence space size)")->capture_default_str();
  app.add_option("--eps", c.eps, "tolerance")->capture_default_str();
  app.add_option("--margin", c.margin, "cut margin for ||q_m K q_m||")->capture_default_str();
  app.add_option("--m-max", c.m_max, "compactness scan depth");
  app.add_option("--levels", c.levels, "scaling levels")->delimiter(',')->capture_default_str();
  app.add_option("--topology", c.topology, "all | uniform | strong | F | IM")->capture_default_str();
  app.add_option("--output", c.output, "report file (default stdout)");
  app.add_option("--format", c.format, "json | csv")->capture_default_str();
  app.add_option("--seed", c.seed, "battery seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }
  const RunResult r = run(c);
  if (!r.message.empty()) err << r.message << "\n";
  if (c.output.empty()) {
    out << r.report;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      err << "Io: cannot write '" << c.output << "'\n";
      return 2;
    }
    f << r.report;
  }
  return r.exit_code;
}

}  // namespace noether::cli
