#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/formulas.hpp"
#include "unicyclic/graph6.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/serialize.hpp"
#include "unicyclic/verify.hpp"

namespace unicyclic::cli {
namespace {

using nlohmann::json;

enum class Format { Json, Csv, Table };

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

// Writes to --output when given, else to out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

struct FilterFlags {
  std::optional<std::size_t> girth;
  std::optional<std::int64_t> diameter;
  std::optional<std::size_t> pendants;
  std::optional<std::size_t> max_degree;

  void attach(CLI::App* app) {
    app->add_option("--girth", girth, "cycle length");
    app->add_option("--diameter", diameter, "diameter");
    app->add_option("--pendants", pendants, "number of pendant vertices");
    app->add_option("--max-degree", max_degree, "maximum degree");
  }
  ClassFilter filter() const { return {girth, diameter, pendants, max_degree}; }
};

struct EnumFlags {
  int n = 0;
  int ceiling = kDefaultCeiling;
  std::string strategy = "forest";
  FilterFlags filter;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "number of vertices")->required();
    filter.attach(app);
    app->add_option("--ceiling", ceiling, "largest n enumerated")
        ->capture_default_str();
    app->add_option("--strategy", strategy, "forest or tree-edge")
        ->capture_default_str();
  }
  EnumerateOptions options(std::ostream& err) const {
    if (ceiling > kDefaultCeiling) {
      err << "warning: ceiling " << ceiling << " is above the default "
          << kDefaultCeiling << "; enumeration may take a long time\n";
    }
    return {ceiling, parse_strategy(strategy)};
  }
};

// ---------------------------------------------------------------------

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 == cells.size()) {
        out << cells[c] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << cells[c]
            << "  ";
      }
    }
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

// ---------------------------------------------------------------------

int compute(const std::string& input, const std::string& format_name,
            const std::string& output, std::istream& in, std::ostream& out) {
  std::vector<Graph6Record> records;
  if (input.empty() || input == "-") {
    records = read_graph6_stream(in);
  } else {
    std::ifstream file(input);
    if (!file) throw ParameterError("cannot open input file '" + input + "'");
    records = read_graph6_stream(file);
  }

  std::vector<std::pair<std::string, InvariantReport>> reports;
  for (const auto& rec : records) {
    try {
      reports.emplace_back(to_graph6(rec.graph), structural_profile(rec.graph));
    } catch (const NotConnected&) {
      throw InvalidGraph("line " + std::to_string(rec.line_number) +
                         ": graph is not connected");
    }
  }

  Sink sink(output, out);
  std::ostream& os = sink.stream();
  switch (kFormats.at(format_name)) {
    case Format::Json: {
      json all = json::array();
      for (const auto& [g6, r] : reports) {
        json j = r;
        j["graph6"] = g6;
        all.push_back(std::move(j));
      }
      os << all.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "graph6," << report_csv_header() << "\n";
      for (const auto& [g6, r] : reports) {
        os << g6 << "," << report_csv_row(r) << "\n";
      }
      break;
    case Format::Table: {
      std::vector<std::string> header{"graph6"};
      for (auto& h : split_csv(report_csv_header())) header.push_back(h);
      std::vector<std::vector<std::string>> rows;
      for (const auto& [g6, r] : reports) {
        std::vector<std::string> row{g6};
        for (auto& c : split_csv(report_csv_row(r))) row.push_back(c.empty() ? "-" : c);
        rows.push_back(std::move(row));
      }
      print_table(os, header, rows);
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------

int build(const FamilySpec& spec, const std::string& format_name,
          const std::string& output, std::ostream& out) {
  const FamilyGraph g = build_U(spec);
  Sink sink(output, out);
  std::ostream& os = sink.stream();
  if (format_name == "json") {
    json j = g;
    j["spec"] = spec;
    os << j.dump(2) << "\n";
    return kOk;
  }
  // graph6 first; landmarks as comment lines so the output pipes into compute
  os << to_graph6(g.graph) << "\n";
  os << "# " << spec.to_string() << "\n# landmarks:";
  for (const auto& [name, v] : g.landmarks) os << " " << name << "=" << v;
  os << "\n";
  return kOk;
}

// ---------------------------------------------------------------------

std::map<std::string, std::int64_t> parse_params(const std::string& text) {
  std::map<std::string, std::int64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParameterError("parameter '" + item + "' is not of the form key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || used == 0) {
      throw ParameterError("parameter '" + key + "' needs an integer value, got '" +
                           value + "'");
    }
    if (!out.emplace(key, v).second) {
      throw ParameterError("parameter '" + key + "' given twice");
    }
  }
  return out;
}

int formula(const std::string& name, const std::string& params, bool list,
            std::ostream& out) {
  if (list) {
    for (const auto& info : formula_catalog()) {
      std::string p;
      for (const auto& k : info.params) p += (p.empty() ? "" : ",") + k;
      out << info.name << "(" << p << ")  " << info.description << "\n";
    }
    return kOk;
  }
  if (name.empty()) throw CLI::RequiredError("--name");
  const FormulaEvaluation e = evaluate_formula(name, parse_params(params));
  out << json(e).dump(2) << "\n";
  return e.match() ? kOk : kClaimFailed;
}

// ---------------------------------------------------------------------

int enumerate(const EnumFlags& flags, bool count_only, const std::string& output,
              std::ostream& out, std::ostream& err) {
  const auto members =
      enumerate_unicyclic(flags.n, flags.filter.filter(), flags.options(err));
  Sink sink(output, out);
  if (count_only) {
    sink.stream() << members.size() << "\n";
    return kOk;
  }
  for (const ClassMember& m : members) sink.stream() << m.key.graph6() << "\n";
  return kOk;
}

int search(const EnumFlags& flags, const std::string& objective,
           const std::string& direction, const std::string& format_name,
           const std::string& output, std::ostream& out, std::ostream& err) {
  const ExtremalResult r =
      extremal_search(flags.n, flags.filter.filter(), parse_objective(objective),
                      parse_direction(direction), flags.options(err));
  Sink sink(output, out);
  std::ostream& os = sink.stream();
  if (format_name == "json") {
    os << json(r).dump(2) << "\n";
    return kOk;
  }
  os << "class " << flags.filter.filter().describe() << " on n=" << r.n << ": "
     << r.class_size << " graphs\n";
  if (r.empty_class()) {
    os << "empty class\n";
    return kOk;
  }
  os << to_string(r.direction) << " " << to_string(r.objective) << " = "
     << *r.optimum << "\n";
  for (const Witness& w : r.witnesses) os << w.graph6 << "\n";
  return kOk;
}

// ---------------------------------------------------------------------

std::string params_text(const ParamList& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : " ") + k + "=" + v;
  return out;
}

void verify_table(std::ostream& os, const std::vector<ClaimReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  for (const ClaimReport& r : reports) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.wall_seconds;
    rows.push_back({r.id, to_string(r.kind), to_string(r.status),
                    std::to_string(r.range.n_min) + ".." +
                        std::to_string(r.range.n_max),
                    std::to_string(r.range.points_checked),
                    std::to_string(r.counterexamples.size()), secs.str()});
  }
  print_table(os, {"claim", "kind", "status", "n", "points", "failures", "seconds"},
              rows);
  for (const ClaimReport& r : reports) {
    for (const Counterexample& c : r.counterexamples) {
      os << r.id << ": " << params_text(c.params) << "\n"
         << "  expected " << c.expected << "\n"
         << "  actual   " << c.actual << "\n";
      for (const auto& w : c.witnesses) os << "  witness  " << w << "\n";
    }
  }
}

int verify(const std::vector<std::string>& claims, bool all, bool list, int n_max,
           int ceiling, const std::string& format_name, const std::string& output,
           std::ostream& out, std::ostream& err) {
  if (list) {
    for (const ClaimInfo& c : claim_catalog()) {
      out << c.id << "  [" << to_string(c.kind)
          << (c.exhaustive ? ", exhaustive" : "") << ", n >= " << c.n_min
          << "]  " << c.description << "\n";
    }
    return kOk;
  }
  if (all == !claims.empty()) {
    throw CLI::ValidationError("verify", "give exactly one of --claim or --all");
  }
  if (n_max < 0) throw CLI::RequiredError("--n-max");
  if (ceiling > kDefaultCeiling) {
    err << "warning: ceiling " << ceiling << " is above the default "
        << kDefaultCeiling << "; exhaustive claims may take a long time\n";
  }
  VerifyOptions options;
  options.ceiling = ceiling;

  std::vector<ClaimReport> reports;
  if (all) {
    reports = verify_all(n_max, options);
  } else {
    for (const auto& id : claims) reports.push_back(verify_claim(id, n_max, options));
  }

  if (format_name == "json") {
    Sink sink(output, out);
    sink.stream() << json(reports).dump(2) << "\n";
  } else {
    verify_table(out, reports);
    if (!output.empty()) {
      Sink sink(output, out);
      sink.stream() << json(reports).dump(2) << "\n";
    }
  }
  return any_failed(reports) ? kClaimFailed : kOk;
}

}  // namespace

// ---------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, families and claim checks for unicyclic graphs",
               "unicyclic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");
  const auto format_check = CLI::IsMember({"json", "csv", "table"});

  std::string output;

  auto* c_compute = app.add_subcommand("compute", "invariants of graph6 input");
  std::string input;
  c_compute->add_option("--input,-i", input, "graph6 file (default stdin)");
  std::string compute_format = "json";
  c_compute->add_option("--format", compute_format, "json, csv or table")
      ->check(format_check);
  c_compute->add_option("--output,-o", output, "write here instead of stdout");

  auto* c_build = app.add_subcommand("build", "realize U^k_{n,m,d}(a,b)");
  FamilySpec spec;
  c_build->add_option("--n", spec.n, "order")->required();
  c_build->add_option("--m", spec.m, "girth")->required();
  c_build->add_option("--d", spec.d, "diameter")->required();
  c_build->add_option("--a", spec.a, "path length at v0")->required();
  c_build->add_option("--b", spec.b, "path length at v_{floor(m/2)}")->required();
  c_build->add_option("--k", spec.k, "cycle index of the pendants")
      ->capture_default_str();
  std::string build_format = "graph6";
  c_build->add_option("--format", build_format, "graph6 or json")
      ->check(CLI::IsMember({"graph6", "json"}));
  c_build->add_option("--output,-o", output, "write here instead of stdout");

  auto* c_formula = app.add_subcommand("formula", "evaluate a closed form");
  std::string f_name;
  std::string f_params;
  bool f_list = false;
  c_formula->add_option("--name", f_name, "formula name");
  c_formula->add_option("--params", f_params, "k=v,k=v,...");
  c_formula->add_flag("--list", f_list, "list formulas");

  auto* c_enum = app.add_subcommand("enumerate", "list a class up to isomorphism");
  EnumFlags e_flags;
  e_flags.attach(c_enum);
  bool e_count = false;
  c_enum->add_flag("--count", e_count, "print only the class size");
  c_enum->add_option("--output,-o", output, "write here instead of stdout");

  auto* c_search = app.add_subcommand("search", "extremal graphs of a class");
  EnumFlags s_flags;
  s_flags.attach(c_search);
  std::string objective = "dd";
  std::string direction = "min";
  c_search->add_option("--objective", objective, "dd, rdd or w")
      ->capture_default_str();
  c_search->add_option("--direction", direction, "min or max")
      ->capture_default_str();
  std::string search_format = "json";
  c_search->add_option("--format", search_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  c_search->add_option("--output,-o", output, "write here instead of stdout");

  auto* c_verify = app.add_subcommand("verify", "check claims on a range");
  std::vector<std::string> v_claims;
  bool v_all = false;
  bool v_list = false;
  int v_n_max = -1;
  int v_ceiling = kDefaultCeiling;
  c_verify->add_option("--claim", v_claims, "claim id (repeatable)");
  c_verify->add_flag("--all", v_all, "every claim");
  c_verify->add_flag("--list", v_list, "list claims");
  c_verify->add_option("--n-max", v_n_max, "largest n checked");
  c_verify->add_option("--ceiling", v_ceiling, "largest n enumerated")
      ->capture_default_str();
  std::string verify_format = "table";
  c_verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"json", "table"}));
  c_verify->add_option("--output,-o", output, "JSON report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (c_compute->parsed()) return compute(input, compute_format, output, in, out);
    if (c_build->parsed()) {
      return build(spec, build_format, output, out);
    }
    if (c_formula->parsed()) return formula(f_name, f_params, f_list, out);
    if (c_enum->parsed()) return enumerate(e_flags, e_count, output, out, err);
    if (c_search->parsed()) {
      return search(s_flags, objective, direction, search_format, output,
                    out, err);
    }
    if (c_verify->parsed()) {
      return verify(v_claims, v_all, v_list, v_n_max, v_ceiling,
                    verify_format, output, out, err);
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace unicyclic::cli
