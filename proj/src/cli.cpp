#include "tom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tom/axioms.hpp"
#include "tom/generators.hpp"
#include "tom/geometry.hpp"
#include "tom/io.hpp"
#include "tom/paths.hpp"
#include "tom/svg.hpp"

namespace tom::cli {

namespace {

constexpr std::size_t kTextViolationLimit = 10;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw FormatError(path + ": cannot open file");
  buf << file.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path, Streams& io) {
  return parse_json(read_input(path, io), path == "-" ? "<stdin>" : path);
}

TypeSystem load_system(const std::string& path, Streams& io) {
  auto parsed = types_or_cells_from_json(load_json(path, io), path);
  if (auto* cells = std::get_if<CellCollection>(&parsed)) return face_types(*cells);
  return std::get<TypeSystem>(std::move(parsed));
}

TropicalType type_argument(const std::string& text, const char* option, std::size_t n,
                           std::size_t d) {
  auto t = type_from_json(parse_json(text, option), d, option);
  if (n != 0 && t.n() != n) {
    throw FormatError(std::string(option) + ": expected " + std::to_string(n) + " coordinates");
  }
  return t;
}

std::vector<std::string> split_commas(const std::string& text, const char* option) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  for (const auto& p : parts) {
    if (p.empty()) throw FormatError(std::string(option) + ": empty entry in \"" + text + "\"");
  }
  return parts;
}

std::vector<long long> int_list(const std::string& text, const char* option) {
  std::vector<long long> out;
  for (const auto& part : split_commas(text, option)) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) {
      throw FormatError(std::string(option) + ": \"" + part + "\" is not an integer");
    }
    out.push_back(value);
  }
  return out;
}

std::string bracketed(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(v[t]);
  }
  return out + ")";
}

std::string vertex_label(const GraphVertex& v) {
  return (v.side == Side::left ? "L" : "R") + std::to_string(v.index + 1);
}

std::size_t cell_argument(long long k, const CellCollection& cells) {
  if (k < 1 || static_cast<std::size_t>(k) > cells.size()) {
    throw FormatError("--cell: expected 1.." + std::to_string(cells.size()));
  }
  return static_cast<std::size_t>(k - 1);
}

int cmd_validate(const std::string& path, bool json, Streams& io) {
  const auto cells = cells_from_json(load_json(path, io), path);
  const auto report = validate_subdivision(cells);
  if (json) {
    Json j;
    j["valid"] = report.valid();
    Json trees = Json::array();
    for (const auto& v : report.non_trees) {
      trees.push_back({{"cell", v.cell + 1}, {"edges", v.edge_count}, {"connected", v.connected}});
    }
    Json facets = Json::array();
    for (const auto& v : report.dangling_facets) {
      facets.push_back({{"cell", v.cell + 1},
                        {"edge", {v.left + 1, v.right + 1}},
                        {"facet", type_to_json(v.facet)}});
    }
    Json overlaps = Json::array();
    for (const auto& v : report.overlap_cycles) {
      Json cycle = Json::array();
      for (const auto& x : v.cycle) cycle.push_back(vertex_label(x));
      overlaps.push_back({{"cells", {v.first + 1, v.second + 1}}, {"cycle", cycle}});
    }
    j["spanning_trees"] = {{"ok", report.spanning_trees_ok()}, {"violations", trees}};
    j["facets"] = {{"ok", report.facets_ok()}, {"violations", facets}};
    j["overlaps"] = {{"ok", report.overlaps_ok()}, {"violations", overlaps}};
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "spanning trees: " << (report.spanning_trees_ok() ? "ok" : "FAIL") << '\n';
    for (const auto& v : report.non_trees) {
      io.out << "  cell " << v.cell + 1 << " " << cells[v.cell].to_string() << ": "
             << v.edge_count << " edges, " << (v.connected ? "connected" : "disconnected") << '\n';
    }
    io.out << "facets: " << (report.facets_ok() ? "ok" : "FAIL") << '\n';
    for (const auto& v : report.dangling_facets) {
      io.out << "  cell " << v.cell + 1 << " " << cells[v.cell].to_string() << " minus edge ("
             << v.left + 1 << "," << v.right + 1 << "): facet " << v.facet.to_string()
             << " lies in no other cell\n";
    }
    io.out << "overlaps: " << (report.overlaps_ok() ? "ok" : "FAIL") << '\n';
    for (const auto& v : report.overlap_cycles) {
      io.out << "  cells " << v.first + 1 << " and " << v.second + 1 << ": cycle";
      for (const auto& x : v.cycle) io.out << ' ' << vertex_label(x);
      io.out << '\n';
    }
    io.out << (report.valid() ? "valid" : "invalid") << '\n';
  }
  return report.valid() ? kExitOk : kExitFailed;
}

SurroundingMode parse_mode(const std::string& mode) {
  if (mode == "subset") return SurroundingMode::subset;
  if (mode == "partition") return SurroundingMode::partition;
  return SurroundingMode::automatic;
}

int cmd_check_tom(const std::string& path, const std::string& mode, bool json, Streams& io) {
  const auto system = load_system(path, io);
  const auto verdict = check_tom(system, parse_mode(mode));
  if (json) {
    Json j;
    j["types"] = system.size();
    j["passed"] = verdict.passed();
    Json axioms = Json::object();
    for (const auto* r : verdict.reports()) {
      Json violations = Json::array();
      for (const auto& v : r->violations) violations.push_back(describe(v));
      axioms[to_string(r->axiom)] = {{"passed", r->passed()}, {"violations", violations}};
    }
    j["axioms"] = axioms;
    io.out << j.dump(2) << '\n';
  } else {
    for (const auto* r : verdict.reports()) {
      io.out << to_string(r->axiom) << ": " << (r->passed() ? "pass" : "FAIL");
      if (!r->passed()) io.out << " (" << r->violations.size() << " violations)";
      io.out << '\n';
      for (std::size_t t = 0; t < r->violations.size() && t < kTextViolationLimit; ++t) {
        io.out << "  " << describe(r->violations[t]) << '\n';
      }
      if (r->violations.size() > kTextViolationLimit) {
        io.out << "  ... " << r->violations.size() - kTextViolationLimit << " more\n";
      }
    }
    io.out << "verdict: " << (verdict.passed() ? "tropical oriented matroid" : "not a tropical oriented matroid")
           << " (" << system.size() << " types)\n";
  }
  return verdict.passed() ? kExitOk : kExitFailed;
}

int cmd_degree(const std::string& path, long long k, bool json, Streams& io) {
  const auto cells = cells_from_json(load_json(path, io), path);
  const auto& cell = cells[cell_argument(k, cells)];
  const auto ldv = left_degree_vector(cell).entries;
  const auto rdv = right_degree_vector(cell).entries;
  const auto locations = unit_simplex_locations(cell);
  if (json) {
    Json j;
    j["cell"] = k;
    j["type"] = type_to_json(cell);
    j["ldv"] = ldv;
    j["rdv"] = rdv;
    j["unit_simplex_locations"] = locations;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "cell " << k << ": " << cell.to_string() << '\n';
    io.out << "LDV: " << bracketed(ldv) << '\n';
    io.out << "RDV: " << bracketed(rdv) << '\n';
    io.out << "unit simplex:";
    if (locations.empty()) io.out << " none";
    for (const auto& loc : locations) io.out << ' ' << bracketed(loc);
    io.out << '\n';
  }
  return kExitOk;
}

int cmd_qalpha(const std::string& path, const std::string& alpha_text, bool check_connected,
               bool json, Streams& io) {
  const auto system = load_system(path, io);
  const auto values = int_list(alpha_text, "--alpha");
  if (values.size() != system.n()) {
    throw FormatError("--alpha: expected " + std::to_string(system.n()) + " entries");
  }
  const RankVector alpha(values.begin(), values.end());
  const auto filtered = q_alpha(system, alpha);
  if (!check_connected) {
    io.out << to_json(filtered).dump() << '\n';
    return kExitOk;
  }
  const auto report = connectivity(filtered);
  if (json) {
    Json components = Json::array();
    for (const auto& c : report.components) components.push_back(c.size());
    io.out << Json{{"types", report.type_count},
                   {"components", components},
                   {"connected", report.connected()}}
                  .dump(2)
           << '\n';
  } else {
    io.out << "Q_alpha " << bracketed(alpha) << ": " << report.type_count << " types, "
           << report.components.size() << " component(s): "
           << (report.connected() ? "connected" : "DISCONNECTED") << '\n';
  }
  return report.connected() ? kExitOk : kExitFailed;
}

int cmd_tu(const std::string& path, long long k, bool json, Streams& io) {
  const auto cells = cells_from_json(load_json(path, io), path);
  const auto& cell = cells[cell_argument(k, cells)];
  const auto facets = facet_matrix(cell);
  const bool tu = is_totally_unimodular(facets.rows);
  const auto order = interval_column_order(facets.rows);
  if (json) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < facets.rows.size(); ++r) {
      rows.push_back({{"edge", {facets.edges[r].first + 1, facets.edges[r].second + 1}},
                      {"row", facets.rows[r]},
                      {"sense", facets.upper[r] ? "<=" : ">="},
                      {"rhs", format_rational(facets.rhs[r])}});
    }
    Json j{{"cell", k}, {"type", type_to_json(cell)}, {"facets", rows},
           {"totally_unimodular", tu}, {"interval_reorderable", order.has_value()}};
    if (order) {
      Json cols = Json::array();
      for (std::size_t c : *order) cols.push_back(c + 1);
      j["column_order"] = cols;
    }
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "cell " << k << ": " << cell.to_string() << '\n';
    for (std::size_t r = 0; r < facets.rows.size(); ++r) {
      io.out << "  edge (" << facets.edges[r].first + 1 << "," << facets.edges[r].second + 1
             << "):";
      for (int v : facets.rows[r]) io.out << ' ' << v;
      io.out << (facets.upper[r] ? "  <= " : "  >= ") << format_rational(facets.rhs[r]) << '\n';
    }
    io.out << "totally unimodular: " << (tu ? "yes" : "no") << '\n';
    io.out << "interval reorderable: " << (order ? "yes" : "no");
    if (order) {
      io.out << " (column order";
      for (std::size_t c : *order) io.out << ' ' << c + 1;
      io.out << ')';
    }
    io.out << '\n';
  }
  return kExitOk;
}

int cmd_point_type(const std::string& weights_path, const std::string& x_text, Streams& io) {
  const auto w = weights_from_json(load_json(weights_path, io), weights_path);
  std::vector<Rational> x;
  for (const auto& part : split_commas(x_text, "--x")) {
    try {
      x.push_back(parse_rational(part));
    } catch (const MalformedRational& e) {
      throw FormatError(std::string("--x: ") + e.what());
    }
  }
  if (x.size() != w.d()) throw FormatError("--x: expected " + std::to_string(w.d()) + " entries");
  io.out << type_to_json(point_type(w, x)).dump() << '\n';
  return kExitOk;
}

int cmd_plot(const std::string& path, const std::string& out_path, Streams& io) {
  const auto cells = cells_from_json(load_json(path, io), path);
  const auto svg = render_svg(cells);
  if (out_path == "-") {
    io.out << svg;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(out_path + ": cannot write");
  file << svg;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Triangulations of products of simplices and tropical oriented matroids",
               "tomkit"};
  app.require_subcommand(1);

  bool json = false;
  std::string file, other_file, a_text, b_text, alpha_text, x_text, perm_text, mode = "auto";
  long long n_arg = 0, d_arg = 0, cell_arg = 0, j_arg = 0;
  bool check_connected = false;

  auto* gen = app.add_subcommand("gen", "generate a subdivision file");
  gen->require_subcommand(1);
  auto* gen_staircase = gen->add_subcommand("staircase", "staircase triangulation");
  gen_staircase->add_option("--n", n_arg)->required()->check(CLI::Range(1, 64));
  gen_staircase->add_option("--d", d_arg)->required()->check(CLI::Range(1, 64));
  auto* gen_prism = gen->add_subcommand("prism", "triangulation of Delta_{n-1} x Delta_1");
  gen_prism->add_option("--perm", perm_text, "1-based permutation, e.g. 2,1,3")->required();
  auto* gen_regular = gen->add_subcommand("regular", "regular subdivision of a weight matrix");
  gen_regular->add_option("--weights", other_file)->required();

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file, - for stdin")->required();
    sub->add_flag("--json", json, "machine-readable report");
  };
  auto* validate = app.add_subcommand("validate", "check the three subdivision conditions");
  add_file(validate);
  auto* faces = app.add_subcommand("faces", "types file of all faces");
  add_file(faces);
  auto* check = app.add_subcommand("check-tom", "check the tropical oriented matroid axioms");
  add_file(check);
  check->add_option("--mode", mode, "surrounding check: auto, subset or partition")
      ->check(CLI::IsMember({"auto", "subset", "partition"}));
  auto* degree = app.add_subcommand("degree", "degree vectors and unit simplex of a cell");
  add_file(degree);
  degree->add_option("--cell", cell_arg)->required();
  auto* dual_cmd = app.add_subcommand("dual", "transposed subdivision file");
  add_file(dual_cmd);
  auto* rank_cmd = app.add_subcommand("rank", "rank vector of two types");
  rank_cmd->add_option("--a", a_text)->required();
  rank_cmd->add_option("--b", b_text)->required();
  auto* delta_cmd = app.add_subcommand("delta", "sum of coordinate symmetric differences");
  delta_cmd->add_option("--a", a_text)->required();
  delta_cmd->add_option("--b", b_text)->required();
  auto* path_cmd = app.add_subcommand("strong-path", "strong path between two types");
  add_file(path_cmd);
  path_cmd->add_option("--a", a_text)->required();
  path_cmd->add_option("--b", b_text)->required();
  auto* elim = app.add_subcommand("eliminate", "elimination witness from a strong path");
  add_file(elim);
  elim->add_option("--a", a_text)->required();
  elim->add_option("--b", b_text)->required();
  elim->add_option("--j", j_arg, "1-based position")->required();
  auto* qalpha = app.add_subcommand("qalpha", "types with |A_i| > alpha_i");
  add_file(qalpha);
  qalpha->add_option("--alpha", alpha_text)->required();
  qalpha->add_flag("--check-connected", check_connected);
  auto* tu = app.add_subcommand("tu", "facet matrix and total unimodularity of a cell");
  add_file(tu);
  tu->add_option("--cell", cell_arg)->required();
  auto* pt = app.add_subcommand("point-type", "type of a point in a tropical arrangement");
  pt->add_option("--weights", other_file)->required();
  pt->add_option("--x", x_text, "comma separated rationals")->required();
  auto* plot = app.add_subcommand("plot", "SVG drawing of a subdivision with d = 3");
  add_file(plot);
  plot->add_option("--out", other_file, "output file, - for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tomkit: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (gen_staircase->parsed()) {
      out << to_json(staircase(n_arg, d_arg)).dump() << '\n';
      return kExitOk;
    }
    if (gen_prism->parsed()) {
      std::vector<std::size_t> perm;
      for (long long p : int_list(perm_text, "--perm")) {
        if (p < 1) throw FormatError("--perm: entries are 1-based");
        perm.push_back(static_cast<std::size_t>(p - 1));
      }
      try {
        out << to_json(prism_triangulation(perm)).dump() << '\n';
      } catch (const NotAPermutation& e) {
        throw FormatError(std::string("--perm: ") + e.what());
      }
      return kExitOk;
    }
    if (gen_regular->parsed()) {
      const auto w = weights_from_json(load_json(other_file, io), other_file);
      out << to_json(regular_subdivision(w)).dump() << '\n';
      return kExitOk;
    }
    if (validate->parsed()) return cmd_validate(file, json, io);
    if (faces->parsed()) {
      const auto cells = cells_from_json(load_json(file, io), file);
      out << to_json(face_types(cells)).dump() << '\n';
      return kExitOk;
    }
    if (check->parsed()) return cmd_check_tom(file, mode, json, io);
    if (degree->parsed()) return cmd_degree(file, cell_arg, json, io);
    if (dual_cmd->parsed()) {
      const auto cells = cells_from_json(load_json(file, io), file);
      out << to_json(cells.transposed()).dump() << '\n';
      return kExitOk;
    }
    if (rank_cmd->parsed() || delta_cmd->parsed()) {
      auto a = type_argument(a_text, "--a", 0, 0);
      auto b = type_argument(b_text, "--b", a.n(), 0);
      // Both types live in [d] for the larger inferred d.
      const std::size_t d = std::max(a.d(), b.d());
      a = TropicalType(d, a.coords());
      b = TropicalType(d, b.coords());
      if (rank_cmd->parsed()) {
        out << Json(rank(a, b)).dump() << '\n';
      } else {
        out << delta(a, b) << '\n';
      }
      return kExitOk;
    }
    if (path_cmd->parsed() || elim->parsed()) {
      const auto system = load_system(file, io);
      const auto a = type_argument(a_text, "--a", system.n(), system.d());
      const auto b = type_argument(b_text, "--b", system.n(), system.d());
      if (path_cmd->parsed()) {
        out << path_to_json(system.n(), system.d(), strong_path(system, a, b)).dump() << '\n';
        return kExitOk;
      }
      if (j_arg < 1 || static_cast<std::size_t>(j_arg) > system.n()) {
        throw FormatError("--j: expected 1.." + std::to_string(system.n()));
      }
      const auto c = eliminate_via_path(system, a, b, static_cast<std::size_t>(j_arg - 1));
      out << type_to_json(c).dump() << '\n';
      return kExitOk;
    }
    if (qalpha->parsed()) return cmd_qalpha(file, alpha_text, check_connected, json, io);
    if (tu->parsed()) return cmd_tu(file, cell_arg, json, io);
    if (pt->parsed()) return cmd_point_type(other_file, x_text, io);
    if (plot->parsed()) return cmd_plot(file, other_file, io);
  } catch (const FormatError& e) {
    err << "tomkit: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NonGenericWeights& e) {
    err << "tomkit: " << e.what() << '\n';
    return kExitNonGeneric;
  } catch (const NoStrongPath& e) {
    err << "tomkit: " << e.what() << '\n';
    return kExitNoStrongPath;
  } catch (const Error& e) {
    err << "tomkit: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitBadInput;
}

}  // namespace tom::cli
