#include "rgdual/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rgdual/errors.hpp"
#include "rgdual/map_io.hpp"
#include "rgdual/partial_dual.hpp"
#include "rgdual/polynomial.hpp"
#include "rgdual/random_map.hpp"

namespace rgdual {

namespace {

constexpr std::uint64_t default_seed = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MapFile load(const std::string& path) {
  try {
    return parse_map_file(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOrientable:
    case ErrorCode::TooManyEdges:
    case ErrorCode::NonOrientableInGenusMode:
      return exit_code::precondition;
    default:
      return exit_code::bad_input;
  }
}

std::string metrics_line(const MapMetrics& mm) {
  std::ostringstream s;
  s << "v=" << mm.v << " e=" << mm.e << " f=" << mm.f << " c=" << mm.c
    << " euler_genus=" << mm.euler_genus << " orientable=" << (mm.orientable ? "true" : "false");
  return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ribbon graphs: partial duals, genus and the partial-dual genus polynomial",
               "rgdual"};
  app.require_subcommand(1);

  std::string file, file2;

  auto* validate = app.add_subcommand("validate", "Parse and validate a map file");
  validate->add_option("FILE", file)->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Print v, e, f, c, Euler genus, orientability");
  metrics_cmd->add_option("FILE", file)->required();

  std::vector<std::string> dual_edges;
  bool dual_all = false;
  auto* dual = app.add_subcommand("dual", "Partial dual; writes a flagmap file");
  dual->add_option("FILE", file)->required();
  auto* edges_opt = dual->add_option("--edges", dual_edges, "Comma-separated edge labels")
                        ->delimiter(',');
  auto* all_opt = dual->add_flag("--all", dual_all, "Dualize every edge");
  edges_opt->excludes(all_opt);

  bool want_genus = false, want_euler = false, parallel = false, csv = false, verify = false;
  auto* poly = app.add_subcommand("poly", "Partial-dual genus polynomial");
  poly->add_option("FILE", file)->required();
  auto* genus_flag = poly->add_flag("--genus", want_genus, "Exponent is the orientable genus");
  poly->add_flag("--euler", want_euler, "Exponent is the Euler genus")->excludes(genus_flag);
  poly->add_flag("--parallel", parallel, "Enumerate subsets on all cores");
  poly->add_flag("--csv", csv, "Print exponent,count lines");
  poly->add_flag("--verify", verify, "Cross-check every exponent by dualizing");

  std::string target;
  auto* convert = app.add_subcommand("convert", "Convert between file formats");
  convert->add_option("FILE", file)->required();
  convert->add_option("--to", target)->required()->check(CLI::IsMember({"rotation", "flagmap"}));

  auto* gem = app.add_subcommand("gem", "Gem as Graphviz DOT");
  gem->add_option("FILE", file)->required();

  auto* iso = app.add_subcommand("iso", "Exit 0 if the maps are isomorphic, 1 if not");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();

  std::string subsets;
  std::size_t samples = 64;
  auto* check = app.add_subcommand("check", "Check the partial-duality identities");
  check->add_option("FILE", file)->required();
  auto* subsets_opt =
      check->add_option("--subsets", subsets)->check(CLI::IsMember({"all"}));
  check->add_option("--samples", samples, "Number of subsets to sample")->excludes(subsets_opt);

  std::size_t random_edges = 0, twists = 0;
  std::uint64_t seed = default_seed;
  auto* random = app.add_subcommand("random", "Seeded random map; writes a flagmap file");
  random->add_option("--edges", random_edges)->required();
  random->add_option("--twists", twists);
  random->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::bad_input;
  }

  try {
    if (*validate) {
      auto loaded = load(file);
      if (const auto* rs = std::get_if<RotationSystem>(&loaded))
        out << "valid rotation: " << rs->halfedge_count() << " half-edges, " << rs->edge_count()
            << " edges\n";
      else {
        const auto& m = std::get<FlagMap>(loaded);
        out << "valid flagmap: " << m.flag_count() << " flags, " << m.edge_count() << " edges\n";
      }
    } else if (*metrics_cmd) {
      out << metrics_line(metrics(as_flag_map(load(file)))) << "\n";
    } else if (*dual) {
      if (!dual_all && dual_edges.empty()) {
        err << "rgdual dual: one of --edges or --all is required\n";
        return exit_code::bad_input;
      }
      auto m = as_flag_map(load(file));
      auto edges = dual_all ? EdgeSet::all(m) : EdgeSet::resolve(m, dual_edges);
      out << write_flagmap(partial_dual(m, edges));
    } else if (*poly) {
      auto m = as_flag_map(load(file));
      PolynomialOptions options;
      if (want_genus) options.mode = GenusMode::genus;
      if (want_euler) options.mode = GenusMode::euler_genus;
      options.threads = parallel ? 0 : 1;
      options.verify = verify;
      auto p = pd_genus_polynomial(m, options);
      out << (csv ? format_polynomial_csv(p) : format_polynomial(p) + "\n");
    } else if (*convert) {
      auto loaded = load(file);
      if (target == "flagmap")
        out << write_flagmap(as_flag_map(loaded));
      else if (const auto* rs = std::get_if<RotationSystem>(&loaded))
        out << write_rotation(*rs);
      else
        out << write_rotation(from_flag_map(std::get<FlagMap>(loaded)));
    } else if (*gem) {
      out << gem_dot(as_flag_map(load(file)));
    } else if (*iso) {
      bool same = is_isomorphic(as_flag_map(load(file)), as_flag_map(load(file2)));
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? exit_code::ok : exit_code::negative;
    } else if (*check) {
      auto m = as_flag_map(load(file));
      SubsetBudget budget;
      budget.max_subsets = subsets == "all" ? SIZE_MAX : samples;
      if (subsets == "all" && m.edge_count() > 16)
        throw Error(ErrorCode::TooManyEdges, "--subsets all is limited to 16 edges");
      auto report = check_duality_properties(m, budget);
      for (const auto* t : report.tallies()) {
        out << t->name << ": " << t->checked << " checks, " << t->failures.size() << " failures\n";
        for (const auto& f : t->failures) out << "  FAIL " << f << "\n";
      }
      out << (report.passed() ? "all properties hold" : "PROPERTY FAILURE") << "\n";
      return report.passed() ? exit_code::ok : exit_code::negative;
    } else if (*random) {
      out << write_flagmap(random_map(random_edges, twists, seed));
    }
  } catch (const Error& e) {
    err << "rgdual: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  }
  return exit_code::ok;
}

}  // namespace rgdual
