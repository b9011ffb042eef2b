#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "acceptance_suite.hpp"
#include "veech/io.hpp"
#include "veech/orbit.hpp"
#include "veech/platonic.hpp"
#include "veech/saddle.hpp"
#include "veech/teichcurve.hpp"

using namespace veech;

namespace {

// Relative output paths go under $VEECH_OUT_DIR when it is set.
std::string out_path(const std::string& p) {
  const char* dir = std::getenv("VEECH_OUT_DIR");
  if (!dir || !*dir || p.empty() || std::filesystem::path(p).is_absolute()) return p;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") std::cout << data;
  else write_file(out_path(path), data);
}

Vec2 parse_vector(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("vector must be \"x coefficients;y coefficients\"");
  return {Nf::parse(text.substr(0, semi)), Nf::parse(text.substr(semi + 1))};
}

OrbitTable orbit_for(const std::string& path, int threads) {
  if (!path.empty()) {
    auto t = orbit_from_json(read_file(path));
    if (!t.has_j()) t.j = compute_j(t);
    return t;
  }
  OrbitOptions o;
  o.threads = threads;
  auto t = enumerate_orbit(build_unfolding(Solid::dodecahedron), {generator_R(), generator_T()}, "RT", o);
  t.j = compute_j(t);
  return t;
}

}  // namespace

std::vector<std::string> solid_names() {
  std::vector<std::string> out;
  for (Solid s : all_solids()) out.push_back(solid_name(s));
  return out;
}

int main(int argc, char** argv) {
  CLI::App app{"Veech groups and saddle connections of the Platonic solids"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  std::string solid_name_arg, out, surface_file, orbit_file, kind = "long", word, vector_text, svg_out;
  long cap = 100000;
  int k = 0, digits = 6;
  double shortest = 0;
  bool fresh = false;

  auto* unfold = app.add_subcommand("unfold", "write the unfolding of a solid as surface JSON");
  unfold->add_option("solid", solid_name_arg)->required()->check(CLI::IsMember(solid_names()));
  unfold->add_option("--out", out, "output file (default stdout)");

  auto* perms = app.add_subcommand("perms", "print the monodromy permutations, 1-based");
  perms->add_option("solid", solid_name_arg)->required()->check(CLI::IsMember(solid_names()));

  auto* otable = app.add_subcommand("origami-table", "Veech data of the arithmetic solids as CSV");
  otable->add_option("--out", out);

  auto* orbit = app.add_subcommand("orbit", "enumerate the {R, T} orbit of a surface");
  orbit->add_option("--surface", surface_file, "surface JSON (default: the dodecahedron)")->check(CLI::ExistingFile);
  orbit->add_option("--out", out, "orbit.json");
  orbit->add_option("--cap", cap, "abort past this many surfaces")->check(CLI::PositiveNumber);

  auto* teich = app.add_subcommand("teich", "topology of the Teichmuller curve");
  teich->add_option("--orbit", orbit_file)->required()->check(CLI::ExistingFile);
  teich->add_option("--out", out);

  auto* saddles = app.add_subcommand("saddles", "closed saddle connection classes of the dodecahedron");
  saddles->add_option("--kind", kind)->check(CLI::IsMember({"long", "short"}));
  saddles->add_option("--orbit", orbit_file, "cached orbit.json")->check(CLI::ExistingFile);
  saddles->add_option("--shortest", shortest, "list the shortest representative per class below this length")
      ->check(CLI::PositiveNumber);
  saddles->add_option("--digits", digits, "significant digits of float columns")->check(CLI::Range(6, 17));
  saddles->add_option("--out", out);

  auto* trace = app.add_subcommand("trace", "trace R^k w^-1 (2 phi, 0) on the double pentagon");
  trace->add_option("--word", word)->required();
  trace->add_option("--k", k)->check(CLI::Range(0, 9));
  trace->add_option("--svg", svg_out, "render the double pentagon with the trajectory");

  auto* reduce = app.add_subcommand("reduce", "Rosen reduction of a saddle connection vector");
  reduce->add_option("--vector", vector_text, "\"c0,c1,c2,c3;d0,d1,d2,d3\"")
      ->required()
      ->check(
          [](const std::string& text) {
            try {
              parse_vector(text);
            } catch (const std::exception& e) {
              return std::string(e.what());
            }
            return std::string();
          },
          "VECTOR");

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->add_option("--cache", orbit_file, "orbit.json to reuse or create");
  verify->add_flag("--fresh", fresh, "enumerate even if the cache exists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*unfold) {
      emit(out, surface_to_json(build_unfolding(parse_solid(solid_name_arg))));
    } else if (*perms) {
      Solid s = parse_solid(solid_name_arg);
      auto gens = monodromy_generators(s);
      std::vector<std::string> names = s == Solid::dodecahedron ? std::vector<std::string>{"x0", "x1", "x2", "x3"}
                                                                : std::vector<std::string>{"h", "v"};
      for (std::size_t i = 0; i < gens.size(); ++i) std::cout << names[i] << " = " << gens[i].cycle_string(true) << "\n";
      std::cout << "group order " << monodromy_group_order(s) << "\n";
    } else if (*otable) {
      emit(out, origami_table_csv());
    } else if (*orbit) {
      auto s = surface_file.empty() ? build_unfolding(Solid::dodecahedron) : surface_from_json(read_file(surface_file));
      OrbitOptions o;
      o.cap = cap;
      o.threads = threads;
      o.progress = [](int level, int size) { std::cerr << "level " << level << ": " << size << " surfaces\n"; };
      auto t = enumerate_orbit(s, {generator_R(), generator_T()}, "RT", o);
      if (is_j_invariant(s)) t.j = compute_j(t);
      std::cerr << "N = " << t.N << "\n";
      emit(out.empty() ? "orbit.json" : out, orbit_to_json(t));
    } else if (*teich) {
      auto t = orbit_from_json(read_file(orbit_file));
      emit(out, teich_to_json(topology_over_pi5(t.r, t.t)));
    } else if (*saddles) {
      auto t = orbit_for(orbit_file, threads);
      auto res = classify_closed_saddles(t);
      std::vector<SaddleClassRecord> rows;
      if (kind == "long") rows = shortest > 0 ? shortest_representatives(t, res, shortest) : res.records;
      // No short class closes, so there is nothing to list; the header
      // still goes out.
      std::cerr << res.long_closed.size() << " long-closed and " << res.short_closed.size()
                << " short-closed classes of " << res.classes.count() << "\n";
      emit(out, saddle_csv(rows, digits));
    } else if (*trace) {
      auto pi5 = double_pentagon();
      Vec2 v = class_holonomy(word, k);
      if (pi5_sector(v) > 2)
        throw std::invalid_argument("R^k w^-1 (2 phi, 0) points outside [0, 3 pi/5); try another k");
      auto tr = trace_separatrix(pi5, {0, 0}, v);
      std::cout << "holonomy " << v.x.str() << " ; " << v.y.str() << "\n";
      std::cout << "polygons crossed " << tr.polygons << "\n";
      if (tr.hit_singularity) {
        std::cout << "ends at a singularity, holonomy " << (tr.holonomy == v ? "matches" : "differs") << "\n";
        std::cout << "cylinder on the left: " << (bounds_cylinder_on_left(pi5, tr, v) ? "yes" : "no") << "\n";
      } else {
        std::cout << "no singularity reached\n";
      }
      if (!svg_out.empty()) emit(svg_out, render_svg(pi5, tr.segments));
    } else if (*reduce) {
      Vec2 v = parse_vector(vector_text);
      auto r = rosen_reduce(v);
      std::cout << "steps " << (r.steps.empty() ? "(none)" : r.steps) << "\n";
      std::cout << "terminal " << (r.is_long ? "(2 phi, 0)" : "(2, 0)") << "\n";
      std::cout << "replay word " << r.replay() << "\n";
      if (r.is_long && pi5_sector(v) <= 2) {
        try {
          std::cout << "combinatorial length " << combinatorial_length(v) << "\n";
        } catch (const std::invalid_argument&) {
        }
      }
    } else if (*verify) {
      acceptance::Options o;
      o.cache = orbit_file.empty() ? out_path("orbit.json") : orbit_file;
      o.fresh = fresh;
      o.threads = threads;
      auto results = acceptance::run(o, std::cout);
      int failed = 0;
      for (auto& c : results) failed += !c.pass;
      std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria pass\n";
      return failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
