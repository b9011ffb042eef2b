#include "acceptance_suite.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "golden.hpp"
#include "properties.hpp"
#include "veech/io.hpp"
#include "veech/orbit.hpp"
#include "veech/origami.hpp"
#include "veech/platonic.hpp"
#include "veech/saddle.hpp"
#include "veech/teichcurve.hpp"

namespace veech::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

Vec2 row_vector(const golden::SaddleRow& r) {
  Nf s = Nf::gen(), s2 = s * s;
  return {Nf(r.a) + Nf(r.b) * s2, Nf(r.c) * s + Nf(r.d) * s2 * s};
}

double length_of(const Vec2& v) { return std::sqrt(nf_to_float(norm2(v), 128).mid); }

// Half a unit in the last of six significant digits, the resolution of the
// printed tables, but never tighter than `abs_tol`.
bool close_to_printed(double computed, double printed, double abs_tol) {
  double unit = std::pow(10.0, std::floor(std::log10(std::fabs(printed))) - 5);
  return std::fabs(computed - printed) <= std::max(abs_tol, 0.5 * unit * (1 + 1e-9));
}

std::string ratio(int a, int b) { return std::to_string(a) + "/" + std::to_string(b); }

struct Runner {
  std::ostream& out;
  std::vector<Criterion> results;

  void record(Criterion c) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.detail;
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.1f s]", c.seconds);
    out << buf;
    if (!c.pass && !c.known_failure.empty()) out << " (known: " << c.known_failure << ")";
    out << std::endl;
    results.push_back(std::move(c));
  }

  // Exceptions fail the criterion rather than the run.
  void check(int id, const std::string& name, double limit_seconds, const std::function<void(Criterion&)>& body) {
    Criterion c;
    c.id = id;
    c.name = name;
    auto t0 = Clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail += std::string(" exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.seconds > limit_seconds) {
      c.pass = false;
      c.detail += "; over the time limit";
    }
    record(std::move(c));
  }
};

// Checks a cached orbit against fresh canonical forms at evenly spaced
// indices; everything else in the file is checked by replay.
bool cache_consistent(const OrbitTable& t, const TranslationSurface& d, std::string& why) {
  if (t.N <= 0) return why = "empty", false;
  for (int i = 0; i < t.N; ++i)
    if (replay_word(t, t.words[static_cast<std::size_t>(i)]) != i) return why = "word does not replay", false;
  if (!t.has_j() || t.j != compute_j(t)) return why = "j disagrees with the words", false;
  Mat2 R = generator_R(), T = generator_T();
  for (int k = 0; k < 50; ++k) {
    int i = static_cast<int>((static_cast<long>(k) * t.N) / 50);
    Mat2 w = word_matrix(t.words[static_cast<std::size_t>(i)]);
    auto at = [&](int m) { return canonicalize(apply_matrix(word_matrix(t.words[static_cast<std::size_t>(m)]), d)); };
    if (!(canonicalize(apply_matrix(R * w, d)) == at(t.r(i)))) return why = "r wrong at " + std::to_string(i), false;
    if (!(canonicalize(apply_matrix(T * w, d)) == at(t.t(i)))) return why = "t wrong at " + std::to_string(i), false;
  }
  return true;
}

}  // namespace

std::vector<Criterion> run(const Options& opt, std::ostream& out) {
  Runner run{out, {}};
  const auto d = build_unfolding(Solid::dodecahedron);
  OrbitTable tab;

  run.check(1, "orbit size", 7200, [&](Criterion& c) {
    std::string how;
    if (!opt.cache.empty() && !opt.fresh && std::filesystem::exists(opt.cache)) {
      std::string why;
      OrbitTable cached = orbit_from_json(read_file(opt.cache));
      if (cache_consistent(cached, d, why)) {
        tab = std::move(cached);
        how = "loaded from " + opt.cache + ", 50 spot checks";
      } else {
        how = "stale cache (" + why + "), ";
      }
    }
    if (tab.N == 0) {
      OrbitOptions o;
      o.threads = opt.threads;
      tab = enumerate_orbit(d, {generator_R(), generator_T()}, "RT", o);
      tab.j = compute_j(tab);
      if (!opt.cache.empty()) write_file(opt.cache, orbit_to_json(tab));
      how += "enumerated";
    }
    c.pass = tab.N == 2106;
    c.detail = "N=" + std::to_string(tab.N) + " (" + how + ")";
  });
  if (tab.N == 0) {
    out << "orbit unavailable; remaining criteria skipped" << std::endl;
    for (int id = 2; id <= 12; ++id) run.record({id, "skipped", false, "", "no orbit", 0});
    return run.results;
  }

  run.check(2, "cycle types", 60, [&](Criterion& c) {
    auto rt = tab.r * tab.t.inverse();
    bool r_ok = tab.r.cycle_type() == std::map<int, int>{{1, 1}, {5, 421}};
    bool t_ok = tab.t.num_cycles() == 362;
    bool rt_ok = rt.cycle_type() == std::map<int, int>{{1, 18}, {2, 1044}};
    c.pass = r_ok && t_ok && rt_ok;
    auto ct = [](const Permutation& p) {
      std::string s;
      for (auto [len, n] : p.cycle_type()) s += std::to_string(len) + "^" + std::to_string(n) + " ";
      return s.empty() ? s : s.substr(0, s.size() - 1);
    };
    c.detail = "r " + ct(tab.r) + "; t has " + std::to_string(tab.t.num_cycles()) + " cycles; r t^-1 " + ct(rt);
  });

  run.check(3, "Teichmuller curve topology", 60, [&](Criterion& c) {
    auto t0 = Clock::now();
    auto topo = topology_over_pi5(tab.r, tab.t);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    int rh = riemann_hurwitz_genus(tab.r, tab.t);
    c.pass = topo.genus == 131 && topo.cusps == 362 && topo.cone_pi == 18 && topo.cone_two_pi_fifths == 1 && rh == 131 &&
             secs < 1;
    c.detail = "genus " + std::to_string(topo.genus) + " (Riemann-Hurwitz " + std::to_string(rh) + "), " +
               std::to_string(topo.cusps) + " cusps, " + std::to_string(topo.cone_pi) + " pi-points, " +
               std::to_string(topo.cone_two_pi_fifths) + " 2pi/5-points";
  });

  ClosedSaddleSearch search;
  run.check(4, "equivalence classes", 600, [&](Criterion& c) {
    search = classify_closed_saddles(tab);
    // Direct check on the glued surfaces, independent of the vertex cycles.
    int disagree = 0;
    for (int k = 0; k < search.classes.count(); ++k) {
      auto q = quadruple_of_word(search.classes.words[static_cast<std::size_t>(k)]);
      bool is_long = std::count(search.long_closed.begin(), search.long_closed.end(), k) > 0;
      bool is_short = std::count(search.short_closed.begin(), search.short_closed.end(), k) > 0;
      disagree += horizontal_saddle_closed(SaddleKind::long_diagonal, q, 0) != is_long;
      disagree += horizontal_saddle_closed(SaddleKind::short_edge, q, 0) != is_short;
    }
    c.pass = search.classes.count() == 211 && search.long_closed.size() == 31 && search.short_closed.empty() &&
             disagree == 0;
    c.detail = std::to_string(search.classes.count()) + " classes, " + std::to_string(search.long_closed.size()) +
               " long-closed, " + std::to_string(search.short_closed.size()) + " short-closed, " +
               std::to_string(disagree) + " disagreements with the glued surfaces";
  });

  // Record of the class that a printed word lands in.
  auto record_for = [&](const char* word) -> const SaddleClassRecord* {
    int cls = search.classes.class_of[static_cast<std::size_t>(replay_word(tab, word))];
    for (const auto& r : search.records)
      if (r.orbit_class == cls) return &r;
    return nullptr;
  };

  run.check(5, "Table 3", 600, [&](Criterion& c) {
    int words = 0, vectors = 0, lengths = 0, rows = 0, reproduced = 0, near_misses = 0;
    std::string differing, long_by_rounding;
    for (const auto& row : golden::table3) {
      const auto* rec = record_for(row.word);
      if (!rec) continue;
      bool w = rec->word == row.word, v = rec->holonomy == row_vector(row);
      bool l = close_to_printed(rec->length, row.length, 5e-4);
      words += w, vectors += v, lengths += l, rows += w && v && l;
      if (!w) differing += (differing.empty() ? "" : ",") + std::to_string(row.id);
      if (w && v && !l) {
        long_by_rounding += (long_by_rounding.empty() ? "" : ",") + std::to_string(row.id);
        // A printed value rounded twice lands just outside half a unit.
        near_misses += std::fabs(rec->length - row.length) < 5e-4 + 1e-5;
      }
      // The printed word itself, with the rotation chosen by the same rule.
      for (int k = 0; k < 10; ++k)
        if (class_holonomy(row.word, k) == row_vector(row)) {
          reproduced += 1;
          break;
        }
    }
    c.pass = rows == 31;
    c.detail = "rows matching " + ratio(rows, 31) + " (words " + ratio(words, 31) + ", vectors " + ratio(vectors, 31) +
               ", lengths " + ratio(lengths, 31) + "); printed words reproduce their vectors " + ratio(reproduced, 31);
    if (!differing.empty()) c.detail += "; other class word in rows " + differing;
    if (!long_by_rounding.empty()) c.detail += "; printed length off by just over 5e-4 in rows " + long_by_rounding;
    if (!c.pass && words == 21 && reproduced == 31 && words - rows == near_misses)
      c.known_failure = "those rows print a non-minimal word of the same closed class, or a double-rounded length";
  });

  run.check(6, "Table 4", 1800, [&](Criterion& c) {
    auto best = shortest_representatives(tab, search, opt.saddle_bound);
    auto by_id = [&](int id) -> const SaddleClassRecord* {
      for (const auto& b : best)
        if (b.id == id) return &b;
      return nullptr;
    };
    int ok = 0, as_short = 0, others = 0;
    std::vector<bool> listed(32, false);
    for (const auto& row : golden::table4) {
      listed[static_cast<std::size_t>(row.id)] = true;
      const auto* b = by_id(row.id);
      ok += b && b->holonomy == row_vector(row) && b->word == row.word && close_to_printed(b->length, row.length, 5e-3);
    }
    // Elsewhere the printed Table 3 vector is already a shortest one: exact
    // equality of squared lengths (ties between directions do occur).
    for (const auto& row : golden::table3) {
      const auto* rec = record_for(row.word);
      if (!rec || listed[static_cast<std::size_t>(rec->id)]) continue;
      ++others;
      const auto* b = by_id(rec->id);
      as_short += b && norm2(b->holonomy) == norm2(row_vector(row));
    }
    int found = static_cast<int>(std::count_if(best.begin(), best.end(), [](auto& b) { return b.id != 0; }));
    c.pass = ok == 17 && as_short == others && found == 31;
    c.detail = "printed rows matching " + ratio(ok, 17) + ", other classes as short as their Table 3 vector " +
               ratio(as_short, others) + ", classes found below " +
               std::to_string(static_cast<int>(opt.saddle_bound)) + ": " + ratio(found, 31);
  });

  run.check(7, "Table 2", 60, [&](Criterion& c) {
    struct Row {
      Solid s;
      int index;
      std::vector<int> widths;  // as printed
      int nu2, nu3, genus;
    };
    std::vector<Row> rows = {{Solid::tetrahedron, 1, {1}, 1, 1, 0},
                             {Solid::octahedron, 4, {3, 1}, 0, 1, 0},
                             {Solid::cube, 9, {4, 2, 3}, 1, 0, 0},
                             {Solid::icosahedron, 10, {5, 2, 3}, 0, 1, 0}};
    auto t0 = Clock::now();
    int ok = 0;
    for (auto& r : rows) {
      auto data = veech_data(platonic_origami(r.s));
      auto w = r.widths;
      std::sort(w.begin(), w.end());
      ok += data.index == r.index && data.cusp_widths == w && data.nu2 == r.nu2 && data.nu3 == r.nu3 &&
            data.genus == r.genus;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.pass = ok == 4 && secs < 1;
    c.detail = "rows matching " + ratio(ok, 4);
  });

  run.check(8, "blocking", 1, [&](Criterion& c) {
    int ok = 0;
    for (Solid s : {Solid::tetrahedron, Solid::octahedron, Solid::cube, Solid::icosahedron})
      ok += blocking_check(platonic_origami(s));
    c.pass = ok == 4;
    c.detail = "no closed saddle connection on " + ratio(ok, 4) + " arithmetic solids";
  });

  run.check(9, "Table 1", 600, [&](Criterion& c) {
    struct Row {
      Solid s;
      int k;
      const char* stratum;
      int genus;
    };
    std::vector<Row> rows = {{Solid::tetrahedron, 2, "H(0^4)", 1},
                             {Solid::octahedron, 3, "H(1^6)", 4},
                             {Solid::cube, 4, "H(2^8)", 9},
                             {Solid::icosahedron, 6, "H(4^12)", 25},
                             {Solid::dodecahedron, 10, "H(8^20)", 81}};
    int ok = 0, built = 0;
    for (auto& r : rows) {
      auto st = stratum_of_k_cover(r.k);
      ok += deck_order(r.s) == r.k && stratum_string(st) == r.stratum && st.genus == r.genus;
      auto sd = singularity_data(build_unfolding(r.s));
      built += sd.genus == r.genus && static_cast<int>(sd.cone_turns.size()) == 2 * r.k &&
               std::all_of(sd.cone_turns.begin(), sd.cone_turns.end(), [&](int t) { return t == r.k - 1; });
    }
    c.pass = ok == 5 && built == 5;
    c.detail = "strata " + ratio(ok, 5) + ", built unfoldings " + ratio(built, 5);
  });

  run.check(10, "geometric cross-verification", 300, [&](Criterion& c) {
    // The record's vector v lives on the double pentagon; on the unfolding
    // the saddle connection has holonomy R^-k v, and every lift crosses as
    // many pentagons as v does downstairs. Separatrices in the same
    // direction from other corners are other saddle connections and end
    // with a different holonomy.
    int ok = 0;
    for (const auto& rec : search.records) {
      Vec2 u = mat_pow(generator_R(), -rec.k) * rec.holonomy;
      int cl = combinatorial_length(rec.holonomy);
      int closed = 0, bad = 0;
      for (int l = 0; l < d.num_polygons(); ++l) {
        const auto& p = d.polygon(l);
        for (int k = 0; k < p.size(); ++k) {
          Vec2 a = p.edge(k), b = p.vertex(k - 1) - p.vertex(k);
          if (!(cross(a, u).sign() > 0 || (cross(a, u).sign() == 0 && dot(a, u).sign() > 0)) || cross(u, b).sign() <= 0)
            continue;
          auto tr = trace_separatrix(d, {l, k}, u);
          if (!tr.hit_singularity) ++bad;
          else if (tr.holonomy != u) continue;
          else if (tr.polygons != cl) ++bad;
          else if (tr.closed && norm2(tr.holonomy) == norm2(rec.holonomy)) ++closed;
        }
      }
      ok += closed > 0 && bad == 0;
    }
    c.pass = ok == 31;
    c.detail = "records closing on the unfolding with exact length and matching crossing count " + ratio(ok, 31);
  });

  run.check(11, "property suites", 1800, [&](Criterion& c) {
    std::vector<std::string> failed;
    // Field axioms.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-50, 50), den(1, 9);
    auto rnd = [&] { return Nf::from_ints(coef(rng), coef(rng), coef(rng), coef(rng), den(rng)); };
    int field_bad = 0;
    for (int i = 0; i < 1000; ++i) {
      Nf a = rnd(), b = rnd(), e = rnd();
      field_bad += (a * b) * e != a * (b * e) || a * (b + e) != a * b + a * e || (a + b) + e != a + (b + e);
      if (!a.is_zero()) field_bad += a * a.inv() != Nf(1);
    }
    Nf s2 = Nf::gen() * Nf::gen();
    field_bad += s2 * s2 != 5 * s2 - Nf(5);
    if (field_bad) failed.push_back("field axioms");
    // Generator relations.
    Mat2 R = generator_R(), T = generator_T(), J = generator_J(), I = Mat2::identity();
    if (mat_pow(R, 5) != -I || mat_pow(R * T.inverse(), 2) != -I || J * J != I || J * R * J != R.inverse() ||
        J * T * J != T.inverse())
      failed.push_back("matrix relations");
    auto pr = props::surface_properties(50, 11);
    if (pr.idempotence_failures) failed.push_back("canonicalize idempotence");
    if (pr.relabel_failures) failed.push_back("relabeling invariance");
    if (pr.circumdisk_failures || !has_empty_circumdisks(delaunay(d)) || !has_empty_circumdisks(delaunay(double_pentagon())))
      failed.push_back("empty circumdisks");
    if (pr.json_failures) failed.push_back("surface JSON round trip");
    if (!(tab.j * tab.j).is_identity() || tab.j * tab.t * tab.j != tab.t.inverse() ||
        tab.j * tab.r * tab.j != tab.r.inverse())
      failed.push_back("j relations");
    auto gens = veech_generators(tab, {R, T}, "RT");
    std::mt19937 pick(2106);
    std::uniform_int_distribution<std::size_t> any(0, gens.size() - 1);
    auto base = canonicalize(d);
    int stab = 0;
    for (int i = 0; i < 50; ++i) stab += canonicalize(apply_matrix(gens[any(pick)], d)) == base;
    if (stab != 50) failed.push_back("Veech generators (" + ratio(stab, 50) + ")");
    c.pass = failed.empty();
    c.detail = c.pass ? "1000 field triples, relations, 50 random surfaces, j, 50 Veech generators" : "failed:";
    for (auto& f : failed) c.detail += " " + f;
  });

  run.check(12, "monodromy groups", 60, [&](Criterion& c) {
    long o = monodromy_group_order(Solid::octahedron), cu = monodromy_group_order(Solid::cube),
         ic = monodromy_group_order(Solid::icosahedron), dd = monodromy_group_order(Solid::dodecahedron);
    c.pass = o == 12 && cu == 24 && ic == 60 && dd == 60;
    c.detail = "orders " + std::to_string(o) + " / " + std::to_string(cu) + " / " + std::to_string(ic) + " / " +
               std::to_string(dd);
  });

  return run.results;
}

}  // namespace veech::acceptance
