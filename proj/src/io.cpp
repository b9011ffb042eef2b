#include "veech/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "veech/origami.hpp"
#include "veech/platonic.hpp"

namespace veech {

using nlohmann::json;

namespace {

bool is_rational(const Nf& a) {
  for (int i = 1; i < 4; ++i)
    if (a.coeff(i).sign() != 0) return false;
  return true;
}

json coord(const Nf& a, bool rational) {
  if (rational) return a.coeff(0).str();
  json c = json::array();
  for (auto& q : a.coeffs()) c.push_back(q.str());
  return c;
}

Nf parse_coord(const json& j) {
  if (j.is_string()) return Nf(Rational::parse(j.get<std::string>()));
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("coordinate must be a string or four strings");
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = Rational::parse(j[i].get<std::string>());
  return Nf(c);
}

std::string fmt(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string surface_to_json(const TranslationSurface& s) {
  bool rational = true;
  for (int l = 0; l < s.num_polygons() && rational; ++l)
    for (auto& v : s.polygon(l).vertices) rational = rational && is_rational(v.x) && is_rational(v.y);
  // One polygon and one gluing per line keeps large files diffable.
  std::string out = "{\n \"field\": " + json(rational ? "rational" : "x^4-5x^2+5").dump() + ",\n";
  out += " \"base_label\": " + std::to_string(s.base_label()) + ",\n \"polygons\": [";
  for (int l = 0; l < s.num_polygons(); ++l) {
    json verts = json::array();
    for (auto& v : s.polygon(l).vertices) verts.push_back({coord(v.x, rational), coord(v.y, rational)});
    out += (l ? ",\n  " : "\n  ") + json{{"label", l}, {"vertices", verts}}.dump();
  }
  out += "\n ],\n \"gluings\": [";
  bool first = true;
  for (int l = 0; l < s.num_polygons(); ++l)
    for (int e = 0; e < s.polygon(l).size(); ++e) {
      EdgeRef o = s.opposite({l, e});
      if (o.label < 0 || !(EdgeRef{l, e} < o)) continue;
      out += (first ? "\n  " : ",\n  ") + json{{l, e}, {o.label, o.edge}}.dump();
      first = false;
    }
  out += "\n ]\n}\n";
  return out;
}

TranslationSurface surface_from_json(std::string_view text) {
  TranslationSurface s;
  try {
    json in = json::parse(text);
    auto field = in.at("field").get<std::string>();
    if (field != "rational" && field != "x^4-5x^2+5") throw std::invalid_argument("unknown field " + field);
    const auto& polys = in.at("polygons");
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].at("label").get<int>() != static_cast<int>(i))
        throw std::invalid_argument("polygon labels must be 0, 1, 2, ... in order");
      ConvexPolygon p;
      for (auto& v : polys[i].at("vertices")) p.vertices.push_back({parse_coord(v.at(0)), parse_coord(v.at(1))});
      s.add_polygon(std::move(p));
    }
    for (auto& g : in.at("gluings"))
      s.glue({g.at(0).at(0).get<int>(), g.at(0).at(1).get<int>()}, {g.at(1).at(0).get<int>(), g.at(1).at(1).get<int>()});
    s.set_base_label(in.at("base_label").get<int>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("surface JSON: ") + e.what());
  }
  try {
    s.validate();
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("surface JSON: ") + e.what());
  }
  return s;
}

std::string orbit_to_json(const OrbitTable& t) {
  auto one_based = [](const Permutation& p) {
    json a = json::array();
    for (int x : p.images()) a.push_back(x + 1);
    return a.dump();
  };
  std::string out = "{\n";
  out += " \"N\": " + std::to_string(t.N) + ",\n";
  out += " \"letters\": \"RT\",\n";
  out += " \"words\": " + json(t.words).dump() + ",\n";
  out += " \"r\": " + one_based(t.r) + ",\n";
  out += " \"t\": " + one_based(t.t);
  if (t.has_j()) out += ",\n \"j\": " + one_based(t.j);
  out += "\n}\n";
  return out;
}

OrbitTable orbit_from_json(std::string_view text) {
  OrbitTable t;
  try {
    json in = json::parse(text);
    t.N = in.at("N").get<int>();
    t.words = in.at("words").get<std::vector<std::string>>();
    if (static_cast<int>(t.words.size()) != t.N) throw std::invalid_argument("orbit JSON: words and N disagree");
    auto perm = [&](const char* key) {
      auto a = in.at(key).get<std::vector<int>>();
      if (static_cast<int>(a.size()) != t.N) throw std::invalid_argument(std::string("orbit JSON: ") + key + " has the wrong length");
      for (int& x : a) {
        if (x < 1 || x > t.N) throw std::invalid_argument(std::string("orbit JSON: ") + key + " entry out of range");
        --x;
      }
      return Permutation(std::move(a));
    };
    t.r = perm("r");
    t.t = perm("t");
    if (in.contains("j")) t.j = perm("j");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("orbit JSON: ") + e.what());
  }
  return t;
}

std::string teich_to_json(const CurveTopology& c) {
  json out;
  out["index"] = c.index;
  out["genus"] = c.genus;
  out["cusps"] = c.cusps;
  out["cone_points"] = json::array({{{"angle", "pi"}, {"count", c.cone_pi}},
                                    {{"angle", "2pi/5"}, {"count", c.cone_two_pi_fifths}}});
  return out.dump(1) + "\n";
}

std::string format_float(const Nf& a, int digits) { return fmt(nf_to_float(a, 128).mid, digits); }

std::string saddle_csv(const std::vector<SaddleClassRecord>& records, int digits) {
  if (digits < 6) throw std::invalid_argument("at least 6 significant digits");
  std::string out = "id,word,k,x_exact,y_exact,length,x,y\n";
  for (const auto& r : records) {
    double len = std::sqrt(nf_to_float(norm2(r.holonomy), 128).mid);
    out += std::to_string(r.id) + "," + r.word + "," + std::to_string(r.k) + "," + quoted(r.holonomy.x.str()) + "," +
           quoted(r.holonomy.y.str()) + "," + fmt(len, digits) + "," + format_float(r.holonomy.x, digits) + "," +
           format_float(r.holonomy.y, digits) + "\n";
  }
  return out;
}

std::string origami_table_csv() {
  std::string out = "solid,index,cusps,widths,nu2,nu3,genus,blocked\n";
  for (Solid s : all_solids()) {
    if (s == Solid::dodecahedron) continue;
    auto o = platonic_origami(s);
    auto d = veech_data(o);
    std::string widths;
    for (int w : d.cusp_widths) widths += (widths.empty() ? "" : " ") + std::to_string(w);
    out += solid_name(s) + "," + std::to_string(d.index) + "," + std::to_string(d.cusp_widths.size()) + "," + widths +
           "," + std::to_string(d.nu2) + "," + std::to_string(d.nu3) + "," + std::to_string(d.genus) + "," +
           (blocking_check(o) ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_svg(const TranslationSurface& s, const std::vector<TraceSegment>& segments, const SvgOptions& opt) {
  const int n = s.num_polygons();
  struct P {
    double x = 0, y = 0;
  };
  auto dbl = [](const Vec2& v) { return P{v.x.to_double(), v.y.to_double()}; };
  std::vector<P> shift(static_cast<std::size_t>(n));
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::map<std::pair<int, int>, bool> tree;  // edge -> drawn as a shared edge
  // Breadth-first from the base, then from any polygon left over.
  for (int root = 0; root < n; ++root) {
    int start = root == 0 ? s.base_label() : root;
    if (placed[static_cast<std::size_t>(start)]) continue;
    placed[static_cast<std::size_t>(start)] = true;
    std::vector<int> queue = {start};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int l = queue[h];
      const auto& p = s.polygon(l);
      for (int e = 0; e < p.size(); ++e) {
        EdgeRef o = s.opposite({l, e});
        if (o.label < 0 || placed[static_cast<std::size_t>(o.label)]) continue;
        placed[static_cast<std::size_t>(o.label)] = true;
        // Vertex e of l meets vertex o.edge + 1 of the neighbour.
        P a = dbl(p.vertex(e)), b = dbl(s.polygon(o.label).vertex(o.edge + 1));
        const P& base = shift[static_cast<std::size_t>(l)];
        shift[static_cast<std::size_t>(o.label)] = {base.x + a.x - b.x, base.y + a.y - b.y};
        tree[{l, e}] = tree[{o.label, o.edge}] = true;
        queue.push_back(o.label);
      }
    }
  }
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (int l = 0; l < n; ++l)
    for (auto& v : s.polygon(l).vertices) {
      P q = dbl(v);
      q.x += shift[static_cast<std::size_t>(l)].x;
      q.y += shift[static_cast<std::size_t>(l)].y;
      x0 = std::min(x0, q.x), y0 = std::min(y0, q.y), x1 = std::max(x1, q.x), y1 = std::max(y1, q.y);
    }
  if (n == 0) x0 = y0 = x1 = y1 = 0;
  const double margin = 1;
  auto num = [&](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", opt.precision, v);
    std::string r = buf;
    if (r[0] == '-' && r.find_first_not_of("-0.") == std::string::npos) r.erase(0, 1);  // no "-0.000"
    return r;
  };
  // SVG y points down.
  auto px = [&](double x) { return num((x - x0 + margin) * opt.scale); };
  auto py = [&](double y) { return num((y1 - y + margin) * opt.scale); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((x1 - x0 + 2 * margin) * opt.scale)
      << "\" height=\"" << num((y1 - y0 + 2 * margin) * opt.scale) << "\">\n";
  out << "<g fill=\"#f4f1e8\" stroke=\"#333\" stroke-width=\"1\">\n";
  for (int l = 0; l < n; ++l) {
    out << "<polygon data-label=\"" << l << "\" points=\"";
    const auto& p = s.polygon(l);
    for (int k = 0; k < p.size(); ++k) {
      P q = dbl(p.vertex(k));
      out << (k ? " " : "") << px(q.x + shift[static_cast<std::size_t>(l)].x) << ","
          << py(q.y + shift[static_cast<std::size_t>(l)].y);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (opt.edge_labels) {
    out << "<g font-size=\"" << num(opt.scale * 0.3) << "\" text-anchor=\"middle\" fill=\"#a33\">\n";
    std::map<std::pair<int, int>, int> pair_id;
    int next = 0;
    for (int l = 0; l < n; ++l) {
      const auto& p = s.polygon(l);
      for (int e = 0; e < p.size(); ++e) {
        EdgeRef o = s.opposite({l, e});
        if (o.label < 0 || tree.count({l, e})) continue;
        auto key = std::minmax(std::pair{l, e}, std::pair{o.label, o.edge});
        auto [it, fresh] = pair_id.emplace(key.first, next);
        if (fresh) ++next;
        // Label pulled a little into the polygon.
        P a = dbl(p.vertex(e)), b = dbl(p.vertex(e + 1)), c{0, 0};
        for (auto& v : p.vertices) c.x += v.x.to_double() / p.size(), c.y += v.y.to_double() / p.size();
        P m{(a.x + b.x) / 2 * 0.8 + c.x * 0.2, (a.y + b.y) / 2 * 0.8 + c.y * 0.2};
        out << "<text x=\"" << px(m.x + shift[static_cast<std::size_t>(l)].x) << "\" y=\""
            << py(m.y + shift[static_cast<std::size_t>(l)].y) << "\">" << it->second << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  if (!segments.empty()) {
    out << "<g stroke=\"#1f5fbf\" stroke-width=\"1.5\">\n";
    for (const auto& seg : segments) {
      const P& sh = shift[static_cast<std::size_t>(seg.label)];
      P a = dbl(seg.from), b = dbl(seg.to);
      out << "<line x1=\"" << px(a.x + sh.x) << "\" y1=\"" << py(a.y + sh.y) << "\" x2=\"" << px(b.x + sh.x)
          << "\" y2=\"" << py(b.y + sh.y) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace veech
