#include "tropical/cli.hpp"

#include "tropical/hull2d.hpp"
#include "tropical/io.hpp"
#include "tropical/membership.hpp"
#include "tropical/sample.hpp"
#include "tropical/svg.hpp"
#include "tropical/tropdet.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace tropical::cli {

namespace {

using Json = nlohmann::ordered_json;
using Points = std::vector<TropPoint<Rat>>;

struct Settings {
  std::string input;
  bool affine = false;
  bool json = false;
};

CoordinateMode mode_of(const Settings& s) { return s.affine ? CoordinateMode::affine : CoordinateMode::projective; }

const char* mode_name(const Settings& s) { return s.affine ? "affine" : "projective"; }

Points read_points(const Settings& s, std::istream& in) {
  if (s.input.empty() || s.input == "-") return parse_points(in, mode_of(s));
  return parse_points(std::filesystem::path(s.input), mode_of(s));
}

TropMatrix<Rat> read_matrix(const Settings& s, std::istream& in) {
  if (s.input.empty() || s.input == "-") return parse_matrix(in);
  std::ifstream file(s.input);
  if (!file) throw ParseError("cannot open '" + s.input + "'");
  return parse_matrix(file);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

Json point_json(const TropPoint<Rat>& p, const Settings& s) {
  Json coords = Json::array();
  if (s.affine) {
    const Vector<Rat> chart = affine_chart(p);
    for (Eigen::Index i = 0; i < chart.size(); ++i) coords.push_back(to_string(chart(i)));
  } else {
    for (Eigen::Index i = 0; i < p.size(); ++i) coords.push_back(to_string(p[i]));
  }
  return coords;
}

Json points_json(const Points& points, const Settings& s) {
  Json list = Json::array();
  for (const auto& p : points) list.push_back(point_json(p, s));
  return list;
}

Json header(const char* command, const Settings& s) {
  Json j;
  j["command"] = command;
  j["coordinates"] = mode_name(s);
  return j;
}

Json halfspace_json(const Halfspace<Rat>& h, const Settings& s) {
  Json j;
  j["apex"] = point_json(h.apex(), s);
  j["sectors"] = h.indices();
  return j;
}

std::string halfspace_text(const Halfspace<Rat>& h, const Settings& s) {
  std::string sectors;
  for (int k : h.indices()) sectors += (sectors.empty() ? "" : ",") + std::to_string(k);
  return "apex " + format_point(h.apex(), mode_of(s)) + " sectors " + sectors;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<AffinePoint2<Rat>> chart_points(const Points& points) {
  return to_chart2(std::span<const TropPoint<Rat>>(points));
}

Points projective(const std::vector<AffinePoint2<Rat>>& points) {
  return to_projective(std::span<const AffinePoint2<Rat>>(points));
}

Json stats_json(const HullStats& st) {
  Json j;
  j["comparisons"] = st.comparisons;
  j["tau_evaluations"] = st.tau_evaluations;
  j["rounds"] = st.rounds;
  return j;
}

HullResult<Rat> run_hull(const std::string& algo, const std::vector<AffinePoint2<Rat>>& pts, HullStats* st) {
  const std::span<const AffinePoint2<Rat>> view(pts);
  if (algo == "jarvis") return hull_jarvis(view, st);
  if (algo == "chan") return hull_chan(view, st);
  return hull_triple_sort(view, st);
}

/// Uniform points in the unit square, or for `hull_size` > 0 a tropical polygon
/// with that many vertices around a dense interior cloud.
}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical convexity toolkit", "tropical"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("-i,--input", s.input, "point or matrix file (default: stdin)");
  app.add_flag("--affine", s.affine, "points in the affine chart (first coordinate dropped)");
  app.add_flag("--json", s.json, "JSON output");

  std::function<int()> action;

  auto* hull = app.add_subcommand("hull", "vertices of a 2D tropical polygon, counter-clockwise from lr");
  std::string algo = "triple";
  bool show_stats = false;
  hull->add_option("--algo", algo, "triple | jarvis | chan")->check(CLI::IsMember({"triple", "jarvis", "chan"}));
  hull->add_flag("--stats", show_stats, "print operation counters");
  hull->callback([&] {
    action = [&] {
      const auto pts = chart_points(read_points(s, in));
      HullStats st;
      const auto h = run_hull(algo, pts, &st);
      const auto verts = projective(h.vertices);
      if (s.json) {
        Json j = header("hull", s);
        j["algorithm"] = algo;
        j["vertices"] = points_json(verts, s);
        j["indices"] = h.vertex_indices;
        if (show_stats) j["stats"] = stats_json(st);
        emit(out, j);
      } else {
        write_points(out, verts, mode_of(s));
        if (show_stats) {
          out << "# comparisons " << st.comparisons << " tau_evaluations " << st.tau_evaluations << " rounds "
              << st.rounds << '\n';
        }
      }
      return ok;
    };
  });

  auto* vertices = app.add_subcommand("vertices", "minimal generating set, any dimension");
  vertices->callback([&] {
    action = [&] {
      const Points pts = read_points(s, in);
      const auto verts = vertex_set(std::span<const TropPoint<Rat>>(pts));
      if (s.json) {
        Json j = header("vertices", s);
        j["vertices"] = points_json(verts, s);
        emit(out, j);
      } else {
        write_points(out, verts, mode_of(s));
      }
      return ok;
    };
  });

  std::vector<std::string> query;
  auto* contains_cmd = app.add_subcommand("contains", "membership certificate for a point");
  contains_cmd->add_option("point", query, "coordinates")->required();
  contains_cmd->callback([&] {
    action = [&] {
      const Points pts = read_points(s, in);
      const auto x = parse_point(join(query), mode_of(s));
      const auto cert = contains(std::span<const TropPoint<Rat>>(pts), x);
      if (s.json) {
        Json j = header("contains", s);
        j["point"] = point_json(x, s);
        j["member"] = cert.member;
        if (cert.member) {
          Json lambda = Json::array();
          for (const auto& c : cert.coefficients) lambda.push_back(to_string(c));
          j["coefficients"] = lambda;
        } else {
          j["missing_sector"] = *cert.missing_sector;
        }
        Json w = Json::array();
        for (const auto& wk : cert.witnesses) w.push_back(wk ? Json(*wk) : Json(nullptr));
        j["witnesses"] = w;
        emit(out, j);
      } else if (cert.member) {
        out << "member\ncoefficients";
        for (const auto& c : cert.coefficients) out << ' ' << to_string(c);
        out << "\nwitnesses";
        for (const auto& wk : cert.witnesses) out << ' ' << *wk;
        out << '\n';
      } else {
        out << "not a member\nmissing sector " << *cert.missing_sector << '\n';
      }
      return cert.member ? ok : negative_answer;
    };
  });

  auto* separate_cmd = app.add_subcommand("separate", "closed halfspace containing the polytope but not the point");
  separate_cmd->add_option("point", query, "coordinates")->required();
  separate_cmd->callback([&] {
    action = [&] {
      const Points pts = read_points(s, in);
      const auto x = parse_point(join(query), mode_of(s));
      const auto h = separate(std::span<const TropPoint<Rat>>(pts), x);
      if (s.json) {
        Json j = header("separate", s);
        j["point"] = point_json(x, s);
        j["halfspace"] = halfspace_json(h, s);
        emit(out, j);
      } else {
        out << halfspace_text(h, s) << '\n';
      }
      return ok;
    };
  });

  auto matrix_command = [&](const char* name, bool with_sign) {
    auto* cmd = app.add_subcommand(name, with_sign ? "tropical sign of a square matrix"
                                                   : "tropical determinant of a square matrix");
    cmd->callback([&, name, with_sign] {
      action = [&, name, with_sign] {
        const auto m = read_matrix(s, in);
        const auto r = analyze_tdet(m);
        if (s.json) {
          Json j;
          j["command"] = name;
          j["size"] = m.rows();
          j["value"] = to_string(r.value);
          j["singular"] = r.singular;
          if (with_sign) j["sign"] = r.sign();
          j["witness"] = r.witness;
          emit(out, j);
        } else {
          out << "value " << to_string(r.value) << '\n';
          out << "singular " << (r.singular ? "true" : "false") << '\n';
          if (with_sign) out << "sign " << r.sign() << '\n';
        }
        return ok;
      };
    });
  };
  matrix_command("tdet", false);
  matrix_command("tsgn", true);

  auto* tau_cmd = app.add_subcommand("tau", "orientation of a query point against d input points");
  tau_cmd->add_option("point", query, "coordinates")->required();
  tau_cmd->callback([&] {
    action = [&] {
      const Points pts = read_points(s, in);
      const auto x = parse_point(join(query), mode_of(s));
      const std::span<const TropPoint<Rat>> view(pts);
      const int t = tau(view, x);
      const int closure = tau_closure(view, x);
      if (s.json) {
        Json j = header("tau", s);
        j["point"] = point_json(x, s);
        j["tau"] = t;
        j["tau_closure"] = closure;
        emit(out, j);
      } else {
        out << "tau " << t << "\ntau_closure " << closure << '\n';
      }
      return ok;
    };
  });

  auto* halfspaces_cmd = app.add_subcommand("halfspaces", "minimal closed halfspaces of a 2D polygon");
  halfspaces_cmd->callback([&] {
    action = [&] {
      const auto pts = chart_points(read_points(s, in));
      const auto result = minimal_halfspaces2d<Rat>(pts);
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      if (s.json) {
        Json j = header("halfspaces", s);
        j["full"] = result.full;
        Json list = Json::array();
        for (const auto& h : result.halfspaces) list.push_back(halfspace_json(h, s));
        j["halfspaces"] = list;
        j["warnings"] = result.warnings;
        emit(out, j);
      } else {
        for (const auto& h : result.halfspaces) out << halfspace_text(h, s) << '\n';
      }
      return ok;
    };
  });

  auto* pseudo_cmd = app.add_subcommand("pseudovertices", "pseudovertices of a 2D polygon in boundary order");
  pseudo_cmd->callback([&] {
    action = [&] {
      const auto pts = chart_points(read_points(s, in));
      const auto pv = projective(pseudovertices<Rat>(pts));
      if (s.json) {
        Json j = header("pseudovertices", s);
        j["pseudovertices"] = points_json(pv, s);
        emit(out, j);
      } else {
        write_points(out, pv, mode_of(s));
      }
      return ok;
    };
  });

  auto* facets_cmd = app.add_subcommand("facets", "facets and face lattice of a 2D polygon");
  facets_cmd->callback([&] {
    action = [&] {
      const auto pts = chart_points(read_points(s, in));
      const auto result = facets2d<Rat>(pts);
      if (s.json) {
        Json j = header("facets", s);
        Json list = Json::array();
        for (const auto& [a, b] : result.facets) {
          Json f = Json::array();
          f.push_back(point_json(to_projective(a), s));
          f.push_back(point_json(to_projective(b), s));
          list.push_back(f);
        }
        j["facets"] = list;
        j["faces"] = result.lattice.faces;
        emit(out, j);
      } else {
        for (const auto& [a, b] : result.facets) {
          out << format_point(to_projective(a), mode_of(s)) << " -- " << format_point(to_projective(b), mode_of(s))
              << '\n';
        }
        out << "# faces " << result.lattice.faces.size() << '\n';
      }
      return ok;
    };
  });

  auto* gen = app.add_subcommand("gen", "named example polytopes");
  gen->require_subcommand(1);
  gen->fallthrough();
  int gen_d = 0, gen_k = 0;
  auto emit_generated = [&](const char* name, const Points& pts) {
    if (s.json) {
      Json j = header("gen", s);
      j["family"] = name;
      j["points"] = points_json(pts, s);
      emit(out, j);
    } else {
      write_points(out, pts, mode_of(s));
    }
    return ok;
  };
  auto* gen_hs = gen->add_subcommand("hypersimplex", "vertices of the k-th tropical hypersimplex in TP^d");
  gen_hs->add_option("d", gen_d)->required();
  gen_hs->add_option("k", gen_k)->required();
  gen_hs->callback([&] { action = [&] { return emit_generated("hypersimplex", hypersimplex<Rat>(gen_d, gen_k)); }; });
  auto* gen_cube = gen->add_subcommand("cube", "generators of the +-1 cube in TP^d");
  gen_cube->add_option("d", gen_d)->required();
  gen_cube->callback([&] { action = [&] { return emit_generated("cube", cube_generators<Rat>(gen_d)); }; });

  auto* render = app.add_subcommand("render", "SVG drawing of a 2D polygon");
  std::string svg_path, shade_apex;
  std::vector<int> shade_sectors;
  SvgOptions svg_options;
  render->add_option("--out", svg_path, "output file (default: stdout)");
  render->add_flag("--arrangement", svg_options.arrangement, "draw the arrangement lines");
  render->add_flag("--pseudovertices", svg_options.pseudovertices, "mark the pseudovertices");
  render->add_option("--shade-apex", shade_apex, "apex of a halfspace to shade");
  render->add_option("--shade-sectors", shade_sectors, "sector indices of that halfspace")->delimiter(',');
  render->callback([&] {
    action = [&] {
      const auto pts = chart_points(read_points(s, in));
      if (!shade_apex.empty()) {
        svg_options.shade = Halfspace<Rat>(parse_point(shade_apex, mode_of(s)), shade_sectors);
        to_chart2(svg_options.shade->apex());
      }
      const auto doc = render_svg(hull_triple_sort<Rat>(pts), pts, svg_options);
      if (svg_path.empty()) {
        out << doc;
      } else {
        std::ofstream file(svg_path, std::ios::binary);
        if (!file) throw PreconditionError("cannot write '" + svg_path + "'");
        file << doc;
      }
      return ok;
    };
  });

  auto* bench = app.add_subcommand("bench", "double-precision hull benchmark on generated points");
  std::size_t bench_n = 100000, bench_h = 0;
  unsigned bench_seed = 1;
  std::string bench_algo = "triple";
  bench->add_option("-n", bench_n, "number of points");
  bench->add_option("--hull-size", bench_h, "0 for uniform points, else vertices around an interior cloud");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--algo", bench_algo, "triple | bucket | jarvis | chan")
      ->check(CLI::IsMember({"triple", "bucket", "jarvis", "chan"}));
  bench->callback([&] {
    action = [&] {
      const auto pts = sample_points(bench_n, bench_h, bench_seed);
      const std::span<const AffinePoint2<double>> view(pts);
      HullStats st;
      const auto t0 = std::chrono::steady_clock::now();
      HullResult<double> h;
      if (bench_algo == "bucket") {
        h = hull_triple_sort_bucketed(view, &st);
      } else if (bench_algo == "jarvis") {
        h = hull_jarvis(view, &st);
      } else if (bench_algo == "chan") {
        h = hull_chan(view, &st);
      } else {
        h = hull_triple_sort(view, &st);
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (s.json) {
        Json j;
        j["command"] = "bench";
        j["algorithm"] = bench_algo;
        j["n"] = bench_n;
        j["hull_vertices"] = h.vertices.size();
        j["stats"] = stats_json(st);
        j["milliseconds"] = ms;
        emit(out, j);
      } else {
        out << "algorithm " << bench_algo << "\nn " << bench_n << "\nhull_vertices " << h.vertices.size()
            << "\ncomparisons " << st.comparisons << "\ntau_evaluations " << st.tau_evaluations << "\nrounds "
            << st.rounds << "\nmilliseconds " << ms << '\n';
      }
      return ok;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return dimension_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return precondition_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace tropical::cli
