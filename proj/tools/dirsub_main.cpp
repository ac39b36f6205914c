// Command-line front end: compute directed subdifferentials, compare the
// derivative / DC / QD construction routes, and export n = 2 results as
// CSV + SVG. All emitted bytes are deterministic for a fixed input.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirsub/engine.hpp"
#include "dirsub/json_io.hpp"

namespace {

using namespace dirsub;

constexpr int kExitParse = 1;
constexpr int kExitEval = 2;
constexpr int kExitDimension = 3;
constexpr int kExitInconsistent = 4;

Vec parse_point(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw DimensionError("bad point component '" + tok + "'");
    }
  }
  if (out.empty()) throw DimensionError("empty point");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DimensionError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DimensionError("cannot write '" + path + "'");
  out << data;
}

struct GridSpec {
  int k = 360;
  std::string grid3;  // "P,A" when n = 3
};

GridPtr build_grid(int n, const GridSpec& spec) {
  if (n == 1) return make_sphere_grid(1, 0);
  if (n == 2) return make_sphere_grid(2, spec.k);
  if (n == 3) {
    int polar = 45, azimuth = 90;
    if (!spec.grid3.empty()) {
      if (std::sscanf(spec.grid3.c_str(), "%d,%d", &polar, &azimuth) != 2)
        throw DimensionError("--grid3 expects P,A");
    }
    int sub_k = spec.k == 360 ? 120 : spec.k;
    return make_sphere_grid3(polar, azimuth, sub_k);
  }
  throw DimensionError("unsupported dimension " + std::to_string(n));
}

std::string builtin_non_qd(int truncation) {
  std::string f = "min(";
  for (int k = 1; k <= truncation; ++k) {
    if (k > 1) f += ", ";
    f += "abs(x1 - x2/" + std::to_string(k) + ")";
  }
  return f + ")";
}

std::string resolve_function(const std::string& ftext, const std::string& example,
                             int truncation) {
  if (!example.empty()) {
    if (example == "convex-max") return "max(abs(x1),abs(x2))";
    if (example == "non-qd") return builtin_non_qd(truncation);
    throw DimensionError("unknown --example '" + example + "'");
  }
  if (ftext.empty()) throw DimensionError("no function given (-f or --example)");
  return ftext;
}

std::string make_csv(const DirectedSet& ds) {
  const SphereGrid& grid = *ds.grid();
  std::string csv = "angle,support,lower_neg,lower_pos\n";
  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  for (std::size_t j = 0; j < ds.entries().size(); ++j) {
    double angle = kTwoPi * static_cast<double>(j) / grid.resolution;
    const auto& e = ds.entries()[j];
    // interval endpoints [-a(-1), a(+1)]
    csv += format_double(angle) + "," + format_double(e.support) + "," +
           format_double(-e.lower.interval().neg) + "," +
           format_double(e.lower.interval().pos) + "\n";
  }
  return csv;
}

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string make_svg(const DirectedSet& ds) {
  const SphereGrid& grid = *ds.grid();
  double max_abs = 1e-12;
  for (const auto& e : ds.entries()) {
    max_abs = std::max(max_abs, std::abs(e.support));
    max_abs = std::max(max_abs, std::abs(e.lower.interval().neg));
    max_abs = std::max(max_abs, std::abs(e.lower.interval().pos));
  }
  const double cx = 400.0, cy = 400.0, r0 = 190.0, scale = 170.0 / max_abs;
  auto polyline = [&](const char* color, auto value) {
    std::string pts;
    for (std::size_t j = 0; j <= ds.entries().size(); ++j) {
      std::size_t i = j % ds.entries().size();
      const Vec& l = grid.directions[i];
      double r = r0 + scale * value(ds.entries()[i]);
      if (j) pts += " ";
      pts += svg_coord(cx + r * l[0]) + "," + svg_coord(cy - r * l[1]);
    }
    return "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
  };
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
      "width=\"800\" height=\"800\">\n"
      "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
      "<circle cx=\"400\" cy=\"400\" r=\"190\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  svg += polyline("#d62728",
                  [](const DirectedSet::Entry& e) { return e.lower.interval().pos; });
  svg += polyline("#1f77b4",
                  [](const DirectedSet::Entry& e) { return -e.lower.interval().neg; });
  svg += polyline("#000000", [](const DirectedSet::Entry& e) { return e.support; });
  svg +=
      "<text x=\"20\" y=\"30\" font-size=\"16\">support (black), interval"
      " endpoints (blue/red); zero radius 190</text>\n</svg>\n";
  return svg;
}

struct CommonOpts {
  std::string ftext, example, point_text, output = "-";
  int n = 0, truncation = 5;
  GridSpec grid;
  double tol = 1e-9;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_function) {
  if (with_function) {
    cmd->add_option("-f,--function", opts.ftext, "expression text");
    cmd->add_option("--example", opts.example, "builtin: convex-max | non-qd");
    cmd->add_option("--N", opts.truncation, "truncation for the non-qd builtin");
  }
  cmd->add_option("-x,--point", opts.point_text, "evaluation point, comma separated")
      ->required();
  cmd->add_option("-n,--dimension", opts.n, "dimension (default: length of -x)");
  cmd->add_option("-K,--resolution", opts.grid.k, "circle resolution (default 360)");
  cmd->add_option("--grid3", opts.grid.grid3, "n = 3 resolution as P,A (default 45,90)");
  cmd->add_option("--tol", opts.tol, "comparison tolerance");
  cmd->add_option("-o,--output", opts.output, "output path prefix, or - for stdout");
}

int run_subdiff(const CommonOpts& opts) {
  Vec x = parse_point(opts.point_text);
  int n = opts.n > 0 ? opts.n : static_cast<int>(x.size());
  if (static_cast<int>(x.size()) != n)
    throw DimensionError("point length does not match dimension");
  Expr f = parse(resolve_function(opts.ftext, opts.example, opts.truncation), n);
  GridPtr grid = build_grid(n, opts.grid);
  DirSubResult res = directed_subdifferential(f, x, grid);
  std::string ds_json = ds_serialize(res.value);
  std::string cert_json = certificate_serialize(res.certificate);
  if (opts.output == "-") {
    std::cout << ds_json << "\n" << cert_json << "\n";
  } else {
    write_file(opts.output + ".dirsub.json", ds_json + "\n");
    write_file(opts.output + ".cert.json", cert_json + "\n");
    std::cerr << "wrote " << opts.output << ".dirsub.json and " << opts.output
              << ".cert.json (M = " << format_double(res.certificate.m) << ")\n";
  }
  return 0;
}

int run_compare(const CommonOpts& opts, const std::string& gtext,
                const std::string& htext, const std::string& lower_path,
                const std::string& upper_path) {
  Vec x = parse_point(opts.point_text);
  int n = opts.n > 0 ? opts.n : static_cast<int>(x.size());
  if (static_cast<int>(x.size()) != n)
    throw DimensionError("point length does not match dimension");
  GridPtr grid = build_grid(n, opts.grid);

  RouteInputs inputs;
  if (!opts.ftext.empty() || !opts.example.empty())
    inputs.f = parse(resolve_function(opts.ftext, opts.example, opts.truncation), n);
  if (!gtext.empty() || !htext.empty()) {
    if (gtext.empty() || htext.empty())
      throw StructureError("DC route needs both -g and -h");
    inputs.dc = std::make_pair(parse(gtext, n), parse(htext, n));
  }
  if (!lower_path.empty() || !upper_path.empty()) {
    if (lower_path.empty() || upper_path.empty())
      throw StructureError("QD route needs both --lower and --upper");
    inputs.qd = std::make_pair(polytope_deserialize(read_file(lower_path)),
                               polytope_deserialize(read_file(upper_path)));
  }

  RouteComparison cmp = compare_routes(inputs, x, grid, opts.tol);
  std::ostream& out = std::cout;
  for (const auto& p : cmp.pairs) {
    out << (p.report.equal ? "PASS" : "FAIL") << " " << p.a << " vs " << p.b
        << ": max_err = " << format_double(p.report.max_abs_err);
    if (!p.report.equal) out << " at " << p.report.worst_path;
    out << "\n";
  }
  out << (cmp.pass ? "PASS" : "FAIL") << "\n";
  return cmp.pass ? 0 : kExitInconsistent;
}

int run_viz(const CommonOpts& opts, const std::string& input_path) {
  DirectedSet ds = [&] {
    if (!input_path.empty()) return ds_deserialize(read_file(input_path));
    Vec x = parse_point(opts.point_text);
    int n = opts.n > 0 ? opts.n : static_cast<int>(x.size());
    if (static_cast<int>(x.size()) != n)
      throw DimensionError("point length does not match dimension");
    Expr f = parse(resolve_function(opts.ftext, opts.example, opts.truncation), n);
    return directed_subdifferential(f, x, build_grid(n, opts.grid)).value;
  }();
  if (ds.dimension() != 2)
    throw DimensionError("viz supports n = 2 results only");
  std::string csv = make_csv(ds);
  std::string svg = make_svg(ds);
  if (opts.output == "-") {
    std::cout << csv;
  } else {
    write_file(opts.output + ".csv", csv);
    write_file(opts.output + ".svg", svg);
    std::cerr << "wrote " << opts.output << ".csv and " << opts.output << ".svg\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed subdifferential toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  CommonOpts sub_opts, cmp_opts, viz_opts;
  std::string gtext, htext, lower_path, upper_path, input_path;

  CLI::App* sub = app.add_subcommand("subdiff",
                                     "directed subdifferential via directional derivatives");
  add_common(sub, sub_opts, true);

  CLI::App* cmp = app.add_subcommand("compare", "cross-check construction routes");
  cmp->set_help_flag("--help", "print help");
  add_common(cmp, cmp_opts, true);
  cmp->add_option("-g", gtext, "DC part g (convex, max-affine)");
  cmp->add_option("-h", htext, "DC part h (convex, max-affine)");
  cmp->add_option("--lower", lower_path, "QD lower polytope JSON path");
  cmp->add_option("--upper", upper_path, "QD upper polytope JSON path");

  CLI::App* viz = app.add_subcommand("viz", "export n = 2 result as CSV + SVG");
  add_common(viz, viz_opts, true);
  viz->get_option("-x")->required(false);
  viz->add_option("--input", input_path, "read a DirectedSet JSON instead of computing");

  try {
    app.parse(argc, argv);
    if (sub->parsed()) return run_subdiff(sub_opts);
    if (cmp->parsed())
      return run_compare(cmp_opts, gtext, htext, lower_path, upper_path);
    if (viz->parsed()) {
      if (input_path.empty() && viz_opts.point_text.empty())
        throw DimensionError("viz needs --input or -x");
      return run_viz(viz_opts, input_path);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const dirsub::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dirsub::EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitEval;
  } catch (const dirsub::StructureError& e) {
    std::cerr << "inconsistent input: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const dirsub::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const dirsub::DimensionError& e) {
    std::cerr << "dimension/grid error: " << e.what() << "\n";
    return kExitDimension;
  }
}
