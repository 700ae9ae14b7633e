#include "circdiv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "circdiv/constructibility.hpp"
#include "circdiv/dsl.hpp"
#include "circdiv/errors.hpp"
#include "circdiv/methods.hpp"
#include "circdiv/numfmt.hpp"
#include "circdiv/rectification.hpp"
#include "circdiv/svg.hpp"

namespace circdiv {

namespace {

// User mistakes detected after argument parsing; exit code 1.
struct UsageError {
  std::string message;
};

Method method_arg(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError{"method must be 'bion' or 'tempier', got '" + name + "'"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
    throw UsageError{"cannot write '" + path + "'"};
  }
}

void add_render_options(CLI::App* cmd, RenderOptions& opts) {
  cmd->add_option("--width", opts.width_px, "SVG width in pixels");
  cmd->add_option("--decimals", opts.decimals, "fraction digits in SVG coordinates");
  cmd->add_flag("!--no-labels", opts.label_points, "omit point labels");
}

std::string table_csv(const std::vector<ErrorRow>& rows, bool paper) {
  auto num = [paper](double v) { return paper ? format_fixed(v, 4) : format_g17(v); };
  std::string out = "n,exact,approx,error,rel_error\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + num(r.exact) + "," + num(r.approx) + "," + num(r.error) +
           "," + num(r.rel_error) + "\n";
  }
  return out;
}

std::string table_json(const std::vector<ErrorRow>& rows, bool paper) {
  auto num = [paper](double v) { return paper ? round_half_away(v, 4) : v; };
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"n", r.n},
                   {"exact", num(r.exact)},
                   {"approx", num(r.approx)},
                   {"error", num(r.error)},
                   {"rel_error", num(r.rel_error)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Straightedge-and-compass circle division: Bion and Tempier methods", "circdiv"};
  app.require_subcommand(1);

  std::string method_name;
  long n = 0;

  auto* angle_cmd = app.add_subcommand("angle", "approximate central angle of one method");
  std::optional<double> base;
  angle_cmd->add_option("method", method_name, "bion or tempier")->required();
  angle_cmd->add_option("n", n, "number of sides")->required();
  angle_cmd->add_option("--base", base, "distance of the base point from the center (tempier)");

  auto* table_cmd = app.add_subcommand("table", "error table over a range of n");
  long from = 4;
  long to = 20;
  std::string table_format = "csv";
  bool paper = false;
  table_cmd->add_option("method", method_name, "bion or tempier")->required();
  table_cmd->add_option("--from", from, "first n")->capture_default_str();
  table_cmd->add_option("--to", to, "last n")->capture_default_str();
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table_cmd->add_flag("--paper", paper, "round to 4 decimals");

  auto* construct_cmd = app.add_subcommand("construct", "emit a construction program (.euc)");
  std::string output_path;
  construct_cmd->add_option("method", method_name, "bion or tempier")->required();
  construct_cmd->add_option("n", n, "number of sides")->required();
  construct_cmd->add_option("-o,--output", output_path, "write to file instead of stdout");

  auto* run_cmd = app.add_subcommand("run", "evaluate a construction program");
  std::string program_path;
  std::string svg_path;
  RenderOptions render;
  run_cmd->add_option("file", program_path, ".euc program")->required();
  run_cmd->add_option("--svg", svg_path, "render the figure to this file");
  add_render_options(run_cmd, render);

  auto* polygon_cmd = app.add_subcommand("polygon", "render the approximate n-gon");
  polygon_cmd->add_option("method", method_name, "bion or tempier")->required();
  polygon_cmd->add_option("n", n, "number of sides")->required();
  polygon_cmd->add_option("--svg", svg_path, "output file")->required();
  add_render_options(polygon_cmd, render);

  auto* check_cmd = app.add_subcommand("check", "regular n-gon constructibility");
  std::string n_text;
  check_cmd->add_option("n", n_text, "number of sides")->required();

  auto* rectify_cmd = app.add_subcommand("rectify", "quadrant rectification from a base point");
  std::optional<double> distance;
  rectify_cmd->add_option("--distance", distance, "base point distance from the center");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (angle_cmd->parsed()) {
      const Method m = method_arg(method_name);
      if (base && m != Method::tempier) throw UsageError{"--base applies to tempier only"};
      const double approx = base ? tempier_angle(n, *base) : method_angle(m, n);
      const double exact = 2.0 * std::numbers::pi / static_cast<double>(n);
      out << "method: " << to_string(m) << "\n"
          << "n: " << n << "\n";
      if (base) out << "base: " << format_g17(*base) << "\n";
      out << "approx: " << format_g17(approx) << "\n"
          << "exact: " << format_g17(exact) << "\n"
          << "error: " << format_g17(exact - approx) << "\n"
          << "rel_error: " << format_g17(std::abs(exact - approx) / exact) << "\n";
    } else if (table_cmd->parsed()) {
      const auto rows = error_table(method_arg(method_name), from, to);
      out << (table_format == "json" ? table_json(rows, paper) : table_csv(rows, paper));
    } else if (construct_cmd->parsed()) {
      const std::string text = dsl::format(construction_program(method_arg(method_name), n));
      if (output_path.empty()) {
        out << text;
      } else {
        write_file(output_path, text);
      }
    } else if (run_cmd->parsed()) {
      const std::string text = read_file(program_path);
      dsl::Program program;
      try {
        program = dsl::parse(text);
      } catch (const ParseError& e) {
        err << "error: " << program_path << ":" << e.what() << "\n";
        return kExitDomain;
      }
      const Figure fig = dsl::evaluate(program);
      for (const auto& [name, value] : fig.scalars()) {
        out << name << " = " << format_g17(value) << "\n";
      }
      if (!svg_path.empty()) write_file(svg_path, render_svg(fig, render));
    } else if (polygon_cmd->parsed()) {
      const Method m = method_arg(method_name);
      const PolygonResult poly = polygon(m, n);
      out << "step_angle: " << format_g17(poly.step_angle) << "\n"
          << "closure_gap: " << format_g17(poly.closure_gap) << "\n";
      write_file(svg_path, render_polygon_svg(poly, m, render));
    } else if (check_cmd->parsed()) {
      std::uint64_t value = 0;
      const char* first = n_text.data();
      const char* last = first + n_text.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec == std::errc::result_out_of_range) throw Overflow("n is too large");
      if (n_text.empty() || ec != std::errc() || ptr != last) {
        throw UsageError{"n must be a non-negative integer, got '" + n_text + "'"};
      }
      out << check(value).describe() << "\n";
    } else if (rectify_cmd->parsed()) {
      out << "point,distance,implied_pi\n";
      auto row = [&out](const std::string& label, double d) {
        const auto r = rectified_quadrant(d);
        out << label << "," << format_fixed(r.base_distance, 5) << ","
            << format_fixed(r.implied_pi, 5) << "\n";
      };
      if (distance) {
        row("d", *distance);
      } else {
        row("V", std::numbers::sqrt3);
        row("R", 7.0 / 4.0);
        row("P", exact_rectifier_distance());
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace circdiv
