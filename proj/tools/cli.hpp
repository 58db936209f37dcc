// Command-line front end. `run` is separate from main() so tests can drive
// every subcommand in-process.
//
// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzcmp/analysis.hpp"
#include "fuzzcmp/core.hpp"
#include "fuzzcmp/fusion.hpp"
#include "fuzzcmp/io.hpp"
#include "fuzzcmp/measures.hpp"

namespace fuzzcmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

namespace detail {

inline std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_double(fuzzcmp::detail::trim(item));
    if (!v) throw Error("invalid number '" + item + "' in " + what);
    out.push_back(*v);
  }
  if (out.empty()) throw Error("empty list for " + what);
  return out;
}

inline GridSpec parse_grid(const std::string& text) {
  if (text == "integers") return {GridSpec::Kind::Integers, 0};
  const std::string prefix = "uniform:";
  if (text.rfind(prefix, 0) == 0) {
    const auto n = parse_double(text.substr(prefix.size()));
    if (n && *n >= 2 && *n == static_cast<int>(*n)) {
      return {GridSpec::Kind::Uniform, static_cast<int>(*n)};
    }
  }
  throw Error("invalid --grid '" + text + "' (expected integers or uniform:N)");
}

inline std::string describe_grid(const GridSpec& g) {
  return g.kind == GridSpec::Kind::Integers ? "integers" : "uniform:" + std::to_string(g.points);
}

/// Flags shared by every command that evaluates the comparative measure.
struct MeasureOptions {
  std::string weights = "0.7,0.3";
  int alpha_levels = 100;
  std::optional<double> lambda;
  bool directional = false;
  bool symmetric = false;
  std::string grid = "uniform:201";
  bool strict_convex = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--weights", weights, "OWA weights W1,W2")->capture_default_str();
    cmd.add_option("--alpha-levels", alpha_levels, "number of alpha levels")
        ->capture_default_str();
    cmd.add_option("--lambda", lambda, "distance normaliser (default: universe width)");
    auto* dir = cmd.add_flag("--directional", directional, "signed distance (default)");
    auto* sym = cmd.add_flag("--symmetric", symmetric, "unsigned distance");
    dir->excludes(sym);
    cmd.add_option("--grid", grid, "Jaccard grid: integers | uniform:N")->capture_default_str();
    cmd.add_flag("--strict-convex", strict_convex, "reject non-convex sets");
  }

  ComparativeConfig config() const {
    ComparativeConfig c;
    c.weights = WeightVector(parse_list(weights, "--weights"));
    c.alpha_levels = alpha_levels;
    c.lambda_override = lambda;
    c.directional = !symmetric;
    c.strict_convexity = strict_convex;
    c.grid = parse_grid(grid);
    c.validate();
    return c;
  }
};

struct OutputOptions {
  std::string format;
  int precision = 6;

  void attach(CLI::App& cmd, const std::string& default_format) {
    format = default_format;
    cmd.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    cmd.add_option("--precision", precision, "significant digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
  }

  std::string num(double v) const { return format_number(v, precision); }
  /// JSON number rounded to the requested precision.
  nlohmann::json jnum(double v) const { return std::stod(num(v)); }
};

inline std::vector<FuzzySet> read_sets(const std::vector<std::string>& paths) {
  std::vector<FuzzySet> sets;
  sets.reserve(paths.size());
  for (const auto& p : paths) sets.push_back(read_fuzzy_set(p));
  return sets;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

inline void write_aligned(std::ostream& out,
                          const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  }
}

inline std::vector<std::pair<std::string, std::string>> report_rows(const ComparisonReport& r,
                                                                    const OutputOptions& o) {
  return {{"similarity", o.num(r.similarity)},
          {"distance", o.num(r.distance)},
          {"normalized_distance", o.num(r.normalized_distance)},
          {"comparative", o.num(r.comparative)},
          {"complement", o.num(r.complement)},
          {"lambda", o.num(r.lambda)}};
}

inline nlohmann::json report_json(const ComparisonReport& r, const OutputOptions& o) {
  return {{"similarity", o.jnum(r.similarity)},
          {"distance", o.jnum(r.distance)},
          {"normalized_distance", o.jnum(r.normalized_distance)},
          {"comparative", o.jnum(r.comparative)},
          {"complement", o.jnum(r.complement)},
          {"lambda", o.jnum(r.lambda)}};
}

inline nlohmann::json config_json(const ComparativeConfig& c, const OutputOptions& o) {
  nlohmann::json w = nlohmann::json::array();
  for (double x : c.weights.values()) w.push_back(o.jnum(x));
  return {{"weights", w},
          {"alpha_levels", c.alpha_levels},
          {"lambda", c.lambda_override ? nlohmann::json(o.jnum(*c.lambda_override))
                                       : nlohmann::json("universe-width")},
          {"mode", c.directional ? "directional" : "symmetric"},
          {"grid", describe_grid(c.grid)},
          {"strict_convex", c.strict_convexity}};
}

inline std::vector<std::pair<std::string, std::string>> config_rows(const ComparativeConfig& c,
                                                                    const OutputOptions& o) {
  std::string w;
  for (double x : c.weights.values()) w += (w.empty() ? "" : ",") + o.num(x);
  return {{"weights", w},
          {"alpha_levels", std::to_string(c.alpha_levels)},
          {"lambda_source", c.lambda_override ? "override" : "universe-width"},
          {"mode", c.directional ? "directional" : "symmetric"},
          {"grid", describe_grid(c.grid)},
          {"strict_convex", c.strict_convexity ? "true" : "false"}};
}

inline std::vector<std::pair<std::string, std::string>> profile_rows(const FuzzySet& s,
                                                                     const OutputOptions& o) {
  const auto p = profile(s);
  return {{"name", s.name()},
          {"height", o.num(p.height)},
          {"normal", p.is_normal ? "true" : "false"},
          {"convex", p.is_convex ? "true" : "false"},
          {"support", "[" + o.num(p.support.left()) + ", " + o.num(p.support.right()) + "]"}};
}

inline nlohmann::json profile_json(const FuzzySet& s, const OutputOptions& o) {
  const auto p = profile(s);
  return {{"name", s.name()},
          {"height", o.jnum(p.height)},
          {"normal", p.is_normal},
          {"convex", p.is_convex},
          {"support", {o.jnum(p.support.left()), o.jnum(p.support.right())}}};
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Compare fuzzy sets with a fused similarity/distance measure", "fuzzcmp"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "build a fuzzy set from a CSV sample column");
  std::string csv_path, column = "rating", universe_text, bins_text = "integers", name = "built",
                        out_path;
  OutputOptions build_out;
  build->add_option("--csv", csv_path, "input CSV file")->required();
  build->add_option("--column", column, "column holding the samples")->capture_default_str();
  build->add_option("--universe", universe_text, "MIN,MAX")->required();
  build->add_option("--bins", bins_text, "bin centres B1,B2,... or 'integers'")
      ->capture_default_str();
  build->add_option("--name", name, "set name")->capture_default_str();
  build->add_option("--out", out_path, "output JSON path")->required();
  build_out.attach(*build, "text");

  // compare
  auto* compare = app.add_subcommand("compare", "compare two fuzzy sets");
  std::vector<std::string> compare_files;
  std::optional<double> given_similarity, given_distance;
  std::string measure = "all";
  MeasureOptions compare_opts;
  OutputOptions compare_out;
  compare->add_option("files", compare_files, "SET_A SET_B");
  compare->add_option("--similarity", given_similarity, "pre-measured similarity");
  compare->add_option("--distance", given_distance, "pre-measured signed distance");
  compare->add_option("--measure", measure, "which value to print")
      ->check(CLI::IsMember({"all", "jaccard", "distance", "comparative", "complement"}))
      ->capture_default_str();
  compare_opts.attach(*compare);
  compare_out.attach(*compare, "text");

  // matrix
  auto* mat = app.add_subcommand("matrix", "pairwise comparative matrix");
  std::vector<std::string> matrix_files;
  MeasureOptions matrix_opts;
  OutputOptions matrix_out;
  mat->add_option("files", matrix_files, "set files")->required();
  matrix_opts.attach(*mat);
  matrix_out.attach(*mat, "csv");

  // rank
  auto* rnk = app.add_subcommand("rank", "rank candidates by closeness to a reference");
  std::string reference_path;
  std::vector<std::string> candidate_files;
  MeasureOptions rank_opts;
  OutputOptions rank_out;
  rnk->add_option("--reference", reference_path, "reference set")->required();
  rnk->add_option("files", candidate_files, "candidate sets")->required();
  rank_opts.attach(*rnk);
  rank_out.attach(*rnk, "csv");

  // classify
  auto* cls = app.add_subcommand("classify", "nearest-prototype classification");
  std::string input_path;
  std::vector<std::string> prototype_files;
  MeasureOptions classify_opts;
  OutputOptions classify_out;
  cls->add_option("--input", input_path, "set to classify")->required();
  cls->add_option("files", prototype_files, "prototype sets (label = set name)")->required();
  classify_opts.attach(*cls);
  classify_out.attach(*cls, "text");

  // sweep-weights
  auto* sweep = app.add_subcommand("sweep-weights", "comparative value across OWA weights");
  std::vector<std::string> sweep_files;
  std::optional<double> sweep_s, sweep_nd;
  int steps = 11;
  MeasureOptions sweep_opts;
  OutputOptions sweep_out;
  sweep->add_option("files", sweep_files, "SET_A SET_B (instead of --s/--nd)");
  sweep->add_option("--s", sweep_s, "similarity");
  sweep->add_option("--nd", sweep_nd, "normalised signed distance");
  sweep->add_option("--steps", steps, "number of weight rows")->capture_default_str();
  sweep_opts.attach(*sweep);
  sweep_out.attach(*sweep, "csv");

  // validate
  auto* val = app.add_subcommand("validate", "check fuzzy-set files and print their profiles");
  std::vector<std::string> validate_files;
  OutputOptions validate_out;
  val->add_option("files", validate_files, "set files")->required();
  validate_out.attach(*val, "text");

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "membership curves as plot-ready CSV");
  std::vector<std::string> plot_files;
  int samples = 101;
  std::string range_text;
  OutputOptions plot_out;
  plot->add_option("files", plot_files, "set files");
  plot->add_option("--samples", samples, "number of x samples")->capture_default_str();
  plot->add_option("--range", range_text, "MIN,MAX (default: universe)");
  plot_out.attach(*plot, "csv");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (build->parsed()) {
      const auto u = parse_list(universe_text, "--universe");
      if (u.size() != 2) throw Error("--universe expects MIN,MAX");
      const Universe universe(u[0], u[1]);
      std::vector<double> bins;
      if (bins_text == "integers") {
        bins = SampleGrid::integers(universe).xs();
      } else {
        bins = parse_list(bins_text, "--bins");
      }
      const auto values = read_csv_column(csv_path, column);
      const auto set = build_from_samples(values, universe, bins, name);
      write_fuzzy_set(out_path, set);
      if (build_out.format == "json") {
        out << profile_json(set, build_out).dump(2) << '\n';
      } else {
        write_aligned(out, profile_rows(set, build_out));
      }
      return kExitOk;
    }

    if (compare->parsed()) {
      const auto config = compare_opts.config();
      ComparisonReport r;
      if (given_similarity || given_distance) {
        if (!(given_similarity && given_distance) || !compare_files.empty()) {
          throw Error("--similarity and --distance must be given together and without files");
        }
        if (!config.lambda_override) throw Error("--lambda is required with pre-measured values");
        r = fuse(*given_similarity, *given_distance, *config.lambda_override, config.weights);
      } else {
        if (compare_files.size() != 2) throw Error("compare expects exactly two set files");
        const auto sets = read_sets(compare_files);
        if (measure == "jaccard") {
          // similarity alone has no normality precondition
          r.similarity = jaccard(sets[0], sets[1], config.grid.build(sets[0].universe()));
        } else {
          r = comparative(sets[0], sets[1], config);
        }
      }
      const auto& o = compare_out;
      if (measure != "all") {
        const double v = measure == "jaccard"       ? r.similarity
                         : measure == "distance"    ? r.distance
                         : measure == "comparative" ? r.comparative
                                                    : r.complement;
        if (o.format == "json") {
          out << nlohmann::json{{measure == "jaccard" ? "similarity" : measure, o.jnum(v)}}.dump()
              << '\n';
        } else {
          out << o.num(v) << '\n';
        }
      } else if (o.format == "json") {
        out << nlohmann::json{{"report", report_json(r, o)}, {"config", config_json(config, o)}}
                   .dump(2)
            << '\n';
      } else if (o.format == "csv") {
        write_row(out, {"similarity", "distance", "normalized_distance", "comparative",
                        "complement", "lambda"});
        write_row(out, {o.num(r.similarity), o.num(r.distance), o.num(r.normalized_distance),
                        o.num(r.comparative), o.num(r.complement), o.num(r.lambda)});
      } else {
        auto rows = report_rows(r, o);
        const auto cfg = config_rows(config, o);
        rows.insert(rows.end(), cfg.begin(), cfg.end());
        write_aligned(out, rows);
      }
      return kExitOk;
    }

    if (mat->parsed()) {
      const auto config = matrix_opts.config();
      const auto m = matrix(read_sets(matrix_files), config);
      const auto& o = matrix_out;
      if (o.format == "json") {
        nlohmann::json c = nlohmann::json::array(), cp = nlohmann::json::array(),
                       s = nlohmann::json::array(), d = nlohmann::json::array();
        for (const auto& row : m.entries) {
          nlohmann::json rc, rcp, rs, rd;
          for (const auto& e : row) {
            rc.push_back(o.jnum(e.comparative));
            rcp.push_back(o.jnum(e.complement));
            rs.push_back(o.jnum(e.similarity));
            rd.push_back(o.jnum(e.distance));
          }
          c.push_back(rc);
          cp.push_back(rcp);
          s.push_back(rs);
          d.push_back(rd);
        }
        out << nlohmann::json{{"names", m.names},     {"comparative", c}, {"complement", cp},
                              {"similarity", s},      {"distance", d},
                              {"config", config_json(config, o)}}
                   .dump(2)
            << '\n';
      } else {
        std::vector<std::string> header{"name"};
        header.insert(header.end(), m.names.begin(), m.names.end());
        if (o.format == "csv") {
          write_row(out, header);
        } else {
          out << "comparative (row = first argument)\n";
          write_row(out, header);
        }
        for (std::size_t i = 0; i < m.names.size(); ++i) {
          std::vector<std::string> cells{m.names[i]};
          for (const auto& e : m.entries[i]) cells.push_back(o.num(e.comparative));
          write_row(out, cells);
        }
      }
      return kExitOk;
    }

    if (rnk->parsed()) {
      const auto config = rank_opts.config();
      const auto ranked = rank(read_fuzzy_set(reference_path), read_sets(candidate_files), config);
      const auto& o = rank_out;
      if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < ranked.size(); ++i) {
          arr.push_back({{"rank", i + 1},
                         {"label", ranked[i].label},
                         {"report", report_json(ranked[i].report, o)}});
        }
        out << arr.dump(2) << '\n';
      } else {
        write_row(out, {"rank", "label", "comparative", "complement", "similarity", "distance"});
        for (std::size_t i = 0; i < ranked.size(); ++i) {
          const auto& r = ranked[i].report;
          write_row(out, {std::to_string(i + 1), ranked[i].label, o.num(r.comparative),
                          o.num(r.complement), o.num(r.similarity), o.num(r.distance)});
        }
      }
      return kExitOk;
    }

    if (cls->parsed()) {
      const auto config = classify_opts.config();
      const auto input = read_fuzzy_set(input_path);
      std::map<std::string, FuzzySet> prototypes;
      for (auto& s : read_sets(prototype_files)) {
        const std::string label = s.name();
        if (!prototypes.emplace(label, std::move(s)).second) {
          throw Error("duplicate prototype label '" + label + "'");
        }
      }
      const auto result = classify(input, prototypes, config);
      const auto& o = classify_out;
      if (o.format == "json") {
        nlohmann::json scores = nlohmann::json::object();
        for (const auto& [label, v] : result.scores) scores[label] = o.jnum(v);
        out << nlohmann::json{{"best", result.best_label},
                              {"margin", o.jnum(result.margin)},
                              {"scores", scores}}
                   .dump(2)
            << '\n';
      } else if (o.format == "csv") {
        write_row(out, {"label", "complement", "best"});
        for (const auto& [label, v] : result.scores) {
          write_row(out, {label, o.num(v), label == result.best_label ? "1" : "0"});
        }
      } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"best", result.best_label}, {"margin", o.num(result.margin)}};
        for (const auto& [label, v] : result.scores) rows.emplace_back("score." + label, o.num(v));
        write_aligned(out, rows);
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      double s = 0.0;
      double nd = 0.0;
      if (sweep_s || sweep_nd) {
        if (!(sweep_s && sweep_nd) || !sweep_files.empty()) {
          throw Error("--s and --nd must be given together and without files");
        }
        s = *sweep_s;
        nd = *sweep_nd;
      } else {
        if (sweep_files.size() != 2) throw Error("sweep-weights expects --s/--nd or two set files");
        const auto sets = read_sets(sweep_files);
        const auto r = comparative(sets[0], sets[1], sweep_opts.config());
        s = r.similarity;
        nd = r.normalized_distance;
      }
      const auto rows = weight_sweep(s, nd, steps);
      const auto& o = sweep_out;
      if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
          arr.push_back({{"w1", o.jnum(r.w1)}, {"w2", o.jnum(r.w2)}, {"c", o.jnum(r.comparative)}});
        }
        out << arr.dump(2) << '\n';
      } else {
        write_row(out, {"w1", "w2", "c"});
        for (const auto& r : rows) write_row(out, {o.num(r.w1), o.num(r.w2), o.num(r.comparative)});
      }
      return kExitOk;
    }

    if (val->parsed()) {
      int code = kExitOk;
      nlohmann::json arr = nlohmann::json::array();
      const auto& o = validate_out;
      for (const auto& path : validate_files) {
        try {
          const auto set = read_fuzzy_set(path);
          if (o.format == "json") {
            auto j = profile_json(set, o);
            j["file"] = path;
            j["valid"] = true;
            arr.push_back(j);
          } else {
            out << path << ": ok\n";
            write_aligned(out, profile_rows(set, o));
          }
        } catch (const Error& e) {
          const int c = e.kind() == ErrorKind::Io ? kExitIo : kExitValidation;
          code = std::max(code, c);
          if (o.format == "json") {
            arr.push_back({{"file", path}, {"valid", false}, {"error", e.what()}});
          } else {
            out << path << ": invalid\n";
          }
          err << "error: " << e.what() << '\n';
        }
      }
      if (o.format == "json") out << arr.dump(2) << '\n';
      return code;
    }

    if (plot->parsed()) {
      if (plot_files.empty()) throw Error("plotdata expects at least one set file");
      if (samples < 2) throw Error("--samples must be at least 2");
      const auto sets = read_sets(plot_files);
      for (const auto& s : sets) fuzzcmp::detail::require_same_universe(sets.front(), s);
      double lo = sets.front().universe().min();
      double hi = sets.front().universe().max();
      if (!range_text.empty()) {
        const auto r = parse_list(range_text, "--range");
        if (r.size() != 2 || !(r[0] < r[1])) throw Error("--range expects MIN,MAX with MIN < MAX");
        lo = r[0];
        hi = r[1];
      }
      const auto& o = plot_out;
      std::vector<std::string> header{"x"};
      for (const auto& s : sets) header.push_back(s.name());
      write_row(out, header);
      for (int i = 0; i < samples; ++i) {
        const double x = i + 1 == samples ? hi : lo + (hi - lo) * i / (samples - 1);
        std::vector<std::string> cells{o.num(x)};
        for (const auto& s : sets) cells.push_back(o.num(membership(s, x)));
        write_row(out, cells);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Io ? kExitIo : kExitValidation;
  }
  return kExitValidation;
}

}  // namespace fuzzcmp::cli
