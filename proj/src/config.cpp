#include "radloc/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace radloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::invalid_argument("config " + path.string() + ": " + what);
}

json load_json(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    fail(path, "cannot open file");
  }
  try {
    return json::parse(file);
  } catch (const json::parse_error& e) {
    fail(path, e.what());
  }
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::filesystem::path& path, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(path, "unknown key \"" + key + "\" in " + where);
    }
  }
}

double parse_number(const json& j, const std::filesystem::path& path, const std::string& where) {
  if (!j.is_number()) {
    fail(path, where + " must be a number");
  }
  return j.get<double>();
}

Point2 parse_point(const json& j, const std::filesystem::path& path, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    fail(path, where + " must be an [x, y] array");
  }
  return {parse_number(j[0], path, where + "[0]"), parse_number(j[1], path, where + "[1]")};
}

std::vector<Point2> parse_points(const json& j, const std::filesystem::path& path,
                                 const std::string& where) {
  if (!j.is_array()) {
    fail(path, where + " must be an array of [x, y] points");
  }
  std::vector<Point2> points;
  points.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    points.push_back(parse_point(j[i], path, where + "[" + std::to_string(i) + "]"));
  }
  return points;
}

std::uint64_t parse_seed(const json& j, const std::filesystem::path& path,
                         const std::string& where) {
  if (j.is_number_unsigned()) {
    return j.get<std::uint64_t>();
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  fail(path, where + " must be a non-negative integer");
}

std::int64_t parse_integer(const json& j, const std::filesystem::path& path,
                           const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(path, where + " must be an integer");
  }
  return j.get<std::int64_t>();
}

bool parse_bool(const json& j, const std::filesystem::path& path, const std::string& where) {
  if (!j.is_boolean()) {
    fail(path, where + " must be true or false");
  }
  return j.get<bool>();
}

}  // namespace

ScenarioFile load_scenario(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.is_object()) {
    fail(path, "top level must be an object");
  }
  reject_unknown_keys(j, {"anchors", "source", "ranges", "label", "initial"}, path,
                      "scenario file");

  ScenarioFile out;
  if (!j.contains("anchors")) {
    fail(path, "\"anchors\" is required");
  }
  out.scenario.anchors = parse_points(j["anchors"], path, "anchors");

  if (j.contains("source")) {
    out.scenario.source = parse_point(j["source"], path, "source");
  }
  if (j.contains("ranges")) {
    const json& r = j["ranges"];
    if (!r.is_array()) {
      fail(path, "ranges must be an array of numbers");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      out.scenario.ranges.push_back(parse_number(r[i], path, "ranges[" + std::to_string(i) + "]"));
    }
  } else if (out.scenario.source) {
    out.scenario.ranges = exact_ranges(out.scenario.anchors, *out.scenario.source);
  } else {
    fail(path, "needs \"ranges\", or \"source\" to derive them from");
  }
  out.scenario.label = j.value("label", path.stem().string());
  if (j.contains("initial")) {
    out.initial = parse_point(j["initial"], path, "initial");
  }

  try {
    validate(out.scenario);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return out;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.is_object()) {
    fail(path, "top level must be an object");
  }
  reject_unknown_keys(j,
                      {"scenario_template", "sigma_grid", "trials", "sample_box", "master_seed",
                       "algorithms", "mu", "use_auto_step", "auto_step_safety", "max_iters",
                       "samples_per_estimate", "threads", "guaranteed_region"},
                      path, "sweep config");

  SweepConfig cfg;
  if (j.contains("scenario_template")) {
    const json& t = j["scenario_template"];
    if (!t.is_object()) {
      fail(path, "scenario_template must be an object");
    }
    reject_unknown_keys(t, {"anchors", "rss"}, path, "scenario_template");
    if (t.contains("anchors")) {
      cfg.anchors = parse_points(t["anchors"], path, "scenario_template.anchors");
    }
    if (t.contains("rss")) {
      const json& m = t["rss"];
      if (!m.is_object()) {
        fail(path, "scenario_template.rss must be an object");
      }
      reject_unknown_keys(m, {"source_strength", "path_loss_exponent"}, path,
                          "scenario_template.rss");
      if (m.contains("source_strength")) {
        cfg.rss.source_strength = parse_number(m["source_strength"], path, "rss.source_strength");
      }
      if (m.contains("path_loss_exponent")) {
        cfg.rss.path_loss_exponent =
            parse_number(m["path_loss_exponent"], path, "rss.path_loss_exponent");
      }
    }
  }
  if (j.contains("sigma_grid")) {
    const json& g = j["sigma_grid"];
    if (!g.is_array()) {
      fail(path, "sigma_grid must be an array of numbers");
    }
    cfg.sigma_grid.clear();
    for (std::size_t i = 0; i < g.size(); ++i) {
      cfg.sigma_grid.push_back(parse_number(g[i], path, "sigma_grid[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("trials")) {
    cfg.trials = static_cast<int>(parse_integer(j["trials"], path, "trials"));
  }
  if (j.contains("sample_box")) {
    const json& b = j["sample_box"];
    if (!b.is_object()) {
      fail(path, "sample_box must be an object with \"lo\" and \"hi\"");
    }
    reject_unknown_keys(b, {"lo", "hi"}, path, "sample_box");
    if (b.contains("lo")) cfg.sample_box.lo = parse_point(b["lo"], path, "sample_box.lo");
    if (b.contains("hi")) cfg.sample_box.hi = parse_point(b["hi"], path, "sample_box.hi");
  }
  if (j.contains("master_seed")) {
    cfg.master_seed = parse_seed(j["master_seed"], path, "master_seed");
  }
  if (j.contains("algorithms")) {
    const json& a = j["algorithms"];
    if (!a.is_array()) {
      fail(path, "algorithms must be an array of algorithm names");
    }
    cfg.run_convex = false;
    cfg.run_baseline = false;
    for (const json& entry : a) {
      if (!entry.is_string()) {
        fail(path, "algorithms entries must be strings");
      }
      const std::string name = entry.get<std::string>();
      if (name == "convex") {
        cfg.run_convex = true;
      } else if (name == "baseline") {
        cfg.run_baseline = true;
      } else {
        fail(path, "unknown algorithm \"" + name + "\" (expected convex or baseline)");
      }
    }
  }
  if (j.contains("mu")) {
    cfg.mu = parse_number(j["mu"], path, "mu");
  }
  if (j.contains("use_auto_step")) {
    cfg.use_auto_step = parse_bool(j["use_auto_step"], path, "use_auto_step");
  }
  if (j.contains("auto_step_safety")) {
    cfg.auto_step_safety = parse_number(j["auto_step_safety"], path, "auto_step_safety");
  }
  if (j.contains("max_iters")) {
    cfg.max_iters = parse_integer(j["max_iters"], path, "max_iters");
  }
  if (j.contains("samples_per_estimate")) {
    cfg.samples_per_estimate =
        static_cast<int>(parse_integer(j["samples_per_estimate"], path, "samples_per_estimate"));
  }
  if (j.contains("threads")) {
    cfg.threads = static_cast<int>(parse_integer(j["threads"], path, "threads"));
  }
  if (j.contains("guaranteed_region")) {
    const json& e = j["guaranteed_region"];
    if (!e.is_object()) {
      fail(path, "guaranteed_region must be an object");
    }
    reject_unknown_keys(e, {"center", "semi_axes", "rotation_deg"}, path, "guaranteed_region");
    Ellipse region;
    if (e.contains("center")) {
      region.center = parse_point(e["center"], path, "guaranteed_region.center");
    }
    if (e.contains("semi_axes")) {
      const Point2 axes = parse_point(e["semi_axes"], path, "guaranteed_region.semi_axes");
      region.semi_major = axes.x;
      region.semi_minor = axes.y;
    }
    if (e.contains("rotation_deg")) {
      region.rotation_rad = parse_number(e["rotation_deg"], path, "guaranteed_region.rotation_deg") *
                            std::numbers::pi / 180.0;
    }
    cfg.guaranteed_region = region;
  }

  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return cfg;
}

}  // namespace radloc
