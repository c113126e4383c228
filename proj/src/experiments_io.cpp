// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <json.hpp>

#include "mpcode/experiments.hpp"

namespace mpcode {
namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json config_json(const ExperimentConfig& config) {
  Json j;
  j["family"] = config.family.name();
  j["m_values"] = config.m_values;
  j["y"] = config.y;
  j["trials"] = config.trials;
  j["master_seed"] = config.master_seed;
  j["tau"] = config.tau;
  auto grid = Json::array();
  for (const Complex& z : config.z_grid) grid.push_back(complex_json(z));
  j["z_grid"] = grid;
  return j;
}

Json transform_json(const TransformSample& s) {
  return Json{{"z", complex_json(s.z)},
              {"value", complex_json(s.value)},
              {"trials", s.trials},
              {"std_err", s.std_err},
              {"std_err_re", s.std_err_re},
              {"std_err_im", s.std_err_im}};
}

Json header(const char* schema) {
  Json j;
  j["schema"] = schema;
  j["schema_version"] = kResultSchemaVersion;
  return j;
}

}  // namespace

std::string sweep_to_json(const SweepResult& sweep, const RateFitResult* fit) {
  Json j = header("mpcode.distance_sweep");
  j["config"] = config_json(sweep.config);
  auto points = Json::array();
  for (const auto& pt : sweep.points) {
    points.push_back(Json{{"m", pt.m},
                          {"n", pt.n},
                          {"p", pt.p},
                          {"median", pt.median},
                          {"q1", pt.q1},
                          {"q3", pt.q3}});
  }
  j["points"] = points;
  auto trials = Json::array();
  for (const auto& rec : sweep.trials) {
    trials.push_back(Json{{"family", rec.family},
                          {"m", rec.m},
                          {"n", rec.n},
                          {"p", rec.p},
                          {"trial", rec.trial},
                          {"seed", rec.seed},
                          {"distance", rec.distance}});
  }
  j["trials"] = trials;
  if (fit != nullptr) {
    j["fit"] = Json{{"slope", fit->slope}, {"intercept", fit->intercept}, {"r_squared", fit->r_squared}};
  } else {
    j["fit"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "family,m,n,p,trial,seed,distance\n";
  for (const auto& rec : sweep.trials) {
    out << rec.family << ',' << rec.m << ',' << rec.n << ',' << rec.p << ',' << rec.trial << ','
        << rec.seed << ',' << format_real(rec.distance) << '\n';
  }
  return out.str();
}

std::string delta_scaling_to_json(const ExperimentConfig& config, Complex z,
                                  const std::vector<DeltaScalingRow>& rows) {
  Json j = header("mpcode.delta_scaling");
  j["config"] = config_json(config);
  j["z"] = complex_json(z);
  auto arr = Json::array();
  for (const auto& row : rows) {
    arr.push_back(Json{{"m", row.m},
                       {"n", row.n},
                       {"p", row.p},
                       {"s_n", transform_json(row.s_n)},
                       {"delta", complex_json(row.delta)},
                       {"delta_abs", row.delta_abs},
                       {"delta_std_err", row.delta_std_err}});
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string concentration_to_json(const ExperimentConfig& config, Complex z,
                                  const std::vector<ConcentrationResult>& results) {
  Json j = header("mpcode.concentration");
  j["config"] = config_json(config);
  j["z"] = complex_json(z);
  auto arr = Json::array();
  for (const auto& res : results) {
    auto rows = Json::array();
    for (const auto& row : res.rows) {
      rows.push_back(Json{{"r", row.r},
                          {"exceedances", row.exceedances},
                          {"frequency", row.frequency},
                          {"bound", row.bound},
                          {"slack", row.slack},
                          {"within", row.within()}});
    }
    arr.push_back(Json{{"m", res.m}, {"n", res.n}, {"p", res.p}, {"mean", transform_json(res.mean)}, {"rows", rows}});
  }
  j["results"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace mpcode
