// Copyright 2026 The platial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: validate, classify, similarity, mobility, relocation,
// and risk runs over the JSON file formats, emitting one report per run.
// Exit codes: 0 ok, 1 validation failure, 2 I/O failure, 64 usage error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "platial/classification.hpp"
#include "platial/error.hpp"
#include "platial/hierarchy.hpp"
#include "platial/io.hpp"
#include "platial/mobility.hpp"
#include "platial/similarity.hpp"
#include "platial/version.hpp"

namespace {

using platial::io::Json;

constexpr std::int64_t kMsPerDayMinusOne = 86'399'999;

// Paths resolve as given first, then against $PLATIAL_FIXTURES.
std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(path, ec)) return path;
  if (const char* base = std::getenv("PLATIAL_FIXTURES")) {
    const fs::path alt = fs::path(base) / path;
    if (fs::exists(alt, ec)) return alt.string();
  }
  return path;
}

Json load_json(const std::string& resolved) {
  return platial::io::parse_json(platial::io::read_file(resolved), resolved);
}

platial::TimestampMs now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Json make_report(const std::string& command, const std::string& input,
                 Json config, Json results, Json summary) {
  Json report = Json::object();
  report["tool"] = Json::object();
  report["tool"]["name"] = "platial";
  report["tool"]["version"] = platial::kVersion;
  report["command"] = command;
  report["input"] = input;
  report["generated_at"] = platial::format_timestamp(now_ms());
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["summary"] = std::move(summary);
  return report;
}

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    platial::io::write_file(out_path, text);
  }
}

std::vector<double> parse_number_list(const std::string& s,
                                      const std::string& flag,
                                      std::size_t expected) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw platial::ValidationError("bad " + flag + " value '" + s +
                                     "': expected " +
                                     std::to_string(expected) +
                                     " comma-separated numbers");
    }
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.size() != expected) {
    throw platial::ValidationError("bad " + flag + " value '" + s +
                                   "': expected " + std::to_string(expected) +
                                   " comma-separated numbers");
  }
  return out;
}

// A bare date means the whole day, so the cutoff sits at its last
// millisecond; full timestamps are taken as given.
std::optional<platial::TimestampMs> parse_as_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.size() == 10) return platial::parse_timestamp(s) + kMsPerDayMinusOne;
  return platial::parse_timestamp(s);
}

Json classify_config(const platial::ClassifyParams& p) {
  Json config = Json::object();
  config["geom_tol"] = p.geom_tolerance;
  config["min_displacement"] = p.min_displacement;
  config["essence_threshold"] = p.essence_threshold;
  return config;
}

int run_validate(const std::string& input, const std::string& out_path) {
  const Json j = load_json(input);
  Json summary = Json::object();
  switch (platial::io::detect_file_type(j)) {
    case platial::io::FileType::Records: {
      const platial::io::RecordFile f = platial::io::parse_record_file(j);
      summary["type"] = "records";
      summary["crs"] = platial::to_string(f.crs);
      summary["n_records"] = f.records.size();
      break;
    }
    case platial::io::FileType::Timelines: {
      const platial::io::TimelineFile f = platial::io::parse_timeline_file(j);
      std::size_t states = 0;
      for (const auto& t : f.timelines) states += t.timeline.size();
      summary["type"] = "timelines";
      summary["crs"] = platial::to_string(f.crs);
      summary["n_timelines"] = f.timelines.size();
      summary["n_states"] = states;
      break;
    }
    case platial::io::FileType::Milestones: {
      const platial::io::MilestoneFile f = platial::io::parse_milestone_file(j);
      summary["type"] = "milestones";
      summary["n_tracks"] = f.tracks.size();
      break;
    }
  }
  emit(make_report("validate", input, Json::object(), Json::array(),
                   std::move(summary)),
       out_path);
  return 0;
}

int run_classify(const std::string& input, const platial::ClassifyParams& p,
                 const std::string& out_path) {
  const platial::io::TimelineFile f =
      platial::io::parse_timeline_file(load_json(input));
  struct Row {
    std::string id;
    platial::PlaceClassification c;
  };
  std::vector<Row> rows;
  for (const auto& entry : f.timelines) {
    rows.push_back(
        {entry.timeline.front().id, platial::classify(entry.timeline, p)});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.id < b.id; });

  Json results = Json::array();
  for (const Row& r : rows) {
    Json row = Json::object();
    row["id"] = r.id;
    row["boundary"] = platial::to_string(r.c.boundary);
    row["lifespan"] = platial::to_string(r.c.lifespan);
    row["status"] = platial::to_string(r.c.status);
    row["movability"] = platial::to_string(r.c.movability);
    row["instantiation"] = platial::to_string(r.c.instantiation);
    row["construction"] = platial::to_string(r.c.construction);
    results.push_back(std::move(row));
  }
  Json summary = Json::object();
  summary["n_timelines"] = rows.size();
  emit(make_report("classify", input, classify_config(p), std::move(results),
                   std::move(summary)),
       out_path);
  return 0;
}

int run_similarity(const std::string& input,
                   const platial::SimilarityWeights& w,
                   const platial::SimilarityScales& s,
                   const std::string& csv_out, const std::string& out_path) {
  platial::io::RecordFile f = platial::io::parse_record_file(load_json(input));
  std::sort(f.records.begin(), f.records.end(),
            [](const platial::Place& a, const platial::Place& b) {
              return a.id < b.id;
            });
  const std::size_t n = f.records.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m[i][j] = platial::platial_similarity(f.records[i], f.records[j], w, s);
      m[j][i] = m[i][j];
    }
  }

  Json results = Json::array();
  double sum = 0.0, lo = 1.0, hi = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Json row = Json::object();
      row["a"] = f.records[i].id;
      row["b"] = f.records[j].id;
      row["similarity"] = m[i][j];
      results.push_back(std::move(row));
      sum += m[i][j];
      lo = std::min(lo, m[i][j]);
      hi = std::max(hi, m[i][j]);
      ++pairs;
    }
  }

  if (!csv_out.empty()) {
    std::string csv = "id";
    for (const platial::Place& p : f.records) csv += "," + p.id;
    csv += "\n";
    char buf[32];
    for (std::size_t i = 0; i < n; ++i) {
      csv += f.records[i].id;
      for (std::size_t j = 0; j < n; ++j) {
        std::snprintf(buf, sizeof buf, "%.12g", m[i][j]);
        csv += ",";
        csv += buf;
      }
      csv += "\n";
    }
    platial::io::write_file(csv_out, csv);
  }

  Json config = Json::object();
  config["weights"] = Json::object();
  config["weights"]["spatial"] = w.spatial;
  config["weights"]["temporal"] = w.temporal;
  config["weights"]["semantic"] = w.semantic;
  config["spatial_scale"] = s.spatial_scale;
  config["temporal_scale"] = s.temporal_scale;

  Json summary = Json::object();
  summary["n_places"] = n;
  summary["n_pairs"] = pairs;
  if (pairs > 0) {
    summary["mean_similarity"] = sum / static_cast<double>(pairs);
    summary["min_similarity"] = lo;
    summary["max_similarity"] = hi;
  }
  emit(make_report("similarity", input, std::move(config), std::move(results),
                   std::move(summary)),
       out_path);
  return 0;
}

int run_mobility(const std::string& input, const platial::ClassifyParams& p,
                 platial::MobilityKind kind, const std::string& out_path) {
  const platial::io::TimelineFile f =
      platial::io::parse_timeline_file(load_json(input));
  std::vector<platial::PlaceTimeline> timelines;
  timelines.reserve(f.timelines.size());
  for (const auto& entry : f.timelines) timelines.push_back(entry.timeline);

  platial::DetectedMobility detected =
      platial::detect_mobility_events(timelines, p, kind);
  auto by_place = [](const auto& a, const auto& b) {
    return a.place_id != b.place_id ? a.place_id < b.place_id
                                    : a.from_state < b.from_state;
  };
  std::sort(detected.events.begin(), detected.events.end(), by_place);
  std::sort(detected.breaks.begin(), detected.breaks.end(), by_place);

  Json results = Json::array();
  for (const platial::MobilityEvent& e : detected.events) {
    Json row = Json::object();
    row["id"] = e.place_id;
    row["from_state"] = e.from_state;
    row["to_state"] = e.to_state;
    row["displacement"] = e.displacement;
    row["essence_similarity"] = e.essence_similarity;
    row["kind"] = platial::to_string(e.kind);
    results.push_back(std::move(row));
  }
  Json breaks = Json::array();
  for (const platial::EssenceBreak& b : detected.breaks) {
    Json row = Json::object();
    row["id"] = b.place_id;
    row["from_state"] = b.from_state;
    row["to_state"] = b.to_state;
    row["displacement"] = b.displacement;
    row["essence_similarity"] = b.essence_similarity;
    breaks.push_back(std::move(row));
  }

  const platial::DisplacementSummary ds =
      platial::summarize_displacement(detected);
  Json summary = Json::object();
  summary["n_places"] = ds.n_places;
  summary["n_events"] = ds.n_events;
  summary["n_essence_breaks"] = ds.n_essence_breaks;
  summary["total_displacement"] = ds.total_displacement;
  summary["mean_displacement"] = ds.mean_displacement;
  summary["max_displacement"] = ds.max_displacement;
  summary["essence_breaks"] = std::move(breaks);

  Json config = classify_config(p);
  config["kind"] = platial::to_string(kind);
  emit(make_report("mobility", input, std::move(config), std::move(results),
                   std::move(summary)),
       out_path);
  return 0;
}

int run_relocation(const std::string& input, const std::string& as_of_str,
                   const std::string& out_path) {
  const platial::io::MilestoneFile f =
      platial::io::parse_milestone_file(load_json(input));
  const std::optional<platial::TimestampMs> as_of = parse_as_of(as_of_str);
  const platial::RelocationSummary rs =
      platial::summarize_relocation(f.tracks, as_of);

  Json reached = Json::object();
  for (const platial::MilestoneKind k :
       {platial::MilestoneKind::DisasterOccurrence,
        platial::MilestoneKind::ZoneDesignation,
        platial::MilestoneKind::AgreementDeadline,
        platial::MilestoneKind::ContractSigned,
        platial::MilestoneKind::RemovalComplete}) {
    const auto it = rs.reached.find(k);
    reached[platial::to_string(k)] =
        it == rs.reached.end() ? 0 : it->second;
  }
  Json by_mode = Json::object();
  for (const platial::RelocationMode mode :
       {platial::RelocationMode::Relocation,
        platial::RelocationMode::Displacement}) {
    const auto it = rs.by_mode.find(mode);
    by_mode[platial::to_string(mode)] = it == rs.by_mode.end() ? 0 : it->second;
  }

  Json summary = Json::object();
  summary["eligible"] = rs.n_tracks;
  summary["by_mode"] = std::move(by_mode);
  summary["reached"] = std::move(reached);
  if (!f.metadata.empty()) summary["metadata"] = f.metadata;

  Json config = Json::object();
  config["as_of"] =
      as_of.has_value() ? Json(platial::format_timestamp(*as_of)) : Json();

  std::cerr << "eligible=" << rs.n_tracks
            << " signed=" << summary["reached"]["contract_signed"]
            << " moved=" << summary["reached"]["removal_complete"] << "\n";
  emit(make_report("relocation", input, std::move(config), Json::array(),
                   std::move(summary)),
       out_path);
  return 0;
}

int run_risk(const std::string& input, const std::string& combiner_str,
             const std::string& hazard_key, const std::string& exposure_key,
             const std::string& vulnerability_key,
             const std::string& out_path) {
  const platial::io::RecordFile f =
      platial::io::parse_record_file(load_json(input));

  Json config = Json::object();
  platial::RiskCombiner combiner = platial::RiskCombiner::product();
  if (combiner_str == "product") {
    config["combiner"] = "product";
  } else if (combiner_str.rfind("geometric:", 0) == 0) {
    const std::vector<double> w =
        parse_number_list(combiner_str.substr(10), "--combiner", 3);
    combiner = platial::RiskCombiner::weighted_geometric(w[0], w[1], w[2]);
    config["combiner"] = "geometric";
    config["weights"] = Json::object();
    config["weights"]["hazard"] = w[0];
    config["weights"]["exposure"] = w[1];
    config["weights"]["vulnerability"] = w[2];
  } else {
    throw platial::ValidationError(
        "bad --combiner value '" + combiner_str +
        "': expected 'product' or 'geometric:wh,we,wv'");
  }
  config["hazard_key"] = hazard_key;
  config["exposure_key"] = exposure_key;
  config["vulnerability_key"] = vulnerability_key;

  const std::vector<platial::PlaceRisk> risks = platial::place_risk_overlay(
      f.records, combiner, hazard_key, exposure_key, vulnerability_key);

  Json results = Json::array();
  double sum = 0.0, hi = 0.0;
  for (const platial::PlaceRisk& r : risks) {
    Json row = Json::object();
    row["id"] = r.place_id;
    row["hazard"] = r.hazard;
    row["exposure"] = r.exposure;
    row["vulnerability"] = r.vulnerability;
    row["risk"] = r.risk;
    results.push_back(std::move(row));
    sum += r.risk;
    hi = std::max(hi, r.risk);
  }
  Json summary = Json::object();
  summary["n_places"] = risks.size();
  summary["n_skipped"] = f.records.size() - risks.size();
  if (!risks.empty()) {
    summary["mean_risk"] = sum / static_cast<double>(risks.size());
    summary["max_risk"] = hi;
  }
  emit(make_report("risk", input, std::move(config), std::move(results),
                   std::move(summary)),
       out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"platio-temporal place analytics"};
  app.set_version_flag("--version", platial::kVersion);
  app.require_subcommand(1);

  std::string input, out_path;
  platial::ClassifyParams params;
  platial::SimilarityScales scales;
  std::string weights_str = "1,1,1";
  std::string csv_out, as_of_str;
  std::string combiner_str = "product";
  std::string hazard_key = "hazard";
  std::string exposure_key = "exposure";
  std::string vulnerability_key = "vulnerability";
  std::string kind_str = "corporeal";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "input JSON file")->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto add_classify_params = [&](CLI::App* sub) {
    sub->add_option("--geom-tol", params.geom_tolerance,
                    "shape-change tolerance in [0,1]");
    sub->add_option("--min-displacement", params.min_displacement,
                    "minimum move distance in meters");
    sub->add_option("--essence-threshold", params.essence_threshold,
                    "minimum semantic similarity across a move");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and check an input file");
  add_common(validate_cmd);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "label place timelines along all facets");
  add_common(classify_cmd);
  add_classify_params(classify_cmd);

  CLI::App* similarity_cmd = app.add_subcommand(
      "similarity", "pairwise place similarity over a records file");
  add_common(similarity_cmd);
  similarity_cmd->add_option("--weights", weights_str,
                             "spatial,temporal,semantic weights");
  similarity_cmd->add_option("--spatial-scale", scales.spatial_scale,
                             "meters mapping to full spatial difference");
  similarity_cmd->add_option("--temporal-scale", scales.temporal_scale,
                             "seconds mapping to full temporal difference");
  similarity_cmd->add_option("--csv-out", csv_out,
                             "also write the similarity matrix as CSV");

  CLI::App* mobility_cmd = app.add_subcommand(
      "mobility", "detect relocation events in place timelines");
  add_common(mobility_cmd);
  add_classify_params(mobility_cmd);
  mobility_cmd
      ->add_option("--kind", kind_str, "mobility kind to label events with")
      ->check(CLI::IsMember({"corporeal", "object", "imaginative", "virtual",
                             "communicative"}));

  CLI::App* relocation_cmd = app.add_subcommand(
      "relocation", "summarize managed-retreat milestone tracks");
  add_common(relocation_cmd);
  relocation_cmd->add_option(
      "--as-of", as_of_str,
      "count milestones up to this timestamp (a bare date spans the day)");

  CLI::App* risk_cmd = app.add_subcommand(
      "risk", "combine hazard, exposure, and vulnerability per place");
  add_common(risk_cmd);
  risk_cmd->add_option("--combiner", combiner_str,
                       "'product' or 'geometric:wh,we,wv'");
  risk_cmd->add_option("--hazard-key", hazard_key, "meaning key for hazard");
  risk_cmd->add_option("--exposure-key", exposure_key,
                       "meaning key for exposure");
  risk_cmd->add_option("--vulnerability-key", vulnerability_key,
                       "meaning key for vulnerability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    const std::string resolved = resolve_input(input);
    if (validate_cmd->parsed()) return run_validate(resolved, out_path);
    if (classify_cmd->parsed()) {
      return run_classify(resolved, params, out_path);
    }
    if (similarity_cmd->parsed()) {
      const std::vector<double> w =
          parse_number_list(weights_str, "--weights", 3);
      return run_similarity(resolved, {w[0], w[1], w[2]}, scales, csv_out,
                            out_path);
    }
    if (mobility_cmd->parsed()) {
      return run_mobility(resolved, params,
                          platial::mobility_kind_from_string(kind_str),
                          out_path);
    }
    if (relocation_cmd->parsed()) {
      return run_relocation(resolved, as_of_str, out_path);
    }
    if (risk_cmd->parsed()) {
      return run_risk(resolved, combiner_str, hazard_key, exposure_key,
                      vulnerability_key, out_path);
    }
  } catch (const platial::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const platial::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
