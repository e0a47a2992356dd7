// Copyright 2026 The Dirloud Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// dirloud: directional loudness maps and distortion scores for stereo audio.
//
// Subcommands:
//   map      write the directional loudness map of one signal (CSV, optional PGM)
//   compare  score a reference/test pair, JSON report on stdout
//   batch    process a CSV manifest of pairs, one report row per item
//   synth    generate deterministic test signals and degradations

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "dirloud/analysis.h"
#include "dirloud/errors.h"
#include "dirloud/map_io.h"
#include "dirloud/synth.h"
#include "dirloud/wav_io.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 5;

struct AnalysisFlags {
  dirloud::AnalysisConfig cfg;
  std::string bands = "7..19";
};

void add_analysis_options(CLI::App* cmd, AnalysisFlags* flags) {
  cmd->add_option("--directions", flags->cfg.directions, "Number of panning directions")
      ->capture_default_str();
  cmd->add_option("--xi", flags->cfg.xi, "Gaussian direction window width")
      ->capture_default_str();
  cmd->add_option("--bands", flags->bands, "Inclusive ERB band subset, LO..HI")
      ->capture_default_str();
  cmd->add_option("--fmin", flags->cfg.f_min, "Lower edge of the band partition in Hz")
      ->capture_default_str();
  cmd->add_option("--block", flags->cfg.block_size, "STFT block size in samples")
      ->capture_default_str();
  cmd->add_option("--hop", flags->cfg.hop, "STFT hop size in samples")->capture_default_str();
  cmd->add_flag("--any-rate", flags->cfg.allow_any_rate,
                "Accept sample rates other than 48 kHz");
  cmd->add_option("--jobs", flags->cfg.jobs, "Worker threads")->capture_default_str();
}

int parse_int_strict(const std::string& text, const std::string& what) {
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(text, &consumed);
  } catch (const std::exception&) {
    throw dirloud::ConfigError("cannot parse " + what + " '" + text + "'");
  }
  if (consumed != text.size()) {
    throw dirloud::ConfigError("cannot parse " + what + " '" + text + "'");
  }
  return value;
}

dirloud::AnalysisConfig resolve_config(const AnalysisFlags& flags) {
  dirloud::AnalysisConfig cfg = flags.cfg;
  const std::size_t sep = flags.bands.find("..");
  if (sep == std::string::npos) {
    throw dirloud::ConfigError("band subset must have the form LO..HI, got '" + flags.bands +
                               "'");
  }
  cfg.band_lo = parse_int_strict(flags.bands.substr(0, sep), "band subset bound");
  cfg.band_hi = parse_int_strict(flags.bands.substr(sep + 2), "band subset bound");
  cfg.validate();
  return cfg;
}

// --- CSV helpers (RFC 4180 quoting, single-line records) ---

std::vector<std::string> parse_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string escaped = "\"";
  for (char c : value) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

// --- batch ---

struct ManifestItem {
  std::string id;
  std::string ref_path;
  std::string sut_path;
  std::vector<std::string> scores;
};

struct Manifest {
  std::vector<std::string> score_columns;
  std::vector<ManifestItem> items;
};

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw dirloud::FileIoError("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(file, line)) {
    throw dirloud::CorruptFileError(path.string() + ": missing header row");
  }
  const std::vector<std::string> header = parse_csv_record(strip_cr(line));

  int id_col = -1;
  int ref_col = -1;
  int sut_col = -1;
  std::vector<int> score_cols;
  Manifest manifest;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[static_cast<std::size_t>(i)] == "item_id") {
      id_col = i;
    } else if (header[static_cast<std::size_t>(i)] == "ref_path") {
      ref_col = i;
    } else if (header[static_cast<std::size_t>(i)] == "sut_path") {
      sut_col = i;
    } else {
      score_cols.push_back(i);
      manifest.score_columns.push_back(header[static_cast<std::size_t>(i)]);
    }
  }
  if (id_col < 0 || ref_col < 0 || sut_col < 0) {
    throw dirloud::CorruptFileError(path.string() +
                                    ": header must name item_id, ref_path and sut_path");
  }

  std::set<std::string> seen_ids;
  std::size_t line_number = 1;
  while (std::getline(file, line)) {
    ++line_number;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = parse_csv_record(line);
    if (fields.size() != header.size()) {
      throw dirloud::CorruptFileError(path.string() + ":" + std::to_string(line_number) +
                                      ": expected " + std::to_string(header.size()) +
                                      " fields, got " + std::to_string(fields.size()));
    }
    ManifestItem item;
    item.id = fields[static_cast<std::size_t>(id_col)];
    item.ref_path = fields[static_cast<std::size_t>(ref_col)];
    item.sut_path = fields[static_cast<std::size_t>(sut_col)];
    if (item.ref_path.empty() || item.sut_path.empty()) {
      throw dirloud::CorruptFileError(path.string() + ":" + std::to_string(line_number) +
                                      ": empty signal path");
    }
    if (!seen_ids.insert(item.id).second) {
      throw dirloud::CorruptFileError(path.string() + ": duplicate item_id '" + item.id + "'");
    }
    for (int col : score_cols) {
      item.scores.push_back(fields[static_cast<std::size_t>(col)]);
    }
    manifest.items.push_back(std::move(item));
  }
  return manifest;
}

struct ItemResult {
  bool ok = false;
  double dld = 0.0;
  std::size_t frames = 0;
  std::size_t directions = 0;
  std::string error;
  int exit_code = 0;
};

ItemResult process_item(const ManifestItem& item, const dirloud::AnalysisConfig& cfg) {
  ItemResult result;
  try {
    const dirloud::StereoBuffer ref =
        dirloud::load_stereo_wav(item.ref_path, cfg.allow_any_rate);
    const dirloud::StereoBuffer sut =
        dirloud::load_stereo_wav(item.sut_path, cfg.allow_any_rate);
    dirloud::AnalysisConfig item_cfg = cfg;
    item_cfg.jobs = 1;  // parallelism is over items here
    const dirloud::DldReport report = dirloud::compare_buffers(ref, sut, item_cfg);
    result.ok = true;
    result.dld = report.dld;
    result.frames = report.frames;
    result.directions = report.direction_count;
  } catch (const dirloud::Error& e) {
    result.error = e.what();
    result.exit_code = e.exit_code();
  } catch (const std::exception& e) {
    result.error = e.what();
    result.exit_code = kExitInternal;
  }
  return result;
}

bool parse_score(const std::string& text, double* value) {
  if (text.empty()) return false;
  std::size_t consumed = 0;
  try {
    *value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  return consumed == text.size();
}

void write_batch_report(std::ostream& out, const Manifest& manifest,
                        const std::vector<ItemResult>& results) {
  out << "item_id,dld,frames,directions";
  for (const std::string& column : manifest.score_columns) {
    out << ',' << csv_escape(column);
  }
  out << ",error\n";

  for (std::size_t i = 0; i < manifest.items.size(); ++i) {
    const ManifestItem& item = manifest.items[i];
    const ItemResult& result = results[i];
    out << csv_escape(item.id) << ',';
    if (result.ok) {
      out << dirloud::format_number(result.dld) << ',' << result.frames << ','
          << result.directions;
    } else {
      out << ",,";
    }
    for (const std::string& score : item.scores) {
      out << ',' << csv_escape(score);
    }
    out << ',' << csv_escape(result.error) << '\n';
  }

  // Correlation of dld against every score column that parses as numeric.
  for (std::size_t c = 0; c < manifest.score_columns.size(); ++c) {
    std::vector<double> dlds;
    std::vector<double> scores;
    for (std::size_t i = 0; i < manifest.items.size(); ++i) {
      double score = 0.0;
      if (results[i].ok && parse_score(manifest.items[i].scores[c], &score)) {
        dlds.push_back(results[i].dld);
        scores.push_back(score);
      }
    }
    out << "#pearson_r," << csv_escape(manifest.score_columns[c]) << ',';
    try {
      out << dirloud::format_number(dirloud::pearson(dlds, scores));
    } catch (const dirloud::DegenerateInputError&) {
      out << "n/a";
    }
    out << '\n';
  }
}

int run_batch(const std::filesystem::path& manifest_path, const std::string& out_path,
              const dirloud::AnalysisConfig& cfg, bool strict) {
  const Manifest manifest = read_manifest(manifest_path);
  std::vector<ItemResult> results(manifest.items.size());

  const int workers =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), manifest.items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < manifest.items.size(); ++i) {
      results[i] = process_item(manifest.items[i], cfg);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < manifest.items.size();) {
          results[i] = process_item(manifest.items[i], cfg);
        }
      });
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }

  if (strict) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].ok) {
        std::cerr << "error: item '" << manifest.items[i].id << "': " << results[i].error
                  << '\n';
        return results[i].exit_code;
      }
    }
  }

  if (out_path.empty()) {
    write_batch_report(std::cout, manifest, results);
  } else {
    std::ofstream file(out_path, std::ios::trunc);
    if (!file) {
      throw dirloud::FileIoError("cannot create " + out_path);
    }
    write_batch_report(file, manifest, results);
  }
  return 0;
}

// --- map / compare ---

int run_map(const std::string& input, const std::string& out_path, const std::string& pgm_path,
            const dirloud::AnalysisConfig& cfg) {
  const dirloud::StereoBuffer buf = dirloud::load_stereo_wav(input, cfg.allow_any_rate);
  const dirloud::DirectionalLoudnessMap map = dirloud::compute_loudness_map(buf, cfg);
  if (out_path.empty()) {
    dirloud::write_map_csv(std::cout, map);
  } else {
    dirloud::write_map_csv(std::filesystem::path(out_path), map);
  }
  if (!pgm_path.empty()) {
    dirloud::write_map_pgm(std::filesystem::path(pgm_path), map);
  }
  return 0;
}

int run_compare(const std::string& ref_path, const std::string& sut_path,
                const std::string& diff_csv, const std::string& diff_pgm,
                const dirloud::AnalysisConfig& cfg) {
  const dirloud::StereoBuffer ref = dirloud::load_stereo_wav(ref_path, cfg.allow_any_rate);
  const dirloud::StereoBuffer sut = dirloud::load_stereo_wav(sut_path, cfg.allow_any_rate);
  const dirloud::AlignedPair aligned = dirloud::align_pair(ref, sut);
  if (aligned.warning) {
    std::cerr << "warning: " << *aligned.warning << '\n';
  }
  const dirloud::DirectionalLoudnessMap map_ref =
      dirloud::compute_loudness_map(aligned.ref, cfg);
  const dirloud::DirectionalLoudnessMap map_sut =
      dirloud::compute_loudness_map(aligned.sut, cfg);
  const dirloud::DldReport report = dirloud::dld(map_ref, map_sut);
  std::cout << dirloud::report_to_json(report);

  if (!diff_csv.empty() || !diff_pgm.empty()) {
    const dirloud::DirectionalLoudnessMap diff = dirloud::map_difference(map_ref, map_sut);
    if (!diff_csv.empty()) {
      dirloud::write_map_csv(std::filesystem::path(diff_csv), diff);
    }
    if (!diff_pgm.empty()) {
      dirloud::write_map_pgm(std::filesystem::path(diff_pgm), diff);
    }
  }
  return 0;
}

// --- synth ---

struct SynthFlags {
  std::string out;
  std::string kind = "noise";
  double frequency = 440.0;
  double amplitude = 0.5;
  std::uint64_t seed = 1;
  double duration = 5.0;
  int sample_rate = 48000;
  double gain_left = 0.70710678118654752;
  double gain_right = 0.70710678118654752;
  double pan = -2.0;  // sentinel: unset
  double collapse_alpha = 0.0;
  std::vector<std::string> collapse_intervals;
  double crosstalk_beta = 0.0;
  dirloud::WavEncoding encoding = dirloud::WavEncoding::kFloat32;
};

int run_synth(const SynthFlags& flags) {
  dirloud::PanLaw law{flags.gain_left, flags.gain_right};
  if (flags.pan >= -1.0) {
    law = dirloud::PanLaw::constant_power(flags.pan);
  }
  const dirloud::MonoSource source =
      flags.kind == "sine" ? dirloud::MonoSource::sine(flags.frequency, flags.amplitude)
                           : dirloud::MonoSource::white_noise(flags.seed, flags.amplitude);
  dirloud::StereoBuffer buf =
      dirloud::panned_source(source, law, flags.duration, flags.sample_rate);

  for (const std::string& interval : flags.collapse_intervals) {
    const std::size_t sep = interval.find(':');
    if (sep == std::string::npos) {
      throw dirloud::ConfigError("collapse interval must have the form T0:T1, got '" + interval +
                                 "'");
    }
    double t0 = 0.0;
    double t1 = 0.0;
    if (!parse_score(interval.substr(0, sep), &t0) ||
        !parse_score(interval.substr(sep + 1), &t1)) {
      throw dirloud::ConfigError("cannot parse collapse interval '" + interval + "'");
    }
    buf = dirloud::pan_collapse(buf, flags.collapse_alpha, t0, t1);
  }
  if (flags.crosstalk_beta > 0.0) {
    buf = dirloud::crosstalk(buf, flags.crosstalk_beta);
  }
  dirloud::write_stereo_wav(flags.out, buf, flags.encoding);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional loudness analysis for stereo audio"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file");

  AnalysisFlags map_flags;
  std::string map_input;
  std::string map_out;
  std::string map_pgm;
  CLI::App* map_cmd = app.add_subcommand("map", "Directional loudness map of one signal");
  map_cmd->add_option("input", map_input, "Stereo WAV file")->required();
  map_cmd->add_option("--out", map_out, "Map CSV path (stdout when omitted)");
  map_cmd->add_option("--pgm", map_pgm, "Also write an 8-bit PGM rendering");
  add_analysis_options(map_cmd, &map_flags);

  AnalysisFlags compare_flags;
  std::string compare_ref;
  std::string compare_sut;
  std::string compare_diff_csv;
  std::string compare_diff_pgm;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Distortion score for a REF/SUT pair");
  compare_cmd->add_option("ref", compare_ref, "Reference WAV file")->required();
  compare_cmd->add_option("sut", compare_sut, "Signal under test WAV file")->required();
  compare_cmd->add_option("--diff-csv", compare_diff_csv, "Write the |REF-SUT| map as CSV");
  compare_cmd->add_option("--diff-pgm", compare_diff_pgm, "Write the |REF-SUT| map as PGM");
  add_analysis_options(compare_cmd, &compare_flags);

  AnalysisFlags batch_flags;
  std::string batch_manifest;
  std::string batch_out;
  bool batch_strict = false;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Process a CSV manifest of REF/SUT pairs");
  batch_cmd->add_option("manifest", batch_manifest, "Manifest CSV with header row")->required();
  batch_cmd->add_option("--out", batch_out, "Report CSV path (stdout when omitted)");
  batch_cmd->add_flag("--strict", batch_strict, "Abort on the first failing item");
  add_analysis_options(batch_cmd, &batch_flags);

  SynthFlags synth_flags;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate deterministic test signals");
  synth_cmd->add_option("--out", synth_flags.out, "Output WAV path")->required();
  synth_cmd->add_option("--kind", synth_flags.kind, "Source type")
      ->check(CLI::IsMember({"sine", "noise"}))
      ->capture_default_str();
  synth_cmd->add_option("--freq", synth_flags.frequency, "Sine frequency in Hz")
      ->capture_default_str();
  synth_cmd->add_option("--amp", synth_flags.amplitude, "Source amplitude")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_flags.seed, "Noise seed")->capture_default_str();
  synth_cmd->add_option("--duration", synth_flags.duration, "Duration in seconds")
      ->capture_default_str();
  synth_cmd->add_option("--rate", synth_flags.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  synth_cmd->add_option("--gain-left", synth_flags.gain_left, "Left pan gain")
      ->capture_default_str();
  synth_cmd->add_option("--gain-right", synth_flags.gain_right, "Right pan gain")
      ->capture_default_str();
  synth_cmd->add_option("--pan", synth_flags.pan,
                        "Constant-power pan position in [-1, 1]; overrides the gain pair");
  synth_cmd->add_option("--collapse-alpha", synth_flags.collapse_alpha,
                        "Pan collapse severity in [0, 1]")
      ->capture_default_str();
  synth_cmd->add_option("--collapse", synth_flags.collapse_intervals,
                        "Collapse interval T0:T1 in seconds (repeatable)");
  synth_cmd->add_option("--crosstalk", synth_flags.crosstalk_beta,
                        "Channel crosstalk leakage in [0, 1]")
      ->capture_default_str();
  const std::map<std::string, dirloud::WavEncoding> encodings{
      {"pcm16", dirloud::WavEncoding::kPcm16},
      {"pcm24", dirloud::WavEncoding::kPcm24},
      {"pcm32", dirloud::WavEncoding::kPcm32},
      {"float32", dirloud::WavEncoding::kFloat32},
  };
  synth_cmd->add_option("--encoding", synth_flags.encoding, "Sample encoding")
      ->transform(CLI::CheckedTransformer(encodings, CLI::ignore_case))
      ->default_str("float32");

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
    return kExitUsage;
  }

  try {
    if (*map_cmd) {
      return run_map(map_input, map_out, map_pgm, resolve_config(map_flags));
    }
    if (*compare_cmd) {
      return run_compare(compare_ref, compare_sut, compare_diff_csv, compare_diff_pgm,
                         resolve_config(compare_flags));
    }
    if (*batch_cmd) {
      return run_batch(batch_manifest, batch_out, resolve_config(batch_flags), batch_strict);
    }
    if (*synth_cmd) {
      return run_synth(synth_flags);
    }
  } catch (const dirloud::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
