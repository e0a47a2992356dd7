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

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "dirloud/synth.h"
#include "dirloud/wav_io.h"
#include "testing_util.h"

using namespace dirloud;
namespace tt = dirloud::testing;

namespace {

std::string wav_path(const std::string& name, const StereoBuffer& buf,
                     WavEncoding encoding = WavEncoding::kFloat32) {
  const auto path = tt::scratch_dir() / name;
  write_stereo_wav(path, buf, encoding);
  return path.string();
}

std::string shell_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

TEST_CASE("map subcommand writes all-zero CSV for silence") {
  StereoBuffer silent;
  silent.sample_rate = 48000;
  silent.left.assign(48000, 0.0);
  silent.right.assign(48000, 0.0);
  const std::string input = wav_path("cli_silence.wav", silent);

  const tt::CliResult result = tt::run_cli("map " + shell_quote(input));
  REQUIRE(result.exit_code == 0);

  std::istringstream body(result.out);
  std::string line;
  REQUIRE(std::getline(body, line));  // header
  std::size_t rows = 0;
  while (std::getline(body, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      CHECK(std::stod(cell) == 0.0);
    }
  }
  CHECK(rows == 92);
}

TEST_CASE("map subcommand: hard-left noise peaks in the first column") {
  const StereoBuffer buf =
      panned_source(MonoSource::white_noise(40), PanLaw{1.0, 0.0}, 1.0, 48000);
  const std::string input = wav_path("cli_left.wav", buf);
  const auto out_csv = tt::scratch_dir() / "cli_left.csv";
  const auto out_pgm = tt::scratch_dir() / "cli_left.pgm";

  const tt::CliResult result = tt::run_cli("map " + shell_quote(input) + " --out " +
                                           shell_quote(out_csv.string()) + " --pgm " +
                                           shell_quote(out_pgm.string()));
  REQUIRE(result.exit_code == 0);

  std::ifstream csv(out_csv);
  std::string line;
  REQUIRE(std::getline(csv, line));
  while (std::getline(csv, line)) {
    std::istringstream cells(line);
    std::string cell;
    REQUIRE(std::getline(cells, cell, ','));
    const double first = std::stod(cell);
    while (std::getline(cells, cell, ',')) {
      CHECK(std::stod(cell) <= first);
    }
  }

  const std::string pgm = tt::read_text_file(out_pgm);
  CHECK(pgm.starts_with("P5\n92 22\n255\n"));
}

TEST_CASE("map subcommand errors") {
  SUBCASE("missing file: exit 3 with a diagnostic on stderr") {
    const tt::CliResult result = tt::run_cli("map /nonexistent/input.wav");
    CHECK(result.exit_code == 3);
    CHECK(!result.err.empty());
    CHECK(result.out.empty());
  }
  SUBCASE("unknown flag: exit 2") {
    const tt::CliResult result = tt::run_cli("map --nope in.wav");
    CHECK(result.exit_code == 2);
  }
  SUBCASE("bad band subset: exit 2") {
    const StereoBuffer buf =
        panned_source(MonoSource::white_noise(41), PanLaw{1.0, 1.0}, 0.1, 48000);
    const std::string input = wav_path("cli_bands.wav", buf);
    const tt::CliResult result = tt::run_cli("map " + shell_quote(input) + " --bands 7..25");
    CHECK(result.exit_code == 2);
  }
  SUBCASE("full-band mode via --bands 0..19") {
    const StereoBuffer buf =
        panned_source(MonoSource::white_noise(41), PanLaw{1.0, 1.0}, 0.1, 48000);
    const std::string input = wav_path("cli_fullband.wav", buf);
    const tt::CliResult result = tt::run_cli("map " + shell_quote(input) + " --bands 0..19");
    CHECK(result.exit_code == 0);
  }
}

TEST_CASE("compare subcommand reports zero for identical files") {
  const StereoBuffer buf =
      panned_source(MonoSource::white_noise(42), PanLaw{0.8, 0.6}, 0.5, 48000);
  const std::string input = wav_path("cli_pair.wav", buf);

  const tt::CliResult result = tt::run_cli("compare " + shell_quote(input) + " " + shell_quote(input));
  REQUIRE(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.out);
  CHECK(parsed.at("dld").get<double>() == 0.0);
  CHECK(parsed.at("directions").get<int>() == 22);
}

TEST_CASE("compare subcommand: collapse yields positive dld") {
  const StereoBuffer ref =
      panned_source(MonoSource::white_noise(43), PanLaw{1.0, 0.0}, 1.0, 48000);
  const StereoBuffer sut = pan_collapse(ref, 1.0, 0.0, 1.0);
  const std::string ref_path = wav_path("cli_ref.wav", ref);
  const std::string sut_path = wav_path("cli_sut.wav", sut);

  const tt::CliResult result = tt::run_cli("compare " + shell_quote(ref_path) + " " +
                                           shell_quote(sut_path));
  REQUIRE(result.exit_code == 0);
  CHECK(nlohmann::json::parse(result.out).at("dld").get<double>() > 0.0);
}

TEST_CASE("compare subcommand: mismatched rates exit 4") {
  const StereoBuffer a =
      panned_source(MonoSource::white_noise(44), PanLaw{1.0, 0.0}, 0.2, 48000);
  const StereoBuffer b =
      panned_source(MonoSource::white_noise(44), PanLaw{1.0, 0.0}, 0.2, 44100);
  const std::string a_path = wav_path("cli_48k.wav", a);
  const std::string b_path = wav_path("cli_44k.wav", b);

  const tt::CliResult result =
      tt::run_cli("compare " + shell_quote(a_path) + " " + shell_quote(b_path) + " --any-rate");
  CHECK(result.exit_code == 4);

  // Without --any-rate the 44.1 kHz file is itself rejected.
  const tt::CliResult strict = tt::run_cli("compare " + shell_quote(a_path) + " " + shell_quote(b_path));
  CHECK(strict.exit_code == 4);
}

TEST_CASE("synth subcommand round-trips through the loader") {
  const auto out = tt::scratch_dir() / "cli_synth.wav";
  const tt::CliResult result = tt::run_cli(
      "synth --out " + shell_quote(out.string()) +
      " --kind noise --seed 5 --duration 0.5 --pan -1 --collapse-alpha 0.5 --collapse 0.1:0.3");
  REQUIRE(result.exit_code == 0);

  const StereoBuffer buf = load_stereo_wav(out);
  CHECK(buf.frames() == 24000);
  CHECK(buf.sample_rate == 48000);
}

TEST_CASE("batch subcommand") {
  const StereoBuffer ref =
      panned_source(MonoSource::white_noise(45), PanLaw{1.0, 0.0}, 0.5, 48000);
  const std::string ref_path = wav_path("cli_batch_ref.wav", ref);

  SUBCASE("three identical pairs give three zero rows") {
    const auto manifest = tt::scratch_dir() / "batch_identity.csv";
    {
      std::ofstream m(manifest);
      m << "item_id,ref_path,sut_path\n";
      for (int i = 0; i < 3; ++i) {
        m << "item" << i << ',' << ref_path << ',' << ref_path << '\n';
      }
    }
    const tt::CliResult result = tt::run_cli("batch " + shell_quote(manifest.string()));
    REQUIRE(result.exit_code == 0);

    std::istringstream body(result.out);
    std::string line;
    REQUIRE(std::getline(body, line));
    CHECK(line == "item_id,dld,frames,directions,error");
    int rows = 0;
    while (std::getline(body, line) && !line.starts_with("#")) {
      ++rows;
      CHECK(line.find(",0,") != std::string::npos);
    }
    CHECK(rows == 3);
  }

  SUBCASE("score column equal to dld reports R = 1") {
    // Three degradations of increasing severity; scores are the dld values
    // reported by separate compare runs.
    std::vector<std::string> sut_paths;
    std::vector<double> dlds;
    for (double alpha : {0.25, 0.5, 1.0}) {
      const StereoBuffer sut = pan_collapse(ref, alpha, 0.0, 0.5);
      sut_paths.push_back(
          wav_path("cli_batch_sut" + std::to_string(sut_paths.size()) + ".wav", sut));
      const tt::CliResult compare =
          tt::run_cli("compare " + shell_quote(ref_path) + " " + shell_quote(sut_paths.back()));
      REQUIRE(compare.exit_code == 0);
      dlds.push_back(nlohmann::json::parse(compare.out).at("dld").get<double>());
    }

    const auto manifest = tt::scratch_dir() / "batch_scores.csv";
    {
      std::ofstream m(manifest);
      m.precision(17);  // round-trip the doubles exactly
      m << "item_id,ref_path,sut_path,score\n";
      for (std::size_t i = 0; i < sut_paths.size(); ++i) {
        m << "item" << i << ',' << ref_path << ',' << sut_paths[i] << ',' << dlds[i] << '\n';
      }
    }
    const tt::CliResult result = tt::run_cli("batch " + shell_quote(manifest.string()));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("#pearson_r,score,1\n") != std::string::npos);

    // Score columns are echoed into the report rows.
    std::istringstream body(result.out);
    std::string line;
    std::getline(body, line);
    CHECK(line == "item_id,dld,frames,directions,score,error");
    std::getline(body, line);
    CHECK(line.find("item0") == 0);
    CHECK(line.find("0.25") == std::string::npos);  // score holds dld, not alpha
  }

  SUBCASE("manifest without the required columns exits 3") {
    const auto manifest = tt::scratch_dir() / "batch_badheader.csv";
    std::ofstream(manifest) << "id,reference,test\nx,a.wav,b.wav\n";
    const tt::CliResult result = tt::run_cli("batch " + shell_quote(manifest.string()));
    CHECK(result.exit_code == 3);
    CHECK(!result.err.empty());
  }

  SUBCASE("unreadable file is fail-soft unless --strict") {
    const auto manifest = tt::scratch_dir() / "batch_failsoft.csv";
    {
      std::ofstream m(manifest);
      m << "item_id,ref_path,sut_path\n";
      m << "good1," << ref_path << ',' << ref_path << '\n';
      m << "bad,/nonexistent.wav," << ref_path << '\n';
      m << "good2," << ref_path << ',' << ref_path << '\n';
    }
    const tt::CliResult result = tt::run_cli("batch " + shell_quote(manifest.string()));
    REQUIRE(result.exit_code == 0);

    std::istringstream body(result.out);
    std::string line;
    std::getline(body, line);  // header
    int ok_rows = 0;
    int error_rows = 0;
    std::vector<std::string> ids;
    while (std::getline(body, line) && !line.starts_with("#")) {
      ids.push_back(line.substr(0, line.find(',')));
      if (line.find("cannot open") != std::string::npos) {
        ++error_rows;
      } else {
        ++ok_rows;
      }
    }
    CHECK(ok_rows == 2);
    CHECK(error_rows == 1);
    // Output rows keep the manifest order.
    CHECK(ids == std::vector<std::string>{"good1", "bad", "good2"});

    const tt::CliResult strict =
        tt::run_cli("batch " + shell_quote(manifest.string()) + " --strict");
    CHECK(strict.exit_code == 3);
  }

  SUBCASE("row order is independent of --jobs") {
    const auto manifest = tt::scratch_dir() / "batch_jobs.csv";
    {
      std::ofstream m(manifest);
      m << "item_id,ref_path,sut_path\n";
      for (int i = 0; i < 6; ++i) {
        m << "item" << i << ',' << ref_path << ',' << ref_path << '\n';
      }
    }
    const tt::CliResult serial = tt::run_cli("batch " + shell_quote(manifest.string()));
    const tt::CliResult parallel =
        tt::run_cli("batch " + shell_quote(manifest.string()) + " --jobs 4");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
  }
}

TEST_CASE("config file fills defaults, flags override the config file") {
  const StereoBuffer buf =
      panned_source(MonoSource::white_noise(47), PanLaw{1.0, 0.0}, 0.2, 48000);
  const std::string input = wav_path("cli_cfg.wav", buf);
  const auto config = tt::scratch_dir() / "dirloud.conf";
  std::ofstream(config) << "[map]\ndirections=10\n";

  const tt::CliResult from_config =
      tt::run_cli("--config " + shell_quote(config.string()) + " map " + shell_quote(input));
  REQUIRE(from_config.exit_code == 0);
  std::istringstream header(from_config.out.substr(0, from_config.out.find('\n')));
  std::size_t columns = 0;
  std::string cell;
  while (std::getline(header, cell, ',')) ++columns;
  CHECK(columns == 10);

  const tt::CliResult overridden = tt::run_cli("--config " + shell_quote(config.string()) +
                                               " map " + shell_quote(input) + " --directions 4");
  REQUIRE(overridden.exit_code == 0);
  CHECK(overridden.out.substr(0, overridden.out.find('\n')) ==
        "-1,-0.333333333333,0.333333333333,1");
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  const StereoBuffer buf =
      panned_source(MonoSource::white_noise(46), PanLaw{0.9, 0.3}, 0.5, 48000);
  const std::string input = wav_path("cli_det.wav", buf);

  const tt::CliResult first = tt::run_cli("map " + shell_quote(input));
  const tt::CliResult second = tt::run_cli("map " + shell_quote(input));
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const tt::CliResult c1 = tt::run_cli("compare " + shell_quote(input) + " " + shell_quote(input));
  const tt::CliResult c2 = tt::run_cli("compare " + shell_quote(input) + " " + shell_quote(input));
  CHECK(c1.out == c2.out);
}
