// Copyright 2026 The quip developers
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

#include <catch2/catch_amalgamated.hpp>

#include "quip/metrics.hpp"
#include "testutil.hpp"

TEST_CASE("metrics record round-trips through json") {
  quip::MetricsRecord record;
  record.input = "fixture.pgm";
  record.mapping = "frqi";
  record.position_qubits = 10;
  record.color_qubits = 1;
  record.bit_depth = 8;
  record.original_pixels = 784;
  record.padded_pixels = 1024;
  record.compression_percent = 30.0;
  record.gates = {717, 914, 10, 0, 0, 11};
  record.compression_planes.push_back({30.0, 1024, 717, 307, 110, 0.001234567890123});
  quip::QualityMetrics quality;
  quality.fidelity = 0.99887766554433221;
  quality.max_amp_error = 1.25e-13;
  quality.psnr_db = 41.75;
  quality.mse = 4.375;
  record.quality = quality;
  record.wall_ms["encode"] = 1.5;

  const nlohmann::json j = nlohmann::json::parse(quip::metrics_json(record));
  const auto back = j.get<quip::MetricsRecord>();
  CHECK(back.schema == 1);
  CHECK(back.input == record.input);
  CHECK(back.mapping == record.mapping);
  CHECK(back.gates == record.gates);
  CHECK(back.compression_planes == record.compression_planes);
  REQUIRE(back.quality.has_value());
  CHECK(back.quality->fidelity == quality.fidelity);
  CHECK(back.quality->max_amp_error == quality.max_amp_error);
  CHECK(back.quality->psnr_db == quality.psnr_db);
  CHECK(back.quality->mse == quality.mse);
  CHECK(back.wall_ms == record.wall_ms);
}

TEST_CASE("infinite psnr survives the json round trip") {
  quip::MetricsRecord record;
  quip::QualityMetrics quality;
  quality.psnr_db = std::numeric_limits<double>::infinity();
  quality.mse = 0.0;
  record.quality = quality;
  const nlohmann::json j = nlohmann::json::parse(quip::metrics_json(record));
  CHECK(j["quality"]["psnr_db"] == "inf");
  const auto back = j.get<quip::MetricsRecord>();
  REQUIRE(back.quality.has_value());
  CHECK(std::isinf(back.quality->psnr_db));
  CHECK(back.quality->psnr_db > 0);
}

TEST_CASE("absent quality and nan fields stay absent") {
  quip::MetricsRecord record;
  const nlohmann::json j = nlohmann::json::parse(quip::metrics_json(record));
  CHECK_FALSE(j.contains("quality"));

  quip::MetricsRecord partial;
  partial.quality = quip::QualityMetrics{};  // all NaN
  const nlohmann::json pj = nlohmann::json::parse(quip::metrics_json(partial));
  CHECK(pj["quality"].empty());
  const auto back = pj.get<quip::MetricsRecord>();
  CHECK(std::isnan(back.quality->fidelity));
}

TEST_CASE("schema field is versioned") {
  const nlohmann::json j = nlohmann::json::parse(quip::metrics_json({}));
  CHECK(j["schema"] == 1);
}
