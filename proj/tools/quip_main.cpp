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

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quip/bench.hpp"
#include "quip/metrics.hpp"
#include "quip/pipeline.hpp"

namespace {

// Exit codes: 2 flag/parse errors, 3 I/O, 4 domain errors, 5 qubit budget.
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitDomain = 4;
constexpr int kExitQubits = 5;

struct PhaseTimer {
  std::map<std::string, double>& sink;

  template <typename Fn>
  auto run(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      sink[phase] = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    } else {
      auto result = fn();
      sink[phase] = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      return result;
    }
  }
};

struct EncodeOptions {
  std::string input;
  std::string mapping = "frqi";
  double compress = 0.0;
  std::string out;
  std::string metrics;
  std::string alpha;
  std::string recon;
  std::string recon_alpha;
  unsigned max_qubits = 26;
};

quip::ImageBuffer load_input(const EncodeOptions& opt) {
  quip::ImageBuffer img = quip::load_pnm(opt.input);
  if (!opt.alpha.empty()) {
    const quip::ImageBuffer mask = quip::load_pnm(opt.alpha);
    img = quip::with_alpha(img, mask);
  }
  return img;
}

quip::Mapping parse_mapping(const std::string& name) {
  const auto mapping = quip::mapping_from_string(name);
  if (!mapping) throw CLI::ValidationError("--mapping", "unknown mapping '" + name + "'");
  return *mapping;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << text;
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

void fill_record(quip::MetricsRecord& record, const EncodeOptions& opt,
                 const quip::EncodeResult& enc) {
  record.input = opt.input;
  record.mapping = std::string(quip::to_string(enc.vectorized.spec.mapping));
  record.position_qubits = enc.vectorized.spec.position_qubits;
  record.color_qubits = enc.vectorized.spec.color_qubits;
  record.bit_depth = enc.vectorized.spec.bit_depth;
  record.original_pixels = enc.vectorized.spec.original_pixel_count;
  record.padded_pixels = enc.vectorized.spec.padded_pixel_count;
  record.compression_percent = enc.vectorized.spec.compression_percent;
  record.gates = quip::count_gates(enc.circuit);
  record.compression_planes = enc.plane_reports;
}

void emit_metrics(const EncodeOptions& opt, const quip::MetricsRecord& record) {
  const std::string text = quip::metrics_json(record);
  if (opt.metrics.empty()) {
    std::cout << text;
  } else {
    write_text(opt.metrics, text);
  }
}

int run_encode(const EncodeOptions& opt) {
  quip::MetricsRecord record;
  PhaseTimer timer{record.wall_ms};
  const auto img = timer.run("load", [&] { return load_input(opt); });
  const auto enc = timer.run("encode", [&] {
    return quip::encode_image(img, parse_mapping(opt.mapping), opt.compress);
  });
  fill_record(record, opt, enc);
  if (!opt.out.empty()) {
    timer.run("emit", [&] { write_text(opt.out, quip::qasm_string(enc.circuit)); });
  }
  emit_metrics(opt, record);
  return 0;
}

int run_roundtrip(const EncodeOptions& opt) {
  quip::MetricsRecord record;
  PhaseTimer timer{record.wall_ms};
  const auto img = timer.run("load", [&] { return load_input(opt); });
  const auto enc = timer.run("encode", [&] {
    return quip::encode_image(img, parse_mapping(opt.mapping), opt.compress);
  });
  const auto state = timer.run("simulate", [&] { return quip::simulate(enc.circuit, opt.max_qubits); });
  const auto target = timer.run("oracle", [&] { return quip::oracle_state(enc.vectorized, opt.max_qubits); });
  auto recon = timer.run("reconstruct", [&] {
    return quip::reconstruct(enc.vectorized.spec, state, &img);
  });
  const auto state_metrics = quip::compare(state, target);

  if (img.channels == 4) {
    auto [rgb, alpha] = quip::split_alpha(recon.image);
    quip::store_pnm(rgb, opt.recon);
    quip::store_pnm(alpha, opt.recon_alpha.empty() ? opt.recon + ".alpha.pgm" : opt.recon_alpha);
  } else {
    quip::store_pnm(recon.image, opt.recon);
  }

  fill_record(record, opt, enc);
  quip::QualityMetrics quality = recon.metrics;
  quality.fidelity = state_metrics.fidelity;
  quality.max_amp_error = state_metrics.max_amp_error;
  record.quality = quality;
  if (!opt.out.empty()) {
    timer.run("emit", [&] { write_text(opt.out, quip::qasm_string(enc.circuit)); });
  }
  emit_metrics(opt, record);
  return 0;
}

struct BenchOptions {
  unsigned min_n = 10;
  unsigned max_n = 20;
  unsigned reps = 3;
  std::uint64_t seed = 0x51D4B3C2A1ULL;
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  const auto rows = quip::run_transform_bench(opt.min_n, opt.max_n, opt.reps, opt.seed);
  for (const auto& row : rows) {
    if (row.skipped) {
      std::cerr << "note: n=" << row.exponent << " " << row.op << " skipped: " << row.note << "\n";
    }
  }
  const std::string csv = quip::bench_csv(rows);
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    write_text(opt.out, csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum image state-preparation toolkit"};
  app.require_subcommand(1);

  EncodeOptions enc_opt;
  CLI::App* encode = app.add_subcommand("encode", "synthesize a state-preparation circuit");
  encode->add_option("--input", enc_opt.input, "input PGM/PPM image")->required();
  encode->add_option("--mapping", enc_opt.mapping, "frqi|ifrqi|neqr|mcrqi|incqi")->required();
  encode->add_option("--compress", enc_opt.compress, "compression level percent (default 0)");
  encode->add_option("--out", enc_opt.out, "QASM output path (omit for dry-run counting)");
  encode->add_option("--metrics", enc_opt.metrics, "metrics JSON path (default stdout)");
  encode->add_option("--alpha", enc_opt.alpha, "PGM alpha mask (pairs a PPM into RGBA)");

  EncodeOptions rt_opt;
  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "encode, simulate, and reconstruct the image");
  roundtrip->add_option("--input", rt_opt.input, "input PGM/PPM image")->required();
  roundtrip->add_option("--mapping", rt_opt.mapping, "frqi|ifrqi|neqr|mcrqi|incqi")->required();
  roundtrip->add_option("--compress", rt_opt.compress, "compression level percent (default 0)");
  roundtrip->add_option("--out", rt_opt.out, "QASM output path");
  roundtrip->add_option("--metrics", rt_opt.metrics, "metrics JSON path (default stdout)");
  roundtrip->add_option("--alpha", rt_opt.alpha, "PGM alpha mask (pairs a PPM into RGBA)");
  roundtrip->add_option("--recon", rt_opt.recon, "reconstructed image output path")->required();
  roundtrip->add_option("--recon-alpha", rt_opt.recon_alpha,
                        "reconstructed alpha output path (RGBA only)");
  roundtrip->add_option("--max-qubits", rt_opt.max_qubits, "simulator qubit budget (default 26)");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "time the transforms across sizes");
  bench->add_option("--min-n", bench_opt.min_n, "smallest size exponent")->required();
  bench->add_option("--max-n", bench_opt.max_n, "largest size exponent")->required();
  bench->add_option("--reps", bench_opt.reps, "repetitions per size (default 3)");
  bench->add_option("--seed", bench_opt.seed, "rng seed for the input vectors");
  bench->add_option("--out", bench_opt.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (bench->parsed() && bench_opt.max_n < bench_opt.min_n) {
      throw CLI::ValidationError("--max-n", "must be >= --min-n");
    }
    if (encode->parsed()) return run_encode(enc_opt);
    if (roundtrip->parsed()) return run_roundtrip(rt_opt);
    return run_bench(bench_opt);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  } catch (const quip::qubit_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitQubits;
  } catch (const quip::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
