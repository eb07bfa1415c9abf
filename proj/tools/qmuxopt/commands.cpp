// Copyright 2026 The qmuxopt Authors
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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmux/boolean_rm.hpp"
#include "qmux/cost.hpp"
#include "qmux/error.hpp"
#include "qmux/multiplexer.hpp"
#include "qmux/pla.hpp"
#include "qmux/polarity.hpp"
#include "qmux/qmux_format.hpp"
#include "qmux/search.hpp"
#include "qmux/testgen.hpp"

#ifndef QMUXOPT_VERSION
#define QMUXOPT_VERSION "0.0.0"
#endif

namespace qmux::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

json manifest_json(const RunManifest& m) {
  json doc;
  doc["command"] = m.command;
  doc["tool_version"] = tool_version();
  doc["inputs"] = m.inputs;
  json config = json::object();
  for (const auto& [k, v] : m.config) config[k] = v;
  doc["config"] = std::move(config);
  doc["seeds"] = m.seeds;
  if (m.wall_seconds) doc["wall_seconds"] = *m.wall_seconds;
  return doc;
}

// '#'-prefixed lines, shared by the text and CSV formats.
std::string manifest_comment(const RunManifest& m) {
  std::ostringstream os;
  os << "# qmuxopt " << tool_version() << " " << m.command << "\n";
  for (const auto& in : m.inputs) os << "# input: " << in << "\n";
  for (const auto& [k, v] : m.config) os << "# " << k << ": " << v << "\n";
  if (!m.seeds.empty()) {
    os << "# seeds:";
    for (auto s : m.seeds) os << " " << s;
    os << "\n";
  }
  if (m.wall_seconds) os << "# wall_seconds: " << fmt("%.6f", *m.wall_seconds) << "\n";
  return os.str();
}

void finish_manifest(RunManifest& m, const Common& c, Clock::time_point start) {
  if (c.timing) m.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: break;
  }
  return "text";
}

// Sends the finished report to --out or to `out`.
void emit(const Common& c, const std::string& body, std::ostream& out) {
  if (c.out_path.empty() || c.out_path == "-") {
    out << body;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + c.out_path + "'");
  file << body;
}

Multiplexer load_input(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  }
  return load_multiplexer(path);
}

Multiplexer load_polarized(const std::string& path) {
  const Multiplexer m = load_input(path);
  if (m.form() == Form::Standard) {
    throw Error(ErrorKind::FormMismatch, "'" + path + "' is not a polarized multiplexer");
  }
  return m;
}

int guarded(const std::string& input, std::ostream& err, const std::function<int()>& body) {
  const std::string where = input.empty() ? "" : input + ": ";
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << where << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << where << e.what() << "\n";
    return e.kind() == ErrorKind::SizeLimitExceeded ? kLimitExceeded : kParseError;
  } catch (const std::exception& e) {
    err << "error: " << where << e.what() << "\n";
    return kParseError;
  }
}

json targets_json(const Multiplexer& mux) {
  json arr = json::array();
  for (const auto& t : mux.targets()) arr.push_back(render_gate(t));
  return arr;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::string targets_line(const Multiplexer& mux) {
  std::string line;
  for (std::size_t i = 0; i < mux.size(); ++i) {
    if (i) line += ' ';
    line += render_gate(mux.target(i));
  }
  return line;
}

}  // namespace

std::string tool_version() { return QMUXOPT_VERSION; }

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorKind::InvalidArgument, "format must be text, json or csv, got '" + text + "'");
}

int cmd_optimize(const OptimizeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt.input, err, [&] {
    const auto start = Clock::now();
    const Multiplexer mux = load_input(opt.input);
    if (mux.form() != Form::Standard) {
      throw Error(ErrorKind::FormMismatch, "optimize expects a standard-form multiplexer, got " +
                                               form_label(mux));
    }
    SearchConfig cfg;
    cfg.family = parse_family(opt.family);
    cfg.mode = parse_search_mode(opt.mode);
    cfg.sample_count = opt.samples;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;

    SearchReport report = run_search(mux, cfg);
    const Multiplexer best = forward_transform(mux, report.best.polarity);
    const CostReport best_cost = multiplexer_cost(best);

    RunManifest manifest{"optimize", {opt.input}, {}, {}, std::nullopt};
    manifest.config = {{"family", std::string(quantum_name(cfg.family))},
                       {"mode", std::string(to_string(cfg.mode))},
                       {"format", std::string(format_name(opt.common.format))}};
    if (cfg.mode == SearchMode::Random) {
      manifest.config.emplace_back("samples", std::to_string(cfg.sample_count));
      manifest.seeds.push_back(cfg.seed);
    }
    if (!opt.common.timing) report.elapsed_seconds = 0;
    finish_manifest(manifest, opt.common, start);

    std::ostringstream os;
    switch (opt.common.format) {
      case Format::Json: {
        json doc;
        doc["manifest"] = manifest_json(manifest);
        doc["search"] = json::parse(report.to_json(opt.common.timing));
        doc["best_form"] = {{"form", form_label(best)}, {"targets", targets_json(best)}};
        doc["cost"] = json::parse(best_cost.to_json());
        os << doc.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << manifest_comment(manifest);
        os << SearchReport::csv_header() << ",best_polarity,family,mode\n";
        os << report.to_csv_row() << "," << report.best.polarity.digits() << ","
           << quantum_name(cfg.family) << "," << to_string(cfg.mode) << "\n";
        break;
      case Format::Text:
        os << manifest_comment(manifest);
        os << "best polarity: " << report.best.polarity.digits() << "\n";
        os << "best cost: " << report.best.cost << "\n";
        os << "original cost: " << report.original_cost << "\n";
        os << "worst polarity: " << report.worst.polarity.digits() << " (cost "
           << report.worst.cost << ")\n";
        os << "average cost: " << fmt("%.3f", report.average_cost) << "\n";
        os << "best reduction: " << fmt("%.2f", report.best_reduction_percent()) << "%\n";
        os << "average reduction: " << fmt("%.2f", report.average_reduction_percent()) << "%\n";
        os << "polarities evaluated: " << report.polarities_evaluated << "\n";
        if (opt.common.timing) {
          os << "search seconds: " << fmt("%.6f", report.elapsed_seconds) << "\n";
        }
        os << "form: " << form_label(best) << "\n";
        os << "targets: " << targets_line(best) << "\n";
        os << best_cost.to_table(best);
        break;
    }
    emit(opt.common, os.str(), out);
    return int{kOk};
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt.input, err, [&] {
    const auto start = Clock::now();
    const Multiplexer mux = load_input(opt.input);
    if (mux.form() != Form::Standard) {
      throw Error(ErrorKind::FormMismatch,
                  "verify expects a standard-form multiplexer, got " + form_label(mux));
    }
    Multiplexer candidate = mux;
    RunManifest manifest{"verify", {opt.input}, {}, {}, std::nullopt};
    if (!opt.against.empty()) {
      candidate = load_polarized(opt.against);
      manifest.inputs.push_back(opt.against);
      manifest.config.emplace_back("against", opt.against);
    } else {
      const Polarity p(opt.polarity);
      require_length(p, mux.controls());
      candidate = forward_transform(mux, p);
      manifest.config.emplace_back("polarity", p.digits());
    }
    if (candidate.controls() != mux.controls()) {
      throw Error(ErrorKind::PolarityLengthMismatch,
                  "candidate has " + std::to_string(candidate.controls()) + " controls, input has " +
                      std::to_string(mux.controls()));
    }
    const double deviation = max_semantic_deviation(mux, candidate);
    const bool pass = deviation < kEpsilon;
    finish_manifest(manifest, opt.common, start);

    std::ostringstream os;
    switch (opt.common.format) {
      case Format::Json: {
        json doc;
        doc["manifest"] = manifest_json(manifest);
        doc["form"] = form_label(candidate);
        doc["input_states"] = mux.size();
        doc["max_deviation"] = deviation;
        doc["tolerance"] = kEpsilon;
        doc["pass"] = pass;
        os << doc.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << manifest_comment(manifest);
        os << "form,input_states,max_deviation,pass\n";
        os << form_label(candidate) << "," << mux.size() << "," << fmt("%.3e", deviation) << ","
           << (pass ? "true" : "false") << "\n";
        break;
      case Format::Text:
        os << manifest_comment(manifest);
        os << "form: " << form_label(candidate) << "\n";
        os << "input states: " << mux.size() << "\n";
        os << "max deviation: " << fmt("%.3e", deviation) << "\n";
        os << (pass ? "PASS" : "FAIL") << "\n";
        break;
    }
    emit(opt.common, os.str(), out);
    return int{pass ? kOk : kVerifyFailed};
  });
}

int cmd_classical(const ClassicalOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt.input, err, [&] {
    const auto start = Clock::now();
    const Family family = parse_family(opt.family);
    if (opt.order != "cost" && opt.order != "polarity") {
      throw Error(ErrorKind::InvalidArgument, "order must be cost or polarity");
    }

    RunManifest manifest{"classical", {opt.input}, {}, {}, std::nullopt};
    manifest.config = {{"family", std::string(classical_name(family))},
                       {"order", opt.order},
                       {"format", std::string(format_name(opt.common.format))}};

    BoolFunc f(1);
    std::vector<std::string> warnings;
    if (std::filesystem::is_regular_file(opt.input)) {
      const PlaFile pla = load_pla(opt.input);
      warnings = pla.warnings;
      const PlaSemantics sem =
          opt.semantics.empty() ? semantics_for_type(pla.type) : semantics_for_type(opt.semantics);
      f = to_bool_func(pla, opt.output_index, sem);
      manifest.config.emplace_back("output_index", std::to_string(opt.output_index));
      manifest.config.emplace_back("semantics", sem == PlaSemantics::FR ? "fr" : "f");
    } else {
      f = BoolFunc::parse(opt.input);
    }

    std::vector<PolarityCost> rows = rm_search(f, family);
    const PolarityCost best = rows.front();
    if (opt.order == "polarity") {
      std::sort(rows.begin(), rows.end(),
                [](const PolarityCost& a, const PolarityCost& b) { return a.polarity < b.polarity; });
    }
    if (opt.top > 0 && opt.top < rows.size()) rows.resize(opt.top);
    const RMSpectrum spectrum = rm_transform(f, best.polarity);
    finish_manifest(manifest, opt.common, start);

    std::ostringstream os;
    if (opt.common.format == Format::Json) {
      json doc;
      doc["manifest"] = manifest_json(manifest);
      doc["function"] = f.to_string();
      doc["variables"] = f.num_vars();
      doc["family"] = classical_name(family);
      json table = json::array();
      for (const auto& r : rows) table.push_back({{"polarity", r.polarity.digits()}, {"cost", r.cost}});
      doc["polarities"] = std::move(table);
      json terms = json::array();
      for (std::uint64_t i = 0; i < spectrum.coefficients.size(); ++i) {
        if (spectrum.coefficients.get(i)) terms.push_back(map_coefficient(i, best.polarity).to_string());
      }
      doc["best"] = {{"polarity", best.polarity.digits()}, {"cost", best.cost}, {"terms", terms}};
      doc["warnings"] = warnings;
      os << doc.dump(2) << "\n";
    } else {
      // Text and CSV share one CSV-compatible layout; text adds the best expansion.
      os << manifest_comment(manifest);
      for (const auto& w : warnings) os << "# warning: " << w << "\n";
      if (opt.common.format == Format::Text) {
        os << "# best: " << best.polarity.digits() << " (" << best.cost << " literals):";
        bool any = false;
        for (std::uint64_t i = 0; i < spectrum.coefficients.size(); ++i) {
          if (!spectrum.coefficients.get(i)) continue;
          os << (any ? " ^ " : " ") << map_coefficient(i, best.polarity).to_string();
          any = true;
        }
        os << (any ? "\n" : " 0\n");
      }
      os << "polarity,cost\n";
      for (const auto& r : rows) os << r.polarity.digits() << "," << r.cost << "\n";
    }
    emit(opt.common, os.str(), out);
    return int{kOk};
  });
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded("", err, [&] {
    Multiplexer mux = Multiplexer::standard({gates::I(), gates::I()});
    std::vector<std::string> header;
    header.push_back("generated by qmuxopt " + tool_version());
    if (!opt.targets.empty()) {
      const GatePool list = parse_pool("custom:" + opt.targets);
      std::vector<Unitary2> targets;
      for (const auto& g : list.gates) targets.push_back(parse_gate(g));
      mux = Multiplexer::standard(std::move(targets));
      if (opt.controls != 0 && opt.controls != mux.controls()) {
        throw Error(ErrorKind::InvalidArgument,
                    std::to_string(list.gates.size()) + " targets do not match --controls " +
                        std::to_string(opt.controls));
      }
      header.push_back("targets: explicit list");
    } else {
      const GatePool pool = parse_pool(opt.pool);
      mux = generate(opt.controls, pool, opt.seed);
      header.push_back("pool: " + pool.name);
      header.push_back("seed: " + std::to_string(opt.seed));
    }
    const std::string body =
        opt.common.format == Format::Json ? write_qmux_json(mux) : write_qmux(mux, header);
    emit(opt.common, body, out);
    return int{kOk};
  });
}

int cmd_cost(const CostOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt.input, err, [&] {
    const auto start = Clock::now();
    const Multiplexer mux = load_input(opt.input);
    const CostReport report = multiplexer_cost(mux);
    RunManifest manifest{"cost", {opt.input}, {}, {}, std::nullopt};
    manifest.config = {{"format", std::string(format_name(opt.common.format))}};
    finish_manifest(manifest, opt.common, start);

    std::ostringstream os;
    switch (opt.common.format) {
      case Format::Json: {
        json doc;
        doc["manifest"] = manifest_json(manifest);
        doc["cost"] = json::parse(report.to_json());
        os << doc.dump(2) << "\n";
        break;
      }
      case Format::Csv:
        os << manifest_comment(manifest);
        os << "index,controls,gate,cost\n";
        for (const auto& g : report.per_gate) {
          os << g.index << "," << g.controls << "," << csv_field(render_gate(mux.target(g.index))) << ","
             << g.cost << "\n";
        }
        break;
      case Format::Text:
        os << manifest_comment(manifest);
        os << report.to_table(mux);
        break;
    }
    emit(opt.common, os.str(), out);
    return int{kOk};
  });
}

}  // namespace qmux::cli
