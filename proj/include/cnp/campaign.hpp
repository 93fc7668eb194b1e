#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnp/engine.hpp"
#include "cnp/sortnet.hpp"

namespace cnp {

// A campaign sweeps line counts, modes, and seeds over a shared base config.
struct CampaignSpec {
  std::vector<int> lines_list{4};
  std::vector<Mode> modes{Mode::pulsation};
  std::vector<std::uint64_t> seeds{1};
  RunConfig base;
  std::string out_dir = "runs";

  void validate() const {
    if (seeds.empty()) throw ConfigError("seed list must be non-empty");
    if (lines_list.empty()) throw ConfigError("line count list must be non-empty");
    if (modes.empty()) throw ConfigError("mode list must be non-empty");
    for (const int n : lines_list) {
      RunConfig cfg = base;
      cfg.lines = n;
      cfg.validate();
    }
  }
};

inline std::string run_id(Mode mode, int lines, std::uint64_t seed) {
  return std::string(to_string(mode)) + "-n" + std::to_string(lines) + "-seed" +
         std::to_string(seed);
}

struct RunOutcome {
  RunConfig config;
  std::string id;
  RunResult result;
};

inline double total_wall_ms(const RunResult& result) {
  double total = 0.0;
  for (const GenerationRecord& rec : result.records) total += rec.wall_ms;
  return total;
}

// One JSON object per generation with a fixed key order, then a summary line.
// Everything except the wall-time fields is deterministic for a given config.
inline void write_records(const RunResult& result, const RunConfig& config,
                          const std::string& id, std::ostream& sink) {
  for (const GenerationRecord& rec : result.records) {
    nlohmann::ordered_json line;
    line["run_id"] = id;
    line["seed"] = config.seed;
    line["mode"] = to_string(config.mode);
    line["gen"] = rec.generation;
    line["novelty_active"] = rec.novelty_active;
    line["best_m"] = rec.best.mistakes;
    line["best_l"] = rec.best.layers;
    line["best_c"] = rec.best.comparators;
    line["best_o1"] = rec.best_o1;
    line["mean_o1"] = rec.mean_o1;
    line["distinct_behaviors"] = rec.distinct_behaviors;
    line["wall_ms"] = rec.wall_ms;
    sink << line.dump() << '\n';
  }
  const GenerationRecord& last = result.records.back();
  nlohmann::ordered_json summary;
  summary["run_id"] = id;
  summary["seed"] = config.seed;
  summary["mode"] = to_string(config.mode);
  summary["summary"] = true;
  summary["generations"] = result.records.size() - 1;
  if (config.target_comparators >= 0) {
    summary["converged"] = result.converged();
    if (result.converged())
      summary["target_gen"] = result.target_generation;
    else
      summary["target_gen"] = nullptr;
  } else {
    summary["converged"] = nullptr;
    summary["target_gen"] = nullptr;
  }
  summary["best_m"] = last.best.mistakes;
  summary["best_l"] = last.best.layers;
  summary["best_c"] = last.best.comparators;
  summary["best_o1"] = last.best_o1;
  summary["wall_ms"] = total_wall_ms(result);
  sink << summary.dump() << '\n';
  if (!sink) throw std::runtime_error("write_records: sink write failed");
}

namespace detail {

inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace detail

// First generation at which a run met its target: the configured comparator
// target when one is set, plain validity (m = 0) otherwise. Empty if never.
inline std::optional<int> generations_to_target(const RunOutcome& outcome) {
  if (outcome.config.target_comparators >= 0) {
    if (outcome.result.converged()) return outcome.result.target_generation;
    return std::nullopt;
  }
  for (const GenerationRecord& rec : outcome.result.records)
    if (rec.best.mistakes == 0) return rec.generation;
  return std::nullopt;
}

struct ReportRow {
  int lines = 0;
  Mode mode = Mode::single;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  std::optional<double> median_generations;
  std::optional<double> mean_generations;
  double median_wall_ms = 0.0;
};

inline std::vector<ReportRow> build_report(const std::vector<RunOutcome>& outcomes) {
  std::vector<ReportRow> rows;
  for (const RunOutcome& outcome : outcomes) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ReportRow& r) {
      return r.lines == outcome.config.lines && r.mode == outcome.config.mode;
    });
    if (it == rows.end()) {
      ReportRow row;
      row.lines = outcome.config.lines;
      row.mode = outcome.config.mode;
      rows.push_back(row);
      it = rows.end() - 1;
    }
    ++it->runs;
  }
  for (ReportRow& row : rows) {
    std::vector<double> gens;
    std::vector<double> walls;
    for (const RunOutcome& outcome : outcomes) {
      if (outcome.config.lines != row.lines || outcome.config.mode != row.mode) continue;
      walls.push_back(total_wall_ms(outcome.result));
      if (const auto g = generations_to_target(outcome)) gens.push_back(static_cast<double>(*g));
    }
    row.successes = gens.size();
    row.success_rate = static_cast<double>(row.successes) / static_cast<double>(row.runs);
    if (!gens.empty()) {
      row.median_generations = detail::median(gens);
      row.mean_generations =
          std::accumulate(gens.begin(), gens.end(), 0.0) / static_cast<double>(gens.size());
    }
    row.median_wall_ms = detail::median(walls);
  }
  return rows;
}

inline std::string format_report_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "n" << std::setw(20) << "mode" << std::setw(7) << "runs"
      << std::setw(9) << "success" << std::setw(13) << "median_gens" << std::setw(11)
      << "mean_gens" << "median_wall_ms" << '\n';
  for (const ReportRow& row : rows) {
    out << std::left << std::setw(6) << row.lines << std::setw(20) << to_string(row.mode)
        << std::setw(7) << row.runs << std::setw(9) << std::fixed << std::setprecision(2)
        << row.success_rate;
    if (row.median_generations)
      out << std::setw(13) << std::setprecision(1) << *row.median_generations << std::setw(11)
          << std::setprecision(1) << *row.mean_generations;
    else
      out << std::setw(13) << "-" << std::setw(11) << "-";
    out << std::setprecision(1) << row.median_wall_ms << '\n';
    out.unsetf(std::ios::fixed);
  }
  return out.str();
}

inline std::string format_report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "lines,mode,runs,success_rate,median_generations,mean_generations,median_wall_ms\n";
  for (const ReportRow& row : rows) {
    out << row.lines << ',' << to_string(row.mode) << ',' << row.runs << ',' << row.success_rate
        << ',';
    if (row.median_generations)
      out << *row.median_generations << ',' << *row.mean_generations;
    else
      out << ',';
    out << ',' << row.median_wall_ms << '\n';
  }
  return out.str();
}

// Runs every (lines, mode, seed) cell, writing one JSONL log and the best
// network per run, plus the aggregate report in text and CSV form.
inline std::vector<RunOutcome> run_campaign(const CampaignSpec& spec) {
  spec.validate();
  std::filesystem::create_directories(spec.out_dir);
  std::vector<RunOutcome> outcomes;
  for (const int lines : spec.lines_list) {
    for (const Mode mode : spec.modes) {
      for (const std::uint64_t seed : spec.seeds) {
        RunConfig config = spec.base;
        config.lines = lines;
        config.mode = mode;
        config.seed = seed;
        const std::string id = run_id(mode, lines, seed);
        RunResult result = run(config);

        std::ostringstream log;
        write_records(result, config, id, log);
        const std::filesystem::path dir(spec.out_dir);
        detail::write_file_atomic(dir / (id + ".jsonl"), log.str());
        detail::write_file_atomic(dir / (id + ".best.txt"), export_network(result.best));
        outcomes.push_back({config, id, std::move(result)});
      }
    }
  }
  const std::vector<ReportRow> rows = build_report(outcomes);
  const std::filesystem::path dir(spec.out_dir);
  detail::write_file_atomic(dir / "report.txt", format_report_text(rows));
  detail::write_file_atomic(dir / "report.csv", format_report_csv(rows));
  return outcomes;
}

// `verify` subcommand body: evaluate a network file and report its counts.
inline EvalResult verify_network_file(const std::string& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("verify: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const Network net = parse_network(buffer.str());
  const EvalResult result = evaluate(net);
  out << "n=" << net.lines << " comparators=" << result.comparators
      << " layers=" << result.layers << " mistakes=" << result.mistakes
      << " valid=" << (result.mistakes == 0 ? "true" : "false") << '\n';
  return result;
}

}  // namespace cnp
