#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "mdsenum/edge_dom.hpp"
#include "mdsenum/flipping.hpp"
#include "mdsenum/gen_bipartite.hpp"
#include "mdsenum/gen_girth.hpp"
#include "mdsenum/gen_line.hpp"
#include "mdsenum/graph_io.hpp"
#include "mdsenum/mis.hpp"
#include "mdsenum/oracle.hpp"

namespace mdsenum::cli {

enum class Mode {
  mds_line,
  mds_bipartite_line,
  mds_girth7,
  eds,
  mis,
  oracle_mds,
  oracle_eds,
  oracle_mis,
};

inline constexpr std::pair<std::string_view, Mode> kModeNames[] = {
    {"mds-line", Mode::mds_line},     {"mds-bipartite-line", Mode::mds_bipartite_line},
    {"mds-girth7", Mode::mds_girth7}, {"eds", Mode::eds},
    {"mis", Mode::mis},               {"oracle-mds", Mode::oracle_mds},
    {"oracle-eds", Mode::oracle_eds}, {"oracle-mis", Mode::oracle_mis},
};

[[nodiscard]] inline std::optional<Mode> parse_mode(std::string_view name) {
  for (auto [text, mode] : kModeNames) {
    if (text == name) return mode;
  }
  return std::nullopt;
}

struct RunConfig {
  Mode mode = Mode::mds_line;
  std::optional<std::string> input;  // standard input when absent
  std::optional<std::size_t> limit;
  bool count_only = false;
  bool stats = false;
  bool force_general = false;
};

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUnsupported = 2,
  kInternalError = 3,
};

namespace detail {

// Prints results as they arrive and stops at the limit.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  [[nodiscard]] bool full() const {
    return config_.limit && count_ >= *config_.limit;
  }

  void emit(const std::string& line) {
    ++count_;
    auto now = Clock::now();
    double delay = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    max_delay_ms_ = std::max(max_delay_ms_, delay);
    total_delay_ms_ += delay;
    if (!config_.count_only) {
      out_ << line << '\n';
      out_.flush();
    }
  }

  void finish() {
    if (config_.count_only) out_ << count_ << '\n';
    out_.flush();
  }

  void reset_clock() { last_ = Clock::now(); }

  [[nodiscard]] std::size_t count() const { return count_; }
  [[nodiscard]] double max_delay_ms() const { return max_delay_ms_; }
  [[nodiscard]] double mean_delay_ms() const {
    return count_ == 0 ? 0.0 : total_delay_ms_ / static_cast<double>(count_);
  }

 private:
  using Clock = std::chrono::steady_clock;
  const RunConfig& config_;
  std::ostream& out_;
  std::size_t count_ = 0;
  Clock::time_point last_ = Clock::now();
  double max_delay_ms_ = 0.0;
  double total_delay_ms_ = 0.0;
};

inline void print_stats(std::ostream& err, const Sink& sink, const DelayStats* driver) {
  err << "emitted: " << sink.count() << '\n';
  if (driver != nullptr) {
    err << "max_delay_ms: " << driver->max_delay_ms << '\n'
        << "mean_delay_ms: " << driver->mean_delay_ms << '\n'
        << "ledger_size: " << driver->ledger_size << '\n'
        << "max_stack_depth: " << driver->max_stack_depth << '\n'
        << "generator_emissions: " << driver->generator_emissions << '\n'
        << "repeated_emissions: " << driver->repeated_emissions << '\n';
  } else {
    err << "max_delay_ms: " << sink.max_delay_ms() << '\n'
        << "mean_delay_ms: " << sink.mean_delay_ms() << '\n';
  }
}

template <ChildGenerator Gen>
void run_flipping(const Graph& g, const RunConfig& config, Sink& sink, std::ostream& err) {
  FlipEnumerator<Gen> e(g);
  sink.reset_clock();
  while (!sink.full()) {
    auto s = e.next();
    if (!s) break;
    sink.emit(to_string(*s));
  }
  sink.finish();
  if (config.stats) {
    DelayStats st = e.stats();
    print_stats(err, sink, &st);
  }
}

}  // namespace detail

// Runs one enumeration. Results go to `out` one per line in discovery order;
// diagnostics and statistics go to `err`. Guards (claw, diamond, girth) run
// before the clock starts.
inline int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.limit && *config.limit == 0) {
    err << "error: --limit must be at least 1\n";
    return kInputError;
  }
  try {
    Graph g;
    if (config.input) {
      g = read_edge_list_file(*config.input);
    } else {
      g = read_edge_list(in);
    }
    detail::Sink sink(config, out);

    switch (config.mode) {
      case Mode::mds_line:
        require_claw_free(g);
        detail::run_flipping<LineGenerator>(g, config, sink, err);
        break;
      case Mode::mds_bipartite_line:
        require_claw_free(g);
        require_diamond_free(g);
        detail::run_flipping<BipartiteGenerator>(g, config, sink, err);
        break;
      case Mode::mds_girth7:
        require_girth_at_least_7(g);
        detail::run_flipping<GirthGenerator>(g, config, sink, err);
        break;
      case Mode::eds: {
        EdgeDomEnumerator e(g, config.force_general);
        sink.reset_clock();
        while (!sink.full()) {
          auto a = e.next();
          if (!a) break;
          sink.emit(edges_to_string(*a));
        }
        sink.finish();
        if (config.stats) {
          DelayStats st = e.stats();
          detail::print_stats(err, sink, &st);
        }
        break;
      }
      case Mode::mis: {
        MisEnumerator e(g);
        sink.reset_clock();
        while (!sink.full()) {
          auto s = e.next();
          if (!s) break;
          sink.emit(to_string(*s));
        }
        sink.finish();
        if (config.stats) detail::print_stats(err, sink, nullptr);
        break;
      }
      case Mode::oracle_mds:
      case Mode::oracle_mis: {
        auto all = config.mode == Mode::oracle_mds ? oracle::brute_mds(g) : oracle::brute_mis(g);
        for (const auto& s : all) {
          if (sink.full()) break;
          sink.emit(to_string(s));
        }
        sink.finish();
        if (config.stats) detail::print_stats(err, sink, nullptr);
        break;
      }
      case Mode::oracle_eds: {
        for (const auto& a : oracle::brute_eds(g)) {
          if (sink.full()) break;
          sink.emit(edges_to_string(a));
        }
        sink.finish();
        if (config.stats) detail::print_stats(err, sink, nullptr);
        break;
      }
    }
    return kOk;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace mdsenum::cli
