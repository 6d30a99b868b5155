#include "floerbox/cli.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "floerbox/cfa.hpp"
#include "floerbox/cfd.hpp"
#include "floerbox/cfk.hpp"
#include "floerbox/csc.hpp"
#include "floerbox/error.hpp"
#include "floerbox/homology.hpp"
#include "floerbox/invariants.hpp"
#include "floerbox/model_io.hpp"
#include "floerbox/selftest.hpp"
#include "floerbox/tensor.hpp"

namespace floerbox {

namespace {

constexpr int64_t kFramingLimit = 10000;

const char* pattern_name(Pattern p) {
  return p == Pattern::Cable21 ? "cable21" : "mazur";
}

TypeAStructure pattern_cfa(Pattern p) {
  return p == Pattern::Cable21 ? cable21_cfa_hat() : mazur_cfa_hat();
}

void check_framing(int64_t n) {
  if (n < -kFramingLimit || n > kFramingLimit)
    throw Error(ErrorCode::Usage,
                "framing must lie in [-10000, 10000], got " +
                    std::to_string(n));
}

HfkTable compute_table(const TypeAStructure& cfa, const CfkModel& model,
                       int64_t n) {
  return hfk_from_complex(box_tensor(cfa, build_cfd(model, n)));
}

size_t worker_count(size_t jobs) {
  size_t count = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("FLOERBOX_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1)
      count = static_cast<size_t>(parsed);
  }
  if (count < 1) count = 1;
  return jobs < count ? (jobs ? jobs : 1) : count;
}

int run_hfk(const RunConfig& config, std::ostream& out) {
  CfkModel model = load_model_file(config.model_path);
  HfkTable table = compute_table(pattern_cfa(config.pattern), model,
                                 config.n_min);
  if (config.output == OutputFormat::Json)
    out << hfk_json(table, pattern_name(config.pattern), config.n_min);
  else
    out << hfk_tsv(table);
  return 0;
}

int run_invariants(const RunConfig& config, std::ostream& out) {
  CfkModel model = load_model_file(config.model_path);
  Invariants inv = derive_invariants(
      compute_table(pattern_cfa(config.pattern), model, config.n_min));
  if (config.output == OutputFormat::Json)
    out << invariants_json(inv, pattern_name(config.pattern), config.n_min);
  else
    out << invariants_tsv(inv);
  return 0;
}

int run_csc(const RunConfig& config, std::ostream& out) {
  if (config.pattern != Pattern::Mazur)
    throw Error(ErrorCode::Usage,
                "surgery screening is defined for the mazur pattern only");
  CfkModel model = load_model_file(config.model_path);
  CscVerdict verdict =
      check_csc(model, config.n_min, config.tau_satellite, config.strict_tau);
  if (config.output == OutputFormat::Json)
    out << csc_json(verdict, config.n_min);
  else
    out << csc_tsv(verdict);
  return 0;
}

// Rows are computed by a worker pool over immutable shared data and streamed
// in framing order as soon as each row is ready.
int run_sweep(const RunConfig& config, std::ostream& out) {
  if (config.n_min > config.n_max)
    throw Error(ErrorCode::Usage, "sweep range is empty");
  CfkModel model = load_model_file(config.model_path);
  TypeAStructure cfa = pattern_cfa(config.pattern);
  const bool json = config.output == OutputFormat::Json;
  const int64_t lo = config.n_min;
  const size_t jobs = static_cast<size_t>(config.n_max - config.n_min) + 1;

  out << (json ? sweep_header_json(pattern_name(config.pattern))
               : sweep_header_tsv());
  out.flush();

  std::vector<std::optional<Invariants>> rows(jobs);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs || failed.load()) return;
      try {
        Invariants inv = derive_invariants(
            compute_table(cfa, model, lo + static_cast<int64_t>(i)));
        std::lock_guard<std::mutex> lock(mu);
        rows[i] = inv;
        ready.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        failed.store(true);
        ready.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(worker_count(jobs));
  for (size_t t = 0; t < worker_count(jobs); ++t) pool.emplace_back(work);

  {
    std::unique_lock<std::mutex> lock(mu);
    for (size_t i = 0; i < jobs; ++i) {
      ready.wait(lock, [&] { return rows[i].has_value() || failed.load(); });
      if (failed.load() && !rows[i].has_value()) break;
      int64_t n = lo + static_cast<int64_t>(i);
      out << (json ? sweep_row_json(n, *rows[i]) : sweep_row_tsv(n, *rows[i]));
      out.flush();
    }
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Selftest:
        return run_selftest(out) ? 0 : 1;
      case Command::Hfk:
        check_framing(config.n_min);
        return run_hfk(config, out);
      case Command::Invariants:
        check_framing(config.n_min);
        return run_invariants(config, out);
      case Command::Csc:
        check_framing(config.n_min);
        return run_csc(config, out);
      case Command::Sweep:
        check_framing(config.n_min);
        check_framing(config.n_max);
        return run_sweep(config, out);
    }
    return 1;
  } catch (const Error& e) {
    err << error_json(e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    err << error_json(ErrorCode::Structure, e.what());
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  std::string pattern = "mazur";
  std::string format = "tsv";
  int64_t n = 0;
  int64_t n_min = 0;
  int64_t n_max = 0;
  int64_t tau_satellite = 0;

  CLI::App app{
      "Knot Floer homology of satellite knots via bordered box tensor "
      "products"};
  app.require_subcommand(1);

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", config.model_path,
                    "Companion model JSON file")
        ->required();
  };
  auto add_pattern = [&](CLI::App* sub) {
    sub->add_option("--pattern", pattern, "Satellite pattern")
        ->check(CLI::IsMember({"mazur", "cable21"}))
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Framing of the satellite pattern")
        ->required();
  };

  CLI::App* hfk = app.add_subcommand(
      "hfk", "Rank table of the satellite knot Floer homology");
  add_model(hfk);
  add_pattern(hfk);
  add_format(hfk);
  add_n(hfk);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "Genus, fiberedness, thickness, and total rank");
  add_model(invariants);
  add_pattern(invariants);
  add_format(invariants);
  add_n(invariants);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Invariants for every framing in a range");
  add_model(sweep);
  add_pattern(sweep);
  add_format(sweep);
  sweep->add_option("--n-min", n_min, "Smallest framing")->required();
  sweep->add_option("--n-max", n_max, "Largest framing")->required();

  CLI::App* csc = app.add_subcommand(
      "csc", "Cosmetic surgery screening of the satellite");
  add_model(csc);
  add_pattern(csc);
  add_format(csc);
  add_n(csc);
  CLI::Option* tau_opt = csc->add_option(
      "--tau-satellite", tau_satellite,
      "Concordance invariant of the satellite, when known externally");
  csc->add_flag("--strict-tau", config.strict_tau,
                "Restrict the framing-zero exceptional families to the "
                "narrow concordance side-condition");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Golden-table regression suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (CLI::App* sub : {hfk, invariants, sweep, csc, selftest})
      if (sub->parsed()) {
        out << sub->help();
        return 0;
      }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json(ErrorCode::Usage, e.what());
    return 2;
  }

  if (app.got_subcommand(hfk)) {
    config.command = Command::Hfk;
    config.n_min = config.n_max = n;
  } else if (app.got_subcommand(invariants)) {
    config.command = Command::Invariants;
    config.n_min = config.n_max = n;
  } else if (app.got_subcommand(sweep)) {
    config.command = Command::Sweep;
    config.n_min = n_min;
    config.n_max = n_max;
  } else if (app.got_subcommand(csc)) {
    config.command = Command::Csc;
    config.n_min = config.n_max = n;
    if (tau_opt->count() > 0) config.tau_satellite = tau_satellite;
  } else if (app.got_subcommand(selftest)) {
    config.command = Command::Selftest;
  }
  config.pattern = pattern == "cable21" ? Pattern::Cable21 : Pattern::Mazur;
  config.output = format == "json" ? OutputFormat::Json : OutputFormat::Tsv;

  return run(config, out, err);
}

}  // namespace floerbox
