#include "workbench/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "rspec/correlation.hpp"
#include "rspec/duality.hpp"
#include "rspec/errors.hpp"
#include "rspec/parallel.hpp"
#include "rspec/primes.hpp"
#include "rspec/sector.hpp"
#include "rspec/zero_table.hpp"
#include "workbench/csv.hpp"
#include "workbench/manifest.hpp"
#include "workbench/reports.hpp"
#include "workbench/reproduce.hpp"
#include "workbench/svg.hpp"

namespace rspec::workbench {

namespace {

struct Globals {
  std::string zeros_file;
  std::size_t limit = 0;  // 0: whole file
  std::string out;
  std::string svg;
  unsigned threads = 0;
};

class Context {
 public:
  Context(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  unsigned threads() const { return g_.threads; }
  bool has_out() const { return !g_.out.empty(); }

  std::string zeros_path() const {
    if (!g_.zeros_file.empty()) return g_.zeros_file;
    if (const char* env = std::getenv("RSPEC_ZEROS_FILE"); env != nullptr && *env != '\0') return env;
    return RSPEC_DEFAULT_ZEROS;
  }

  const ZeroTable& zeros() {
    if (!zeros_) {
      std::optional<std::size_t> limit;
      if (g_.limit > 0) limit = g_.limit;
      zeros_ = ZeroTable::load(zeros_path(), limit);
    }
    return *zeros_;
  }

  /// First n ordinates of the loaded table.
  ZeroTable first_zeros(std::size_t n) {
    const auto& z = zeros();
    if (n > z.size()) {
      throw DomainError(fmt::format("requested {} zeros but {} holds only {}", n,
                                    z.source_label(), z.size()));
    }
    return z.prefix(n);
  }

  RunManifest& manifest() { return manifest_; }

  void emit_csv(const std::string& csv) {
    if (has_out()) {
      write_artifact(g_.out, csv, manifest_);
    } else {
      out_ << csv;
    }
  }

  void emit_svg(const std::function<std::string()>& render) {
    if (!g_.svg.empty()) write_artifact(g_.svg, render(), manifest_);
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<ZeroTable> zeros_;
  RunManifest manifest_;
};

using Handler = std::function<void(Context&)>;

std::string joined_results(const CLI::Option& opt) {
  std::string s;
  for (const auto& r : opt.results()) {
    if (!s.empty()) s += ',';
    s += r;
  }
  return s;
}

// Every option of the leaf subcommand and its parents, defaults included.
void record_parameters(const CLI::App* app, RunManifest& m) {
  for (; app != nullptr; app = app->get_parent()) {
    for (const CLI::Option* opt : app->get_options()) {
      if (opt == app->get_help_ptr() || opt == app->get_help_all_ptr()) continue;
      const std::string key = opt->get_single_name();
      if (key.empty() || m.parameters.count(key)) continue;
      m.set(key, opt->count() > 0 ? joined_results(*opt) : opt->get_default_str());
    }
  }
}

std::string leaf_path(const CLI::App* app) {
  std::string s;
  for (; app != nullptr && app->get_parent() != nullptr; app = app->get_parent()) {
    s = s.empty() ? app->get_name() : app->get_name() + " " + s;
  }
  return s;
}

svg::Series row_series(const std::vector<RowEntry>& row, const std::string& label) {
  svg::Series s{label, {}, {}};
  for (const auto& e : row) {
    s.x.push_back(static_cast<double>(e.q));
    s.y.push_back(e.c);
  }
  return s;
}

svg::Series duality_series(const DualitySeries& d, const std::string& label) {
  svg::Series s{label, {}, {}};
  for (std::size_t k = 0; k < d.size(); ++k) {
    s.x.push_back(d.abscissa(k));
    s.y.push_back(d.values[k]);
  }
  return s;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text, std::string_view what) {
  std::vector<std::uint64_t> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError(fmt::format("{}: '{}' is not a non-negative integer", what, tok));
    }
    v.push_back(x);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

IntMatrix2 parse_matrix(const std::string& text) {
  std::array<std::int64_t, 4> e{};
  std::size_t pos = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto comma = text.find(',', pos);
    if ((k < 3) == (comma == std::string::npos)) {
      throw DomainError("--matrix expects four comma-separated integers m11,m12,m21,m22");
    }
    const auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e[k]);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError(fmt::format("--matrix: '{}' is not an integer", tok));
    }
    pos = comma + 1;
  }
  return IntMatrix2{{{e[0], e[1]}, {e[2], e[3]}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical workbench for the spectrum of zeta-zero ordinates", "rspec"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  Globals g;
  app.add_option("--zeros-file", g.zeros_file,
                 "Zero table, one ordinate per line (default: $RSPEC_ZEROS_FILE, then the bundled "
                 "1000-zero fixture)");
  app.add_option("--limit", g.limit, "Keep only the first N ordinates of the table (0: all)");
  app.add_option("--out", g.out, "Write CSV here (with a .manifest.json beside it) instead of stdout");
  app.add_option("--svg", g.svg, "Also write an SVG chart here");
  app.add_option("--threads", g.threads, "Worker cap (0: hardware concurrency)");

  std::map<const CLI::App*, Handler> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // zeros -------------------------------------------------------------------
  // Option storage lives at function scope: handlers run after parsing.
  std::vector<double> heights;
  CLI::App* zeros = leaf(&app, "zeros", "Inspect the zero table");
  zeros->require_subcommand(1);
  {
    CLI::App* info = leaf(zeros, "info", "Count, first and last ordinate");
    handlers[info] = [&](Context& ctx) {
      const auto& z = ctx.zeros();
      ctx.out() << fmt::format("source {}\ncount {}\nfirst {:.9f}\nlast {:.9f}\n", z.source_label(),
                               z.size(), z.front(), z.back());
    };

    CLI::App* count = leaf(zeros, "count", "Empirical N(T) against the main-term estimate");
    count->add_option("--t", heights, "Heights T (repeatable or comma-separated)")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    handlers[count] = [&](Context& ctx) {
      const auto& z = ctx.zeros();
      CsvTable t({"T", "count", "estimate", "difference", "bound_2logT"});
      for (double T : heights) {
        const auto n = z.count_below(T);
        const double est = riemann_von_mangoldt_estimate(T);
        t.row().cell(T).cell(std::uint64_t{n}).cell(est).cell(static_cast<double>(n) - est).cell(
            2 * std::log(T));
      }
      ctx.manifest().zeros_used = z.size();
      ctx.emit_csv(t.str());
    };
  }

  // sector ------------------------------------------------------------------
  CLI::App* sector = leaf(&app, "sector", "Reduced p-sector distributions");
  sector->require_subcommand(1);
  std::uint64_t s_p = 0, s_p1 = 0, s_p2 = 0;
  unsigned s_compression = 1;
  std::size_t s_bins = 100, s_bibins = 50, s_zeros = 1000, s_bizeros = 1000;
  std::string s_matrix = "1,1,1,-1";
  {
    CLI::App* hist = leaf(sector, "hist", "Histogram of frac(t log p / (2 pi q_c))");
    hist->add_option("--p", s_p, "Prime")->required()->check(CLI::PositiveNumber);
    hist->add_option("--compression", s_compression, "Compression factor q_c")->check(CLI::PositiveNumber);
    hist->add_option("--bins", s_bins, "Bin count")->check(CLI::PositiveNumber);
    hist->add_option("--zeros", s_zeros, "Number of ordinates N")->check(CLI::PositiveNumber);
    handlers[hist] = [&](Context& ctx) {
      const auto z = ctx.first_zeros(s_zeros);
      const auto sample = sector_sample(z, s_p, s_compression);
      const auto h = histogram(sample.reduced, s_bins);
      ctx.manifest().zeros_used = z.size();
      ctx.emit_csv(histogram_csv(h));
      ctx.emit_svg([&] {
        return svg::bar_chart(fmt::format("{}-sector, compression {}, N={}", s_p, s_compression, z.size()),
                              h.counts);
      });
    };

    CLI::App* bihist = leaf(sector, "bihist", "Joint distribution of two sectors under a matrix");
    bihist->add_option("--p1", s_p1, "First prime")->required()->check(CLI::PositiveNumber);
    bihist->add_option("--p2", s_p2, "Second prime")->required()->check(CLI::PositiveNumber);
    bihist->add_option("--matrix", s_matrix, "Integer matrix m11,m12,m21,m22");
    bihist->add_option("--bins", s_bibins, "Bins per axis")->check(CLI::PositiveNumber);
    bihist->add_option("--zeros", s_bizeros, "Number of ordinates N")->check(CLI::PositiveNumber);
    handlers[bihist] = [&](Context& ctx) {
      const auto m = parse_matrix(s_matrix);
      const auto z = ctx.first_zeros(s_bizeros);
      const auto b = bi_distribution(z, s_p1, s_p2, m, s_bibins);
      ctx.manifest().zeros_used = z.size();
      ctx.emit_csv(bi_distribution_csv(b));
      ctx.emit_svg([&] {
        return svg::heat_map(fmt::format("bi-distribution p1={} p2={} M=[{}]", s_p1, s_p2, s_matrix),
                             b.grid, b.bins);
      });
    };
  }

  // corr / resonance --------------------------------------------------------
  std::uint64_t c_p = 0;
  std::size_t c_primes = 100, c_zeros = 1000;
  std::string c_mode = "raw";
  std::uint64_t r_floor = 50;
  double r_z = 3.0;
  std::size_t r_top = 10;
  auto corr_config = [&] {
    CorrelationConfig config;
    config.mode = parse_correlation_mode(c_mode);
    config.zero_count = c_zeros;
    config.small_prime_floor = r_floor;
    config.resonance_z = r_z;
    config.validate();
    return config;
  };
  auto add_corr_options = [&](CLI::App* sub, bool with_p) {
    if (with_p) sub->add_option("--p", c_p, "Base prime")->required()->check(CLI::PositiveNumber);
    sub->add_option("--primes", c_primes, "Use the first K primes")->check(CLI::PositiveNumber);
    sub->add_option("--zeros", c_zeros, "Number of ordinates N")->check(CLI::Range(2ul, 1ul << 40));
    sub->add_option("--mode", c_mode, "raw or centered")->check(CLI::IsMember({"raw", "centered"}));
  };

  CLI::App* corr = leaf(&app, "corr", "Sector correlations c(X_p, X_q)");
  corr->require_subcommand(1);
  {
    CLI::App* row = leaf(corr, "row", "One row: p against the first K primes");
    add_corr_options(row, true);
    handlers[row] = [&](Context& ctx) {
      const auto config = corr_config();
      const auto z = ctx.first_zeros(config.zero_count);
      const auto qs = first_primes(c_primes);
      const auto r = correlation_row(z, c_p, qs, config, ctx.threads());
      ctx.manifest().zeros_used = z.size();
      ctx.emit_csv(row_csv(r));
      ctx.emit_svg([&] {
        return svg::line_chart(fmt::format("X_{} correlations ({}), N={}", c_p, c_mode, z.size()),
                               {row_series(r, c_mode)});
      });
    };

    CLI::App* matrix = leaf(corr, "matrix", "Symmetric matrix over the first K primes");
    add_corr_options(matrix, false);
    handlers[matrix] = [&](Context& ctx) {
      const auto config = corr_config();
      const auto z = ctx.first_zeros(config.zero_count);
      const auto ps = first_primes(c_primes);
      const auto m = correlation_matrix(z, ps, config, ctx.threads());
      ctx.manifest().zeros_used = z.size();
      ctx.emit_csv(matrix_csv(m));
      ctx.emit_svg([&] {
        // Heat map of c scaled to permille.
        std::vector<std::uint64_t> cells(m.entries.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
          cells[i] = static_cast<std::uint64_t>(std::lround(1000.0 * m.entries[i]));
        }
        return svg::heat_map(fmt::format("correlation matrix ({}), N={}", c_mode, z.size()), cells,
                             m.size());
      });
    };
  }

  CLI::App* resonance = leaf(&app, "resonance", "Rank a correlation row and flag outliers");
  add_corr_options(resonance, true);
  resonance->add_option("--floor", r_floor, "Baseline uses q above this bound");
  resonance->add_option("--z", r_z, "z-score threshold")->check(CLI::PositiveNumber);
  resonance->add_option("--top", r_top, "Rows listed in the summary");
  handlers[resonance] = [&](Context& ctx) {
    const auto config = corr_config();
    const auto z = ctx.first_zeros(config.zero_count);
    const auto qs = first_primes(c_primes);
    const auto r = correlation_row(z, c_p, qs, config, ctx.threads());
    const auto report = detect_resonances(r, c_p, config);
    ctx.manifest().zeros_used = z.size();
    ctx.emit_csv(resonance_csv(report));
    // Keep stdout pure CSV when no --out is given.
    (ctx.has_out() ? ctx.out() : ctx.err()) << resonance_summary(report, r_top);
    ctx.emit_svg([&] {
      return svg::line_chart(fmt::format("X_{} correlations ({}), N={}", c_p, c_mode, z.size()),
                             {row_series(r, c_mode)});
    });
  };

  // poset / euclid ----------------------------------------------------------
  std::uint64_t t_p = 0;
  CLI::App* poset = leaf(&app, "poset", "The divisibility order q << p iff q | p-1");
  poset->require_subcommand(1);
  {
    CLI::App* tree = leaf(poset, "tree", "Pratt tree of p as indented text and CSV edges");
    tree->add_option("--p", t_p, "Prime")->required();
    handlers[tree] = [&](Context& ctx) {
      const auto t = pratt_tree(t_p);
      ctx.out() << pratt_text(t);
      if (!ctx.has_out()) ctx.out() << '\n';
      ctx.emit_csv(pratt_csv(t));
    };

    CLI::App* preds = leaf(poset, "preds", "Immediate predecessors of p");
    preds->add_option("--p", t_p, "Prime")->required();
    handlers[preds] = [&](Context& ctx) {
      const auto q = poset_predecessors(t_p);
      ctx.out() << fmt::format("{}-1 = {}\npredecessors {}\n", t_p,
                               format_factorization(factorize(t_p - 1)), fmt::join(q, ","));
    };
  }

  std::string e_factors;
  CLI::App* euclid = leaf(&app, "euclid", "Candidate 2*q1*...*qr + 1 and its primality");
  euclid->add_option("--factors", e_factors, "Distinct odd primes q1,q2,...")->required();
  handlers[euclid] = [&](Context& ctx) {
    const auto f = parse_uint_list(e_factors, "--factors");
    const auto c = euclid_generate(f);
    ctx.out() << fmt::format("{} prime={}\n", c.candidate, c.is_prime ? "true" : "false");
  };

  // duality -----------------------------------------------------------------
  std::size_t d_count = 1000;
  double d_xmin = 1.5, d_xmax = 10.5, d_step = 0.001;
  std::uint64_t d_X = 10000;
  double d_tmin = 10.0, d_tmax = 50.0, d_tstep = 0.005;
  bool d_peaks = false;
  double d_prominence = 0.0;
  auto emit_series = [&](Context& ctx, const DualitySeries& s, const std::string& label) {
    std::string csv = series_csv(s);
    if (d_peaks) csv += "\n" + peaks_csv(find_peaks(s, d_prominence));
    ctx.emit_csv(csv);
    ctx.emit_svg([&] { return svg::line_chart(label, {duality_series(s, label)}); });
  };

  CLI::App* duality = leaf(&app, "duality", "Explicit-formula sums in both directions");
  duality->require_subcommand(1);
  {
    CLI::App* z2p = leaf(duality, "zeros-to-primes", "-sum cos(t_n log x): peaks at prime powers");
    z2p->add_option("--count", d_count, "Zeros used C")->check(CLI::PositiveNumber);
    z2p->add_option("--xmin", d_xmin, "Grid start (> 1)");
    z2p->add_option("--xmax", d_xmax, "Grid end");
    z2p->add_option("--step", d_step, "Grid step")->check(CLI::PositiveNumber);
    z2p->add_flag("--peaks", d_peaks, "Append a peak table");
    z2p->add_option("--prominence", d_prominence, "Minimum peak prominence");
    handlers[z2p] = [&](Context& ctx) {
      const auto& z = ctx.zeros();
      const auto s = zeros_to_primes_series(z, d_count, d_xmin, d_xmax, d_step, ctx.threads());
      ctx.manifest().zeros_used = d_count;
      emit_series(ctx, s, fmt::format("zeros to primes, C={}", d_count));
    };

    CLI::App* p2z = leaf(duality, "primes-to-zeros", "-sum Lambda(n) n^-1/2 cos(t log n): peaks at ordinates");
    p2z->add_option("--xmax", d_X, "Prime-power bound X")->check(CLI::PositiveNumber);
    p2z->add_option("--tmin", d_tmin, "Grid start (> 0)");
    p2z->add_option("--tmax", d_tmax, "Grid end");
    p2z->add_option("--step", d_tstep, "Grid step")->check(CLI::PositiveNumber);
    p2z->add_flag("--peaks", d_peaks, "Append a peak table");
    p2z->add_option("--prominence", d_prominence, "Minimum peak prominence");
    handlers[p2z] = [&](Context& ctx) {
      const auto s = primes_to_zeros_series(d_X, d_tmin, d_tmax, d_tstep, ctx.threads());
      emit_series(ctx, s, fmt::format("primes to zeros, X={}", d_X));
    };
  }

  // reproduce ---------------------------------------------------------------
  std::string f_name;
  std::string f_dir = "reproduce_out";
  CLI::App* repro = leaf(&app, "reproduce", "Regenerate a reference figure (or all)");
  repro->add_option("figure", f_name, "fig3, fig4, fig5_bihist, fig5_corr19, fig6_corr29 or all")
      ->required();
  repro->add_option("--out-dir", f_dir, "Directory for CSV, SVG, notes and manifests");
  handlers[repro] = [&](Context& ctx) {
    std::vector<Figure> figures;
    if (f_name == "all") {
      figures.assign(std::begin(kAllFigures), std::end(kAllFigures));
    } else if (auto f = parse_figure(f_name)) {
      figures.push_back(*f);
    } else {
      throw DomainError(fmt::format("unknown figure '{}'", f_name));
    }
    for (auto f : figures) {
      const auto result = reproduce(f, ctx.zeros(), f_dir, ctx.threads());
      for (const auto& p : result.files) ctx.out() << "wrote " << p.generic_string() << '\n';
      ctx.out() << result.note;
    }
  };

  std::vector<const char*> argv{"rspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  }

  const CLI::App* chosen = &app;
  while (!chosen->get_subcommands().empty()) chosen = chosen->get_subcommands().front();
  const auto it = handlers.find(chosen);
  if (it == handlers.end()) {
    err << "usage error: incomplete command\n";
    return kExitUsage;
  }

  try {
    Context ctx(g, out, err);
    auto& m = ctx.manifest();
    m.subcommand = leaf_path(chosen);
    record_parameters(chosen, m);
    m.set("zeros-file", ctx.zeros_path());
    m.zeros_source = ctx.zeros_path();
    it->second(ctx);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace rspec::workbench
