#include "workbench/reproduce.hpp"

#include <fmt/format.h>

#include "rspec/errors.hpp"
#include "rspec/primes.hpp"
#include "rspec/sector.hpp"
#include "workbench/csv.hpp"
#include "workbench/manifest.hpp"
#include "workbench/reports.hpp"
#include "workbench/svg.hpp"

namespace rspec::workbench {

namespace {

struct TargetClaim {
  std::uint64_t q;
  std::string stated_q_minus_1;
};

// Resonance targets and the q-1 factorizations quoted alongside them.
const std::vector<TargetClaim>& targets_for(Figure f) {
  static const std::vector<TargetClaim> corr29{
      {317, "2^2*79"}, {379, "2*3^3*7"}, {463, "2*3*7*11"}};
  static const std::vector<TargetClaim> corr19{{389, "2*179"}};
  static const std::vector<TargetClaim> none;
  switch (f) {
    case Figure::fig6_corr29: return corr29;
    case Figure::fig5_corr19: return corr19;
    default: return none;
  }
}

RunManifest base_manifest(Figure f, const ZeroTable& zeros) {
  RunManifest m;
  m.subcommand = "reproduce";
  m.set("figure", std::string(to_string(f)));
  m.zeros_source = zeros.source_label();
  m.zeros_used = kRecipeZeros;
  return m;
}

class Writer {
 public:
  Writer(std::filesystem::path dir, ReproduceResult& result) : dir_(std::move(dir)), result_(result) {}

  void artifact(const std::string& name, const std::string& contents, const RunManifest& m) {
    const auto path = dir_ / name;
    write_artifact(path, contents, m);
    result_.files.push_back(path);
    result_.files.push_back(manifest_path_for(path));
  }

  void plain(const std::string& name, const std::string& contents) {
    const auto path = dir_ / name;
    write_file(path, contents);
    result_.files.push_back(path);
  }

 private:
  std::filesystem::path dir_;
  ReproduceResult& result_;
};

void sector_histogram(Figure f, std::uint64_t p, unsigned compression, const ZeroTable& zeros,
                      Writer& w, ReproduceResult& result) {
  constexpr std::size_t kBins = 100;
  const auto sample = sector_sample(zeros, p, compression);
  const auto h = histogram(sample.reduced, kBins);
  const double entropy = histogram_entropy(h);

  auto m = base_manifest(f, zeros);
  m.set("p", p);
  m.set("compression", std::uint64_t{compression});
  m.set("bins", std::uint64_t{kBins});
  m.set("reduction", fmt::format("frac(t*log(p)/(2*pi*{}))", compression));

  const std::string name(to_string(f));
  w.artifact(name + ".csv", histogram_csv(h), m);
  w.plain(name + ".svg",
          svg::bar_chart(fmt::format("{}-sector, compression {}, N={}", p, compression,
                                     zeros.size()),
                         h.counts));
  const auto [lo, hi] = std::minmax_element(h.counts.begin(), h.counts.end());
  result.note = fmt::format(
      "{}: p={} compression={} bins={} N={}\n"
      "reduction: frac(t*log(p)/(2*pi*{}))\n"
      "reference claim: the reduced {}-sector is visibly non-uniform{}\n"
      "observed: entropy {} nats vs uniform log({}) = {}; bin counts range {}..{} "
      "(uniform expectation {})\n",
      name, p, compression, kBins, zeros.size(), compression, p,
      compression > 1 ? ", with harmonics induced by the compression factor" : "",
      format_real(entropy), kBins, format_real(std::log(static_cast<double>(kBins))), *lo, *hi,
      format_real(static_cast<double>(zeros.size()) / kBins));
}

void bi_histogram(Figure f, const ZeroTable& zeros, Writer& w, ReproduceResult& result) {
  constexpr std::size_t kBins = 50;
  const IntMatrix2 m{{{1, 1}, {1, -1}}};
  const auto b = bi_distribution(zeros, 2, 3, m, kBins);

  auto man = base_manifest(f, zeros);
  man.set("p1", std::uint64_t{2});
  man.set("p2", std::uint64_t{3});
  man.set("matrix", "1,1,1,-1");
  man.set("bins", std::uint64_t{kBins});
  man.set("alpha1", b.alpha[0]);
  man.set("alpha2", b.alpha[1]);

  const std::string name(to_string(f));
  w.artifact(name + ".csv", bi_distribution_csv(b), man);
  w.plain(name + ".svg", svg::heat_map("bi-distribution p1=2 p2=3, M=[[1,1],[1,-1]]", b.grid, kBins));

  std::size_t occupied = 0;
  for (auto c : b.grid) occupied += c > 0 ? 1 : 0;
  result.note = fmt::format(
      "{}: p1=2 p2=3 M=[[1,1],[1,-1]] bins={}x{} N={}\n"
      "alpha = ({}, {})\n"
      "reference claim: lattice-like structure in the joint reduction\n"
      "observed: {} of {} cells occupied\n",
      name, kBins, kBins, zeros.size(), format_real(b.alpha[0]), format_real(b.alpha[1]), occupied,
      kBins * kBins);
}

std::string describe_target(const ResonanceReport& r, const TargetClaim& t) {
  const auto* row = r.find(t.q);
  if (row == nullptr) return fmt::format("    q={} not in row\n", t.q);
  const std::string actual = format_factorization(row->q_minus_1);
  return fmt::format("    q={} q-1={} (stated {}{}) rank={} c={} z={} resonant={} shared={}\n", t.q,
                     actual, t.stated_q_minus_1, actual == t.stated_q_minus_1 ? ", matches" : ", MISMATCH",
                     r.rank_of(t.q), format_real(row->c), format_real(row->z),
                     row->resonant ? "yes" : "no",
                     row->shared_predecessors.empty()
                         ? std::string("-")
                         : fmt::format("{}", fmt::join(row->shared_predecessors, ",")));
}

void correlation_figure(Figure f, std::uint64_t p, const ZeroTable& zeros, unsigned threads,
                        Writer& w, ReproduceResult& result) {
  const auto qs = first_primes(kRecipePrimes);
  const std::string name(to_string(f));
  std::vector<svg::Series> lines;
  std::string note = fmt::format("{}: p={} against the first {} primes, N={}\n", name, p,
                                 kRecipePrimes, kRecipeZeros);

  for (auto mode : {CorrelationMode::raw, CorrelationMode::centered}) {
    CorrelationConfig config;
    config.mode = mode;
    config.zero_count = kRecipeZeros;
    const auto row = correlation_row(zeros, p, qs, config, threads);
    auto report = detect_resonances(row, p, config);

    auto m = base_manifest(f, zeros);
    m.set("p", p);
    m.set("primes", std::uint64_t{kRecipePrimes});
    m.set("mode", std::string(to_string(mode)));
    m.set("floor", config.small_prime_floor);
    m.set("z", config.resonance_z);

    const std::string suffix(to_string(mode));
    w.artifact(name + "_" + suffix + ".csv", row_csv(row), m);
    w.artifact(name + "_resonance_" + suffix + ".csv", resonance_csv(report), m);

    svg::Series s{suffix, {}, {}};
    for (const auto& e : row) {
      s.x.push_back(static_cast<double>(e.q));
      s.y.push_back(e.c);
    }
    lines.push_back(std::move(s));

    note += fmt::format("[{} mode]\n", suffix);
    note += resonance_summary(report, 5);
    const auto& targets = targets_for(f);
    if (!targets.empty()) {
      note += "  reference targets:\n";
      std::size_t in_top5 = 0;
      for (const auto& t : targets) {
        note += describe_target(report, t);
        const auto rank = report.rank_of(t.q);
        if (rank >= 1 && rank <= 5) ++in_top5;
      }
      note += fmt::format("  observation: {} of {} targets rank in the top 5 (recorded, not asserted)\n",
                          in_top5, targets.size());
    }
    if (mode == CorrelationMode::raw) {
      result.raw_report = std::move(report);
    } else {
      result.centered_report = std::move(report);
    }
  }

  if (f == Figure::fig5_corr19) {
    note += fmt::format(
        "arithmetic check: 389-1 = {} while 2*179+1 = 359 has 359-1 = {}; both rows are reported\n",
        format_factorization(factorize(388)), format_factorization(factorize(358)));
    if (result.raw_report) note += describe_target(*result.raw_report, {359, "2*179"});
  }
  note += fmt::format("the q={} entry is zeroed in the row CSV (self-term plotting convention)\n", p);

  w.plain(name + ".svg", svg::line_chart(fmt::format("X_{} correlations, N={}", p, kRecipeZeros), lines));
  result.note = std::move(note);
}

}  // namespace

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig5_bihist: return "fig5_bihist";
    case Figure::fig5_corr19: return "fig5_corr19";
    case Figure::fig6_corr29: return "fig6_corr29";
  }
  return "?";
}

std::optional<Figure> parse_figure(std::string_view name) {
  for (auto f : kAllFigures) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

ReproduceResult reproduce(Figure figure, const ZeroTable& zeros,
                          const std::filesystem::path& out_dir, unsigned threads) {
  if (zeros.size() < kRecipeZeros) {
    throw IoError(fmt::format("reproduce {} needs at least {} zero ordinates; table has {}",
                              to_string(figure), kRecipeZeros, zeros.size()));
  }
  const ZeroTable sample = zeros.prefix(kRecipeZeros);
  ReproduceResult result;
  result.figure = figure;
  Writer w(out_dir, result);
  switch (figure) {
    case Figure::fig3: sector_histogram(figure, 2, 1, sample, w, result); break;
    case Figure::fig4: sector_histogram(figure, 5, 3, sample, w, result); break;
    case Figure::fig5_bihist: bi_histogram(figure, sample, w, result); break;
    case Figure::fig5_corr19: correlation_figure(figure, 19, sample, threads, w, result); break;
    case Figure::fig6_corr29: correlation_figure(figure, 29, sample, threads, w, result); break;
  }
  w.plain(std::string(to_string(figure)) + "_note.txt", result.note);
  return result;
}

}  // namespace rspec::workbench
