#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rspec/correlation.hpp"
#include "rspec/zero_table.hpp"

namespace rspec::workbench {

enum class Figure { fig3, fig4, fig5_bihist, fig5_corr19, fig6_corr29 };

inline constexpr Figure kAllFigures[] = {Figure::fig3, Figure::fig4, Figure::fig5_bihist,
                                         Figure::fig5_corr19, Figure::fig6_corr29};

std::string_view to_string(Figure f);
std::optional<Figure> parse_figure(std::string_view name);

/// Sample size and prime range used by every recipe.
inline constexpr std::size_t kRecipeZeros = 1000;
inline constexpr std::size_t kRecipePrimes = 100;

struct ReproduceResult {
  Figure figure{};
  std::vector<std::filesystem::path> files;  // CSV, SVG, note and manifests, in write order
  std::string note;
  /// Correlation figures only.
  std::optional<ResonanceReport> raw_report;
  std::optional<ResonanceReport> centered_report;
};

/// Writes the figure's CSV, SVG, comparison note and manifest under out_dir.
/// Throws IoError when the table holds fewer than kRecipeZeros ordinates.
ReproduceResult reproduce(Figure figure, const ZeroTable& zeros,
                          const std::filesystem::path& out_dir, unsigned threads = 0);

}  // namespace rspec::workbench
