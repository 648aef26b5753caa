#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rspec {

/// Lower bound every ordinate must exceed (the first zero sits at 14.1347...).
inline constexpr double kMinOrdinate = 14.0;

/// Validated, strictly increasing table of zeta-zero ordinates t_n, where
/// rho_n = 1/2 + i t_n. Immutable after construction.
class ZeroTable {
 public:
  /// Throws EmptyInputError, or ValidationError with the 1-based index of
  /// the first entry that is <= 14, non-finite, or not above its predecessor.
  ZeroTable(std::vector<double> ordinates, std::string source_label);

  /// One decimal per line; blank lines and surrounding whitespace allowed.
  static ZeroTable parse(std::istream& in, std::string source_label = "<stream>");

  /// Reads a file and optionally keeps only the first `limit` ordinates.
  static ZeroTable load(const std::filesystem::path& path,
                        std::optional<std::size_t> limit = std::nullopt);

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  double front() const noexcept { return ordinates_.front(); }
  double back() const noexcept { return ordinates_.back(); }
  double operator[](std::size_t i) const noexcept { return ordinates_[i]; }
  const std::string& source_label() const noexcept { return source_label_; }

  /// First n ordinates. Throws DomainError when n is 0 or exceeds size().
  ZeroTable prefix(std::size_t n) const;

  /// Number of ordinates t_n <= T (the empirical N(T)).
  std::size_t count_below(double T) const noexcept;

 private:
  std::vector<double> ordinates_;
  std::string source_label_;
};

/// Main term (T/2pi)(log(T/2pi) - 1) of the zero-counting function; the
/// O(log T) remainder (and the customary 7/8) is not added.
double riemann_von_mangoldt_estimate(double T);

/// Closed form y(log y - 1) of the integral of log x over [0, y].
double information_integral(double y);

}  // namespace rspec
