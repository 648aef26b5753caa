#include "rspec/zero_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "rspec/errors.hpp"

namespace rspec {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source_label)
    : ordinates_(std::move(ordinates)), source_label_(std::move(source_label)) {
  if (ordinates_.empty()) throw EmptyInputError();
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    const double t = ordinates_[i];
    if (!std::isfinite(t) || t <= kMinOrdinate) {
      throw ValidationError(i + 1, "ordinate " + std::to_string(t) + " is not above 14");
    }
    if (i > 0 && !(ordinates_[i - 1] < t)) {
      throw ValidationError(i + 1, "ordinates are not strictly increasing");
    }
  }
}

ZeroTable ZeroTable::parse(std::istream& in, std::string source_label) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view token = trim(line);
    if (token.empty()) continue;
    // from_chars rejects a leading '+', which is fine for this format.
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line_no, std::string(token));
    }
    values.push_back(value);
  }
  return ZeroTable(std::move(values), std::move(source_label));
}

ZeroTable ZeroTable::load(const std::filesystem::path& path, std::optional<std::size_t> limit) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zeros file: " + path.string());
  ZeroTable table = parse(in, path.string());
  if (limit && *limit < table.size()) return table.prefix(*limit);
  return table;
}

ZeroTable ZeroTable::prefix(std::size_t n) const {
  if (n == 0 || n > ordinates_.size()) {
    throw DomainError("requested " + std::to_string(n) + " ordinates but the table holds " +
                      std::to_string(ordinates_.size()));
  }
  return ZeroTable(std::vector<double>(ordinates_.begin(), ordinates_.begin() + n),
                   source_label_);
}

std::size_t ZeroTable::count_below(double T) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(ordinates_.begin(), ordinates_.end(), T) - ordinates_.begin());
}

double information_integral(double y) {
  if (!(y > 0.0)) throw DomainError("information_integral requires y > 0");
  return y * (std::log(y) - 1.0);
}

double riemann_von_mangoldt_estimate(double T) {
  if (!(T > 0.0)) throw DomainError("riemann_von_mangoldt_estimate requires T > 0");
  return information_integral(T / (2.0 * std::numbers::pi));
}

}  // namespace rspec
