#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heis/curve.hpp"

namespace heis {

inline constexpr std::string_view kToolVersion = "heis-cmc 0.1.0";

/// Tabular curve with its invariants and an ordered key=value metadata block.
/// Columns are s, x, t, theta, alpha, k, l in that order.
struct CurveRecord {
  std::vector<double> s, x, t, theta, alpha, k, l;
  std::vector<std::pair<std::string, std::string>> meta;

  std::size_t size() const { return s.size(); }
  void set_meta(std::string key, std::string value);
  void set_meta(std::string key, double value);
  std::optional<std::string> meta_value(std::string_view key) const;
  std::optional<double> meta_number(std::string_view key) const;
};

// 17 significant digits, enough for a bit-exact decimal round trip.
std::string format_number(double value);

/// Record of a curve and its profile. Rows with a non-finite entry (axis
/// contact) are dropped and counted in the trimmed_front / trimmed_back
/// metadata. A curve without theta gets theta = int k ds.
CurveRecord make_record(const CurveWithProfile& data);

// The curve part of a record (s, x, t, theta) and its stored profile.
CurveWithProfile record_curve(const CurveRecord& record);

void write_csv(std::ostream& out, const CurveRecord& record);
CurveRecord read_csv(std::istream& in);

void write_json(std::ostream& out, const CurveRecord& record);
CurveRecord read_json(std::istream& in);

// Format chosen by extension: ".json" is JSON, anything else CSV.
CurveRecord read_record_file(const std::string& path);

/// Two-column table (parameter, value) as used for prescribed alpha / k
/// files: an optional header line, '#' comments, comma-separated numbers.
std::pair<std::vector<double>, std::vector<double>> read_series(std::istream& in);

}  // namespace heis
