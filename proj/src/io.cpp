#include "heis/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "heis/errors.hpp"
#include "heis/reconstruct.hpp"

namespace heis {

namespace {

constexpr std::string_view kHeader = "s,x,t,theta,alpha,k,l";
constexpr std::size_t kColumns = 7;

std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view text) {
  const auto b = text.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = text.find_last_not_of(" \t\r");
  return text.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// Fields separated by commas and/or whitespace.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i])))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ',' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    cells.push_back(line.substr(start, i - start));
  }
  return cells;
}

std::vector<double>* column(CurveRecord& r, std::size_t j) {
  std::vector<double>* cols[kColumns] = {&r.s, &r.x, &r.t, &r.theta, &r.alpha, &r.k, &r.l};
  return cols[j];
}

const std::vector<double>* column(const CurveRecord& r, std::size_t j) {
  return column(const_cast<CurveRecord&>(r), j);
}

void check_shape(const CurveRecord& r) {
  for (std::size_t j = 1; j < kColumns; ++j) {
    if (column(r, j)->size() != r.s.size()) throw DomainError("record columns differ in length");
  }
}

}  // namespace

void CurveRecord::set_meta(std::string key, std::string value) {
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(std::move(key), std::move(value));
}

void CurveRecord::set_meta(std::string key, double value) {
  set_meta(std::move(key), format_number(value));
}

std::optional<std::string> CurveRecord::meta_value(std::string_view key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<double> CurveRecord::meta_number(std::string_view key) const {
  const auto v = meta_value(key);
  if (!v) return std::nullopt;
  return parse_number(*v);
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CurveRecord make_record(const CurveWithProfile& data) {
  const auto& curve = data.curve;
  const auto& p = data.profile;
  const std::size_t n = curve.size();
  if (p.size() != n) throw DomainError("profile must be sampled on the curve grid");
  const std::vector<double> theta = curve.has_theta()
                                        ? std::vector<double>(curve.theta().begin(),
                                                              curve.theta().end())
                                        : theta_from_profile(curve, p.k);

  CurveRecord r;
  std::size_t front = 0;
  std::size_t back = 0;
  bool seen_finite = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double row[kColumns] = {curve.s()[i], curve.x()[i], curve.t()[i], theta[i],
                                  p.alpha[i],   p.k[i],       p.l[i]};
    bool finite = true;
    for (double v : row) finite = finite && std::isfinite(v);
    if (!finite) {
      (seen_finite ? back : front) += 1;
      continue;
    }
    if (back != 0) throw DomainError("non-finite sample in the interior of the curve");
    seen_finite = true;
    for (std::size_t j = 0; j < kColumns; ++j) column(r, j)->push_back(row[j]);
  }
  r.set_meta("version", std::string(kToolVersion));
  r.set_meta("trimmed_front", std::to_string(front));
  r.set_meta("trimmed_back", std::to_string(back));
  return r;
}

CurveWithProfile record_curve(const CurveRecord& record) {
  check_shape(record);
  return {GeneratingCurve(record.s, record.x, record.t, record.theta),
          InvariantProfile{record.alpha, record.k, record.l}};
}

void write_csv(std::ostream& out, const CurveRecord& record) {
  check_shape(record);
  for (const auto& [k, v] : record.meta) out << "# " << k << '=' << v << '\n';
  out << kHeader << '\n';
  for (std::size_t i = 0; i < record.size(); ++i) {
    for (std::size_t j = 0; j < kColumns; ++j) {
      if (j != 0) out << ',';
      out << format_number((*column(record, j))[i]);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed to write CSV output");
}

CurveRecord read_csv(std::istream& in) {
  CurveRecord r;
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (!header) {
      if (text.empty()) continue;
      if (text.front() == '#') {
        const auto body = trim(text.substr(1));
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) continue;  // plain comment
        r.set_meta(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
        continue;
      }
      if (text != kHeader) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header '" +
                         std::string(kHeader) + "'");
      }
      header = true;
      continue;
    }
    if (text.empty()) continue;
    const auto cells = split(text);
    if (cells.size() != kColumns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(kColumns) + " cells, found " + std::to_string(cells.size()));
    }
    for (std::size_t j = 0; j < kColumns; ++j) {
      const auto v = parse_number(cells[j]);
      if (!v) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric cell '" +
                         std::string(cells[j]) + "'");
      }
      column(r, j)->push_back(*v);
    }
  }
  if (in.bad()) throw IoError("failed to read CSV input");
  if (!header) throw ParseError("missing header '" + std::string(kHeader) + "'");
  return r;
}

void write_json(std::ostream& out, const CurveRecord& record) {
  check_shape(record);
  nlohmann::ordered_json doc;
  auto& meta = doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.meta) {
    const auto number = parse_number(v);
    if (number && std::isfinite(*number)) {
      meta[k] = *number;
    } else {
      meta[k] = v;
    }
  }
  static const char* names[kColumns] = {"s", "x", "t", "theta", "alpha", "k", "l"};
  auto& samples = doc["samples"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < record.size(); ++i) {
    nlohmann::ordered_json row;
    for (std::size_t j = 0; j < kColumns; ++j) {
      const double v = (*column(record, j))[i];
      if (std::isfinite(v)) {
        row[names[j]] = v;
      } else {
        row[names[j]] = nullptr;
      }
    }
    samples.push_back(std::move(row));
  }
  out << doc.dump(1) << '\n';
  if (!out) throw IoError("failed to write JSON output");
}

CurveRecord read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  CurveRecord r;
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw ParseError("'meta' must be an object");
    for (const auto& [k, v] : doc["meta"].items()) {
      if (v.is_string()) {
        r.set_meta(k, v.get<std::string>());
      } else if (v.is_number_integer()) {
        r.set_meta(k, std::to_string(v.get<long long>()));
      } else if (v.is_number()) {
        r.set_meta(k, v.get<double>());
      } else {
        r.set_meta(k, v.dump());
      }
    }
  }
  if (!doc.contains("samples") || !doc["samples"].is_array()) {
    throw ParseError("missing 'samples' array");
  }
  static const char* names[kColumns] = {"s", "x", "t", "theta", "alpha", "k", "l"};
  for (const auto& row : doc["samples"]) {
    for (std::size_t j = 0; j < kColumns; ++j) {
      if (!row.contains(names[j])) throw ParseError(std::string("sample without '") + names[j] + "'");
      const auto& v = row[names[j]];
      if (v.is_null()) {
        column(r, j)->push_back(std::nan(""));
      } else if (v.is_number()) {
        column(r, j)->push_back(v.get<double>());
      } else {
        throw ParseError(std::string("non-numeric '") + names[j] + "'");
      }
    }
  }
  return r;
}

CurveRecord read_record_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? read_json(in) : read_csv(in);
}

std::pair<std::vector<double>, std::vector<double>> read_series(std::istream& in) {
  std::vector<double> a, b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto cells = split_fields(text);
    if (cells.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 2 cells");
    }
    const auto u = parse_number(cells[0]);
    const auto v = parse_number(cells[1]);
    if (!u || !v) {
      if (a.empty() && b.empty() && !u && !v) continue;  // header
      throw ParseError("line " + std::to_string(line_no) + ": non-numeric cell");
    }
    a.push_back(*u);
    b.push_back(*v);
  }
  if (in.bad()) throw IoError("failed to read series input");
  return {std::move(a), std::move(b)};
}

}  // namespace heis
