#include "mshydro/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mshydro/errors.hpp"

namespace mshydro {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 770.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 530.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string format_with(double value, std::chars_format fmt, int precision) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, fmt, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string px(double v) { return format_with(v, std::chars_format::fixed, 2); }

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string cell_text(const Cell& c) {
  return std::holds_alternative<double>(c) ? format_real(std::get<double>(c)) : std::get<std::string>(c);
}

std::size_t column_index(const Table& table, const std::string& name) {
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) throw DomainError("no column named '" + name + "'");
  return static_cast<std::size_t>(it - table.header.begin());
}

struct Range {
  double lo = INFINITY;
  double hi = -INFINITY;
  void add(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    } else if (hi - lo <= 1e-300 + 1e-12 * std::abs(hi)) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
};

}  // namespace

std::string format_real(double value) { return format_with(value, std::chars_format::general, 17); }

void check_table(const Table& table) {
  if (table.header.empty()) throw DomainError("table has no columns");
  if (table.rows.empty()) throw DomainError("table has no rows");
  for (const auto& row : table.rows)
    if (row.size() != table.header.size()) throw DomainError("table rows are not rectangular");
}

std::string to_csv(const Table& table) {
  check_table(table);
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) out += (c ? "," : "") + table.header[c];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const Table& table, const ChartSpec& spec) {
  check_table(table);
  const auto& first = table.rows.front();

  std::vector<std::size_t> groups;
  for (const auto& g : spec.group_by) groups.push_back(column_index(table, g));
  if (spec.group_by.empty())
    for (std::size_t c = 0; c < first.size(); ++c)
      if (std::holds_alternative<std::string>(first[c])) groups.push_back(c);

  std::size_t x_col = table.header.size();
  if (!spec.x.empty()) {
    x_col = column_index(table, spec.x);
  } else {
    for (std::size_t c = 0; c < first.size(); ++c)
      if (std::holds_alternative<double>(first[c]) && std::find(groups.begin(), groups.end(), c) == groups.end()) {
        x_col = c;
        break;
      }
  }
  if (x_col == table.header.size()) throw DomainError("chart needs a numeric x column");

  std::vector<std::size_t> y_cols;
  for (const auto& y : spec.y) y_cols.push_back(column_index(table, y));
  if (spec.y.empty())
    for (std::size_t c = 0; c < first.size(); ++c)
      if (c != x_col && std::holds_alternative<double>(first[c]) &&
          std::find(groups.begin(), groups.end(), c) == groups.end())
        y_cols.push_back(c);
  if (y_cols.empty()) throw DomainError("chart needs at least one numeric y column");

  // Series keyed in first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  Range xr, yr;
  for (const auto& row : table.rows) {
    std::string key;
    for (std::size_t g : groups) {
      if (!key.empty()) key += ' ';
      key += table.header[g] + "=" + cell_text(row[g]);
    }
    const double x = std::get<double>(row[x_col]);
    xr.add(x);
    for (std::size_t y_col : y_cols) {
      std::string name = key;
      if (y_cols.size() > 1 || name.empty()) name += (name.empty() ? "" : " ") + table.header[y_col];
      const double y = std::get<double>(row[y_col]);
      yr.add(y);
      auto [it, inserted] = series.try_emplace(name);
      if (inserted) order.push_back(name);
      it->second.emplace_back(x, y);
    }
  }
  xr.finish();
  yr.finish();
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft); };
  auto sy = [&](double y) { return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << px(kWidth) << "\" height=\"" << px(kHeight) << "\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    os << "<text x=\"400.00\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << escape_xml(spec.title) << "</text>\n";
  os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(kRight - kLeft) << "\" height=\""
     << px(kBottom - kTop) << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / (kTicks - 1);
    const double fy = yr.lo + (yr.hi - yr.lo) * i / (kTicks - 1);
    os << "<line x1=\"" << px(sx(fx)) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(sx(fx)) << "\" y2=\""
       << px(kBottom + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(sx(fx)) << "\" y=\"" << px(kBottom + 20)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << format_with(fx, std::chars_format::general, 4) << "</text>\n";
    os << "<line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(sy(fy)) << "\" x2=\"" << px(kLeft) << "\" y2=\""
       << px(sy(fy)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(sy(fy) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << format_with(fy, std::chars_format::general, 4) << "</text>\n";
  }

  std::string y_label;
  for (std::size_t y_col : y_cols) y_label += (y_label.empty() ? "" : ", ") + table.header[y_col];
  os << "<text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"" << px(kHeight - 15)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(table.header[x_col])
     << "</text>\n";
  os << "<text x=\"20.00\" y=\"" << px((kTop + kBottom) / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20.00 "
     << px((kTop + kBottom) / 2) << ")\">" << escape_xml(y_label) << "</text>\n";

  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto& pts = series.at(order[s]);
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[s % std::size(kPalette)]
       << "\" stroke-width=\"1.5\" points=\"";
    bool first_point = true;
    for (const auto& [x, y] : pts) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!first_point) os << ' ';
      first_point = false;
      os << px(sx(x)) << ',' << px(sy(y));
    }
    os << "\"/>\n";
  }

  constexpr std::size_t kMaxLegend = 12;
  for (std::size_t s = 0; s < std::min(order.size(), kMaxLegend); ++s) {
    const double y = kTop + 15 + 15.0 * static_cast<double>(s);
    os << "<line x1=\"" << px(kRight - 170) << "\" y1=\"" << px(y - 4) << "\" x2=\"" << px(kRight - 150)
       << "\" y2=\"" << px(y - 4) << "\" stroke=\"" << kPalette[s % std::size(kPalette)]
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << px(kRight - 145) << "\" y=\"" << px(y)
       << "\" font-family=\"sans-serif\" font-size=\"10\">" << escape_xml(order[s]) << "</text>\n";
  }
  if (order.size() > kMaxLegend)
    os << "<text x=\"" << px(kRight - 145) << "\" y=\"" << px(kTop + 15 + 15.0 * kMaxLegend)
       << "\" font-family=\"sans-serif\" font-size=\"10\">(+" << order.size() - kMaxLegend << " more)</text>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_outputs(const Table& table, const std::filesystem::path& out_path, bool emit_svg, const ChartSpec& spec) {
  const std::string csv = to_csv(table);
  if (out_path == "-") {
    if (emit_svg) throw DomainError("SVG output needs a file path (--out)");
    std::cout << csv;
    std::cout.flush();
    return;
  }
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    f << text;
    f.close();
    if (!f) throw std::ios_base::failure("failed writing '" + path.string() + "'");
  };
  write(out_path, csv);
  if (emit_svg) {
    std::filesystem::path svg_path = out_path;
    svg_path.replace_extension(".svg");
    write(svg_path, to_svg(table, spec));
  }
}

}  // namespace mshydro
