#pragma once

// Tabular results and their CSV / SVG renderings.

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace mshydro {

using Cell = std::variant<std::string, double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Which columns a chart draws. Empty x/y pick defaults: x is the first
/// numeric column, y every other numeric column not used for grouping, and
/// series are split by every string column.
struct ChartSpec {
  std::string x;
  std::vector<std::string> y;
  std::vector<std::string> group_by;
  std::string title;
};

/// 17 significant digits (enough to round-trip any double), '.' decimal
/// point, independent of the global locale.
std::string format_real(double value);

/// Throws DomainError for an empty or ragged table.
void check_table(const Table& table);

std::string to_csv(const Table& table);

/// Static 800x600 polyline chart. Output depends only on the table and spec.
std::string to_svg(const Table& table, const ChartSpec& spec = {});

/// Writes CSV to out_path ("-" is stdout via the returned string) and, when
/// emit_svg is set, an SVG next to it with the extension replaced by .svg.
/// Throws std::ios_base::failure when a file cannot be written.
void emit_outputs(const Table& table, const std::filesystem::path& out_path, bool emit_svg,
                  const ChartSpec& spec = {});

}  // namespace mshydro
