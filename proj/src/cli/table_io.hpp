#ifndef NUSPECTRA_CLI_TABLE_IO_HPP
#define NUSPECTRA_CLI_TABLE_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace nuspectra::cli {

// 9 significant digits, '.' decimal separator, locale-independent.
std::string format_double(double v);

// Write-to-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Minimal SVG 1.1 line chart: axes, tick labels at the extremes, a legend,
// one polyline per series.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

}  // namespace nuspectra::cli

#endif
