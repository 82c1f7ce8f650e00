#pragma once

#include <string>
#include <vector>

namespace rlab_cli {

// %.15g
std::string fmt(double v);

class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return text_; }

 private:
  std::size_t columns_;
  std::string text_;
};

struct HeatCell {
  double p = 0.0;
  double q = 0.0;
  // "consistent", "inadmissible" or "boundary".
  std::string status;
  bool agrees = true;
};

std::string region_svg(const std::vector<HeatCell>& cells, const std::string& title);

// Log-log plot of (x, y) with a dashed reference line of slope `expected`
// through the data's centroid.
std::string loglog_svg(const std::vector<double>& x, const std::vector<double>& y, double expected,
                       const std::string& title, const std::string& x_label, const std::string& y_label);

// Creates the directory if needed and writes `text` to dir/name.
std::string write_file(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace rlab_cli
