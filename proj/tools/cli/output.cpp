#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "cli/settings.hpp"

namespace rlab_cli {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text_at(double x, double y, const std::string& s, const std::string& anchor = "middle") {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + escape(s) +
         "</text>\n";
}

}  // namespace

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Csv::Csv(std::vector<std::string> header) : columns_(header.size()) { row(header); }

void Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("csv row has the wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

std::string region_svg(const std::vector<HeatCell>& cells, const std::string& title) {
  std::set<double> ps;
  std::set<double> qs;
  for (const auto& c : cells) {
    ps.insert(c.p);
    qs.insert(c.q);
  }
  const std::vector<double> pv(ps.begin(), ps.end());
  const std::vector<double> qv(qs.begin(), qs.end());
  const double cw = std::max(8.0, 520.0 / std::max<std::size_t>(1, pv.size()));
  const double ch = std::max(4.0, 520.0 / std::max<std::size_t>(1, qv.size()));
  const double left = 70.0;
  const double top = 40.0;
  const int width = static_cast<int>(left + cw * pv.size() + 160);
  const int height = static_cast<int>(top + ch * qv.size() + 60);
  std::string s = svg_open(width, height);
  s += text_at(width / 2.0, 20, title);
  auto col = [&](double p) { return std::lower_bound(pv.begin(), pv.end(), p) - pv.begin(); };
  auto row = [&](double q) { return std::lower_bound(qv.begin(), qv.end(), q) - qv.begin(); };
  for (const auto& c : cells) {
    const double x = left + cw * col(c.p);
    // q increases upward.
    const double y = top + ch * (qv.size() - 1 - row(c.q));
    std::string fill = "#bdbdbd";
    if (c.status == "consistent") fill = "#4c9a2a";
    if (c.status == "inadmissible") fill = "#c0392b";
    s += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cw) + "\" height=\"" + num(ch) +
         "\" fill=\"" + fill + "\"";
    if (!c.agrees) s += " stroke=\"black\" stroke-width=\"2\"";
    s += "/>\n";
  }
  const double bottom = top + ch * qv.size();
  if (!pv.empty()) {
    s += text_at(left, bottom + 16, fmt(pv.front()));
    s += text_at(left + cw * pv.size(), bottom + 16, fmt(pv.back()));
    s += text_at(left + cw * pv.size() / 2.0, bottom + 36, "p");
  }
  if (!qv.empty()) {
    s += text_at(left - 6, bottom, fmt(qv.front()), "end");
    s += text_at(left - 6, top + 10, fmt(qv.back()), "end");
    s += text_at(left - 40, top + ch * qv.size() / 2.0, "q");
  }
  const double lx = left + cw * pv.size() + 20;
  const char* names[] = {"consistent", "inadmissible", "boundary"};
  const char* fills[] = {"#4c9a2a", "#c0392b", "#bdbdbd"};
  for (int i = 0; i < 3; ++i) {
    s += "<rect x=\"" + num(lx) + "\" y=\"" + num(top + 22.0 * i) + "\" width=\"14\" height=\"14\" fill=\"" +
         fills[i] + "\"/>\n";
    s += text_at(lx + 20, top + 22.0 * i + 12, names[i], "start");
  }
  s += "</svg>\n";
  return s;
}

std::string loglog_svg(const std::vector<double>& x, const std::vector<double>& y, double expected,
                       const std::string& title, const std::string& x_label, const std::string& y_label) {
  const int width = 560;
  const int height = 420;
  const double left = 80;
  const double right = 20;
  const double top = 40;
  const double bottom = 60;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx.push_back(std::log10(x[i]));
    ly.push_back(std::log10(y[i]));
  }
  std::string s = svg_open(width, height);
  s += text_at(width / 2.0, 20, title);
  if (lx.empty()) return s + "</svg>\n";
  double x0 = *std::min_element(lx.begin(), lx.end());
  double x1 = *std::max_element(lx.begin(), lx.end());
  double y0 = *std::min_element(ly.begin(), ly.end());
  double y1 = *std::max_element(ly.begin(), ly.end());
  if (x1 - x0 < 1e-12) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double v) { return left + (v - x0) / (x1 - x0) * (width - left - right); };
  auto py = [&](double v) { return height - bottom - (v - y0) / (y1 - y0) * (height - top - bottom); };
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(width - left - right) +
       "\" height=\"" + num(height - top - bottom) + "\" fill=\"none\" stroke=\"#444\"/>\n";
  // Reference line through the centroid.
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  auto clip = [&](double v) { return std::clamp(v, top, height - bottom); };
  s += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(clip(py(my + expected * (x0 - mx)))) + "\" x2=\"" +
       num(px(x1)) + "\" y2=\"" + num(clip(py(my + expected * (x1 - mx)))) +
       "\" stroke=\"#888\" stroke-dasharray=\"6,4\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < lx.size(); ++i) {
    if (i) s += ' ';
    s += num(px(lx[i])) + "," + num(py(ly[i]));
  }
  s += "\"/>\n";
  for (std::size_t i = 0; i < lx.size(); ++i) {
    s += "<circle cx=\"" + num(px(lx[i])) + "\" cy=\"" + num(py(ly[i])) + "\" r=\"3\" fill=\"#1f5fa8\"/>\n";
  }
  s += text_at(left, height - bottom + 16, fmt(x[0]));
  s += text_at(width - right, height - bottom + 16, fmt(x.back()));
  s += text_at(width / 2.0, height - 16, x_label + " (log scale)");
  s += text_at(left - 6, py(ly.front()) + 4, fmt(y.front()), "end");
  s += text_at(left - 6, py(ly.back()) + 4, fmt(y.back()), "end");
  s += "<text x=\"16\" y=\"" + num(height / 2.0) + "\" transform=\"rotate(-90 16 " + num(height / 2.0) +
       ")\" text-anchor=\"middle\">" + escape(y_label + " (log scale)") + "</text>\n";
  s += "</svg>\n";
  return s;
}

std::string write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir + "': " + ec.message());
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("write failed for '" + path + "'");
  return path;
}

}  // namespace rlab_cli
