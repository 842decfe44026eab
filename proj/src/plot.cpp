// Copyright 2026 The Semmem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semmem/plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <limits>

#include "semmem/error.hpp"

namespace semmem::plot {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;
constexpr double kGlyph = 6.0;

constexpr std::array<const char*, 8> kPalette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                 "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string Glyph(int cluster, double cx, double cy) {
  const int shape = ((cluster % 6) + 6) % 6;
  const char* color = kPalette[static_cast<std::size_t>(((cluster % 8) + 8) % 8)];
  std::string cls = "glyph cluster-" + std::to_string(cluster);
  std::string attrs = " class=\"" + cls + "\" fill=\"" + color + "\"";
  const double r = kGlyph;
  switch (shape) {
    case 0:
      return "<circle" + attrs + " cx=\"" + Num(cx) + "\" cy=\"" + Num(cy) + "\" r=\"" + Num(r) + "\"/>";
    case 1:
      return "<rect" + attrs + " x=\"" + Num(cx - r) + "\" y=\"" + Num(cy - r) + "\" width=\"" +
             Num(2 * r) + "\" height=\"" + Num(2 * r) + "\"/>";
    case 2:
      return "<polygon" + attrs + " points=\"" + Num(cx) + "," + Num(cy - r) + " " + Num(cx + r) + "," +
             Num(cy + r) + " " + Num(cx - r) + "," + Num(cy + r) + "\"/>";
    case 3:
      return "<polygon" + attrs + " points=\"" + Num(cx) + "," + Num(cy - r) + " " + Num(cx + r) + "," +
             Num(cy) + " " + Num(cx) + "," + Num(cy + r) + " " + Num(cx - r) + "," + Num(cy) + "\"/>";
    case 4:
      return "<path" + attrs + " stroke=\"" + color + "\" stroke-width=\"2\" d=\"M" + Num(cx - r) + " " +
             Num(cy - r) + " L" + Num(cx + r) + " " + Num(cy + r) + " M" + Num(cx - r) + " " +
             Num(cy + r) + " L" + Num(cx + r) + " " + Num(cy - r) + "\"/>";
    default:
      return "<polygon" + attrs + " points=\"" + Num(cx) + "," + Num(cy - r) + " " + Num(cx + r) + "," +
             Num(cy - 0.3 * r) + " " + Num(cx + 0.6 * r) + "," + Num(cy + r) + " " + Num(cx - 0.6 * r) +
             "," + Num(cy + r) + " " + Num(cx - r) + "," + Num(cy - 0.3 * r) + "\"/>";
  }
}

}  // namespace

std::string RenderCsv(const std::vector<PlotPoint>& points) {
  std::string out = "doc_id,x,y,cluster,gold\n";
  for (const auto& p : points) {
    out += CsvField(p.doc_id) + "," + Num(p.x) + "," + Num(p.y) + "," + std::to_string(p.cluster) + "," +
           CsvField(p.gold) + "\n";
  }
  return out;
}

std::string RenderSvg(const std::vector<PlotPoint>& points) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n"
      "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  if (!points.empty()) {
    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double min_y = min_x;
    double max_y = -min_x;
    for (const auto& p : points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const double span_x = max_x > min_x ? max_x - min_x : 1.0;
    const double span_y = max_y > min_y ? max_y - min_y : 1.0;
    for (const auto& p : points) {
      const double cx = kMargin + (p.x - min_x) / span_x * (kWidth - 2 * kMargin);
      const double cy = kHeight - kMargin - (p.y - min_y) / span_y * (kHeight - 2 * kMargin);
      out += "<g><title>" + XmlEscape(p.doc_id) + (p.gold.empty() ? "" : " (" + XmlEscape(p.gold) + ")") +
             "</title>" + Glyph(p.cluster, cx, cy) + "</g>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void EmitPlot(const std::vector<PlotPoint>& points, const std::filesystem::path& prefix) {
  auto write = [](const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << body;
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
  };
  std::filesystem::path csv = prefix;
  csv += ".csv";
  std::filesystem::path svg = prefix;
  svg += ".svg";
  write(csv, RenderCsv(points));
  write(svg, RenderSvg(points));
}

}  // namespace semmem::plot
