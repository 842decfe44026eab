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

#ifndef SEMMEM_PLOT_HPP_
#define SEMMEM_PLOT_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace semmem::plot {

struct PlotPoint {
  std::string doc_id;
  double x = 0.0;
  double y = 0.0;
  int cluster = 0;
  std::string gold;  // empty when unknown
};

// Glyph per cluster index, cycling: circle, square, triangle, diamond,
// cross, pentagon; fill colour cycles through an 8-colour palette.
std::string RenderCsv(const std::vector<PlotPoint>& points);
std::string RenderSvg(const std::vector<PlotPoint>& points);

// Writes <prefix>.csv and <prefix>.svg. Throws Error(kIo).
void EmitPlot(const std::vector<PlotPoint>& points, const std::filesystem::path& prefix);

}  // namespace semmem::plot

#endif  // SEMMEM_PLOT_HPP_
