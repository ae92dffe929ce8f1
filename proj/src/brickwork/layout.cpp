// Copyright 2026 The bqc-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqc/brickwork/layout.hpp"

#include "json.hpp"

#include "bqc/errors.hpp"

namespace bqc::brickwork {

Census brick_census(std::int64_t rows, std::int64_t layers) {
  if (rows < 2 || layers < 1) throw ArgumentError("brickwork needs n >= 2 rows and m >= 1 layers");
  Census c;
  c.rows = rows;
  c.layers = layers;
  const std::int64_t odd_layers = (layers + 1) / 2, even_layers = layers / 2;
  if (rows % 2 == 1) {
    c.bricks = rows / 2 * layers;
    c.half_bricks = layers;
  } else {
    c.bricks = rows / 2 * odd_layers + (rows / 2 - 1) * even_layers;
    c.half_bricks = 2 * even_layers;
  }
  c.measured = 4 * layers * rows;
  c.qubits = c.measured + rows;
  c.edges = c.measured + 2 * c.bricks;
  return c;
}

BrickworkLayout::BrickworkLayout(int rows, int layers) : rows_(rows), layers_(layers) {
  brick_census(rows, layers);
  angles_.assign(static_cast<std::size_t>(4) * layers * rows, Octant{});
}

std::size_t BrickworkLayout::index(Site s) const {
  return static_cast<std::size_t>(s.column - 1) * rows_ + static_cast<std::size_t>(s.row - 1);
}

void BrickworkLayout::check_measured(Site s) const {
  if (!measured(s))
    throw IndexError("site (" + std::to_string(s.column) + "," + std::to_string(s.row) + ") is not a measured qubit");
}

Octant BrickworkLayout::angle(Site s) const {
  check_measured(s);
  return angles_[index(s)];
}

void BrickworkLayout::set_angle(Site s, Octant a) {
  check_measured(s);
  angles_[index(s)] = a;
}

std::optional<int> BrickworkLayout::partner(int layer, int row) const {
  // odd layers start pairing at row 1, even layers at row 2
  const int first = layer % 2 == 1 ? 1 : 2;
  if (row < first) return std::nullopt;
  const int p = (row - first) % 2 == 0 ? row + 1 : row - 1;
  if (p < first || p > rows_) return std::nullopt;
  return p;
}

std::optional<int> BrickworkLayout::vertical_partner(int column, int row) const {
  // layer l has rungs at columns 4l-1 and 4l+1
  int layer = 0;
  if (column % 4 == 3)
    layer = (column + 1) / 4;
  else if (column % 4 == 1 && column > 1)
    layer = (column - 1) / 4;
  if (layer < 1 || layer > layers_) return std::nullopt;
  return partner(layer, row);
}

std::vector<std::pair<Site, Site>> BrickworkLayout::edges() const {
  std::vector<std::pair<Site, Site>> out;
  for (int c = 1; c <= columns(); ++c) {
    for (int r = 1; r <= rows_; ++r) {
      if (c < columns()) out.push_back({{c, r}, {c + 1, r}});
      if (auto p = vertical_partner(c, r); p && *p > r) out.push_back({{c, r}, {c, *p}});
    }
  }
  return out;
}

std::vector<Site> BrickworkLayout::x_dependencies(Site s) const {
  if (!contains(s)) throw IndexError("site outside the layout");
  if (s.column == 1) return {};
  return {{s.column - 1, s.row}};
}

std::vector<Site> BrickworkLayout::z_dependencies(Site s) const {
  if (!contains(s)) throw IndexError("site outside the layout");
  std::vector<Site> out;
  if (s.column > 2) out.push_back({s.column - 2, s.row});
  if (s.column > 1)
    if (auto p = vertical_partner(s.column, s.row)) out.push_back({s.column - 1, *p});
  return out;
}

std::vector<Site> BrickworkLayout::measurement_order() const {
  std::vector<Site> out;
  out.reserve(angles_.size());
  for (int c = 1; c < columns(); ++c)
    for (int r = 1; r <= rows_; ++r) out.push_back({c, r});
  return out;
}

namespace {

nlohmann::json site_json(Site s) { return nlohmann::json::array({s.column, s.row}); }

}  // namespace

BrickworkLayout pad_layers(const BrickworkLayout& layout, int layers) {
  if (layers < layout.layers())
    throw ArgumentError("cannot pad " + std::to_string(layout.layers()) + " layers down to " + std::to_string(layers));
  BrickworkLayout out(layout.rows(), layers);
  for (const auto& s : layout.measurement_order()) out.set_angle(s, layout.angle(s));
  return out;
}

std::string layout_to_json(const BrickworkLayout& layout, bool with_dependencies) {
  nlohmann::json doc;
  doc["format"] = "bqc-brickwork-layout";
  doc["format_version"] = kLayoutFormatVersion;
  doc["rows"] = layout.rows();
  doc["layers"] = layout.layers();
  doc["columns"] = layout.columns();
  // one array per measured column, angles in units of pi/4
  nlohmann::json grid = nlohmann::json::array();
  for (int c = 1; c < layout.columns(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 1; r <= layout.rows(); ++r) col.push_back(layout.angle({c, r}).k());
    grid.push_back(std::move(col));
  }
  doc["angles"] = std::move(grid);
  if (with_dependencies) {
    nlohmann::json deps = nlohmann::json::array();
    for (int c = 2; c <= layout.columns(); ++c) {
      for (int r = 1; r <= layout.rows(); ++r) {
        nlohmann::json e;
        e["site"] = site_json({c, r});
        e["x"] = nlohmann::json::array();
        e["z"] = nlohmann::json::array();
        for (auto d : layout.x_dependencies({c, r})) e["x"].push_back(site_json(d));
        for (auto d : layout.z_dependencies({c, r})) e["z"].push_back(site_json(d));
        deps.push_back(std::move(e));
      }
    }
    doc["dependencies"] = std::move(deps);
  }
  return doc.dump(1);
}

BrickworkLayout layout_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("layout document: ") + e.what());
  }
  try {
    if (doc.at("format") != "bqc-brickwork-layout") throw ParseError(0, "not a brickwork layout document");
    if (doc.value("format_version", doc.value("version", 0)) != kLayoutFormatVersion)
      throw ParseError(0, "unsupported layout version");
    BrickworkLayout layout(doc.at("rows").get<int>(), doc.at("layers").get<int>());
    const auto& grid = doc.at("angles");
    if (static_cast<int>(grid.size()) != layout.columns() - 1) throw ParseError(0, "angle grid has wrong column count");
    for (int c = 1; c < layout.columns(); ++c) {
      const auto& col = grid[c - 1];
      if (static_cast<int>(col.size()) != layout.rows()) throw ParseError(0, "angle grid has wrong row count");
      for (int r = 1; r <= layout.rows(); ++r) layout.set_angle({c, r}, Octant(col[r - 1].get<int>()));
    }
    return layout;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("layout document: ") + e.what());
  }
}

}  // namespace bqc::brickwork
