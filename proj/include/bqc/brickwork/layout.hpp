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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqc/simcore/octant.hpp"

namespace bqc::brickwork {

/// A brickwork qubit, 1-based: column 1..4m+1, row 1..n.
struct Site {
  int column = 1;
  int row = 1;
  bool operator==(const Site&) const = default;
  auto operator<=>(const Site& o) const {
    if (column != o.column) return column <=> o.column;
    return row <=> o.row;
  }
};

struct Census {
  std::int64_t rows = 0;
  std::int64_t layers = 0;
  std::int64_t bricks = 0;
  std::int64_t half_bricks = 0;
  std::int64_t qubits = 0;     // (4m+1)*n
  std::int64_t measured = 0;   // 4m*n
  std::int64_t edges = 0;      // CZ count
  bool operator==(const Census&) const = default;
};

/// Brick counts for the interleave where odd layers pair rows (1,2),(3,4),...
/// and even layers pair (2,3),(4,5),...; unpaired rows are half-bricks.
Census brick_census(std::int64_t rows, std::int64_t layers);

/// Grid geometry plus the target angle of every measured qubit. The output
/// column 4m+1 carries no angle.
class BrickworkLayout {
 public:
  BrickworkLayout(int rows, int layers);

  int rows() const noexcept { return rows_; }
  int layers() const noexcept { return layers_; }
  int columns() const noexcept { return 4 * layers_ + 1; }
  int output_column() const noexcept { return columns(); }
  std::int64_t qubits() const noexcept { return std::int64_t(rows_) * columns(); }
  Census census() const { return brick_census(rows_, layers_); }

  Octant angle(Site s) const;
  void set_angle(Site s, Octant a);

  bool contains(Site s) const noexcept {
    return s.column >= 1 && s.column <= columns() && s.row >= 1 && s.row <= rows_;
  }
  bool measured(Site s) const noexcept { return contains(s) && s.column < columns(); }

  /// Row paired with `row` in the given layer, if any.
  std::optional<int> partner(int layer, int row) const;
  /// Row joined to `row` by a vertical CZ at this column, if any.
  std::optional<int> vertical_partner(int column, int row) const;

  /// Layer (1-based) a measured column belongs to and its slot 0..3 inside.
  static int layer_of(int column) noexcept { return (column - 1) / 4 + 1; }
  static int slot_of(int column) noexcept { return (column - 1) % 4; }

  /// Every CZ edge; horizontal edges join (c,r)-(c+1,r).
  std::vector<std::pair<Site, Site>> edges() const;

  /// Flow dependencies: outcomes whose parity flips the sign (X) or adds pi
  /// (Z) to this site's angle. Also defined for the output column, where
  /// they name the byproduct Paulis.
  std::vector<Site> x_dependencies(Site s) const;
  std::vector<Site> z_dependencies(Site s) const;

  /// Measurement order: column-major, rows inner.
  std::vector<Site> measurement_order() const;

  bool operator==(const BrickworkLayout&) const = default;

 private:
  std::size_t index(Site s) const;
  void check_measured(Site s) const;

  int rows_;
  int layers_;
  std::vector<Octant> angles_;
};

/// (-1)^{sx} * angle + sz * pi.
constexpr Octant corrected_angle(Octant angle, int sx, int sz) noexcept {
  return (sx & 1 ? -angle : angle) + Octant(4 * (sz & 1));
}

/// Same computation on `layers` layers: the extra layers carry all-zero
/// angles, which act as identity. Throws ArgumentError when layers is fewer
/// than the layout has.
BrickworkLayout pad_layers(const BrickworkLayout& layout, int layers);

/// Versioned JSON document: rows, layers, angle grid, dependency lists.
std::string layout_to_json(const BrickworkLayout& layout, bool with_dependencies = true);
BrickworkLayout layout_from_json(const std::string& text);

inline constexpr int kLayoutFormatVersion = 1;

}  // namespace bqc::brickwork
