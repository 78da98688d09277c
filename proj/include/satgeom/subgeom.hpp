/**************************************************************************
 * subgeom.hpp
 *
 * Copyright 2026 The satgeom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <optional>
#include <vector>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"

namespace satgeom::sg {

using gf::Elem;
using gf::Field;
using gf::FieldTower;
using pg::Matrix;
using pg::Point;
using pg::Vec;

// Ordered basis b_0..b_d of a d-space of PG(n, q).
class LocalBasis {
public:
    LocalBasis() = default;
    // Throws RankDeficient if the rows are dependent.
    LocalBasis(const Field &f, std::size_t n, Matrix rows);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size() - 1; }
    const Matrix &rows() const { return rows_; }

    Vec to_ambient(const Field &f, std::span<const Elem> local) const;
    Point point(const Field &f, std::span<const Elem> local) const;
    // Coefficients of v in this basis, or nullopt if v lies outside the span.
    std::optional<Vec> to_local(const Field &f, std::span<const Elem> v) const;

private:
    std::size_t n_ = 0;
    Matrix rows_;
    std::vector<std::size_t> cols_;  // columns where the basis is invertible
    Matrix solve_;
};

// The real points of a basis: all sum a_i b_i with a_i in GF(q').
class Subgeometry {
public:
    Subgeometry() = default;
    Subgeometry(const FieldTower &t, std::size_t n, Matrix basis);

    std::size_t ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()) - 1; }
    const Matrix &basis() const { return basis_; }
    const pg::Subspace &span() const { return span_; }
    // b_0, .., b_d, sum b_i
    std::vector<Point> frame(const Field &f) const;
    // Sorted.
    const std::vector<Point> &points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const Point &x) const;

    bool operator==(const Subgeometry &o) const { return points_ == o.points_; }

private:
    std::size_t n_ = 0;
    Matrix basis_;
    pg::Subspace span_;
    std::vector<Point> points_;
};

// True iff pts are d + 2 points spanning a d-space with every d + 1 of them
// independent.
bool is_frame_of_span(const Field &f, const std::vector<Point> &pts);

Subgeometry subgeometry_through_frame(const FieldTower &t, const std::vector<Point> &frame);
// Throws NotASubfieldPower unless q_sub^k = q.
Subgeometry subgeometry_through_frame(const Field &f, std::uint32_t q_sub,
                                      const std::vector<Point> &frame);

Subgeometry subline(const FieldTower &t, const Point &a, const Point &b, const Point &c);

// Points of B \ C for the unique subgeometry B through C, P and Q.
std::vector<Point> affine_part_points(const FieldTower &t, const Subgeometry &c, const Point &p,
                                      const Point &q);

Subgeometry extend_by_subline(const FieldTower &t, const Subgeometry &c, const Subgeometry &l);

bool hyperplane_trace_is_max_subgeometry(const FieldTower &t, const Subgeometry &b,
                                         const pg::Subspace &h);

// A basis of C's span, real for C, whose sum is the given point of C.
Matrix basis_summing_to(const FieldTower &t, const Subgeometry &c, const Point &e);

}  // namespace satgeom::sg
