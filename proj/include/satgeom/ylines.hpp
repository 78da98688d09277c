/**************************************************************************
 * ylines.hpp
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

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"
#include "satgeom/subgeom.hpp"

namespace satgeom::yl {

using gf::Elem;
using gf::Field;
using gf::FieldTower;
using pg::Matrix;
using pg::Point;
using pg::Vec;
using sg::LocalBasis;
using sg::Subgeometry;

// The side field GF(q'^m) with its primitive beta and the transport of
// subfield elements between the two towers.
struct SideField {
    FieldTower tower;
    std::vector<Elem> sigma;      // big-subfield index -> side element
    std::vector<int> sigma_inv;   // side element -> big-subfield index, or -1
};

// An m-space of PG(n, q) with basis b_0..b_m; C is the real subgeometry of
// b_1..b_m. Local coordinates (1, z_1, .., z_m) address the affine points.
class YConfig {
public:
    YConfig() = default;
    YConfig(const FieldTower &t, std::size_t n, Matrix basis);

    static YConfig canonical(const FieldTower &t, std::size_t m);
    // C of dimension m - 1; origin is any point of the m-space off span(C).
    static YConfig from_subgeometry(const FieldTower &t, const Subgeometry &c, const Point &origin);

    const FieldTower &tower() const { return *tower_; }
    const Field &field() const { return tower_->big(); }
    std::size_t m() const { return basis_.dim(); }
    std::size_t rho() const { return tower_->ext_degree() - 1; }
    std::uint32_t q_sub() const { return tower_->q_sub(); }
    std::size_t ambient_dim() const { return basis_.ambient_dim(); }
    const LocalBasis &basis() const { return basis_; }
    const pg::Subspace &space() const { return space_; }
    const pg::Subspace &sigma_c() const { return sigma_c_; }
    const Subgeometry &c() const { return c_; }
    std::uint64_t key() const { return key_; }

    // Builds GF(q'^m) on first use. Throws NoModulus if it is not shipped.
    const SideField &side() const;

    // (1, z_1, .., z_m); throws PointOnHyperplane on span(C), BadParams off
    // the space.
    Vec local(const Point &x) const;
    Point from_local(std::span<const Elem> z) const;

    // Points of D: (0, a_0, .., a_rho) with a in GF(q'), in target coordinates.
    std::vector<Point> d_points() const;

private:
    std::shared_ptr<const FieldTower> tower_;
    LocalBasis basis_;
    pg::Subspace space_;
    pg::Subspace sigma_c_;
    Subgeometry c_;
    std::uint64_t key_ = 0;

    struct Lazy {
        std::once_flag once;
        std::unique_ptr<SideField> data;
    };
    std::shared_ptr<Lazy> side_;
};

Point phi(const Point &x, const YConfig &cfg);
Point phi_inverse(const Point &y, const YConfig &cfg);

// Normalized GF(q') coordinates (in big-field elements) of a nonzero delta.
Vec delta_class(const FieldTower &t, Elem delta);
// Direction point (0, sigma(decompose(delta))) of the target.
Point direction_point(const YConfig &cfg, Elem delta);
// Inverse of direction_point; throws BadDirection unless d is a point of D.
Elem delta_of_direction(const YConfig &cfg, const Point &d);

struct YLine {
    std::uint64_t cfg_key = 0;
    Point anchor;          // a point of the line
    Elem delta = 0;        // local difference generator
    Vec direction;         // delta_class(delta)
    std::vector<Point> points;  // sorted

    bool contains(const Point &x) const;
};

YLine y_line(const YConfig &cfg, const Point &f, const Point &direction);
YLine y_line_delta(const YConfig &cfg, const Point &f, Elem delta);
// The element of the line set whose points are B \ C. Throws BadIncidence
// unless B is a full subgeometry of the space containing C.
YLine line_from_subgeometry(const YConfig &cfg, const Subgeometry &b);
// Same, from the affine point set alone.
YLine line_from_points(const YConfig &cfg, std::vector<Point> pts);
// B = line points plus C, as a subgeometry.
Subgeometry line_closure(const YConfig &cfg, const YLine &l);

bool are_parallel(const YLine &a, const YLine &b);
bool are_independent(const YConfig &cfg, const std::vector<YLine> &lines);

// Affine subspace through base spanned by GF(q')-independent deltas.
std::vector<Point> affine_subspace_points(const YConfig &cfg, const Point &base, const std::vector<Elem> &deltas);
// True iff pts is a d-dimensional affine phi-subspace: its phi-image is the
// affine part of a d-flat meeting the hyperplane at infinity in a span of
// D-points.
bool is_affine_phi_subspace(const YConfig &cfg, const std::vector<Point> &pts, std::size_t d);

// Three distinct hyperplanes of an m-space through span(C), dim C = m - 2.
struct ThreeHyperplanes {
    Subgeometry c;
    pg::Subspace pi[3];
};

ThreeHyperplanes make_three_hyperplanes(const FieldTower &t, const Subgeometry &c, const pg::Subspace &pi1,
                                        const pg::Subspace &pi2, const pg::Subspace &pi3);
// Line-set configuration of hyperplane k (0-based) over C.
YConfig hyperplane_config(const FieldTower &t, const ThreeHyperplanes &h, int k);

// The unique full subgeometry containing B and S and meeting pi3 off span(C).
Subgeometry lift(const FieldTower &t, const ThreeHyperplanes &h, const Subgeometry &b, const Point &s);
YLine shadow(const FieldTower &t, const ThreeHyperplanes &h, const YConfig &cfg2, const Subgeometry &b,
             const Point &s);
YLine project(const FieldTower &t, const ThreeHyperplanes &h, const YConfig &cfg3, const Subgeometry &b,
              const Point &s);

// Exhaustive certification that phi carries the line set of the canonical
// configuration onto the linear representation.
struct IsoReport {
    bool bijection = false;
    std::uint64_t points = 0;
    bool lines_ok = false;
    std::uint64_t lines = 0;
    std::uint64_t expected_lines = 0;
    bool classes_ok = false;
    std::uint64_t classes = 0;

    bool ok() const { return bijection && lines_ok && classes_ok; }
};

IsoReport iso_check(std::size_t rho, std::size_t m, std::uint32_t q_sub);

}  // namespace satgeom::yl
