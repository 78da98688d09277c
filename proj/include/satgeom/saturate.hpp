/**************************************************************************
 * saturate.hpp
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
#include <string>
#include <vector>

#include "satgeom/gftower.hpp"
#include "satgeom/projgeom.hpp"
#include "satgeom/subgeom.hpp"
#include "satgeom/ylines.hpp"

namespace satgeom::sat {

using gf::FieldTower;
using pg::Point;
using pg::Subspace;

// Where a point of a constructed set came from. Fields that do not apply to
// the kind stay 0.
struct Provenance {
    std::string kind;  // "petal", "p1prime" or "trivial-block"
    int level = 0;
    int petal = 0;
    int layer = 0;
    int index = 0;
    int block = 0;

    bool operator==(const Provenance &) const = default;
};

struct SaturatingSet {
    std::size_t n = 0;
    std::size_t rho = 0;
    FieldTower tower;
    std::vector<Point> points;  // distinct, in construction order
    std::vector<Provenance> provenance;

    std::size_t size() const { return points.size(); }
};

struct Flower {
    Subspace pistil;
    std::vector<Subspace> petals;

    // Petals contain the pistil, their span has dimension
    // dim(pistil) + |petals| and they meet exactly in the pistil.
    bool valid(const gf::Field &f) const;
};

// Canonical stack of flowers inside span{e_offset, .., e_n}. Indices are
// 0-based: sigmas[i - 1] is the pistil of layer i, petals[i - 1][j - 1] is
// tau_ij.
struct FlowerStack {
    std::size_t n = 0;
    std::size_t rho = 0;
    std::size_t offset = 0;
    std::size_t lambda = 0;
    std::vector<Subspace> sigmas;
    std::vector<sg::Subgeometry> cs;
    std::vector<std::vector<Subspace>> petals;
    std::vector<std::vector<Point>> anchors;

    Flower flower(std::size_t layer) const;
    // Local basis (e_{offset+j-1}, e_{offset+rho+i}, .., e_n) of tau_ij.
    pg::Matrix petal_basis(std::size_t layer, std::size_t petal) const;
};

// Number of subgeometries of petal j in layer i. Throws OutOfDomain.
int f_index(int j, int i, int rho, int lambda);

// Throws BadParams unless 0 < rho < n - offset.
FlowerStack build_flower_stack(std::size_t n, std::size_t rho, const FieldTower &t, std::size_t offset = 0);

// One chosen subgeometry B_ij^(k) of a petal.
struct PetalPiece {
    int layer = 0;
    int index = 0;
    yl::YLine line;
};

std::vector<PetalPiece> petal_pieces(const FlowerStack &stack, std::size_t j, const FieldTower &t);

// Affine parts of the chosen subgeometries of petal j, deduplicated.
SaturatingSet build_petal_set(const FlowerStack &stack, std::size_t j, const FieldTower &t, int level = 1);

// The extra layer-wise subgeometries used when q' = 2 and lambda >= 2.
// Throws SelectionFailed if a layer has no admissible hyperplane.
SaturatingSet build_p1_prime(const FlowerStack &stack, const FieldTower &t, int level = 1);

// All petal sets plus the q' = 2 patch for one level of the recursion.
SaturatingSet build_partial_set(std::size_t n, std::size_t rho, const FieldTower &t, std::size_t offset = 0,
                                int level = 1);

// Throws BadParams unless 0 < rho < n.
SaturatingSet build_saturating_set(std::size_t n, std::size_t rho, std::uint32_t q_sub);

// Full point sets of rho + 1 coordinate k-spaces partitioning the basis.
// Throws NotDivisible unless rho + 1 divides n + 1.
SaturatingSet build_trivial_set(std::size_t n, std::size_t rho, const gf::Field &field);
SaturatingSet build_trivial_set(std::size_t n, std::size_t rho, const FieldTower &t);

}  // namespace satgeom::sat
