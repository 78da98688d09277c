/**************************************************************************
 * projgeom.hpp
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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "satgeom/gftower.hpp"

namespace satgeom::pg {

using gf::Elem;
using gf::Field;
using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;  // row-major

// Homogeneous coordinates with leftmost nonzero entry equal to 1.
struct Point {
    Vec coords;

    std::size_t dim() const { return coords.size() - 1; }
    auto operator<=>(const Point &) const = default;
};

// Scales v so that its leftmost nonzero entry is 1. Throws BadParams on 0.
Vec normalize(const Field &f, Vec v);
Point make_point(const Field &f, Vec v);
Point unit_point(std::size_t n, std::size_t i);

// theta_n = (q^{n+1} - 1) / (q - 1); theta_{-1} = 0. Throws Overflow.
std::uint64_t theta(int n, std::uint64_t q);

// Dense rank of a point in enumeration order.
std::uint64_t point_rank(const Field &f, std::span<const Elem> normalized);
std::uint64_t point_rank(const Field &f, const Point &x);
Point point_unrank(const Field &f, std::size_t n, std::uint64_t rank);

// All points of PG(n, q) in increasing rank. Throws SizeLimit.
std::vector<Point> enumerate_points(std::size_t n, const Field &f);

// Row reduced echelon form in place; returns the rank.
std::size_t rref(const Field &f, Matrix &m);
std::size_t rank(const Field &f, Matrix m);
Matrix mat_mul(const Field &f, const Matrix &a, const Matrix &b);
Vec mat_vec(const Field &f, const Matrix &a, std::span<const Elem> v);
Matrix identity(std::size_t n);
// Throws RankDeficient when singular.
Matrix inverse(const Field &f, const Matrix &a);
// Basis of {x : m x = 0} in echelon form.
Matrix nullspace(const Field &f, const Matrix &m, std::size_t cols);

class Subspace {
public:
    Subspace() = default;
    Subspace(const Field &f, std::size_t n, Matrix rows);

    static Subspace whole(std::size_t n);
    static Subspace empty(std::size_t n) { return Subspace(n); }

    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    int dim() const { return static_cast<int>(basis_.size()) - 1; }
    const Matrix &basis() const { return basis_; }

    bool contains(const Field &f, std::span<const Elem> v) const;
    bool contains(const Field &f, const Point &x) const { return contains(f, x.coords); }
    bool contains(const Field &f, const Subspace &u) const;

    // Points of the subspace, in the order of their coefficient vectors.
    std::vector<Point> points(const Field &f) const;
    std::uint64_t point_count(const Field &f) const;

    bool operator==(const Subspace &) const = default;

private:
    explicit Subspace(std::size_t n) : n_(n) {}

    std::size_t n_ = 0;
    Matrix basis_;
};

Subspace span(const Field &f, std::size_t n, const std::vector<Point> &pts);
Subspace span(const Field &f, const Subspace &u, const Subspace &v);
Subspace span(const Field &f, const Subspace &u, const Point &x);
Subspace meet(const Field &f, const Subspace &u, const Subspace &v);

class Projectivity {
public:
    Projectivity() = default;
    // Throws RankDeficient on a singular matrix.
    Projectivity(const Field &f, Matrix m);

    const Matrix &matrix() const { return m_; }
    std::size_t dim() const { return m_.size() - 1; }

    Point apply(const Field &f, const Point &x) const;
    Vec apply_vec(const Field &f, std::span<const Elem> v) const;
    Projectivity compose(const Field &f, const Projectivity &after) const;
    Projectivity inverse(const Field &f) const;

private:
    Matrix m_;
};

Point apply(const Field &f, const Projectivity &g, const Point &x);

bool is_frame(const Field &f, const std::vector<Point> &pts, std::size_t n);

// The projectivity mapping src[i] to dst[i] for all i, scaled so its first
// nonzero entry is 1. Throws NotAFrame.
Projectivity frame_map(const Field &f, const std::vector<Point> &src, const std::vector<Point> &dst);

std::vector<Point> standard_frame(std::size_t n);

}  // namespace satgeom::pg
