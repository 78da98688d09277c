/**************************************************************************
 * projgeom.cpp
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

#include "satgeom/projgeom.hpp"

#include <string>

#include "satgeom/error.hpp"

namespace satgeom::pg {

Vec normalize(const Field &f, Vec v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0)
        ++i;
    if (i == v.size())
        throw Error(Errc::BadParams, "zero vector is not a point");
    if (v[i] != 1) {
        Elem s = f.inv(v[i]);
        for (std::size_t j = i; j < v.size(); ++j)
            v[j] = f.mul(v[j], s);
    }
    return v;
}

Point make_point(const Field &f, Vec v) { return Point{normalize(f, std::move(v))}; }

Point unit_point(std::size_t n, std::size_t i) {
    Point x{Vec(n + 1, 0)};
    x.coords.at(i) = 1;
    return x;
}

std::uint64_t theta(int n, std::uint64_t q) {
    if (n < 0)
        return 0;
    std::uint64_t sum = 0, pw = 1;
    for (int i = 0; i <= n; ++i) {
        if (sum > UINT64_MAX - pw)
            throw Error(Errc::Overflow, "theta overflows 64 bits");
        sum += pw;
        if (i < n) {
            if (pw > UINT64_MAX / q)
                throw Error(Errc::Overflow, "theta overflows 64 bits");
            pw *= q;
        }
    }
    return sum;
}

std::uint64_t point_rank(const Field &f, std::span<const Elem> v) {
    const std::size_t n = v.size() - 1;
    std::size_t i = 0;
    while (v[i] == 0)
        ++i;
    std::uint64_t tail = 0;
    for (std::size_t j = i + 1; j <= n; ++j)
        tail = tail * f.order() + v[j];
    return theta(static_cast<int>(n - i) - 1, f.order()) + tail;
}

std::uint64_t point_rank(const Field &f, const Point &x) { return point_rank(f, x.coords); }

Point point_unrank(const Field &f, std::size_t n, std::uint64_t rank) {
    const std::uint64_t q = f.order();
    for (std::size_t i = n + 1; i-- > 0;) {
        std::uint64_t lo = theta(static_cast<int>(n - i) - 1, q);
        std::uint64_t hi = theta(static_cast<int>(n - i), q);
        if (rank < hi) {
            Point x{Vec(n + 1, 0)};
            x.coords[i] = 1;
            std::uint64_t tail = rank - lo;
            for (std::size_t j = n; j > i; --j) {
                x.coords[j] = static_cast<Elem>(tail % q);
                tail /= q;
            }
            return x;
        }
    }
    throw Error(Errc::BadParams, "rank out of range");
}

std::vector<Point> enumerate_points(std::size_t n, const Field &f) {
    const std::uint64_t count = theta(static_cast<int>(n), f.order());
    if (count > point_cap())
        throw Error(Errc::SizeLimit, "PG(" + std::to_string(n) + "," + std::to_string(f.order()) +
                                         ") has " + std::to_string(count) + " points");
    std::vector<Point> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r)
        out.push_back(point_unrank(f, n, r));
    return out;
}

std::size_t rref(const Field &f, Matrix &m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[r], m[piv]);
        if (m[r][c] != 1) {
            Elem s = f.inv(m[r][c]);
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = f.mul(m[r][j], s);
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Elem t = f.neg(m[i][c]);
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j])
                    m[i][j] = f.add(m[i][j], f.mul(t, m[r][j]));
        }
        ++r;
    }
    m.resize(r);
    return r;
}

std::size_t rank(const Field &f, Matrix m) { return rref(f, m); }

Matrix mat_mul(const Field &f, const Matrix &a, const Matrix &b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            Elem x = a[i][t];
            if (!x)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j])
                    c[i][j] = f.add(c[i][j], f.mul(x, b[t][j]));
        }
    return c;
}

Vec mat_vec(const Field &f, const Matrix &a, std::span<const Elem> v) {
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] && v[j])
                acc = f.add(acc, f.mul(a[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

Matrix identity(std::size_t n) {
    Matrix m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Matrix inverse(const Field &f, const Matrix &a) {
    const std::size_t n = a.size();
    Matrix aug(n, Vec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    rref(f, aug);
    if (aug.size() < n)
        throw Error(Errc::RankDeficient, "matrix is singular");
    for (std::size_t i = 0; i < n; ++i)
        if (aug[i][i] != 1)
            throw Error(Errc::RankDeficient, "matrix is singular");
    Matrix inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    return inv;
}

Matrix nullspace(const Field &f, const Matrix &m, std::size_t cols) {
    Matrix r = m;
    rref(f, r);
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::size_t c = 0;
        while (r[i][c] == 0)
            ++c;
        pivot_of_col[c] = static_cast<int>(i);
    }
    Matrix out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0)
            continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = f.neg(r[pivot_of_col[c]][free]);
        out.push_back(std::move(v));
    }
    rref(f, out);
    return out;
}

Subspace::Subspace(const Field &f, std::size_t n, Matrix rows) : n_(n), basis_(std::move(rows)) {
    for (const auto &r : basis_)
        if (r.size() != n + 1)
            throw Error(Errc::BadParams, "row length does not match ambient dimension");
    rref(f, basis_);
}

Subspace Subspace::whole(std::size_t n) {
    Subspace s(n);
    s.basis_ = identity(n + 1);
    return s;
}

bool Subspace::contains(const Field &f, std::span<const Elem> v) const {
    Vec w(v.begin(), v.end());
    for (const auto &row : basis_) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        if (w[c] == 0)
            continue;
        Elem t = f.neg(w[c]);
        for (std::size_t j = c; j <= n_; ++j)
            if (row[j])
                w[j] = f.add(w[j], f.mul(t, row[j]));
    }
    for (auto x : w)
        if (x)
            return false;
    return true;
}

bool Subspace::contains(const Field &f, const Subspace &u) const {
    for (const auto &row : u.basis_)
        if (!contains(f, row))
            return false;
    return true;
}

std::uint64_t Subspace::point_count(const Field &f) const { return theta(dim(), f.order()); }

std::vector<Point> Subspace::points(const Field &f) const {
    const std::size_t r = basis_.size();
    const Elem q = f.order();
    std::vector<Point> out;
    if (point_count(f) > point_cap())
        throw Error(Errc::SizeLimit, "subspace has too many points");
    out.reserve(point_count(f));
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::vector<Elem> c(r - lead - 1, 0);
        while (true) {
            Vec v = basis_[lead];
            for (std::size_t t = 0; t < c.size(); ++t) {
                if (!c[t])
                    continue;
                const Vec &row = basis_[lead + 1 + t];
                for (std::size_t j = 0; j <= n_; ++j)
                    if (row[j])
                        v[j] = f.add(v[j], f.mul(c[t], row[j]));
            }
            out.push_back(Point{std::move(v)});
            std::size_t t = 0;
            while (t < c.size() && ++c[t] == q)
                c[t++] = 0;
            if (t == c.size())
                break;
        }
    }
    return out;
}

Subspace span(const Field &f, std::size_t n, const std::vector<Point> &pts) {
    Matrix m;
    m.reserve(pts.size());
    for (const auto &p : pts)
        m.push_back(p.coords);
    return Subspace(f, n, std::move(m));
}

Subspace span(const Field &f, const Subspace &u, const Subspace &v) {
    Matrix m = u.basis();
    m.insert(m.end(), v.basis().begin(), v.basis().end());
    return Subspace(f, u.ambient_dim(), std::move(m));
}

Subspace span(const Field &f, const Subspace &u, const Point &x) {
    Matrix m = u.basis();
    m.push_back(x.coords);
    return Subspace(f, u.ambient_dim(), std::move(m));
}

Subspace meet(const Field &f, const Subspace &u, const Subspace &v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw Error(Errc::BadParams, "ambient dimensions differ");
    const std::size_t cols = u.ambient_dim() + 1;
    Matrix ann = nullspace(f, u.basis(), cols);
    Matrix annv = nullspace(f, v.basis(), cols);
    ann.insert(ann.end(), annv.begin(), annv.end());
    return Subspace(f, u.ambient_dim(), nullspace(f, ann, cols));
}

Projectivity::Projectivity(const Field &f, Matrix m) : m_(std::move(m)) {
    if (m_.empty() || rank(f, m_) != m_.size())
        throw Error(Errc::RankDeficient, "projectivity matrix is singular");
}

Vec Projectivity::apply_vec(const Field &f, std::span<const Elem> v) const { return mat_vec(f, m_, v); }

Point Projectivity::apply(const Field &f, const Point &x) const {
    if (x.coords.size() != m_.size())
        throw Error(Errc::BadParams, "dimension mismatch");
    return make_point(f, mat_vec(f, m_, x.coords));
}

Projectivity Projectivity::compose(const Field &f, const Projectivity &after) const {
    return Projectivity(f, mat_mul(f, after.m_, m_));
}

Projectivity Projectivity::inverse(const Field &f) const { return Projectivity(f, pg::inverse(f, m_)); }

Point apply(const Field &f, const Projectivity &g, const Point &x) { return g.apply(f, x); }

bool is_frame(const Field &f, const std::vector<Point> &pts, std::size_t n) {
    if (pts.size() != n + 2)
        throw Error(Errc::WrongCount, "a frame of PG(" + std::to_string(n) + ") has " +
                                          std::to_string(n + 2) + " points");
    for (const auto &p : pts)
        if (p.coords.size() != n + 1)
            return false;
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        Matrix m;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != skip)
                m.push_back(pts[i].coords);
        if (rank(f, std::move(m)) != n + 1)
            return false;
    }
    return true;
}

namespace {

// Columns c_i P_i, with sum c_i P_i = P_{n+1}.
Matrix frame_basis(const Field &f, const std::vector<Point> &fr) {
    const std::size_t n1 = fr.size() - 1;
    Matrix cols(n1, Vec(n1));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            cols[j][i] = fr[i].coords[j];
    Vec c = mat_vec(f, inverse(f, cols), fr.back().coords);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            cols[j][i] = f.mul(cols[j][i], c[i]);
    return cols;
}

}  // namespace

Projectivity frame_map(const Field &f, const std::vector<Point> &src, const std::vector<Point> &dst) {
    if (src.empty() || src.size() != dst.size())
        throw Error(Errc::NotAFrame, "frames differ in size");
    const std::size_t n = src.size() - 2;
    if (!is_frame(f, src, n) || !is_frame(f, dst, n))
        throw Error(Errc::NotAFrame, "input is not a frame");
    Matrix m = mat_mul(f, frame_basis(f, dst), inverse(f, frame_basis(f, src)));
    Elem lead = 0;
    for (const auto &row : m) {
        for (auto x : row)
            if (x) {
                lead = x;
                break;
            }
        if (lead)
            break;
    }
    Elem s = f.inv(lead);
    for (auto &row : m)
        for (auto &x : row)
            x = f.mul(x, s);
    return Projectivity(f, std::move(m));
}

std::vector<Point> standard_frame(std::size_t n) {
    std::vector<Point> fr;
    for (std::size_t i = 0; i <= n; ++i)
        fr.push_back(unit_point(n, i));
    fr.push_back(Point{Vec(n + 1, 1)});
    return fr;
}

}  // namespace satgeom::pg
