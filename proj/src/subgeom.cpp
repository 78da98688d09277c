/**************************************************************************
 * subgeom.cpp
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

#include "satgeom/subgeom.hpp"

#include <algorithm>
#include <string>

#include "satgeom/error.hpp"

namespace satgeom::sg {

LocalBasis::LocalBasis(const Field &f, std::size_t n, Matrix rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.empty())
        throw Error(Errc::BadParams, "empty basis");
    Matrix r = rows_;
    if (pg::rref(f, r) != rows_.size())
        throw Error(Errc::RankDeficient, "basis rows are dependent");
    for (const auto &row : r) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        cols_.push_back(c);
    }
    const std::size_t d1 = rows_.size();
    Matrix sub(d1, Vec(d1));
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            sub[i][j] = rows_[i][cols_[j]];
    solve_ = pg::inverse(f, sub);
}

Vec LocalBasis::to_ambient(const Field &f, std::span<const Elem> local) const {
    Vec v(n_ + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!local[i])
            continue;
        for (std::size_t j = 0; j <= n_; ++j)
            if (rows_[i][j])
                v[j] = f.add(v[j], f.mul(local[i], rows_[i][j]));
    }
    return v;
}

Point LocalBasis::point(const Field &f, std::span<const Elem> local) const {
    return pg::make_point(f, to_ambient(f, local));
}

std::optional<Vec> LocalBasis::to_local(const Field &f, std::span<const Elem> v) const {
    const std::size_t d1 = rows_.size();
    Vec l(d1, 0);
    for (std::size_t j = 0; j < d1; ++j) {
        Elem acc = 0;
        for (std::size_t i = 0; i < d1; ++i)
            if (v[cols_[i]] && solve_[i][j])
                acc = f.add(acc, f.mul(v[cols_[i]], solve_[i][j]));
        l[j] = acc;
    }
    Vec back = to_ambient(f, l);
    if (!std::equal(back.begin(), back.end(), v.begin(), v.end()))
        return std::nullopt;
    return l;
}

Subgeometry::Subgeometry(const FieldTower &t, std::size_t n, Matrix basis)
    : n_(n), basis_(std::move(basis)), span_(t.big(), n, basis_) {
    const Field &f = t.big();
    if (basis_.empty() || span_.rank() != basis_.size())
        throw Error(Errc::RankDeficient, "subgeometry basis is dependent");
    const auto &sub = t.subfield();
    const std::uint64_t count = pg::theta(dim(), t.q_sub());
    if (count > point_cap())
        throw Error(Errc::SizeLimit, "subgeometry has too many points");
    points_.reserve(count);
    const std::size_t r = basis_.size();
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::vector<std::size_t> c(r - lead - 1, 0);
        while (true) {
            Vec v = basis_[lead];
            for (std::size_t i = 0; i < c.size(); ++i) {
                Elem a = sub[c[i]];
                if (!a)
                    continue;
                const Vec &row = basis_[lead + 1 + i];
                for (std::size_t j = 0; j <= n_; ++j)
                    if (row[j])
                        v[j] = f.add(v[j], f.mul(a, row[j]));
            }
            points_.push_back(pg::make_point(f, std::move(v)));
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == sub.size())
                c[i++] = 0;
            if (i == c.size())
                break;
        }
    }
    std::sort(points_.begin(), points_.end());
}

std::vector<Point> Subgeometry::frame(const Field &f) const {
    std::vector<Point> fr;
    Vec sum(n_ + 1, 0);
    for (const auto &b : basis_) {
        fr.push_back(pg::make_point(f, b));
        for (std::size_t j = 0; j <= n_; ++j)
            sum[j] = f.add(sum[j], b[j]);
    }
    fr.push_back(pg::make_point(f, std::move(sum)));
    return fr;
}

bool Subgeometry::contains(const Point &x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

bool is_frame_of_span(const Field &f, const std::vector<Point> &pts) {
    if (pts.size() < 2)
        return false;
    const std::size_t d1 = pts.size() - 1;
    Matrix all;
    for (const auto &p : pts)
        all.push_back(p.coords);
    if (pg::rank(f, all) != d1)
        return false;
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        Matrix m;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != skip)
                m.push_back(pts[i].coords);
        if (pg::rank(f, std::move(m)) != d1)
            return false;
    }
    return true;
}

Subgeometry subgeometry_through_frame(const FieldTower &t, const std::vector<Point> &frame) {
    const Field &f = t.big();
    if (!is_frame_of_span(f, frame))
        throw Error(Errc::NotAFrame, "points are not a frame of their span");
    const std::size_t n = frame[0].dim();
    Matrix cols(n + 1, Vec(frame.size()));
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = 0; j <= n; ++j)
            cols[j][i] = frame[i].coords[j];
    Matrix ns = pg::nullspace(f, cols, frame.size());
    const Vec &v = ns.at(0);
    Matrix basis;
    for (std::size_t i = 0; i + 1 < frame.size(); ++i) {
        Vec b = frame[i].coords;
        for (auto &x : b)
            x = f.mul(x, v[i]);
        basis.push_back(std::move(b));
    }
    return Subgeometry(t, n, std::move(basis));
}

Subgeometry subgeometry_through_frame(const Field &f, std::uint32_t q_sub, const std::vector<Point> &frame) {
    std::uint32_t e = 0;
    std::uint64_t x = 1;
    while (x < q_sub) {
        x *= f.p();
        ++e;
    }
    if (x != q_sub || e == 0 || f.degree() % e != 0)
        throw Error(Errc::NotASubfieldPower,
                    std::to_string(q_sub) + " is not a subfield order of GF(" + std::to_string(f.order()) + ")");
    return subgeometry_through_frame(FieldTower(f, e), frame);
}

Subgeometry subline(const FieldTower &t, const Point &a, const Point &b, const Point &c) {
    return subgeometry_through_frame(t, {a, b, c});
}

Matrix basis_summing_to(const FieldTower &t, const Subgeometry &c, const Point &e) {
    const Field &f = t.big();
    if (!c.contains(e))
        throw Error(Errc::BadIncidence, "point is not in the subgeometry");
    LocalBasis lb(f, c.ambient_dim(), c.basis());
    Vec l = pg::normalize(f, *lb.to_local(f, e.coords));
    const std::size_t m = l.size();
    std::size_t k = 0;
    while (l[k] == 0)
        ++k;
    Matrix out;
    for (std::size_t i = 0; i < m; ++i) {
        Vec u(m, 0);
        if (i == k) {
            u = l;
            for (std::size_t j = 0; j < m; ++j)
                if (j != k)
                    u[j] = f.sub(u[j], 1);
        } else {
            u[i] = 1;
        }
        out.push_back(lb.to_ambient(f, u));
    }
    return out;
}

std::vector<Point> affine_part_points(const FieldTower &t, const Subgeometry &c, const Point &p, const Point &q) {
    const Field &f = t.big();
    const std::size_t n = c.ambient_dim();
    if (c.span().contains(f, p) || c.span().contains(f, q) || p == q)
        throw Error(Errc::BadConfiguration, "P and Q must be distinct points off the span of C");
    pg::Subspace line = pg::span(f, n, {p, q});
    pg::Subspace big = pg::span(f, c.span(), p);
    if (!big.contains(f, q))
        throw Error(Errc::BadConfiguration, "Q is not in the span of C and P");
    pg::Subspace e = pg::meet(f, line, c.span());
    Point ep = pg::make_point(f, e.basis().at(0));
    if (!c.contains(ep))
        throw Error(Errc::BadConfiguration, "PQ does not meet the span of C in a point of C");

    Matrix rows{p.coords};
    Matrix cb = basis_summing_to(t, c, ep);
    rows.insert(rows.end(), cb.begin(), cb.end());
    LocalBasis lb(f, n, rows);
    Vec x = pg::normalize(f, *lb.to_local(f, p.coords));
    Vec y = pg::normalize(f, *lb.to_local(f, q.coords));
    const std::size_t m = rows.size() - 1;
    const Elem d = f.sub(y[1], x[1]);

    const auto &sub = t.subfield();
    std::vector<Point> out;
    std::vector<std::size_t> k(m, 0);
    while (true) {
        Vec local(m + 1);
        local[0] = 1;
        for (std::size_t i = 1; i <= m; ++i)
            local[i] = f.add(x[i], f.mul(sub[k[i - 1]], d));
        out.push_back(lb.point(f, local));
        std::size_t i = 0;
        while (i < m && ++k[i] == sub.size())
            k[i++] = 0;
        if (i == m)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgeometry extend_by_subline(const FieldTower &t, const Subgeometry &c, const Subgeometry &l) {
    const Field &f = t.big();
    if (l.dim() != 1)
        throw Error(Errc::BadIncidence, "L must be a subline");
    if (c.span().contains(f, l.span()))
        throw Error(Errc::BadIncidence, "span of L lies in the span of C");
    std::vector<Point> common;
    for (const auto &x : l.points())
        if (c.contains(x))
            common.push_back(x);
    if (common.size() != 1)
        throw Error(Errc::BadIncidence, "L meets C in " + std::to_string(common.size()) + " points");
    const Point &e = common[0];

    LocalBasis cb(f, c.ambient_dim(), c.basis());
    Vec ev = cb.to_ambient(f, pg::normalize(f, *cb.to_local(f, e.coords)));

    LocalBasis lbas(f, l.ambient_dim(), l.basis());
    Vec u = lbas.to_ambient(f, pg::normalize(f, *lbas.to_local(f, e.coords)));
    Vec w;
    for (Vec cand : {l.basis()[0], l.basis()[1]}) {
        if (pg::make_point(f, cand) != e) {
            w = cand;
            break;
        }
    }
    std::size_t j = 0;
    while (u[j] == 0)
        ++j;
    const Elem kappa = f.div(ev[j], u[j]);
    for (auto &x : w)
        x = f.mul(x, kappa);

    Matrix basis{w};
    basis.insert(basis.end(), c.basis().begin(), c.basis().end());
    return Subgeometry(t, c.ambient_dim(), std::move(basis));
}

bool hyperplane_trace_is_max_subgeometry(const FieldTower &t, const Subgeometry &b, const pg::Subspace &h) {
    const Field &f = t.big();
    std::vector<Point> trace;
    for (const auto &x : b.points())
        if (h.contains(f, x))
            trace.push_back(x);
    if (trace.size() != pg::theta(b.dim() - 1, t.q_sub()))
        return false;
    return pg::span(f, b.ambient_dim(), trace) == h;
}

}  // namespace satgeom::sg
