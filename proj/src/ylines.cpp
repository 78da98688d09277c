/**************************************************************************
 * ylines.cpp
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

#include "satgeom/ylines.hpp"

#include <algorithm>
#include <string>

#include "satgeom/error.hpp"

namespace satgeom::yl {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t config_key(const FieldTower &t, const Matrix &rows) {
    std::uint64_t h = mix(t.big().p(), t.big().degree());
    h = mix(h, t.sub_degree());
    for (const auto &r : rows) {
        h = mix(h, r.size());
        for (Elem x : r)
            h = mix(h, x);
    }
    return h;
}

// Steps an odometer of digits in [0, base); false after the last state.
bool next_digits(std::vector<std::size_t> &k, std::size_t base) {
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == base)
        k[i++] = 0;
    return i < k.size();
}

Elem side_from_big(const YConfig &cfg, Elem x) {
    return cfg.side().sigma[cfg.tower().sub_index(x)];
}

Elem big_from_side(const YConfig &cfg, Elem y) {
    int i = cfg.side().sigma_inv[y];
    if (i < 0)
        throw Error(Errc::BadDirection, "coordinate is not in the subfield");
    return cfg.tower().subfield()[i];
}

void check_same(const YLine &a, const YLine &b) {
    if (a.cfg_key != b.cfg_key)
        throw Error(Errc::ConfigMismatch, "lines belong to different configurations");
}

}  // namespace

YConfig::YConfig(const FieldTower &t, std::size_t n, Matrix basis)
    : tower_(std::make_shared<const FieldTower>(t)), side_(std::make_shared<Lazy>()) {
    const Field &f = t.big();
    if (basis.size() < 2)
        throw Error(Errc::BadParams, "configuration needs m >= 1");
    basis_ = LocalBasis(f, n, basis);
    space_ = pg::Subspace(f, n, basis);
    Matrix cb(basis.begin() + 1, basis.end());
    sigma_c_ = pg::Subspace(f, n, cb);
    c_ = Subgeometry(t, n, std::move(cb));
    key_ = config_key(t, basis);
}

YConfig YConfig::canonical(const FieldTower &t, std::size_t m) {
    return YConfig(t, m, pg::identity(m + 1));
}

YConfig YConfig::from_subgeometry(const FieldTower &t, const Subgeometry &c, const Point &origin) {
    if (c.span().contains(t.big(), origin))
        throw Error(Errc::PointOnHyperplane, "origin lies in the span of C");
    Matrix rows{origin.coords};
    rows.insert(rows.end(), c.basis().begin(), c.basis().end());
    return YConfig(t, c.ambient_dim(), std::move(rows));
}

const SideField &YConfig::side() const {
    std::call_once(side_->once, [this] {
        const FieldTower &t = *tower_;
        auto s = std::make_unique<SideField>();
        s->tower = gf::build_tower(t.big().p(), t.sub_degree(), static_cast<std::uint32_t>(m()));
        s->sigma = gf::subfield_isomorphism(t, s->tower);
        s->sigma_inv.assign(s->tower.big().order(), -1);
        for (std::size_t i = 0; i < s->sigma.size(); ++i)
            s->sigma_inv[s->sigma[i]] = static_cast<int>(i);
        side_->data = std::move(s);
    });
    return *side_->data;
}

Vec YConfig::local(const Point &x) const {
    const Field &f = field();
    auto l = basis_.to_local(f, x.coords);
    if (!l)
        throw Error(Errc::BadParams, "point lies outside the configuration space");
    if ((*l)[0] == 0)
        throw Error(Errc::PointOnHyperplane, "point lies in the span of C");
    Elem s = f.inv((*l)[0]);
    for (auto &v : *l)
        v = f.mul(v, s);
    return *l;
}

Point YConfig::from_local(std::span<const Elem> z) const {
    return basis_.point(field(), z);
}

std::vector<Point> YConfig::d_points() const {
    const SideField &s = side();
    const std::size_t r = rho();
    std::vector<Point> out;
    std::vector<std::size_t> k(r + 1, 0);
    while (next_digits(k, q_sub())) {
        Vec v(r + 2, 0);
        for (std::size_t j = 0; j <= r; ++j)
            v[j + 1] = s.sigma[k[j]];
        Point p = pg::make_point(s.tower.big(), std::move(v));
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Point phi(const Point &x, const YConfig &cfg) {
    const FieldTower &t = cfg.tower();
    const SideField &s = cfg.side();
    const Field &g = s.tower.big();
    Vec z = cfg.local(x);
    const std::size_t r = cfg.rho(), m = cfg.m();
    Vec y(r + 2, 0);
    y[0] = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        auto parts = t.decompose(z[i]);
        Elem b = g.exp(i - 1);
        for (std::size_t j = 0; j <= r; ++j)
            if (parts[j])
                y[j + 1] = g.add(y[j + 1], g.mul(side_from_big(cfg, parts[j]), b));
    }
    return Point{std::move(y)};
}

Point phi_inverse(const Point &y, const YConfig &cfg) {
    const FieldTower &t = cfg.tower();
    const SideField &s = cfg.side();
    const Field &g = s.tower.big();
    const std::size_t r = cfg.rho(), m = cfg.m();
    if (y.coords.size() != r + 2)
        throw Error(Errc::BadParams, "target point has the wrong dimension");
    if (y.coords[0] == 0)
        throw Error(Errc::PointOnHyperplane, "point lies at infinity");
    Elem sc = g.inv(y.coords[0]);
    std::vector<Vec> parts(m, Vec(r + 1, 0));
    for (std::size_t j = 0; j <= r; ++j) {
        // side components over the basis 1, beta, .., beta^(m-1)
        auto c = s.tower.decompose(g.mul(y.coords[j + 1], sc));
        for (std::size_t i = 0; i < m; ++i)
            parts[i][j] = big_from_side(cfg, c[i]);
    }
    Vec z(m + 1, 0);
    z[0] = 1;
    for (std::size_t i = 0; i < m; ++i)
        z[i + 1] = t.recompose(parts[i]);
    return cfg.from_local(z);
}

Vec delta_class(const FieldTower &t, Elem delta) {
    if (delta == 0)
        throw Error(Errc::BadDirection, "zero direction");
    return pg::normalize(t.big(), t.decompose(delta));
}

Point direction_point(const YConfig &cfg, Elem delta) {
    Vec d = delta_class(cfg.tower(), delta);
    Vec v(d.size() + 1, 0);
    for (std::size_t j = 0; j < d.size(); ++j)
        v[j + 1] = side_from_big(cfg, d[j]);
    return Point{std::move(v)};
}

Elem delta_of_direction(const YConfig &cfg, const Point &d) {
    const std::size_t r = cfg.rho();
    if (d.coords.size() != r + 2 || d.coords[0] != 0)
        throw Error(Errc::BadDirection, "direction must lie at infinity");
    Vec v = pg::normalize(cfg.side().tower.big(), d.coords);
    Vec parts(r + 1);
    for (std::size_t j = 0; j <= r; ++j)
        parts[j] = big_from_side(cfg, v[j + 1]);
    return cfg.tower().recompose(parts);
}

bool YLine::contains(const Point &x) const {
    return std::binary_search(points.begin(), points.end(), x);
}

YLine y_line_delta(const YConfig &cfg, const Point &f, Elem delta) {
    const FieldTower &t = cfg.tower();
    const Field &fl = t.big();
    YLine l;
    l.cfg_key = cfg.key();
    l.direction = delta_class(t, delta);
    l.delta = delta;
    Vec x = cfg.local(f);
    l.anchor = cfg.from_local(x);
    const std::size_t m = cfg.m();
    const auto &sub = t.subfield();
    std::vector<std::size_t> k(m, 0);
    do {
        Vec z = x;
        for (std::size_t i = 0; i < m; ++i)
            z[i + 1] = fl.add(x[i + 1], fl.mul(sub[k[i]], delta));
        l.points.push_back(cfg.from_local(z));
    } while (next_digits(k, sub.size()));
    std::sort(l.points.begin(), l.points.end());
    return l;
}

YLine y_line(const YConfig &cfg, const Point &f, const Point &direction) {
    return y_line_delta(cfg, f, delta_of_direction(cfg, direction));
}

YLine line_from_points(const YConfig &cfg, std::vector<Point> pts) {
    const Field &f = cfg.field();
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2)
        throw Error(Errc::BadIncidence, "too few affine points for a line");
    Vec x = cfg.local(pts[0]);
    Vec y = cfg.local(pts[1]);
    std::size_t i = 1;
    while (x[i] == y[i])
        ++i;
    YLine l = y_line_delta(cfg, pts[0], f.sub(y[i], x[i]));
    if (l.points != pts)
        throw Error(Errc::BadIncidence, "point set is not a line of the configuration");
    return l;
}

YLine line_from_subgeometry(const YConfig &cfg, const Subgeometry &b) {
    const Field &f = cfg.field();
    if (!(b.span() == cfg.space()))
        throw Error(Errc::BadIncidence, "subgeometry does not span the configuration space");
    std::vector<Point> aff;
    for (const auto &x : b.points()) {
        if (cfg.sigma_c().contains(f, x)) {
            if (!cfg.c().contains(x))
                throw Error(Errc::BadIncidence, "subgeometry does not contain C");
        } else {
            aff.push_back(x);
        }
    }
    return line_from_points(cfg, std::move(aff));
}

Subgeometry line_closure(const YConfig &cfg, const YLine &l) {
    if (l.cfg_key != cfg.key())
        throw Error(Errc::ConfigMismatch, "line belongs to another configuration");
    const Field &f = cfg.field();
    const std::size_t m = cfg.m();
    Vec x = cfg.local(l.anchor);
    Matrix rows{cfg.basis().to_ambient(f, x)};
    for (std::size_t i = 1; i <= m; ++i) {
        Vec u(m + 1, 0);
        u[i] = l.delta;
        rows.push_back(cfg.basis().to_ambient(f, u));
    }
    return Subgeometry(cfg.tower(), cfg.ambient_dim(), std::move(rows));
}

bool are_parallel(const YLine &a, const YLine &b) {
    check_same(a, b);
    return a.direction == b.direction;
}

bool are_independent(const YConfig &cfg, const std::vector<YLine> &lines) {
    if (lines.empty())
        throw Error(Errc::NotConcurrent, "no lines");
    for (const auto &l : lines)
        if (l.cfg_key != cfg.key())
            throw Error(Errc::ConfigMismatch, "line belongs to another configuration");
    std::vector<Point> common = lines[0].points;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<Point> next;
        std::set_intersection(common.begin(), common.end(), lines[i].points.begin(), lines[i].points.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (lines.size() > 1 && common.size() != 1)
        throw Error(Errc::NotConcurrent, "lines share " + std::to_string(common.size()) + " points");
    Matrix dirs;
    for (const auto &l : lines)
        dirs.push_back(l.direction);
    return pg::rank(cfg.field(), std::move(dirs)) == lines.size();
}

std::vector<Point> affine_subspace_points(const YConfig &cfg, const Point &base, const std::vector<Elem> &deltas) {
    const FieldTower &t = cfg.tower();
    const Field &f = t.big();
    Matrix dirs;
    for (Elem d : deltas)
        dirs.push_back(delta_class(t, d));
    if (pg::rank(f, dirs) != deltas.size())
        throw Error(Errc::BadDirection, "directions are dependent");
    const std::size_t m = cfg.m();
    const auto &sub = t.subfield();
    Vec x = cfg.local(base);
    std::vector<Point> out;
    std::vector<std::size_t> k(m * deltas.size(), 0);
    do {
        Vec z = x;
        for (std::size_t d = 0; d < deltas.size(); ++d)
            for (std::size_t i = 0; i < m; ++i)
                if (std::size_t c = k[d * m + i])
                    z[i + 1] = f.add(z[i + 1], f.mul(sub[c], deltas[d]));
        out.push_back(cfg.from_local(z));
    } while (next_digits(k, sub.size()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_affine_phi_subspace(const YConfig &cfg, const std::vector<Point> &pts, std::size_t d) {
    const SideField &s = cfg.side();
    const Field &g = s.tower.big();
    std::uint64_t want = 1;
    for (std::size_t i = 0; i < d; ++i)
        want *= g.order();
    std::vector<Point> img;
    for (const auto &x : pts)
        img.push_back(phi(x, cfg));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() != want || img.size() != pts.size())
        return false;
    const std::size_t n = cfg.rho() + 1;
    pg::Subspace flat = pg::span(g, n, img);
    if (flat.rank() != d + 1)
        return false;
    if (d == 0)
        return true;
    Matrix inf_rows;
    for (std::size_t i = 1; i <= n; ++i)
        inf_rows.push_back(pg::unit_point(n, i).coords);
    pg::Subspace at_inf = pg::meet(g, flat, pg::Subspace(g, n, std::move(inf_rows)));
    std::vector<Point> dpts;
    for (const auto &x : at_inf.points(g)) {
        bool real = std::all_of(x.coords.begin(), x.coords.end(),
                                [&](Elem e) { return s.sigma_inv[e] >= 0; });
        if (real)
            dpts.push_back(x);
    }
    return !dpts.empty() && pg::span(g, n, dpts) == at_inf;
}

ThreeHyperplanes make_three_hyperplanes(const FieldTower &t, const Subgeometry &c, const pg::Subspace &pi1,
                                        const pg::Subspace &pi2, const pg::Subspace &pi3) {
    const Field &f = t.big();
    ThreeHyperplanes h{c, {pi1, pi2, pi3}};
    pg::Subspace all = pg::span(f, pg::span(f, pi1, pi2), pi3);
    const int m = all.dim();
    if (c.dim() != m - 2)
        throw Error(Errc::DegenerateConfig, "C must have codimension 2 in the configuration space");
    for (int i = 0; i < 3; ++i) {
        if (h.pi[i].dim() != m - 1 || !h.pi[i].contains(f, c.span()))
            throw Error(Errc::DegenerateConfig, "each hyperplane must contain the span of C");
        for (int j = 0; j < i; ++j)
            if (h.pi[i] == h.pi[j])
                throw Error(Errc::DegenerateConfig, "hyperplanes coincide");
    }
    return h;
}

YConfig hyperplane_config(const FieldTower &t, const ThreeHyperplanes &h, int k) {
    const Field &f = t.big();
    for (const auto &row : h.pi[k].basis())
        if (!h.c.span().contains(f, row))
            return YConfig::from_subgeometry(t, h.c, pg::make_point(f, row));
    throw Error(Errc::DegenerateConfig, "hyperplane equals the span of C");
}

Subgeometry lift(const FieldTower &t, const ThreeHyperplanes &h, const Subgeometry &b, const Point &s) {
    const Field &f = t.big();
    const pg::Subspace &sc = h.c.span();
    if (!(b.span() == h.pi[0]))
        throw Error(Errc::DegenerateConfig, "B must span the first hyperplane");
    if (!h.pi[1].contains(f, s) || sc.contains(f, s))
        throw Error(Errc::DegenerateConfig, "S must lie in the second hyperplane off the span of C");
    auto r = std::find_if(b.points().begin(), b.points().end(), [&](const Point &x) { return !sc.contains(f, x); });
    const std::size_t n = b.ambient_dim();
    pg::Subspace rs = pg::span(f, n, {*r, s});
    pg::Subspace tt = pg::meet(f, rs, h.pi[2]);
    Point tp = pg::make_point(f, tt.basis().at(0));
    return sg::extend_by_subline(t, b, sg::subline(t, *r, s, tp));
}

namespace {

YLine trace_line(const FieldTower &t, const ThreeHyperplanes &h, const YConfig &cfg, const Subgeometry &a,
                 int k) {
    const Field &f = t.big();
    std::vector<Point> pts;
    for (const auto &x : a.points())
        if (h.pi[k].contains(f, x) && !h.c.span().contains(f, x))
            pts.push_back(x);
    return line_from_points(cfg, std::move(pts));
}

}  // namespace

YLine shadow(const FieldTower &t, const ThreeHyperplanes &h, const YConfig &cfg2, const Subgeometry &b,
             const Point &s) {
    return trace_line(t, h, cfg2, lift(t, h, b, s), 1);
}

YLine project(const FieldTower &t, const ThreeHyperplanes &h, const YConfig &cfg3, const Subgeometry &b,
              const Point &s) {
    return trace_line(t, h, cfg3, lift(t, h, b, s), 2);
}

IsoReport iso_check(std::size_t rho, std::size_t m, std::uint32_t q_sub) {
    FieldTower t = gf::tower_over(q_sub, static_cast<std::uint32_t>(rho + 1));
    const Field &f = t.big();
    YConfig cfg = YConfig::canonical(t, m);
    const Field &g = cfg.side().tower.big();
    IsoReport rep;

    std::vector<Point> affine;
    std::vector<std::size_t> k(m, 0);
    do {
        Vec z(m + 1, 0);
        z[0] = 1;
        for (std::size_t i = 0; i < m; ++i)
            z[i + 1] = static_cast<Elem>(k[i]);
        affine.push_back(cfg.from_local(z));
    } while (next_digits(k, f.order()));
    rep.points = affine.size();

    std::vector<Point> img;
    bool inverse_ok = true;
    for (const auto &x : affine) {
        Point y = phi(x, cfg);
        inverse_ok = inverse_ok && phi_inverse(y, cfg) == x;
        img.push_back(std::move(y));
    }
    std::sort(img.begin(), img.end());
    const bool distinct = std::adjacent_find(img.begin(), img.end()) == img.end();
    const bool affine_img = std::all_of(img.begin(), img.end(), [](const Point &y) { return y.coords[0] == 1; });
    std::uint64_t target = 1;
    for (std::size_t i = 0; i <= rho; ++i)
        target *= g.order();
    rep.bijection = inverse_ok && distinct && affine_img && img.size() == target;

    const auto dirs = cfg.d_points();
    std::vector<std::vector<Point>> seen;
    std::vector<YLine> lines;
    for (const auto &x : affine)
        for (const auto &d : dirs) {
            YLine l = y_line(cfg, x, d);
            if (std::find(seen.begin(), seen.end(), l.points) == seen.end()) {
                seen.push_back(l.points);
                lines.push_back(std::move(l));
            }
        }
    rep.lines = lines.size();
    std::uint64_t qm = 1, qsm = 1;
    for (std::size_t i = 0; i < m; ++i) {
        qm *= f.order();
        qsm *= q_sub;
    }
    rep.expected_lines = qm * pg::theta(static_cast<int>(rho), q_sub) / qsm;
    rep.lines_ok = rep.lines == rep.expected_lines;
    for (const auto &l : lines) {
        if (!rep.lines_ok)
            break;
        rep.lines_ok = l.points.size() == qsm && is_affine_phi_subspace(cfg, l.points, 1);
        if (!rep.lines_ok)
            break;
        std::vector<Point> li;
        for (const auto &x : l.points)
            li.push_back(phi(x, cfg));
        pg::Subspace flat = pg::span(g, rho + 1, li);
        rep.lines_ok = flat.contains(g, direction_point(cfg, l.delta));
    }

    std::vector<Vec> classes;
    std::vector<std::uint64_t> sizes;
    for (const auto &l : lines) {
        auto it = std::find(classes.begin(), classes.end(), l.direction);
        if (it == classes.end()) {
            classes.push_back(l.direction);
            sizes.push_back(1);
        } else {
            ++sizes[it - classes.begin()];
        }
    }
    rep.classes = classes.size();
    rep.classes_ok = rep.classes == dirs.size() &&
                     std::all_of(sizes.begin(), sizes.end(), [&](std::uint64_t c) { return c == qm / qsm; });
    return rep;
}

}  // namespace satgeom::yl
