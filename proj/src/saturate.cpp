/**************************************************************************
 * saturate.cpp
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

#include "satgeom/saturate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "satgeom/error.hpp"

namespace satgeom::sat {

namespace {

using pg::Matrix;
using pg::Vec;

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n + 1, 0);
    v[i] = 1;
    return v;
}

// Appends points not seen before, keeping construction order.
class Collector {
public:
    explicit Collector(SaturatingSet &out) : out_(out), seen_(out.points.begin(), out.points.end()) {}

    void add(const Point &x, const Provenance &tag) {
        if (seen_.insert(x).second) {
            out_.points.push_back(x);
            out_.provenance.push_back(tag);
        }
    }

private:
    SaturatingSet &out_;
    std::set<Point> seen_;
};

SaturatingSet empty_set(std::size_t n, std::size_t rho, const FieldTower &t) {
    SaturatingSet s;
    s.n = n;
    s.rho = rho;
    s.tower = t;
    return s;
}

void append(SaturatingSet &dst, const SaturatingSet &src) {
    Collector c(dst);
    for (std::size_t i = 0; i < src.points.size(); ++i)
        c.add(src.points[i], src.provenance[i]);
}

}  // namespace

bool Flower::valid(const gf::Field &f) const {
    if (petals.empty())
        return false;
    Subspace all = petals[0], common = petals[0];
    for (const auto &p : petals) {
        if (!p.contains(f, pistil) || p.dim() != pistil.dim() + 1)
            return false;
        all = pg::span(f, all, p);
        common = pg::meet(f, common, p);
    }
    return all.dim() == pistil.dim() + static_cast<int>(petals.size()) && common == pistil;
}

Flower FlowerStack::flower(std::size_t layer) const {
    return Flower{sigmas.at(layer - 1), petals.at(layer - 1)};
}

Matrix FlowerStack::petal_basis(std::size_t layer, std::size_t petal) const {
    Matrix rows{unit(n, offset + petal - 1)};
    for (std::size_t c = offset + rho + layer; c <= n; ++c)
        rows.push_back(unit(n, c));
    return rows;
}

int f_index(int j, int i, int rho, int lambda) {
    if (lambda < 1 || lambda > rho || j < rho + 2 - lambda || j > rho + 1 || i < 1 || i > lambda)
        throw Error(Errc::OutOfDomain, "f_index(" + std::to_string(j) + ", " + std::to_string(i) + ") outside rho=" +
                                           std::to_string(rho) + " lambda=" + std::to_string(lambda));
    return j + i - 1 <= rho + 1 ? j + i - 1 : rho + 2 - i;
}

FlowerStack build_flower_stack(std::size_t n, std::size_t rho, const FieldTower &t, std::size_t offset) {
    if (offset >= n || rho == 0 || rho >= n - offset)
        throw Error(Errc::BadParams, "need 0 < rho < n");
    if (t.ext_degree() != rho + 1)
        throw Error(Errc::BadParams, "tower degree must be rho + 1");
    const gf::Field &f = t.big();
    FlowerStack s;
    s.n = n;
    s.rho = rho;
    s.offset = offset;
    const std::size_t local_n = n - offset;
    s.lambda = std::min(rho, local_n - rho);
    for (std::size_t i = 1; i <= s.lambda; ++i) {
        Matrix sig;
        for (std::size_t c = offset + rho + i; c <= n; ++c)
            sig.push_back(unit(n, c));
        s.sigmas.emplace_back(f, n, sig);
        s.cs.emplace_back(t, n, sig);
        std::vector<Subspace> layer;
        std::vector<Point> anchors;
        for (std::size_t j = 1; j <= rho + 1; ++j) {
            layer.emplace_back(f, n, s.petal_basis(i, j));
            Vec a = unit(n, offset + j - 1);
            a[offset + rho + i] = 1;
            anchors.push_back(Point{a});
        }
        s.petals.push_back(std::move(layer));
        s.anchors.push_back(std::move(anchors));
    }
    return s;
}

std::vector<PetalPiece> petal_pieces(const FlowerStack &stack, std::size_t j, const FieldTower &t) {
    const int rho = static_cast<int>(stack.rho), lambda = static_cast<int>(stack.lambda);
    if (j < 1 || static_cast<int>(j) > rho + 1)
        throw Error(Errc::BadParams, "petal index out of range");
    const gf::Field &f = t.big();
    std::vector<PetalPiece> out;
    const bool single = static_cast<int>(j) <= rho + 1 - lambda;
    const int layers = single ? 1 : lambda;
    for (int i = 1; i <= layers; ++i) {
        const int count = single ? static_cast<int>(j) : f_index(static_cast<int>(j), i, rho, lambda);
        yl::YConfig cfg(t, stack.n, stack.petal_basis(i, j));
        const Point &anchor = stack.anchors[i - 1][j - 1];
        std::vector<yl::YLine> chosen;
        gf::Elem delta = 1;
        for (int k = 1; k <= count; ++k) {
            // Directions 1, alpha, alpha^2, .. are the standard points of D.
            yl::YLine l = yl::y_line_delta(cfg, anchor, delta);
            chosen.push_back(l);
            if (!yl::are_independent(cfg, chosen))
                throw Error(Errc::SelectionFailed, "dependent petal directions");
            out.push_back(PetalPiece{i, k, std::move(l)});
            delta = f.mul(delta, t.alpha());
        }
    }
    return out;
}

SaturatingSet build_petal_set(const FlowerStack &stack, std::size_t j, const FieldTower &t, int level) {
    SaturatingSet s = empty_set(stack.n, stack.rho, t);
    Collector c(s);
    for (const auto &piece : petal_pieces(stack, j, t))
        for (const auto &x : piece.line.points)
            c.add(x, Provenance{"petal", level, static_cast<int>(j), piece.layer, piece.index, 0});
    return s;
}

SaturatingSet build_p1_prime(const FlowerStack &stack, const FieldTower &t, int level) {
    SaturatingSet s = empty_set(stack.n, stack.rho, t);
    if (t.q_sub() != 2 || stack.lambda < 2)
        return s;
    const gf::Field &f = t.big();
    const std::size_t n = stack.n, o = stack.offset, rho = stack.rho;
    Collector c(s);

    auto real_sub = [&](const Vec &w, std::size_t layer) {
        Matrix rows{w};
        for (std::size_t col = o + rho + layer; col <= n; ++col)
            rows.push_back(unit(n, col));
        return sg::Subgeometry(t, n, rows);
    };

    Vec w = unit(n, o);
    sg::Subgeometry prev = real_sub(w, 1);
    for (std::size_t i = 2; i <= stack.lambda; ++i) {
        const sg::Subgeometry &ci = stack.cs[i - 1];
        const std::size_t pivot = o + rho + i - 1;
        bool found = false;
        for (gf::Elem b = 0; b < f.order() && !found; ++b) {
            Vec cand = w;
            cand[pivot] = f.add(cand[pivot], b);
            Matrix rows{cand};
            for (const auto &r : stack.sigmas[i - 1].basis())
                rows.push_back(r);
            Subspace h(f, n, rows);
            std::vector<Point> trace;
            for (const auto &x : prev.points())
                if (h.contains(f, x))
                    trace.push_back(x);
            if (trace == ci.points()) {
                w = cand;
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::SelectionFailed, "no admissible hyperplane in layer " + std::to_string(i));
        sg::Subgeometry cur = real_sub(w, i);
        const Subspace &sig = stack.sigmas[i - 1];
        for (const auto &x : cur.points())
            if (!sig.contains(f, x))
                c.add(x, Provenance{"p1prime", level, 1, static_cast<int>(i), 1, 0});
        prev = std::move(cur);
    }
    return s;
}

SaturatingSet build_partial_set(std::size_t n, std::size_t rho, const FieldTower &t, std::size_t offset,
                                int level) {
    FlowerStack stack = build_flower_stack(n, rho, t, offset);
    SaturatingSet s = empty_set(n, rho, t);
    for (std::size_t j = 1; j <= rho + 1; ++j)
        append(s, build_petal_set(stack, j, t, level));
    append(s, build_p1_prime(stack, t, level));
    return s;
}

SaturatingSet build_saturating_set(std::size_t n, std::size_t rho, std::uint32_t q_sub) {
    if (rho == 0 || rho >= n)
        throw Error(Errc::BadParams, "need 0 < rho < n");
    FieldTower t = gf::tower_over(q_sub, static_cast<std::uint32_t>(rho + 1));
    if ((n + 1) % (rho + 1) == 0)
        return build_trivial_set(n, rho, t);
    SaturatingSet s = empty_set(n, rho, t);
    for (int level = 1;; ++level) {
        const std::size_t offset = (level - 1) * (rho + 1);
        append(s, build_partial_set(n, rho, t, offset, level));
        if (n - offset <= 2 * rho)
            break;
    }
    return s;
}

SaturatingSet build_trivial_set(std::size_t n, std::size_t rho, const FieldTower &t) {
    if ((n + 1) % (rho + 1) != 0)
        throw Error(Errc::NotDivisible, "rho + 1 = " + std::to_string(rho + 1) + " does not divide n + 1 = " +
                                            std::to_string(n + 1));
    const gf::Field &f = t.big();
    const std::size_t k = (n + 1) / (rho + 1) - 1;
    SaturatingSet s = empty_set(n, rho, t);
    Collector c(s);
    for (std::size_t b = 0; b <= rho; ++b) {
        Matrix rows;
        for (std::size_t i = 0; i <= k; ++i)
            rows.push_back(unit(n, b * (k + 1) + i));
        for (const auto &x : Subspace(f, n, rows).points(f))
            c.add(x, Provenance{"trivial-block", 0, 0, 0, 0, static_cast<int>(b)});
    }
    return s;
}

SaturatingSet build_trivial_set(std::size_t n, std::size_t rho, const gf::Field &field) {
    return build_trivial_set(n, rho, FieldTower(field, field.degree()));
}

}  // namespace satgeom::sat
