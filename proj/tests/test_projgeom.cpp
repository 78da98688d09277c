/**************************************************************************
 * test_projgeom.cpp
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

#include "doctest.h"

#include "satgeom/projgeom.hpp"
#include "support.hpp"

using namespace satgeom;
using namespace satgeom::pg;
using gf::build_tower;
using gf::lookup_modulus;
using testsupport::code;
using testsupport::errc_of;
using testsupport::uniform;

namespace {

Vec random_vec(const Field &f, std::size_t len) {
    Vec v(len);
    for (auto &x : v)
        x = static_cast<Elem>(uniform(0, f.order() - 1));
    return v;
}

Vec random_nonzero(const Field &f, std::size_t len) {
    Vec v;
    do
        v = random_vec(f, len);
    while (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }));
    return v;
}

Subspace random_subspace(const Field &f, std::size_t n) {
    Matrix rows;
    std::size_t k = uniform(0, n + 1);
    for (std::size_t i = 0; i < k; ++i)
        rows.push_back(random_vec(f, n + 1));
    return Subspace(f, n, rows);
}

Matrix random_invertible(const Field &f, std::size_t d) {
    while (true) {
        Matrix m;
        for (std::size_t i = 0; i < d; ++i)
            m.push_back(random_vec(f, d));
        if (rank(f, m) == d)
            return m;
    }
}

}  // namespace

TEST_CASE("enumerate_points examples") {
    Field f2(lookup_modulus(2, 1));
    auto pts = enumerate_points(1, f2);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].coords == Vec{0, 1});
    CHECK(pts[1].coords == Vec{1, 0});
    CHECK(pts[2].coords == Vec{1, 1});
    CHECK(enumerate_points(2, Field(lookup_modulus(2, 2))).size() == 21);
    CHECK(enumerate_points(5, Field(lookup_modulus(2, 3))).size() == 37449);
    CHECK(theta(5, 8) == 37449);
    CHECK(theta(-1, 8) == 0);
}

TEST_CASE("enumeration is ranked, distinct and complete") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        Field f(lookup_modulus(p, e));
        for (int n = 0; theta(n, f.order()) <= 1'000'000; ++n) {
            auto pts = enumerate_points(n, f);
            REQUIRE(pts.size() == theta(n, f.order()));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                REQUIRE(point_rank(f, pts[i]) == i);
                if (i)
                    REQUIRE(pts[i - 1] < pts[i]);
            }
            for (int s = 0; s < 20; ++s) {
                std::uint64_t r = uniform(0, pts.size() - 1);
                REQUIRE(point_unrank(f, n, r) == pts[r]);
            }
        }
    }
}

TEST_CASE("enumeration cap") {
    Field f(lookup_modulus(2, 8));
    CHECK(errc_of([&] { enumerate_points(4, f); }) == code(Errc::SizeLimit));
    CHECK(errc_of([] { theta(40, 1u << 20); }) == code(Errc::Overflow));
}

TEST_CASE("normalization is canonical over PG(2,4)") {
    Field f(lookup_modulus(2, 2));
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
            for (Elem c = 0; c < 4; ++c) {
                if (!a && !b && !c)
                    continue;
                Vec v{a, b, c};
                Vec n = normalize(f, v);
                std::size_t i = 0;
                while (n[i] == 0)
                    ++i;
                CHECK(n[i] == 1);
                for (Elem l = 1; l < 4; ++l)
                    CHECK(normalize(f, {f.mul(l, a), f.mul(l, b), f.mul(l, c)}) == n);
            }
    CHECK(errc_of([&] { normalize(f, {0, 0, 0}); }) == code(Errc::BadParams));
}

TEST_CASE("span examples") {
    Field f(lookup_modulus(2, 2));
    Point x = make_point(f, {1, 2, 3});
    Subspace s = span(f, 2, {x});
    CHECK(s.dim() == 0);
    CHECK(s.points(f) == std::vector<Point>{x});
    auto fr = standard_frame(2);
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<Point> three;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip)
                three.push_back(fr[i]);
        CHECK(span(f, 2, three) == Subspace::whole(2));
    }
    Point a = unit_point(2, 0), b = unit_point(2, 1);
    Point c = make_point(f, {1, 3, 0});
    CHECK(span(f, 2, {a, b, c}).dim() == 1);
    CHECK(span(f, 2, {}).rank() == 0);
}

TEST_CASE("meet examples") {
    Field f(lookup_modulus(2, 3));
    Subspace u = random_subspace(f, 3);
    CHECK(meet(f, u, u) == u);
    Subspace l1(f, 2, {{1, 0, 0}, {0, 1, 0}});
    Subspace l2(f, 2, {{1, 0, 0}, {0, 0, 1}});
    CHECK(meet(f, l1, l2) == Subspace(f, 2, {{1, 0, 0}}));
    Subspace sigma(f, 4, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    Subspace h1(f, 4, {{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    Subspace h2(f, 4, {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    CHECK(meet(f, h1, h2) == sigma);
}

TEST_CASE("Grassmann identity on random subspaces of PG(4,8)") {
    Field f(lookup_modulus(2, 3));
    for (int it = 0; it < 1000; ++it) {
        Subspace u = random_subspace(f, 4), v = random_subspace(f, 4);
        Subspace s = span(f, u, v), m = meet(f, u, v);
        REQUIRE(u.dim() + v.dim() == s.dim() + m.dim());
        REQUIRE(s.contains(f, u));
        REQUIRE(s.contains(f, v));
        REQUIRE(u.contains(f, m));
        REQUIRE(v.contains(f, m));
    }
}

TEST_CASE("is_frame examples") {
    Field f(lookup_modulus(3, 2));
    auto fr = standard_frame(3);
    CHECK(is_frame(f, fr, 3));
    auto rep = fr;
    rep[4] = rep[0];
    CHECK_FALSE(is_frame(f, rep, 3));
    for (int it = 0; it < 50; ++it) {
        Projectivity g(f, random_invertible(f, 4));
        std::vector<Point> img;
        for (const auto &x : fr)
            img.push_back(g.apply(f, x));
        CHECK(is_frame(f, img, 3));
    }
    CHECK(errc_of([&] { is_frame(f, {fr[0], fr[1]}, 3); }) == code(Errc::WrongCount));
}

TEST_CASE("apply examples") {
    Field f(lookup_modulus(2, 2));
    Point x = make_point(f, {0, 1, 3});
    CHECK(apply(f, Projectivity(f, identity(3)), x) == x);
    Matrix lam{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(apply(f, Projectivity(f, lam), x) == x);
    Matrix sing{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    CHECK(errc_of([&] { Projectivity(f, sing); }) == code(Errc::RankDeficient));
}

TEST_CASE("frame_map to a configuration frame gives the diagonal-plus-column matrix") {
    Field f(lookup_modulus(2, 2));
    for (Elem x1 = 0; x1 < 4; ++x1)
        for (Elem x2 = 0; x2 < 4; ++x2)
            for (Elem d = 1; d < 4; ++d) {
                Point p = make_point(f, {1, x1, x2});
                Point q = make_point(f, {1, f.add(x1, d), f.add(x2, d)});
                Projectivity g = frame_map(f, standard_frame(2), {p, unit_point(2, 1), unit_point(2, 2), q});
                Matrix want{{1, 0, 0}, {x1, d, 0}, {x2, 0, d}};
                CHECK(g.matrix() == want);
                for (Elem k1 : {0u, 1u})
                    for (Elem k2 : {0u, 1u})
                        CHECK(g.apply(f, make_point(f, {1, k1, k2})) ==
                              make_point(f, {1, f.add(x1, f.mul(k1, d)), f.add(x2, f.mul(k2, d))}));
            }
}

TEST_CASE("frame_map round trip and identity") {
    Field f(lookup_modulus(5, 1));
    auto std3 = standard_frame(3);
    CHECK(frame_map(f, std3, std3).matrix() == identity(4));
    for (int it = 0; it < 50; ++it) {
        Projectivity g(f, random_invertible(f, 4)), h(f, random_invertible(f, 4));
        std::vector<Point> a, b;
        for (const auto &x : std3) {
            a.push_back(g.apply(f, x));
            b.push_back(h.apply(f, x));
        }
        Projectivity ab = frame_map(f, a, b), ba = frame_map(f, b, a);
        Projectivity loop = ab.compose(f, ba);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(ab.apply(f, a[i]) == b[i]);
            CHECK(loop.apply(f, a[i]) == a[i]);
        }
        Projectivity gi = g.inverse(f);
        Point r = make_point(f, random_nonzero(f, 4));
        CHECK(gi.apply(f, g.apply(f, r)) == r);
    }
    auto bad = std3;
    bad[4] = bad[3];
    CHECK(errc_of([&] { frame_map(f, std3, bad); }) == code(Errc::NotAFrame));
}

TEST_CASE("subspace points and nullspace") {
    Field f(lookup_modulus(3, 1));
    for (int it = 0; it < 100; ++it) {
        Subspace u = random_subspace(f, 3);
        auto pts = u.points(f);
        REQUIRE(pts.size() == u.point_count(f));
        REQUIRE(pts.size() == theta(u.dim(), 3));
        for (const auto &x : pts)
            REQUIRE(u.contains(f, x));
        Matrix ns = nullspace(f, u.basis(), 4);
        REQUIRE(ns.size() + u.rank() == 4);
        for (const auto &v : ns)
            for (const auto &r : u.basis()) {
                Elem acc = 0;
                for (std::size_t j = 0; j < 4; ++j)
                    acc = f.add(acc, f.mul(v[j], r[j]));
                REQUIRE(acc == 0);
            }
    }
}
