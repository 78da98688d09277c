/**************************************************************************
 * test_verify.cpp
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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "satgeom/kernels.hpp"
#include "satgeom/saturate.hpp"
#include "satgeom/subgeom.hpp"
#include "satgeom/verify.hpp"
#include "support.hpp"

using namespace satgeom;
using namespace satgeom::vf;
using gf::tower_over;
using pg::unit_point;
using testsupport::code;
using testsupport::errc_of;
using testsupport::uniform;

namespace {

// Naive: is x in the span of some t + 1 points of s?
bool naive_covered(const Field &f, std::size_t n, const std::vector<Point> &s, const Point &x, std::size_t t) {
    std::vector<std::size_t> pick;
    const std::size_t k = std::min(t + 1, s.size());
    std::vector<bool> mask(s.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<Point> sub;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask[i])
                sub.push_back(s[i]);
        if (pg::span(f, n, sub).contains(f, x))
            return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

int naive_radius(const Field &f, std::size_t n, const std::vector<Point> &s) {
    auto all = pg::enumerate_points(n, f);
    for (std::size_t t = 0; t <= n; ++t)
        if (std::all_of(all.begin(), all.end(), [&](const Point &x) { return naive_covered(f, n, s, x, t); }))
            return static_cast<int>(t);
    return -1;
}

std::vector<Point> random_points(const Field &f, std::size_t n, std::size_t count) {
    const std::uint64_t total = pg::theta(static_cast<int>(n), f.order());
    std::vector<Point> out;
    while (out.size() < count) {
        Point x = pg::point_unrank(f, n, uniform(0, total - 1));
        if (std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("lower_bound examples") {
    CHECK(lower_bound(3, 2, 8) == doctest::Approx(3.2073).epsilon(1e-4));
    CHECK(lower_bound(2, 1, 4) == doctest::Approx(1.9715).epsilon(1e-4));
    for (std::uint64_t q : {2u, 9u, 1024u})
        CHECK(std::abs(lower_bound(1, 1, q) - (2 / std::numbers::e + 0.5)) < 1e-12);
}

TEST_CASE("size evaluators") {
    CHECK(size_pj(5, 2, 2, 1) == 8);
    CHECK(size_pj(5, 2, 2, 2) == 21);
    CHECK(size_pj(5, 2, 2, 3) == 25);
    CHECK(size_total(5, 2, 2) == 54);
    CHECK(size_p1_prime(5, 2, 2) == 4);
    CHECK(size_p1_prime(4, 2, 2) == 2);
    CHECK(size_p1_prime(3, 2, 2) == 0);
    CHECK(size_p1_prime(2, 1, 2) == 0);
    CHECK(size_p1_prime(5, 2, 3) == 0);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        CHECK(size_pj(2, 1, q, 1) == q);
        CHECK(size_pj(2, 1, q, 2) == 2 * q - 1);
    }
    CHECK(errc_of([] { size_pj(5, 2, 2, 4); }) == code(Errc::BadParams));
    CHECK(errc_of([] { size_pj(5, 2, 2, 0); }) == code(Errc::BadParams));
    CHECK(errc_of([] { size_total(2, 2, 2); }) == code(Errc::BadParams));
    CHECK(errc_of([] { size_total(3, 1, 6); }) == code(Errc::BadParams));
}

TEST_CASE("size_total is the sum of the petal sizes") {
    for (std::size_t n = 2; n <= 14; ++n)
        for (std::size_t rho = 1; rho < n; ++rho)
            for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
                BigInt sum = 0;
                for (std::size_t j = 1; j <= rho + 1; ++j)
                    sum += size_pj(n, rho, q, j);
                REQUIRE(sum == size_total(n, rho, q));
            }
}

TEST_CASE("main and simple bound examples") {
    CHECK(main_bound(4, 2, 2) == 26);
    CHECK(main_bound(3, 2, 2) == 9);
    CHECK(main_bound(5, 2, 2) == 27);
    CHECK(main_bound(7, 2, 2) == 276);
    CHECK(main_bound(3, 2, 3) == 15);
    CHECK(main_bound(4, 3, 2) == 14);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u})
        CHECK(main_bound(2, 1, q) == 3 * q - 1);
    CHECK(simple_bound(3, 2, 2) == 18);
    CHECK(trivial_bound(5, 2, 8) == 27);
    CHECK(trivial_bound(3, 1, 4) == 10);
    CHECK(errc_of([] { simple_bound(3, 1, 2); }) == code(Errc::BadParams));
    CHECK(errc_of([] { main_bound(3, 3, 2); }) == code(Errc::BadParams));
    CHECK(errc_of([] { trivial_bound(4, 2, 8); }) == code(Errc::NotDivisible));
}

TEST_CASE("main bound coefficient sanity") {
    for (std::size_t rho = 1; rho <= 12; ++rho) {
        for (std::size_t j = 1; j + 1 <= rho; ++j)
            CHECK(3 * a_tilde(rho, j) <= BigInt(rho * (2 * rho + 1)));
        for (std::size_t n = rho + 1; n <= rho + 1 + 2 * (rho + 1); ++n) {
            if ((n + 1) % (rho + 1) == 0)
                continue;
            const std::size_t l = n % (rho + 1) + 1;
            for (std::size_t j = 1; j < l; ++j)
                CHECK(a_bar(n, rho, j) <= a_tilde(rho, j));
        }
    }
}

TEST_CASE("simple bound dominates the main bound") {
    for (std::size_t n = 3; n <= 12; ++n)
        for (std::size_t rho = 2; rho < n; ++rho) {
            if ((n + 1) % (rho + 1) == 0)
                continue;
            for (std::uint64_t q : {2u, 3u, 4u, 5u})
                REQUIRE(simple_bound(n, rho, q) >= main_bound(n, rho, q));
        }
}

TEST_CASE("constructed sets have the main bound size") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t rho = 1; rho < n; ++rho)
            for (std::uint32_t q : {2u, 3u}) {
                if (std::pow(q, rho + 1) > 1000)
                    continue;
                CAPTURE(n);
                CAPTURE(rho);
                CAPTURE(q);
                auto s = sat::build_saturating_set(n, rho, q);
                CHECK(BigInt(s.size()) == main_bound(n, rho, q));
                CHECK(lower_bound(n, rho, static_cast<std::uint64_t>(std::pow(q, rho + 1))) <
                      static_cast<double>(s.size()));
                if (rho > 1)
                    CHECK(BigInt(s.size()) <= simple_bound(n, rho, q));
            }
}

TEST_CASE("saturation_radius examples") {
    gf::FieldTower t = tower_over(2, 2);
    const Field &f = t.big();
    auto cert0 = saturation_radius(pg::enumerate_points(2, f), 2, f);
    CHECK(cert0.radius == 0);
    CHECK_FALSE(cert0.witness.has_value());

    auto baer = sg::subgeometry_through_frame(t, pg::standard_frame(2)).points();
    auto cert1 = saturation_radius(baer, 2, f);
    CHECK(cert1.radius == 1);
    REQUIRE(cert1.witness.has_value());
    CHECK(std::find(baer.begin(), baer.end(), *cert1.witness) == baer.end());
    CHECK(cert1.covered == std::vector<std::uint64_t>{7, 21});

    auto s = sat::build_saturating_set(3, 2, 2);
    const Field &f8 = s.tower.big();
    auto cert2 = saturation_radius(s.points, 3, f8);
    CHECK(cert2.radius == 2);
    CHECK(cert2.total == 585);
    REQUIRE(cert2.witness.has_value());
    CHECK_FALSE(naive_covered(f8, 3, s.points, *cert2.witness, 1));
}

TEST_CASE("saturation_radius errors") {
    Field f = tower_over(4, 1).big();
    std::vector<Point> two{unit_point(2, 0), unit_point(2, 1)};
    CHECK(errc_of([&] { saturation_radius(two, 2, f); }) == code(Errc::NotSaturating));
    auto baer = sg::subgeometry_through_frame(tower_over(2, 2), pg::standard_frame(2)).points();
    CHECK(errc_of([&] { saturation_radius(baer, 2, f, 0); }) == code(Errc::NotSaturating));
    CHECK(errc_of([&] { saturation_radius({}, 2, f); }) == code(Errc::BadParams));
    Field f64 = tower_over(64, 1).big();
    CHECK(errc_of([&] { saturation_radius({unit_point(5, 0)}, 5, f64); }) == code(Errc::SizeLimit));
}

TEST_CASE("saturation_radius agrees with a naive oracle on random sets") {
    struct Case {
        std::uint64_t q;
        std::size_t n;
    };
    for (Case c : {Case{4, 2}, Case{2, 3}, Case{3, 2}}) {
        Field f = tower_over(c.q, 1).big();
        const std::uint64_t total = pg::theta(static_cast<int>(c.n), c.q);
        for (int it = 0; it < 15; ++it) {
            auto s = random_points(f, c.n, uniform(c.n + 1, std::min<std::uint64_t>(total, 9)));
            int want = naive_radius(f, c.n, s);
            if (want < 0) {
                CHECK(errc_of([&] { saturation_radius(s, c.n, f); }) == code(Errc::NotSaturating));
                continue;
            }
            auto cert = saturation_radius(s, c.n, f);
            REQUIRE(cert.radius == want);
            for (std::size_t t = 0; t + 1 < cert.covered.size(); ++t)
                CHECK(cert.covered[t] <= cert.covered[t + 1]);
            if (cert.witness)
                CHECK_FALSE(naive_covered(f, c.n, s, *cert.witness, static_cast<std::size_t>(want - 1)));
        }
    }
}

TEST_CASE("saturates_outside") {
    Field f = tower_over(4, 1).big();
    CHECK(saturates_outside({unit_point(2, 0)}, pg::Subspace::whole(2), 0, 2, f));
    CHECK(saturates_outside({}, pg::Subspace::whole(2), 0, 2, f));
    pg::Subspace line(f, 2, {{0, 1, 0}, {0, 0, 1}});
    std::vector<Point> s{unit_point(2, 0), unit_point(2, 1), unit_point(2, 2)};
    CHECK(saturates_outside(s, line, 1, 2, f) == false);
    s.push_back(pg::make_point(f, {1, 1, 1}));
    CHECK_FALSE(saturates_outside(s, pg::Subspace::empty(2), 0, 2, f));
}

TEST_CASE("partial sets saturate everything outside the first pistil") {
    struct Case {
        std::size_t n, rho;
        std::uint32_t q;
    };
    for (Case c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{3, 2, 2}, Case{4, 2, 2}, Case{5, 2, 2}}) {
        CAPTURE(c.n);
        auto t = tower_over(c.q, static_cast<std::uint32_t>(c.rho + 1));
        auto part = sat::build_partial_set(c.n, c.rho, t);
        auto stack = sat::build_flower_stack(c.n, c.rho, t);
        CHECK(saturates_outside(part.points, stack.sigmas[0], c.rho, c.n, t.big()));
    }
}

TEST_CASE("petal points alone already saturate PG(5,8) off the first pistil") {
    auto t = tower_over(2, 3);
    auto part = sat::build_partial_set(5, 2, t);
    std::vector<Point> petals_only;
    for (std::size_t i = 0; i < part.size(); ++i)
        if (part.provenance[i].kind != "p1prime")
            petals_only.push_back(part.points[i]);
    REQUIRE(petals_only.size() == 54);
    auto stack = sat::build_flower_stack(5, 2, t);
    CHECK(saturates_outside(petals_only, stack.sigmas[0], 2, 5, t.big()));
}

TEST_CASE("PG(4,8) stays 2-saturated without the binary patch") {
    auto s = sat::build_saturating_set(4, 2, 2);
    std::vector<Point> rest;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.provenance[i].kind != "p1prime")
            rest.push_back(s.points[i]);
    REQUIRE(rest.size() == 24);
    CHECK(saturation_radius(rest, 4, s.tower.big()).radius == 2);
}

TEST_CASE("flower with 1, 2, 3 lines saturates PG(3,8) off the petal pair spans") {
    auto t = tower_over(2, 3);
    const Field &f = t.big();
    auto stack = sat::build_flower_stack(3, 2, t);
    auto flower = stack.flower(1);
    REQUIRE(flower.pistil.dim() == 0);
    REQUIRE(flower.valid(f));
    std::vector<Point> pts;
    for (std::size_t j = 1; j <= 3; ++j) {
        auto pieces = sat::petal_pieces(stack, j, t);
        CHECK(pieces.size() == j);
        for (const auto &pc : pieces)
            pts.insert(pts.end(), pc.line.points.begin(), pc.line.points.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<pg::Subspace> pairs;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            pairs.push_back(pg::span(f, flower.petals[a], flower.petals[b]));
    auto cov = kern::serial::coverage_mark(f, 3, pts, 3);
    std::size_t checked = 0;
    for (std::uint64_t r = 0; r < cov.size(); ++r) {
        Point x = pg::point_unrank(f, 3, r);
        if (std::any_of(pairs.begin(), pairs.end(), [&](const pg::Subspace &u) { return u.contains(f, x); }))
            continue;
        ++checked;
        CHECK(cov.test(r));
    }
    CHECK(checked == 7 * 7 * 8);
}
