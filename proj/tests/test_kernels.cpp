/**************************************************************************
 * test_kernels.cpp
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

#include "satgeom/kernels.hpp"
#include "support.hpp"

using namespace satgeom;
using namespace satgeom::kern;
using gf::Elem;
using gf::tower_over;
using testsupport::code;
using testsupport::errc_of;
using testsupport::uniform;

namespace {

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

// Every subset via bitmask, spans through the Subspace API.
Bitset naive_coverage(const Field &f, std::size_t n, const std::vector<Point> &pts, std::size_t size) {
    Bitset out(pg::theta(static_cast<int>(n), f.order()));
    for (std::uint32_t mask = 0; mask < (1u << pts.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
            continue;
        std::vector<Point> sub;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1)
                sub.push_back(pts[i]);
        for (const auto &x : pg::span(f, n, sub).points(f))
            out.set(pg::point_rank(f, x));
    }
    return out;
}

std::vector<std::vector<Elem>> random_columns(const Field &f, std::size_t r, std::size_t n) {
    std::vector<std::vector<Elem>> cols;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Elem> e(r, 0);
        e[i] = 1;
        cols.push_back(e);
    }
    while (cols.size() < n) {
        std::vector<Elem> c(r);
        for (auto &x : c)
            x = static_cast<Elem>(uniform(0, f.order() - 1));
        cols.push_back(c);
    }
    return cols;
}

}  // namespace

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.count() == 0);
    CHECK(b.first_clear() == 0);
    for (std::uint64_t i = 0; i < 130; ++i)
        if (i != 77)
            b.set(i);
    CHECK(b.count() == 129);
    CHECK(b.first_clear() == 77);
    b.set(77);
    CHECK(b.first_clear() == 130);
    Bitset c(130);
    c.set(3);
    Bitset d(130);
    d.set(64);
    c |= d;
    CHECK(c.test(3));
    CHECK(c.test(64));
    CHECK_FALSE(c.test(65));
}

TEST_CASE("coverage matches the naive span oracle") {
    struct Case {
        std::uint64_t q;
        std::size_t n;
    };
    for (Case c : {Case{2, 3}, Case{4, 2}, Case{3, 3}, Case{5, 2}, Case{8, 2}}) {
        Field f = tower_over(c.q, 1).big();
        for (int it = 0; it < 10; ++it) {
            auto pts = random_points(f, c.n, uniform(1, 7));
            std::size_t size = uniform(1, pts.size());
            Bitset want = naive_coverage(f, c.n, pts, size);
            REQUIRE(serial::coverage_mark(f, c.n, pts, size) == want);
            REQUIRE(omp::coverage_mark(f, c.n, pts, size) == want);
        }
    }
}

TEST_CASE("parallel coverage is independent of the thread count") {
    Field f = tower_over(8, 1).big();
    auto pts = random_points(f, 3, 20);
    Bitset ref = serial::coverage_mark(f, 3, pts, 3);
    const int saved = max_threads();
    for (int k : {1, 2, 3, 4, 8}) {
        set_threads(k);
        CHECK(omp::coverage_mark(f, 3, pts, 3) == ref);
    }
    set_threads(saved);
    CHECK(errc_of([] { set_threads(0); }) == code(Errc::BadParams));
}

TEST_CASE("coverage errors") {
    Field f = tower_over(4, 1).big();
    auto pts = random_points(f, 2, 3);
    CHECK(errc_of([&] { serial::coverage_mark(f, 2, pts, 4); }) == code(Errc::BadParams));
    CHECK(errc_of([&] { omp::coverage_mark(f, 2, pts, 0); }) == code(Errc::BadParams));
    CHECK(errc_of([&] { serial::coverage_mark(f, 3, pts, 1); }) == code(Errc::BadParams));
}

TEST_CASE("syndrome BFS serial and parallel agree") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
        Field f = tower_over(q, 1).big();
        for (int it = 0; it < 5; ++it) {
            std::size_t r = q <= 4 ? 4 : 3;
            auto cols = random_columns(f, r, r + uniform(0, 4));
            auto ref = serial::syndrome_bfs(f, cols);
            for (int k : {1, 2, 4}) {
                set_threads(k);
                REQUIRE(omp::syndrome_bfs(f, cols) == ref);
            }
        }
    }
}

TEST_CASE("syndrome BFS on small codes") {
    Field f2 = tower_over(2, 1).big();
    std::vector<std::vector<Elem>> hamming;
    for (Elem v = 1; v < 8; ++v)
        hamming.push_back({v & 1, v >> 1 & 1, v >> 2 & 1});
    auto d = serial::syndrome_bfs(f2, hamming);
    CHECK(d.size() == 8);
    CHECK(d[0] == 0);
    CHECK(*std::max_element(d.begin(), d.end()) == 1);

    std::vector<std::vector<Elem>> ident{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto di = serial::syndrome_bfs(f2, ident);
    for (std::size_t s = 0; s < 8; ++s)
        CHECK(di[s] == __builtin_popcount(static_cast<unsigned>(s)));

    std::vector<std::vector<Elem>> short_rank{{1, 0}, {1, 0}};
    auto ds = omp::syndrome_bfs(f2, short_rank);
    CHECK(ds[2] == kUnreached);

    Field f256 = tower_over(256, 1).big();
    CHECK(errc_of([&] { serial::syndrome_bfs(f256, {{1, 0, 0, 0}}); }) == code(Errc::SizeLimit));
}
