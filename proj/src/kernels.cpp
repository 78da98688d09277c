/**************************************************************************
 * kernels.cpp
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

#include "satgeom/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include <omp.h>

#include "satgeom/error.hpp"

namespace satgeom::kern {

using gf::Elem;
using pg::Matrix;
using pg::Vec;

std::uint64_t Bitset::count() const {
    std::uint64_t c = 0;
    for (auto w : words_)
        c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::uint64_t Bitset::first_clear() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (~words_[i]) {
            std::uint64_t b = i * 64 + static_cast<std::uint64_t>(std::countr_one(words_[i]));
            return std::min(b, bits_);
        }
    return bits_;
}

Bitset &Bitset::operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

namespace {

std::uint64_t checked_points(const Field &f, std::size_t n) {
    const std::uint64_t total = pg::theta(static_cast<int>(n), f.order());
    if (total > point_cap())
        throw Error(Errc::SizeLimit, "PG(" + std::to_string(n) + "," + std::to_string(f.order()) + ") has " +
                                         std::to_string(total) + " points");
    return total;
}

// Marks every point of the row space of an echelon basis. Combination
// vectors with leading coefficient 1 give normalized points directly.
void mark_span(const Field &f, const Matrix &basis, Bitset &out, Vec &coef, Vec &v) {
    const std::size_t r = basis.size(), len = basis[0].size();
    const Elem q = f.order();
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        while (true) {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = lead; i < r; ++i) {
                if (!coef[i])
                    continue;
                for (std::size_t j = 0; j < len; ++j)
                    if (basis[i][j])
                        v[j] = f.add(v[j], f.mul(coef[i], basis[i][j]));
            }
            out.set(pg::point_rank(f, v));
            bool done = true;
            for (std::size_t k = r; k-- > lead + 1;) {
                if (++coef[k] < q) {
                    done = false;
                    break;
                }
                coef[k] = 0;
            }
            if (done)
                break;
        }
    }
}

// All (size - 1)-subsets of [0, top) in colex order, each completed by top.
void mark_with_max(const Field &f, const std::vector<Point> &pts, std::size_t size, std::size_t top,
                   Bitset &out) {
    const std::size_t len = pts[0].coords.size();
    std::vector<std::size_t> idx(size - 1);
    for (std::size_t i = 0; i + 1 < size; ++i)
        idx[i] = i;
    Vec coef(size), v(len);
    Matrix m;
    while (true) {
        m.clear();
        for (auto i : idx)
            m.push_back(pts[i].coords);
        m.push_back(pts[top].coords);
        pg::rref(f, m);
        mark_span(f, m, out, coef, v);
        std::size_t k = 0;
        while (k < idx.size() && idx[k] + 1 == (k + 1 < idx.size() ? idx[k + 1] : top))
            ++k;
        if (k == idx.size())
            break;
        ++idx[k];
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
    }
}

void check_args(const std::vector<Point> &pts, std::size_t n, std::size_t size) {
    if (size == 0 || size > pts.size())
        throw Error(Errc::BadParams, "subset size must be in 1..|S|");
    for (const auto &x : pts)
        if (x.coords.size() != n + 1)
            throw Error(Errc::BadParams, "point of the wrong length");
}

}  // namespace

Bitset serial::coverage_mark(const Field &f, std::size_t n, const std::vector<Point> &pts, std::size_t size) {
    check_args(pts, n, size);
    Bitset out(checked_points(f, n));
    for (std::size_t top = size - 1; top < pts.size(); ++top)
        mark_with_max(f, pts, size, top, out);
    return out;
}

Bitset omp::coverage_mark(const Field &f, std::size_t n, const std::vector<Point> &pts, std::size_t size) {
    check_args(pts, n, size);
    const std::uint64_t total = checked_points(f, n);
    Bitset out(total);
    const auto first = static_cast<std::int64_t>(size - 1), last = static_cast<std::int64_t>(pts.size());
#pragma omp parallel
    {
        Bitset mine(total);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t top = last - 1; top >= first; --top)
            mark_with_max(f, pts, size, static_cast<std::size_t>(top), mine);
#pragma omp critical
        out |= mine;
    }
    return out;
}

namespace {

struct SyndromeSpace {
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::uint64_t total = 0;
    bool binary = false;
    std::vector<std::uint64_t> steps;  // encoded nonzero multiples of every column

    SyndromeSpace(const Field &f, const std::vector<std::vector<Elem>> &columns) {
        if (columns.empty())
            throw Error(Errc::BadParams, "no columns");
        q = f.order();
        r = columns[0].size();
        binary = f.p() == 2;
        total = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (total > syndrome_cap() / q)
                throw Error(Errc::SizeLimit, "syndrome space exceeds the cap");
            total *= q;
        }
        for (const auto &c : columns) {
            if (c.size() != r)
                throw Error(Errc::BadParams, "ragged columns");
            for (Elem a = 1; a < q; ++a) {
                std::uint64_t s = 0;
                for (std::size_t i = r; i-- > 0;)
                    s = s * q + f.mul(a, c[i]);
                if (s)
                    steps.push_back(s);
            }
        }
        std::sort(steps.begin(), steps.end());
        steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    }

    std::uint64_t add(const Field &f, std::uint64_t a, std::uint64_t b) const {
        if (binary)
            return a ^ b;
        std::uint64_t out = 0, pw = 1;
        for (std::size_t i = 0; i < r; ++i) {
            out += pw * f.add(static_cast<Elem>(a % q), static_cast<Elem>(b % q));
            a /= q;
            b /= q;
            pw *= q;
        }
        return out;
    }
};

}  // namespace

std::vector<std::uint8_t> serial::syndrome_bfs(const Field &f, const std::vector<std::vector<Elem>> &columns) {
    SyndromeSpace sp(f, columns);
    std::vector<std::uint8_t> dist(sp.total, kUnreached);
    std::vector<std::uint64_t> frontier{0}, next;
    dist[0] = 0;
    for (std::uint8_t t = 1; !frontier.empty(); ++t) {
        if (t == kUnreached)
            throw Error(Errc::Overflow, "syndrome distance exceeds 254");
        next.clear();
        for (auto s : frontier)
            for (auto c : sp.steps) {
                std::uint64_t u = sp.add(f, s, c);
                if (dist[u] == kUnreached) {
                    dist[u] = t;
                    next.push_back(u);
                }
            }
        frontier.swap(next);
    }
    return dist;
}

std::vector<std::uint8_t> omp::syndrome_bfs(const Field &f, const std::vector<std::vector<Elem>> &columns) {
    SyndromeSpace sp(f, columns);
    std::vector<std::uint8_t> dist(sp.total, kUnreached);
    std::vector<std::uint64_t> frontier{0};
    dist[0] = 0;
    for (std::uint8_t t = 1; !frontier.empty(); ++t) {
        if (t == kUnreached)
            throw Error(Errc::Overflow, "syndrome distance exceeds 254");
        std::vector<std::uint64_t> next;
        const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
        {
            std::vector<std::uint64_t> mine;
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < count; ++i)
                for (auto c : sp.steps) {
                    std::uint64_t u = sp.add(f, frontier[static_cast<std::size_t>(i)], c);
                    std::atomic_ref<std::uint8_t> slot(dist[u]);
                    std::uint8_t want = kUnreached;
                    if (slot.load(std::memory_order_relaxed) == kUnreached &&
                        slot.compare_exchange_strong(want, t, std::memory_order_relaxed))
                        mine.push_back(u);
                }
#pragma omp critical
            next.insert(next.end(), mine.begin(), mine.end());
        }
        std::sort(next.begin(), next.end());
        frontier.swap(next);
    }
    return dist;
}

int max_threads() { return omp_get_max_threads(); }

void set_threads(int k) {
    if (k < 1)
        throw Error(Errc::BadParams, "thread count must be positive");
    omp_set_num_threads(k);
}

}  // namespace satgeom::kern
