/**************************************************************************
 * acceptance.cpp
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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "satgeom/covcode.hpp"
#include "satgeom/saturate.hpp"
#include "satgeom/verify.hpp"
#include "satgeom/ylines.hpp"
#include "support.hpp"

using namespace satgeom;
using gf::Elem;
using testsupport::uniform;

namespace {

struct Built {
    std::string name;
    sat::SaturatingSet set;
    int radius;
    std::uint64_t q;
};

std::vector<Built> built;
int failures = 0;

void report(int id, const std::string &what, bool ok, double secs, double limit, const std::string &detail) {
    const bool pass = ok && secs < limit;
    failures += !pass;
    std::printf("%s %2d %s: %s [%.2fs < %.0fs]\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), secs,
                limit);
    std::fflush(stdout);
}

// Runs fn, which fills detail and returns the verdict; exceptions count as failure.
void criterion(int id, const std::string &what, double limit, const std::function<bool(std::string &)> &fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception &e) {
        detail += std::string(" error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, what, ok, secs, limit, detail);
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Build, certify and record one instance.
bool instance(const std::string &name, std::size_t n, std::size_t rho, std::uint32_t qs, std::size_t want_size,
              int want_radius, std::string &detail, bool check_main = false) {
    auto s = sat::build_saturating_set(n, rho, qs);
    auto cert = vf::saturation_radius(s.points, n, s.tower.big());
    std::ostringstream os;
    os << "size=" << s.size() << " radius=" << cert.radius;
    bool ok = s.size() == want_size && cert.radius == want_radius;
    if (check_main) {
        auto mb = vf::main_bound(n, rho, qs);
        os << " main_bound=" << mb;
        ok = ok && mb == want_size;
    }
    detail = os.str();
    if (ok)
        built.push_back({name, s, cert.radius, s.tower.big().order()});
    return ok;
}

bool trivial_instance(const std::string &name, std::size_t n, std::size_t rho, std::uint32_t qs,
                      std::size_t want_size, int want_radius, std::string &detail) {
    auto t = gf::tower_over(qs, static_cast<std::uint32_t>(rho + 1));
    auto s = sat::build_trivial_set(n, rho, t);
    auto cert = vf::saturation_radius(s.points, n, t.big());
    std::ostringstream os;
    os << name << " size=" << s.size() << " radius=" << cert.radius;
    detail += detail.empty() ? os.str() : "; " + os.str();
    bool ok = s.size() == want_size && cert.radius == want_radius;
    if (ok)
        built.push_back({name, s, cert.radius, t.big().order()});
    return ok;
}

struct Three {
    gf::FieldTower t;
    yl::ThreeHyperplanes h;
    yl::YConfig c1, c2, c3;
};

// Three hyperplanes of PG(m, q) through a real (m-2)-subgeometry, moved by a
// random projectivity.
Three random_three(std::size_t rho, std::size_t m, std::uint32_t qs) {
    gf::FieldTower t = gf::tower_over(qs, static_cast<std::uint32_t>(rho + 1));
    const gf::Field &f = t.big();
    pg::Matrix g;
    do {
        g.assign(m + 1, pg::Vec(m + 1));
        for (auto &r : g)
            for (auto &x : r)
                x = static_cast<Elem>(uniform(0, f.order() - 1));
    } while (pg::rank(f, g) != m + 1);
    auto col = [&](const pg::Vec &v) { return pg::mat_vec(f, g, v); };
    pg::Matrix cb;
    for (std::size_t i = 2; i <= m; ++i)
        cb.push_back(col(pg::unit_point(m, i).coords));
    sg::Subgeometry c(t, m, cb);
    pg::Vec v3(m + 1, 0);
    v3[0] = 1;
    v3[1] = static_cast<Elem>(uniform(1, f.order() - 1));
    auto hyper = [&](const pg::Vec &v) {
        pg::Matrix rows = cb;
        rows.push_back(col(v));
        return pg::Subspace(f, m, rows);
    };
    auto h = yl::make_three_hyperplanes(t, c, hyper(pg::unit_point(m, 0).coords), hyper(pg::unit_point(m, 1).coords),
                                        hyper(v3));
    return {t, h, yl::hyperplane_config(t, h, 0), yl::hyperplane_config(t, h, 1), yl::hyperplane_config(t, h, 2)};
}

pg::Point random_affine(const yl::YConfig &cfg) {
    const gf::Field &f = cfg.field();
    pg::Vec z(cfg.m() + 1);
    z[0] = 1;
    for (std::size_t i = 1; i <= cfg.m(); ++i)
        z[i] = static_cast<Elem>(uniform(0, f.order() - 1));
    return cfg.from_local(z);
}

// Words of weight <= radius in F_q^n, counted one by one.
std::uint64_t ball_count(std::size_t n, std::size_t radius, std::uint64_t q) {
    std::uint64_t words = power(q, n), hits = 0;
    for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t x = w;
        std::size_t weight = 0;
        while (x) {
            weight += x % q != 0;
            x /= q;
        }
        hits += weight <= radius;
    }
    return hits;
}

}  // namespace

int main() {
    criterion(1, "PG(2,4) rho=1 q'=2", 1, [](std::string &d) {
        if (!instance("PG(2,4)", 2, 1, 2, 5, 1, d))
            return false;
        const auto &b_pts = built.back().set.points;
        auto cert = vf::saturation_radius(b_pts, 2, built.back().set.tower.big());
        bool witness = cert.witness && !cert.covered.empty() && cert.covered[0] < cert.total &&
                       !std::count(b_pts.begin(), b_pts.end(), *cert.witness);
        d += witness ? " witness=yes" : " witness=no";
        return witness;
    });

    criterion(2, "PG(2,9) rho=1 q'=3", 1, [](std::string &d) { return instance("PG(2,9)", 2, 1, 3, 8, 1, d); });
    criterion(2, "PG(2,16) rho=1 q'=4", 5, [](std::string &d) { return instance("PG(2,16)", 2, 1, 4, 11, 1, d); });
    criterion(3, "PG(3,8) rho=2 q'=2", 5, [](std::string &d) { return instance("PG(3,8)", 3, 2, 2, 9, 2, d); });
    criterion(4, "PG(4,8) rho=2 q'=2", 60,
              [](std::string &d) { return instance("PG(4,8)", 4, 2, 2, 26, 2, d, true); });
    criterion(5, "PG(3,27) rho=2 q'=3", 60, [](std::string &d) { return instance("PG(3,27)", 3, 2, 3, 15, 2, d); });
    criterion(6, "PG(4,16) rho=3 q'=2", 120, [](std::string &d) { return instance("PG(4,16)", 4, 3, 2, 14, 3, d); });

    criterion(7, "partial set of PG(5,8) off the first pistil", 120, [](std::string &d) {
        auto t = gf::tower_over(2, 3);
        auto part = sat::build_partial_set(5, 2, t);
        std::map<int, std::size_t> petal;
        std::size_t patch = 0;
        for (const auto &p : part.provenance)
            p.kind == "p1prime" ? ++patch : ++petal[p.petal];
        std::ostringstream os;
        os << "sizes=" << petal[1] << "+" << petal[2] << "+" << petal[3] << "+" << patch;
        bool ok = part.size() == 58 && petal[1] == 8 && petal[2] == 21 && petal[3] == 25 && patch == 4;
        for (std::size_t j = 1; j <= 3; ++j)
            ok = ok && vf::size_pj(5, 2, 2, j) == petal[static_cast<int>(j)];
        ok = ok && vf::size_p1_prime(5, 2, 2) == patch && vf::size_total(5, 2, 2) == 54;
        auto stack = sat::build_flower_stack(5, 2, t);
        bool sat_ok = vf::saturates_outside(part.points, stack.sigmas[0], 2, 5, t.big());
        os << (sat_ok ? " saturates" : " does not saturate");
        d = os.str();
        return ok && sat_ok;
    });

    criterion(8, "trivial baseline", 30, [](std::string &d) {
        bool a = trivial_instance("PG(5,8)", 5, 2, 2, 27, 2, d);
        bool b = trivial_instance("PG(3,4)", 3, 1, 2, 10, 1, d);
        return a && b;
    });

    criterion(9, "isomorphism suite", 60, [](std::string &d) {
        bool ok = true;
        std::ostringstream os;
        for (auto [rho, m, qs] : std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>{
                 {1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {1, 1, 3}}) {
            auto r = yl::iso_check(rho, m, qs);
            std::uint64_t q = power(qs, rho + 1);
            std::uint64_t theta = (power(qs, rho + 1) - 1) / (qs - 1);
            std::uint64_t expect = power(q, m) * theta / power(qs, m);
            bool good = r.ok() && r.lines == expect && r.expected_lines == expect;
            os << "(" << rho << "," << m << "," << qs << ") lines=" << r.lines << (good ? " ok; " : " FAIL; ");
            ok = ok && good;
        }
        int parallel = 0;
        const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> shapes{
            {1, 2, 2}, {2, 2, 2}, {1, 3, 2}, {1, 2, 3}, {2, 3, 2}};
        for (int it = 0; it < 50; ++it) {
            auto [rho, m, qs] = shapes[it % shapes.size()];
            Three th = random_three(rho, m, qs);
            const gf::Field &f = th.t.big();
            auto bl = yl::y_line_delta(th.c1, random_affine(th.c1), static_cast<Elem>(uniform(1, f.order() - 1)));
            auto b = yl::line_closure(th.c1, bl);
            bool all = true;
            for (int rep = 0; rep < 5; ++rep) {
                auto s1 = random_affine(th.c2), s2 = random_affine(th.c2);
                all = all && yl::are_parallel(yl::shadow(th.t, th.h, th.c2, b, s1), yl::shadow(th.t, th.h, th.c2, b, s2));
            }
            parallel += all;
        }
        os << "shadow parallel " << parallel << "/50";
        d = os.str();
        return ok && parallel == 50;
    });

    criterion(10, "covering code bridge", 120, [](std::string &d) {
        bool ok = true;
        std::ostringstream os;
        for (const auto &b : built) {
            if (power(b.q, b.set.n + 1) > (std::uint64_t{1} << 24)) {
                os << b.name << " skipped; ";
                continue;
            }
            int r = cc::covering_radius(cc::parity_check_matrix(b.set));
            os << b.name << " R=" << r << "; ";
            ok = ok && r == b.radius + 1;
        }
        pg::Matrix h(3, pg::Vec(7));
        for (Elem v = 1; v < 8; ++v)
            for (std::size_t i = 0; i < 3; ++i)
                h[i][v - 1] = v >> i & 1;
        auto ham = cc::make_code(gf::tower_over(2, 1).big(), h);
        int hr = cc::covering_radius(ham);
        auto hd = cc::covering_density(7, 3, static_cast<std::size_t>(hr), 2);
        os << "hamming R=" << hr << " density=" << hd << "; ";
        ok = ok && hr == 1 && hd == 1;
        auto c1 = cc::parity_check_matrix(sat::build_saturating_set(2, 1, 2));
        auto mu = cc::covering_density(c1.n, c1.r, static_cast<std::size_t>(cc::covering_radius(c1)), 4);
        std::uint64_t balls = ball_count(c1.n, 2, 4);
        os << "instance 1 density=" << mu << " spheres=" << balls << "/64";
        ok = ok && mu == cc::Rational(106, 64) && balls == 106 && cc::Rational(balls, 64) == mu;
        d = os.str();
        return ok && built.size() == 9;
    });

    criterion(11, "lower and simple bounds", 1, [](std::string &d) {
        bool ok = true;
        std::ostringstream os;
        for (const auto &b : built) {
            const std::size_t n = b.set.n, rho = b.set.rho;
            double lo = vf::lower_bound(n, rho, b.q);
            bool good = lo < static_cast<double>(b.set.size());
            if (rho > 1)
                good = good && vf::BigInt(b.set.size()) <= vf::simple_bound(n, rho, b.set.tower.q_sub());
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", lo);
            os << b.name << " " << buf << "<" << b.set.size() << (good ? "; " : " FAIL; ");
            ok = ok && good;
        }
        d = os.str();
        return ok && built.size() == 9;
    });

    std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: all criteria PASS");
    return failures ? 1 : 0;
}
