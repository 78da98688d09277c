/**************************************************************************
 * covcode.cpp
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

#include "satgeom/covcode.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "satgeom/error.hpp"
#include "satgeom/kernels.hpp"

namespace satgeom::cc {

using BigInt = boost::multiprecision::cpp_int;

std::vector<std::vector<Elem>> LinearCodeSpec::columns() const {
    std::vector<std::vector<Elem>> out(n, std::vector<Elem>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[j][i] = h[i][j];
    return out;
}

LinearCodeSpec make_code(const Field &f, const Matrix &h, std::optional<int> claimed_r) {
    if (h.empty() || h[0].empty())
        throw Error(Errc::BadParams, "empty parity check matrix");
    LinearCodeSpec c{f, h[0].size(), h.size(), h, claimed_r};
    for (const auto &row : h) {
        if (row.size() != c.n)
            throw Error(Errc::BadParams, "ragged parity check matrix");
        for (Elem x : row)
            if (x >= f.order())
                throw Error(Errc::BadParams, "entry outside the field");
    }
    for (const auto &col : c.columns())
        if (std::all_of(col.begin(), col.end(), [](Elem x) { return x == 0; }))
            throw Error(Errc::BadParams, "zero column");
    if (pg::rank(f, h) != c.r)
        throw Error(Errc::RankDeficient, "parity check matrix has rank below " + std::to_string(c.r));
    return c;
}

LinearCodeSpec parity_check_matrix(const sat::SaturatingSet &s) {
    if (s.points.empty())
        throw Error(Errc::RankDeficient, "empty set");
    const std::size_t r = s.n + 1;
    Matrix h(r, pg::Vec(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t i = 0; i < r; ++i)
            h[i][j] = s.points[j].coords.at(i);
    return make_code(s.tower.big(), h, static_cast<int>(s.rho + 1));
}

int covering_radius(const LinearCodeSpec &c) {
    auto dist = kern::omp::syndrome_bfs(c.field, c.columns());
    std::uint8_t worst = 0;
    for (auto d : dist) {
        if (d == kern::kUnreached)
            throw Error(Errc::RankDeficient, "some syndrome is unreachable");
        worst = std::max(worst, d);
    }
    return worst;
}

Rational covering_density(std::size_t n, std::size_t r, std::size_t radius, std::uint64_t q) {
    if (radius > n || q < 2)
        throw Error(Errc::BadParams, "need 0 <= R <= n and q >= 2");
    BigInt vol = 0, binom = 1, pw = 1;
    for (std::size_t i = 0; i <= radius; ++i) {
        vol += binom * pw;
        binom = binom * (n - i) / (i + 1);
        pw *= q - 1;
    }
    return Rational(vol, boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(r)));
}

double density_bound(std::size_t radius, std::uint64_t q_sub) {
    if (radius <= 2 || q_sub < 2)
        throw Error(Errc::BadParams, "density bound needs R > 2");
    const double rr = static_cast<double>(radius);
    double fact = 1, geo = 0;
    for (std::size_t i = 2; i <= radius; ++i)
        fact *= static_cast<double>(i);
    for (std::size_t i = 0; i < radius; ++i)
        geo += std::pow(static_cast<double>(q_sub), -static_cast<double>(i));
    return std::pow((rr - 1) * rr, rr) / fact * std::pow(geo, rr);
}

double density_bound_euler(std::size_t radius, std::uint64_t q_sub) {
    if (radius <= 2 || q_sub < 2)
        throw Error(Errc::BadParams, "density bound needs R > 2");
    const double rr = static_cast<double>(radius), qs = static_cast<double>(q_sub);
    const double q = std::pow(qs, rr);
    return std::pow(std::numbers::e * (rr - 1) * (q - 1) / (q - std::pow(qs, rr - 1)), rr);
}

namespace {

const char *kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::string encode(const Field &f, Elem x) {
    auto c = f.coeffs(x);
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (f.p() <= 36) {
            s += kDigits[c[i]];
        } else {
            if (i)
                s += '.';
            s += std::to_string(c[i]);
        }
    }
    return s;
}

Elem decode(const Field &f, const std::string &tok) {
    std::vector<std::uint32_t> c;
    if (f.p() <= 36) {
        for (char ch : tok) {
            const char *at = std::find(kDigits, kDigits + 36, ch);
            if (at == kDigits + 36)
                throw Error(Errc::Parse, "bad digit in '" + tok + "'");
            c.push_back(static_cast<std::uint32_t>(at - kDigits));
        }
    } else {
        std::istringstream ss(tok);
        std::string part;
        while (std::getline(ss, part, '.')) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
                throw Error(Errc::Parse, "bad digit in '" + tok + "'");
            c.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        }
    }
    if (c.size() != f.degree())
        throw Error(Errc::Parse, "entry '" + tok + "' needs " + std::to_string(f.degree()) + " digits");
    for (auto d : c)
        if (d >= f.p())
            throw Error(Errc::Parse, "digit out of range in '" + tok + "'");
    return f.from_coeffs(c);
}

}  // namespace

void write_parity_check(std::ostream &os, const LinearCodeSpec &c) {
    os << c.field.p() << ' ' << c.field.degree() << ' ' << c.n << ' ' << c.r << '\n';
    for (const auto &row : c.h) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << encode(c.field, row[j]);
        os << '\n';
    }
}

LinearCodeSpec read_parity_check(std::istream &is) {
    std::string line;
    if (!std::getline(is, line))
        throw Error(Errc::Parse, "missing header line");
    std::istringstream head(line);
    long long p = 0, e = 0, n = 0, r = 0;
    std::string extra;
    if (!(head >> p >> e >> n >> r) || (head >> extra) || p < 2 || e < 1 || n < 1 || r < 1)
        throw Error(Errc::Parse, "header must be 'p e n r'");
    Field f;
    try {
        f = Field(gf::lookup_modulus(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)));
    } catch (const Error &err) {
        throw Error(Errc::Parse, err.what());
    }
    Matrix h;
    for (long long i = 0; i < r; ++i) {
        if (!std::getline(is, line))
            throw Error(Errc::Parse, "expected " + std::to_string(r) + " rows");
        std::istringstream row(line);
        pg::Vec v;
        std::string tok;
        while (row >> tok)
            v.push_back(decode(f, tok));
        if (static_cast<long long>(v.size()) != n)
            throw Error(Errc::Parse, "row " + std::to_string(i + 1) + " has " + std::to_string(v.size()) +
                                         " entries, expected " + std::to_string(n));
        h.push_back(std::move(v));
    }
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw Error(Errc::Parse, "trailing data after the matrix");
    return make_code(f, h);
}

}  // namespace satgeom::cc
