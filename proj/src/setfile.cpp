/**************************************************************************
 * setfile.cpp
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

#include "satgeom/setfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "satgeom/error.hpp"

namespace satgeom::io {

using nlohmann::json;

namespace {

json point_json(const gf::Field &f, const pg::Point &x) {
    json out = json::array();
    for (auto e : x.coords)
        out.push_back(f.coeffs(e));
    return out;
}

json provenance_json(const sat::Provenance &p) {
    return json{{"kind", p.kind},   {"level", p.level}, {"petal", p.petal},
                {"layer", p.layer}, {"index", p.index}, {"block", p.block}};
}

template <class T>
T get(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::Parse, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(Errc::Parse, std::string("bad value for '") + key + "': " + e.what());
    }
}

sat::SaturatingSet from_json(const json &doc) {
    const json &fj = doc.contains("field") ? doc.at("field") : json();
    gf::FieldSpec spec;
    spec.p = get<std::uint32_t>(fj, "p");
    spec.degree = get<std::uint32_t>(fj, "degree");
    spec.modulus = get<std::vector<std::uint32_t>>(fj, "modulus");
    if (!gf::is_prime(spec.p) || spec.degree == 0 || spec.modulus.size() != spec.degree + 1)
        throw Error(Errc::BadParams, "invalid field spec");
    for (auto c : spec.modulus)
        if (c >= spec.p)
            throw Error(Errc::BadParams, "modulus coefficient out of range");
    gf::Field f(spec);
    const auto sub = get<std::uint32_t>(doc, "subfield_degree");
    if (sub == 0 || spec.degree % sub != 0)
        throw Error(Errc::BadParams, "subfield degree must divide the field degree");

    sat::SaturatingSet s;
    s.tower = gf::FieldTower(f, sub);
    s.n = get<std::size_t>(doc, "n");
    s.rho = get<std::size_t>(doc, "rho");
    const auto pts = get<std::vector<std::vector<std::vector<std::uint32_t>>>>(doc, "points");
    const json &prov = doc.contains("provenance") ? doc.at("provenance") : json();
    if (!prov.is_array() || prov.size() != pts.size())
        throw Error(Errc::Parse, "provenance must list one tag per point");
    std::set<pg::Point> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != s.n + 1)
            throw Error(Errc::BadParams, "point " + std::to_string(i) + " has the wrong length");
        pg::Vec v;
        for (const auto &c : pts[i]) {
            if (c.size() != spec.degree)
                throw Error(Errc::BadParams, "coordinate with the wrong number of coefficients");
            for (auto d : c)
                if (d >= spec.p)
                    throw Error(Errc::BadParams, "coefficient out of range");
            v.push_back(f.from_coeffs(c));
        }
        pg::Point x = pg::make_point(f, v);
        if (!seen.insert(x).second)
            throw Error(Errc::BadParams, "duplicate point " + std::to_string(i));
        s.points.push_back(std::move(x));
        const json &t = prov[i];
        s.provenance.push_back(sat::Provenance{get<std::string>(t, "kind"), get<int>(t, "level"),
                                               get<int>(t, "petal"), get<int>(t, "layer"), get<int>(t, "index"),
                                               get<int>(t, "block")});
    }
    return s;
}

}  // namespace

std::string dump_set(const sat::SaturatingSet &s) {
    const gf::Field &f = s.tower.big();
    json doc;
    doc["field"] = json{{"p", f.p()}, {"degree", f.degree()}, {"modulus", f.spec().modulus}};
    doc["subfield_degree"] = s.tower.sub_degree();
    doc["n"] = s.n;
    doc["rho"] = s.rho;
    doc["points"] = json::array();
    for (const auto &x : s.points)
        doc["points"].push_back(point_json(f, x));
    doc["provenance"] = json::array();
    for (const auto &p : s.provenance)
        doc["provenance"].push_back(provenance_json(p));
    return doc.dump() + "\n";
}

sat::SaturatingSet parse_set(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(Errc::Parse, e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::Parse, "set file must hold a JSON object");
    return from_json(doc);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush())
        throw Error(Errc::Io, "cannot write " + path);
}

void write_set_file(const std::string &path, const sat::SaturatingSet &s) { write_text_file(path, dump_set(s)); }

sat::SaturatingSet read_set_file(const std::string &path) { return parse_set(read_text_file(path)); }

std::string dump_certificate(const vf::SaturationCertificate &c, const gf::Field &f) {
    json doc;
    doc["radius"] = c.radius;
    doc["witness"] = c.witness ? point_json(f, *c.witness) : json(nullptr);
    doc["sizes"] = json{{"covered", c.covered}, {"points", c.total}, {"set", c.set_size}};
    return doc.dump() + "\n";
}

}  // namespace satgeom::io
