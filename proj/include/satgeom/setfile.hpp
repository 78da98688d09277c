/**************************************************************************
 * setfile.hpp
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

#pragma once

#include <string>

#include "satgeom/saturate.hpp"
#include "satgeom/verify.hpp"

// JSON documents for point sets and certificates. Keys are sorted and the
// dump is compact with a trailing newline, so a read/write round trip is
// byte-stable.
namespace satgeom::io {

std::string dump_set(const sat::SaturatingSet &s);
// Throws Parse on malformed JSON, BadParams on invalid content.
sat::SaturatingSet parse_set(const std::string &text);

// Throws Io when the file cannot be opened or written.
void write_set_file(const std::string &path, const sat::SaturatingSet &s);
sat::SaturatingSet read_set_file(const std::string &path);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

// {"radius": r, "sizes": {...}, "witness": [...] or null}
std::string dump_certificate(const vf::SaturationCertificate &c, const gf::Field &f);

}  // namespace satgeom::io
