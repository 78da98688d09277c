/**************************************************************************
 * modulus_table.cpp
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

// Generated by tools/gen_modulus_table.py. Do not edit.

#include "satgeom/modulus_table.hpp"

namespace satgeom::gf {

namespace {

constexpr ModulusEntry kEntries[] = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
    {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 14, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 17, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 18, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 19, {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 20, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 1, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0, 1}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {2, 1}},
    {5, 2, {2, 1, 1}},
    {5, 3, {2, 3, 0, 1}},
    {5, 4, {2, 2, 1, 0, 1}},
    {5, 5, {2, 4, 0, 0, 0, 1}},
    {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 7, {2, 3, 0, 0, 0, 0, 0, 1}},
    {5, 8, {3, 2, 1, 0, 0, 0, 0, 0, 1}},
    {7, 1, {2, 1}},
    {7, 2, {3, 1, 1}},
    {7, 3, {2, 3, 0, 1}},
    {7, 4, {5, 3, 1, 0, 1}},
    {7, 5, {4, 1, 0, 0, 0, 1}},
    {7, 6, {5, 1, 3, 0, 0, 0, 1}},
    {7, 7, {2, 6, 0, 0, 0, 0, 0, 1}},
    {11, 1, {3, 1}},
    {11, 2, {7, 1, 1}},
    {11, 3, {4, 1, 0, 1}},
    {11, 4, {2, 1, 0, 0, 1}},
    {11, 5, {4, 1, 1, 0, 0, 1}},
    {13, 1, {2, 1}},
    {13, 2, {2, 1, 1}},
    {13, 3, {6, 1, 0, 1}},
    {13, 4, {2, 1, 1, 0, 1}},
    {13, 5, {2, 4, 0, 0, 0, 1}},
    {17, 1, {3, 1}},
    {17, 2, {3, 1, 1}},
    {17, 3, {3, 1, 0, 1}},
    {17, 4, {11, 1, 0, 0, 1}},
    {19, 1, {4, 1}},
    {19, 2, {2, 1, 1}},
    {19, 3, {4, 1, 0, 1}},
    {19, 4, {10, 2, 0, 0, 1}},
    {23, 1, {2, 1}},
    {23, 2, {7, 1, 1}},
    {23, 3, {3, 1, 0, 1}},
    {23, 4, {11, 1, 0, 0, 1}},
    {29, 1, {2, 1}},
    {29, 2, {3, 1, 1}},
    {29, 3, {11, 1, 0, 1}},
    {29, 4, {19, 1, 0, 0, 1}},
    {31, 1, {7, 1}},
    {31, 2, {12, 1, 1}},
    {31, 3, {14, 1, 0, 1}},
    {31, 4, {17, 2, 0, 0, 1}},
    {37, 1, {2, 1}},
    {37, 2, {5, 1, 1}},
    {37, 3, {13, 1, 0, 1}},
    {41, 1, {6, 1}},
    {41, 2, {12, 1, 1}},
    {41, 3, {6, 1, 0, 1}},
    {43, 1, {9, 1}},
    {43, 2, {3, 1, 1}},
    {43, 3, {14, 1, 0, 1}},
    {47, 1, {2, 1}},
    {47, 2, {13, 1, 1}},
    {47, 3, {4, 1, 0, 1}},
    {53, 1, {2, 1}},
    {53, 2, {5, 1, 1}},
    {53, 3, {5, 1, 0, 1}},
    {59, 1, {3, 1}},
    {59, 2, {2, 1, 1}},
    {59, 3, {3, 1, 0, 1}},
    {61, 1, {2, 1}},
    {61, 2, {2, 1, 1}},
    {61, 3, {17, 1, 0, 1}},
    {67, 1, {4, 1}},
    {67, 2, {12, 1, 1}},
    {67, 3, {6, 1, 0, 1}},
    {71, 1, {2, 1}},
    {71, 2, {11, 1, 1}},
    {71, 3, {8, 1, 0, 1}},
    {73, 1, {5, 1}},
    {73, 2, {11, 1, 1}},
    {73, 3, {13, 1, 0, 1}},
    {79, 1, {2, 1}},
    {79, 2, {3, 1, 1}},
    {79, 3, {9, 1, 0, 1}},
    {83, 1, {3, 1}},
    {83, 2, {2, 1, 1}},
    {83, 3, {7, 1, 0, 1}},
    {89, 1, {3, 1}},
    {89, 2, {6, 1, 1}},
    {89, 3, {19, 1, 0, 1}},
    {97, 1, {5, 1}},
    {97, 2, {5, 1, 1}},
    {97, 3, {7, 1, 0, 1}},
    {101, 1, {2, 1}},
    {101, 2, {3, 1, 1}},
    {101, 3, {3, 1, 0, 1}},
    {103, 1, {2, 1}},
    {103, 2, {5, 1, 1}},
    {107, 1, {3, 1}},
    {107, 2, {5, 1, 1}},
    {109, 1, {6, 1}},
    {109, 2, {6, 1, 1}},
    {113, 1, {3, 1}},
    {113, 2, {10, 1, 1}},
    {127, 1, {9, 1}},
    {127, 2, {3, 1, 1}},
    {131, 1, {3, 1}},
    {131, 2, {14, 1, 1}},
    {137, 1, {3, 1}},
    {137, 2, {6, 1, 1}},
    {139, 1, {4, 1}},
    {139, 2, {2, 1, 1}},
    {149, 1, {2, 1}},
    {149, 2, {3, 1, 1}},
    {151, 1, {5, 1}},
    {151, 2, {12, 1, 1}},
    {157, 1, {5, 1}},
    {157, 2, {6, 1, 1}},
    {163, 1, {4, 1}},
    {163, 2, {11, 1, 1}},
    {167, 1, {2, 1}},
    {167, 2, {5, 1, 1}},
    {173, 1, {2, 1}},
    {173, 2, {5, 1, 1}},
    {179, 1, {3, 1}},
    {179, 2, {7, 1, 1}},
    {181, 1, {2, 1}},
    {181, 2, {18, 1, 1}},
    {191, 1, {2, 1}},
    {191, 2, {19, 1, 1}},
    {193, 1, {5, 1}},
    {193, 2, {5, 1, 1}},
    {197, 1, {2, 1}},
    {197, 2, {3, 1, 1}},
    {199, 1, {2, 1}},
    {199, 2, {6, 1, 1}},
    {211, 1, {4, 1}},
    {211, 2, {3, 1, 1}},
    {223, 1, {9, 1}},
    {223, 2, {5, 1, 1}},
    {227, 1, {3, 1}},
    {227, 2, {5, 1, 1}},
    {229, 1, {6, 1}},
    {229, 2, {6, 1, 1}},
    {233, 1, {3, 1}},
    {233, 2, {3, 1, 1}},
    {239, 1, {2, 1}},
    {239, 2, {13, 1, 1}},
    {241, 1, {7, 1}},
    {241, 2, {13, 1, 1}},
    {251, 1, {3, 1}},
    {251, 2, {19, 1, 1}},
    {257, 1, {3, 1}},
    {257, 2, {5, 1, 1}},
    {263, 1, {2, 1}},
    {263, 2, {7, 1, 1}},
    {269, 1, {2, 1}},
    {269, 2, {2, 1, 1}},
    {271, 1, {2, 1}},
    {271, 2, {21, 1, 1}},
    {277, 1, {5, 1}},
    {277, 2, {11, 1, 1}},
    {281, 1, {3, 1}},
    {281, 2, {3, 1, 1}},
    {283, 1, {6, 1}},
    {283, 2, {3, 1, 1}},
    {293, 1, {2, 1}},
    {293, 2, {2, 1, 1}},
    {307, 1, {7, 1}},
    {307, 2, {5, 1, 1}},
    {311, 1, {2, 1}},
    {311, 2, {17, 1, 1}},
    {313, 1, {10, 1}},
    {313, 2, {14, 1, 1}},
    {317, 1, {2, 1}},
    {317, 2, {5, 1, 1}},
    {331, 1, {5, 1}},
    {331, 2, {11, 1, 1}},
    {337, 1, {10, 1}},
    {337, 2, {15, 1, 1}},
    {347, 1, {3, 1}},
    {347, 2, {7, 1, 1}},
    {349, 1, {2, 1}},
    {349, 2, {2, 1, 1}},
    {353, 1, {3, 1}},
    {353, 2, {13, 1, 1}},
    {359, 1, {2, 1}},
    {359, 2, {7, 1, 1}},
    {367, 1, {2, 1}},
    {367, 2, {6, 1, 1}},
    {373, 1, {2, 1}},
    {373, 2, {6, 1, 1}},
    {379, 1, {4, 1}},
    {379, 2, {10, 1, 1}},
    {383, 1, {2, 1}},
    {383, 2, {5, 1, 1}},
    {389, 1, {2, 1}},
    {389, 2, {8, 1, 1}},
    {397, 1, {5, 1}},
    {397, 2, {13, 1, 1}},
    {401, 1, {3, 1}},
    {401, 2, {17, 1, 1}},
    {409, 1, {21, 1}},
    {409, 2, {22, 1, 1}},
    {419, 1, {3, 1}},
    {419, 2, {2, 1, 1}},
    {421, 1, {2, 1}},
    {421, 2, {18, 1, 1}},
    {431, 1, {5, 1}},
    {431, 2, {7, 1, 1}},
    {433, 1, {5, 1}},
    {433, 2, {5, 1, 1}},
    {439, 1, {5, 1}},
    {439, 2, {23, 1, 1}},
    {443, 1, {3, 1}},
    {443, 2, {7, 1, 1}},
    {449, 1, {3, 1}},
    {449, 2, {12, 1, 1}},
    {457, 1, {13, 1}},
    {457, 2, {15, 1, 1}},
    {461, 1, {2, 1}},
    {461, 2, {2, 1, 1}},
    {463, 1, {2, 1}},
    {463, 2, {11, 1, 1}},
    {467, 1, {3, 1}},
    {467, 2, {6, 1, 1}},
    {479, 1, {2, 1}},
    {479, 2, {34, 1, 1}},
    {487, 1, {2, 1}},
    {487, 2, {10, 1, 1}},
    {491, 1, {4, 1}},
    {491, 2, {8, 1, 1}},
    {499, 1, {5, 1}},
    {499, 2, {10, 1, 1}},
    {503, 1, {2, 1}},
    {503, 2, {19, 1, 1}},
    {509, 1, {2, 1}},
    {509, 2, {2, 1, 1}},
    {521, 1, {3, 1}},
    {521, 2, {6, 1, 1}},
    {523, 1, {4, 1}},
    {523, 2, {2, 1, 1}},
    {541, 1, {2, 1}},
    {541, 2, {10, 1, 1}},
    {547, 1, {4, 1}},
    {547, 2, {5, 1, 1}},
    {557, 1, {2, 1}},
    {557, 2, {8, 1, 1}},
    {563, 1, {3, 1}},
    {563, 2, {5, 1, 1}},
    {569, 1, {3, 1}},
    {569, 2, {3, 1, 1}},
    {571, 1, {5, 1}},
    {571, 2, {3, 1, 1}},
    {577, 1, {5, 1}},
    {577, 2, {10, 1, 1}},
    {587, 1, {3, 1}},
    {587, 2, {8, 1, 1}},
    {593, 1, {3, 1}},
    {593, 2, {3, 1, 1}},
    {599, 1, {2, 1}},
    {599, 2, {7, 1, 1}},
    {601, 1, {7, 1}},
    {601, 2, {11, 1, 1}},
    {607, 1, {2, 1}},
    {607, 2, {3, 1, 1}},
    {613, 1, {2, 1}},
    {613, 2, {6, 1, 1}},
    {617, 1, {3, 1}},
    {617, 2, {26, 1, 1}},
    {619, 1, {4, 1}},
    {619, 2, {2, 1, 1}},
    {631, 1, {9, 1}},
    {631, 2, {12, 1, 1}},
    {641, 1, {3, 1}},
    {641, 2, {6, 1, 1}},
    {643, 1, {7, 1}},
    {643, 2, {13, 1, 1}},
    {647, 1, {2, 1}},
    {647, 2, {10, 1, 1}},
    {653, 1, {2, 1}},
    {653, 2, {14, 1, 1}},
    {659, 1, {3, 1}},
    {659, 2, {10, 1, 1}},
    {661, 1, {2, 1}},
    {661, 2, {2, 1, 1}},
    {673, 1, {5, 1}},
    {673, 2, {5, 1, 1}},
    {677, 1, {2, 1}},
    {677, 2, {3, 1, 1}},
    {683, 1, {10, 1}},
    {683, 2, {5, 1, 1}},
    {691, 1, {6, 1}},
    {691, 2, {12, 1, 1}},
    {701, 1, {2, 1}},
    {701, 2, {3, 1, 1}},
    {709, 1, {2, 1}},
    {709, 2, {10, 1, 1}},
    {719, 1, {2, 1}},
    {719, 2, {19, 1, 1}},
    {727, 1, {7, 1}},
    {727, 2, {31, 1, 1}},
    {733, 1, {6, 1}},
    {733, 2, {6, 1, 1}},
    {739, 1, {6, 1}},
    {739, 2, {22, 1, 1}},
    {743, 1, {2, 1}},
    {743, 2, {5, 1, 1}},
    {751, 1, {2, 1}},
    {751, 2, {12, 1, 1}},
    {757, 1, {2, 1}},
    {757, 2, {6, 1, 1}},
    {761, 1, {6, 1}},
    {761, 2, {7, 1, 1}},
    {769, 1, {11, 1}},
    {769, 2, {21, 1, 1}},
    {773, 1, {2, 1}},
    {773, 2, {2, 1, 1}},
    {787, 1, {4, 1}},
    {787, 2, {2, 1, 1}},
    {797, 1, {2, 1}},
    {797, 2, {8, 1, 1}},
    {809, 1, {3, 1}},
    {809, 2, {12, 1, 1}},
    {811, 1, {5, 1}},
    {811, 2, {10, 1, 1}},
    {821, 1, {2, 1}},
    {821, 2, {3, 1, 1}},
    {823, 1, {2, 1}},
    {823, 2, {14, 1, 1}},
    {827, 1, {3, 1}},
    {827, 2, {6, 1, 1}},
    {829, 1, {2, 1}},
    {829, 2, {2, 1, 1}},
    {839, 1, {2, 1}},
    {839, 2, {11, 1, 1}},
    {853, 1, {2, 1}},
    {853, 2, {2, 1, 1}},
    {857, 1, {3, 1}},
    {857, 2, {5, 1, 1}},
    {859, 1, {4, 1}},
    {859, 2, {2, 1, 1}},
    {863, 1, {2, 1}},
    {863, 2, {5, 1, 1}},
    {877, 1, {2, 1}},
    {877, 2, {5, 1, 1}},
    {881, 1, {3, 1}},
    {881, 2, {15, 1, 1}},
    {883, 1, {4, 1}},
    {883, 2, {28, 1, 1}},
    {887, 1, {2, 1}},
    {887, 2, {10, 1, 1}},
    {907, 1, {4, 1}},
    {907, 2, {5, 1, 1}},
    {911, 1, {3, 1}},
    {911, 2, {37, 1, 1}},
    {919, 1, {5, 1}},
    {919, 2, {15, 1, 1}},
    {929, 1, {3, 1}},
    {929, 2, {7, 1, 1}},
    {937, 1, {5, 1}},
    {937, 2, {11, 1, 1}},
    {941, 1, {2, 1}},
    {941, 2, {2, 1, 1}},
    {947, 1, {3, 1}},
    {947, 2, {19, 1, 1}},
    {953, 1, {3, 1}},
    {953, 2, {5, 1, 1}},
    {967, 1, {2, 1}},
    {967, 2, {28, 1, 1}},
    {971, 1, {3, 1}},
    {971, 2, {6, 1, 1}},
    {977, 1, {3, 1}},
    {977, 2, {6, 1, 1}},
    {983, 1, {2, 1}},
    {983, 2, {11, 1, 1}},
    {991, 1, {2, 1}},
    {991, 2, {11, 1, 1}},
    {997, 1, {7, 1}},
    {997, 2, {11, 1, 1}},
    {1009, 1, {11, 1}},
    {1009, 2, {11, 1, 1}},
    {1013, 1, {3, 1}},
    {1013, 2, {7, 1, 1}},
    {1019, 1, {3, 1}},
    {1019, 2, {6, 1, 1}},
    {1021, 1, {10, 1}},
    {1021, 2, {10, 1, 1}},
};

}  // namespace

std::span<const ModulusEntry> modulus_table() { return kEntries; }

}  // namespace satgeom::gf
