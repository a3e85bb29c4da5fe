// Copyright 2026 The symrestore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SYMRESTORE_IO_HPP
#define SYMRESTORE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symrestore/asymmetry.hpp"
#include "symrestore/quantum_core.hpp"

namespace symrestore {

/// Binary dump of reduced (and pruned) density matrices, little-endian:
///
///   char[4]  "SRDM"
///   u32      version (1)
///   u32      subsystem qubits |A|
///   u64      dim = 2^|A|
///   str      symmetry name ("none|u1|z2|su2")
///   u32      sector count, then per sector: str label, u64 n, u64 indices[n]
///   u8       1 if the sector basis differs from the computational basis
///   u64      record count, then per record:
///            u64 t, u8 pruned flag, f64 pairs (re, im)[dim * dim], row-major
///
/// `str` is a u32 byte length followed by the bytes. Matrices are stored in the
/// computational basis; sector indices refer to the sector basis.
struct RdmRecord {
    uint64_t t = 0;
    bool pruned = false;
    ComplexMatrix matrix;
};

struct RdmDump {
    uint32_t num_qubits = 0;
    std::string symmetry;
    std::vector<Sector> sectors;
    bool has_basis_change = false;
    std::vector<RdmRecord> records;
};

RdmDump make_rdm_dump(const SectorDecomposition &sectors);

void write_rdm_dump(std::ostream &out, const RdmDump &dump);
RdmDump read_rdm_dump(std::istream &in);

/// File variants; errors carry the path.
void write_rdm_dump(const std::string &path, const RdmDump &dump);
RdmDump read_rdm_dump(const std::string &path);

}  // namespace symrestore

#endif
