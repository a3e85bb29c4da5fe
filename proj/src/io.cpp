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


#include "symrestore/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace symrestore {

static_assert(std::endian::native == std::endian::little, "dump format assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'S', 'R', 'D', 'M'};
constexpr uint32_t kVersion = 1;
// Guards reads of corrupt length fields.
constexpr uint64_t kMaxCount = uint64_t{1} << 32;

template <typename T>
void put(std::ostream &out, T v) {
    out.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

void put_str(std::ostream &out, const std::string &s) {
    put<uint32_t>(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

template <typename T>
T get(std::istream &in) {
    T v;
    if (!in.read(reinterpret_cast<char *>(&v), sizeof(T))) {
        throw std::runtime_error("truncated density-matrix dump");
    }
    return v;
}

uint64_t get_count(std::istream &in) {
    auto n = get<uint64_t>(in);
    if (n > kMaxCount) {
        throw std::runtime_error("corrupt density-matrix dump: count " + std::to_string(n));
    }
    return n;
}

std::string get_str(std::istream &in) {
    auto n = get<uint32_t>(in);
    std::string s(n, '\0');
    if (n > 0 && !in.read(s.data(), n)) {
        throw std::runtime_error("truncated density-matrix dump");
    }
    return s;
}

}  // namespace

RdmDump make_rdm_dump(const SectorDecomposition &sectors) {
    RdmDump d;
    d.num_qubits = static_cast<uint32_t>(sectors.num_qubits());
    d.symmetry = std::string(to_string(sectors.symmetry()));
    d.sectors = sectors.sectors();
    d.has_basis_change = sectors.basis_change().has_value();
    return d;
}

void write_rdm_dump(std::ostream &out, const RdmDump &dump) {
    const uint64_t dim = uint64_t{1} << dump.num_qubits;
    out.write(kMagic, 4);
    put<uint32_t>(out, kVersion);
    put<uint32_t>(out, dump.num_qubits);
    put<uint64_t>(out, dim);
    put_str(out, dump.symmetry);
    put<uint32_t>(out, static_cast<uint32_t>(dump.sectors.size()));
    for (const auto &s : dump.sectors) {
        put_str(out, s.label);
        put<uint64_t>(out, s.indices.size());
        for (size_t i : s.indices) {
            put<uint64_t>(out, i);
        }
    }
    put<uint8_t>(out, dump.has_basis_change ? 1 : 0);
    put<uint64_t>(out, dump.records.size());
    for (const auto &r : dump.records) {
        if (static_cast<uint64_t>(r.matrix.rows()) != dim || static_cast<uint64_t>(r.matrix.cols()) != dim) {
            throw std::invalid_argument("record matrix does not match the dump dimension");
        }
        put<uint64_t>(out, r.t);
        put<uint8_t>(out, r.pruned ? 1 : 0);
        for (Eigen::Index i = 0; i < r.matrix.rows(); i++) {
            for (Eigen::Index j = 0; j < r.matrix.cols(); j++) {
                put<double>(out, r.matrix(i, j).real());
                put<double>(out, r.matrix(i, j).imag());
            }
        }
    }
    if (!out) {
        throw std::runtime_error("failed writing density-matrix dump");
    }
}

RdmDump read_rdm_dump(std::istream &in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("not a density-matrix dump (bad magic)");
    }
    if (auto v = get<uint32_t>(in); v != kVersion) {
        throw std::runtime_error("unsupported density-matrix dump version " + std::to_string(v));
    }
    RdmDump d;
    d.num_qubits = get<uint32_t>(in);
    if (d.num_qubits > 30) {
        throw std::runtime_error("corrupt density-matrix dump: |A| = " + std::to_string(d.num_qubits));
    }
    const uint64_t dim = get<uint64_t>(in);
    if (dim != (uint64_t{1} << d.num_qubits)) {
        throw std::runtime_error("corrupt density-matrix dump: dim does not match |A|");
    }
    d.symmetry = get_str(in);
    auto ns = get<uint32_t>(in);
    for (uint32_t k = 0; k < ns; k++) {
        Sector s;
        s.label = get_str(in);
        auto n = get_count(in);
        s.indices.resize(n);
        for (auto &i : s.indices) {
            i = get<uint64_t>(in);
        }
        d.sectors.push_back(std::move(s));
    }
    d.has_basis_change = get<uint8_t>(in) != 0;
    auto nr = get_count(in);
    for (uint64_t k = 0; k < nr; k++) {
        RdmRecord r;
        r.t = get<uint64_t>(in);
        r.pruned = get<uint8_t>(in) != 0;
        r.matrix.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (Eigen::Index i = 0; i < r.matrix.rows(); i++) {
            for (Eigen::Index j = 0; j < r.matrix.cols(); j++) {
                double re = get<double>(in);
                double im = get<double>(in);
                r.matrix(i, j) = complex(re, im);
            }
        }
        d.records.push_back(std::move(r));
    }
    return d;
}

void write_rdm_dump(const std::string &path, const RdmDump &dump) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    try {
        write_rdm_dump(out, dump);
    } catch (const std::exception &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

RdmDump read_rdm_dump(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    try {
        return read_rdm_dump(in);
    } catch (const std::exception &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace symrestore
