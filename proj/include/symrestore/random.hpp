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

#ifndef SYMRESTORE_RANDOM_HPP
#define SYMRESTORE_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <limits>

namespace symrestore {

/// Counter-based, splittable random stream.
///
/// Draw k of a stream with key K is mix(K + (k + 1) * gamma) using the
/// SplitMix64 finalizer, so a stream is fully described by (key, counter).
/// `split(i)` derives an independent child key from the parent key and the
/// index only; it does not consume draws from the parent. Only integer
/// arithmetic is used for the raw bits, so streams are identical across
/// platforms.
class RandomSource {
   public:
    using result_type = uint64_t;

    explicit RandomSource(uint64_t seed) : key_(mix(seed ^ kSeedSalt)) {
    }

    RandomSource split(uint64_t index) const {
        RandomSource child(0);
        child.key_ = mix(key_ ^ mix(index * kGamma + kSplitSalt));
        return child;
    }

    uint64_t next_u64() {
        counter_ += 1;
        return mix(key_ + counter_ * kGamma);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal (Box-Muller, one value per call).
    double normal();

    /// Complex normal with E|z|^2 = 1.
    std::complex<double> complex_normal();

    uint64_t key() const {
        return key_;
    }
    uint64_t counter() const {
        return counter_;
    }

    // UniformRandomBitGenerator interface, for use with <algorithm>.
    static constexpr uint64_t min() {
        return 0;
    }
    static constexpr uint64_t max() {
        return std::numeric_limits<uint64_t>::max();
    }
    uint64_t operator()() {
        return next_u64();
    }

    static constexpr uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr uint64_t kSeedSalt = 0x5f1d2c3b4a596877ULL;
    static constexpr uint64_t kSplitSalt = 0x2545f4914f6cdd1dULL;

    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace symrestore

#endif
