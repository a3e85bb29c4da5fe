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


#include "symrestore/oracle_exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrestore::oracle {

BigInt binomial_exact(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; i++) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt f_coeff_exact(long q, long p, long a, long b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("f coefficient needs a, b >= 0");
    }
    BigInt total = 0;
    for (long k = std::max({0L, q - b, p - b}); k <= std::min({a, q, p}); k++) {
        total += binomial_exact(b, q - k) * binomial_exact(b, p - k) * binomial_exact(a, k);
    }
    return total;
}

}  // namespace symrestore::oracle
