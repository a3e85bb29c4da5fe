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


#ifndef SYMRESTORE_ORACLE_EXACT_HPP
#define SYMRESTORE_ORACLE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace symrestore::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) as an exact integer; 0 outside 0 <= k <= n.
BigInt binomial_exact(long n, long k);

/// f(q, p, a, b) as an exact integer.
BigInt f_coeff_exact(long q, long p, long a, long b);

}  // namespace symrestore::oracle

#endif
