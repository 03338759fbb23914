// Copyright 2026 the heegner library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEEGNER_UTIL_HPP
#define HEEGNER_UTIL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "heegner/bigfloat.hpp"

namespace heegner {

// Exit-code aligned error taxonomy: validation errors are user-input
// problems, inconclusive means a verdict could not be reached within
// budget, internal means an invariant failed.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InconclusiveError : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};
struct RetryWithHigherPrecision : Error {
  using Error::Error;
};

inline unsigned worker_count() {
  if (const char* env = std::getenv("HEEGNER_THREADS")) {
    long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

// Deterministic parallel map: results are gathered by index, so the output
// does not depend on scheduling or on the number of workers. The working
// precision is thread-local in MPFR, so each worker re-establishes it.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned precision_digits,
                            const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  unsigned workers = std::min<std::size_t>(worker_count(), n ? n : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&]() {
      PrecisionGuard guard(precision_digits);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        out[i] = fn(i);
      }
    }));
  }
  for (auto& f : futs) f.get();
  return out;
}

// FNV-1a, used to fingerprint exact coefficient serializations in
// certificates. Not cryptographic; collisions are irrelevant here because
// the hashed data is also replayed.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace heegner

#endif  // HEEGNER_UTIL_HPP
