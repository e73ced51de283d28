// tests/test_util_basics.cc

// Copyright 2026  Daptain Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <doctest.h>

#include "util/crc32.h"
#include "util/rng.h"

namespace daptain {
namespace {

TEST_CASE("crc32 known answer") {
  CHECK(Crc32("123456789", 9) == 0xCBF43926u);
  CHECK(Crc32("", 0) == 0u);
}

TEST_CASE("rng determinism and forks") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.NextU64() == b.NextU64());

  // Forks depend only on (seed, tag), not on draw position.
  Rng c(123);
  c.NextU64();
  Rng f1 = a.Fork(7);
  Rng f2 = c.Fork(7);
  CHECK(f1.NextU64() == f2.NextU64());
  Rng f3 = a.Fork(8);
  CHECK(f1.NextU64() != f3.NextU64());
}

TEST_CASE("rng distributions behave sanely") {
  Rng r(99);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double u = r.Uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(sq / n == doctest::Approx(1.0 / 3).epsilon(5e-3));

  double nsum = 0.0, nsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = r.Normal();
    nsum += v;
    nsq += v * v;
  }
  CHECK(nsum / n == doctest::Approx(0.0).epsilon(1e-2));
  CHECK(nsq / n == doctest::Approx(1.0).epsilon(2e-2));

  int counts[5] = {0};
  for (int i = 0; i < 50000; ++i) ++counts[r.UniformInt(5)];
  for (int k = 0; k < 5; ++k) CHECK(counts[k] > 9000);
}

}  // namespace
}  // namespace daptain
