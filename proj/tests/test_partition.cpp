#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "oracle/oracle.hpp"
#include "truncorr/errors.hpp"
#include "truncorr/partition_measure.hpp"
#include "truncorr/measures.hpp"
#include "truncorr/states.hpp"

using namespace truncorr;

TEST_SUITE("partition") {
  TEST_CASE("enumeration counts") {
    for (auto [k, g, want] : {std::tuple{2, 2, 3}, {3, 3, 280}, {2, 4, 35}, {4, 2, 105},
                              {1, 5, 1}, {5, 1, 1}}) {
      int seen = 0;
      std::set<std::vector<int>> distinct;
      for_each_equal_partition(k, g, [&](std::span<const int> labels) {
        ++seen;
        // canonical form: groups numbered in order of first appearance
        std::vector<int> lab(labels.begin(), labels.end());
        distinct.insert(lab);
        std::vector<int> sizes(k, 0);
        for (int l : lab) ++sizes[l];
        for (int s : sizes) CHECK(s == g);
      });
      CHECK(seen == want);
      CHECK(distinct.size() == static_cast<std::size_t>(want));
      CHECK(unordered_partition_count(k, g) == static_cast<std::uint64_t>(want));
    }
    CHECK(unordered_partition_count(4, 4) == 2627625u);
    CHECK(std::abs(ordered_partition_count(2, 2) - 6.0L) < 1e-9L);
  }

  TEST_CASE("partitions are unordered") {
    // every set partition of 4 items into pairs appears once
    std::set<std::set<std::set<int>>> parts;
    for_each_equal_partition(2, 2, [&](std::span<const int> labels) {
      std::set<int> a, b;
      for (int i = 0; i < 4; ++i) (labels[i] == 0 ? a : b).insert(i);
      parts.insert({a, b});
    });
    CHECK(parts.size() == 3);
  }

  TEST_CASE("sigma: three mimicked B spectra") {
    // global {0, 1/6, 1/3, 1/2}, groups of two for side B
    std::set<std::pair<long, long>> mimicked;
    const double ev[] = {0, 1.0 / 6, 1.0 / 3, 0.5};
    for_each_equal_partition(2, 2, [&](std::span<const int> labels) {
      double s[2] = {0, 0};
      for (int i = 0; i < 4; ++i) s[labels[i]] += ev[i];
      const double lo = std::min(s[0], s[1]);
      mimicked.insert({std::lround(lo * 6), std::lround((1 - lo) * 6)});
    });
    CHECK(mimicked == std::set<std::pair<long, long>>{{1, 5}, {2, 4}, {3, 3}});
  }

  TEST_CASE("G of sigma, sigma' and product states") {
    CHECK_NEAR(measure_F_side(sigma(), Side::A), 0.0, 1e-12);
    CHECK_NEAR(measure_F_side(sigma(), Side::B), oracle::g_sigma(), 1e-9);
    CHECK_NEAR(measure_G(sigma()), 0.129, 5e-4);
    CHECK_NEAR(measure_G(sigma_prime()), 0.0, 1e-12);
    CHECK_NEAR(measure_G(phi_p(1.0)), 0.0, 1e-12);
  }

  TEST_CASE("permuting the genuine list leaves the discrepancy unchanged") {
    Rng rng(3);
    std::vector<double> global(9), genuine(3);
    for (auto& v : global) v = rng.uniform();
    for (auto& v : genuine) v = rng.uniform();
    const double base = partition_discrepancy(global, genuine, 3);
    std::sort(genuine.begin(), genuine.end());
    do {
      CHECK(partition_discrepancy(global, genuine, 3) == base);
    } while (std::next_permutation(genuine.begin(), genuine.end()));
  }

  TEST_CASE("guard") {
    CHECK_THROWS_AS(measure_G(bell(5)), CapabilityError);
    try {
      measure_G(bell(5));
    } catch (const CapabilityError& e) {
      CHECK(std::string(e.what()).find("(dA*dB)!/(dB!)^dA") != std::string::npos);
    }
    CHECK_NOTHROW(measure_G(bell(4)));
  }

  TEST_CASE("G local-unitary invariance") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const DensityMatrix rho = random_density({2, 3}, 3, 300 + s);
      const auto [uA, uB] = random_local_unitary({2, 3}, 400 + s);
      CHECK_NEAR(measure_G(rho.local_conjugated(uA, uB)), measure_G(rho), 1e-7);
    }
  }
}
