#pragma once

// The partition-based measure G.
//
// For side A the dA*dB global eigenvalues are split into dA groups of dB
// values; the group sums "mimic" the local spectrum. F^A is the smallest
// entropy discrepancy over all such splits, G = max(F^A, F^B). The cost is
// exponential, so a guard on dA*dB bounds what will be attempted.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "truncorr/density_matrix.hpp"

namespace truncorr {

/// Calls visit(labels) once per unordered partition of n_groups*group_size
/// items into n_groups groups of equal size; labels[i] is item i's group.
/// Each group is anchored at its smallest item, so no partition repeats.
void for_each_equal_partition(int n_groups, int group_size,
                              const std::function<void(std::span<const int>)>& visit);

/// n!/((g!)^k k!) for n = k*g.
std::uint64_t unordered_partition_count(int n_groups, int group_size);

/// (k*g)!/(g!)^k, the ordered count; returned as long double because it
/// overflows 64 bits quickly.
long double ordered_partition_count(int n_groups, int group_size);

/// min over partitions of |sum f(mimicked) - sum f(genuine)|, f(x) = x log2 x.
/// global.size() must equal genuine.size() * group_size.
double partition_discrepancy(std::span<const double> global, std::span<const double> genuine,
                             int group_size);

/// F^side. Throws CapabilityError when dA*dB exceeds tol.partition_limit.
double measure_F_side(const DensityMatrix& rho, Side side,
                      const Tolerances& tol = default_tolerances());

/// max(F^A, F^B)
double measure_G(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// The guard message for a state of the given dims.
std::string partition_guard_message(const BipartiteDims& dims, std::size_t limit);

}  // namespace truncorr
