#include "truncorr/partition_measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace truncorr {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Sum of x log2 x, accumulated in ascending order so that the result does
// not depend on the order the values were given in.
double entropy_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double acc = 0.0;
  for (double v : values) acc += xlog2x(v);
  return acc;
}

class PartitionWalker {
 public:
  PartitionWalker(int n_groups, int group_size,
                  const std::function<void(std::span<const int>)>& visit)
      : k_(n_groups), g_(group_size), n_(n_groups * group_size), labels_(n_, -1), visit_(visit) {}

  void run() {
    if (n_ == 0) return;
    labels_[0] = 0;
    fill(0, 1, g_ - 1);
  }

 private:
  // Completes group `group` with `need` more items chosen from [start, n).
  void fill(int group, int start, int need) {
    if (need == 0) {
      if (group + 1 == k_) {
        visit_(labels_);
        return;
      }
      const int anchor = static_cast<int>(std::find(labels_.begin(), labels_.end(), -1) -
                                          labels_.begin());
      labels_[anchor] = group + 1;
      fill(group + 1, anchor + 1, g_ - 1);
      labels_[anchor] = -1;
      return;
    }
    int remaining = 0;
    for (int i = start; i < n_; ++i) remaining += labels_[i] == -1;
    for (int i = start; i < n_ && remaining >= need; ++i) {
      if (labels_[i] != -1) continue;
      --remaining;
      labels_[i] = group;
      fill(group, i + 1, need - 1);
      labels_[i] = -1;
    }
  }

  int k_, g_, n_;
  std::vector<int> labels_;
  const std::function<void(std::span<const int>)>& visit_;
};

}  // namespace

void for_each_equal_partition(int n_groups, int group_size,
                              const std::function<void(std::span<const int>)>& visit) {
  if (n_groups < 1 || group_size < 1)
    throw DomainError("for_each_equal_partition: group count and size must be positive");
  PartitionWalker(n_groups, group_size, visit).run();
}

std::uint64_t unordered_partition_count(int n_groups, int group_size) {
  // prod_{j=0}^{k-1} C(n - j*g - 1, g - 1): anchor fixed, choose the rest.
  std::uint64_t total = 1;
  const int n = n_groups * group_size;
  for (int j = 0; j < n_groups; ++j) {
    const int pool = n - j * group_size - 1;
    std::uint64_t c = 1;
    for (int i = 1; i <= group_size - 1; ++i) c = c * static_cast<std::uint64_t>(pool - i + 1) / i;
    total *= c;
  }
  return total;
}

long double ordered_partition_count(int n_groups, int group_size) {
  const int n = n_groups * group_size;
  return std::exp(std::lgamma(static_cast<long double>(n) + 1) -
                  n_groups * std::lgamma(static_cast<long double>(group_size) + 1));
}

double partition_discrepancy(std::span<const double> global, std::span<const double> genuine,
                             int group_size) {
  const int k = static_cast<int>(genuine.size());
  if (k < 1 || group_size < 1 || global.size() != genuine.size() * group_size)
    throw DomainError("partition_discrepancy: global size must equal local size times group size");
  const double target = entropy_sum({genuine.begin(), genuine.end()});

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> sums(k);
  for_each_equal_partition(k, group_size, [&](std::span<const int> labels) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t i = 0; i < labels.size(); ++i) sums[labels[i]] += global[i];
    double mimicked = 0.0;
    for (double s : sums) mimicked += xlog2x(s);
    best = std::min(best, std::abs(mimicked - target));
  });
  return best;
}

std::string partition_guard_message(const BipartiteDims& dims, std::size_t limit) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "partition measure G needs (dA*dB)!/(dB!)^dA = %.6Lg partitionings for side A "
                "and (dA*dB)!/(dA!)^dB = %.6Lg for side B at dims %ldx%ld; limit is dA*dB <= %zu",
                ordered_partition_count(static_cast<int>(dims.dA), static_cast<int>(dims.dB)),
                ordered_partition_count(static_cast<int>(dims.dB), static_cast<int>(dims.dA)),
                static_cast<long>(dims.dA), static_cast<long>(dims.dB), limit);
  return buf;
}

double measure_F_side(const DensityMatrix& rho, Side side, const Tolerances& tol) {
  const BipartiteDims& dims = rho.dims();
  if (static_cast<std::size_t>(dims.total()) > tol.partition_limit)
    throw CapabilityError(partition_guard_message(dims, tol.partition_limit));
  const RealVector global = hermitian_eigenvalues(rho.matrix(), tol.herm);
  const RealVector genuine = hermitian_eigenvalues(rho.reduced(side), tol.herm);
  const int group_size = static_cast<int>(dims.of(other(side)));
  return partition_discrepancy({global.data(), static_cast<std::size_t>(global.size())},
                               {genuine.data(), static_cast<std::size_t>(genuine.size())},
                               group_size);
}

double measure_G(const DensityMatrix& rho, const Tolerances& tol) {
  return std::max(measure_F_side(rho, Side::A, tol), measure_F_side(rho, Side::B, tol));
}

}  // namespace truncorr
