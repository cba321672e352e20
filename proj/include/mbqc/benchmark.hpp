#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mbqc {

struct InsertionTimings {
  std::size_t size = 0;
  /** Per-trial wall time of the incremental YZ insertion, microseconds. */
  std::vector<double> insert_us;
  /** Per-trial wall time of finding a flow on the new graph from scratch. */
  std::vector<double> refind_us;

  double insert_median() const;
  double refind_median() const;
};

/**
 * Times a single-neighbour YZ insertion on random circuit graphs with
 * |I| = |O| and about `size` vertices against a fresh flow search on the
 * rewritten graph. Input and output verification are switched off so only
 * the update itself is measured.
 */
InsertionTimings time_yz_insertion(std::size_t size, std::size_t trials, std::uint64_t seed);

double median(std::vector<double> values);

}  // namespace mbqc
