#pragma once

#include "rspec/zero_table.hpp"

inline const rspec::ZeroTable& bench_zeros() {
  static const rspec::ZeroTable t = rspec::ZeroTable::load(RSPEC_DATA_DIR "/zeros_1000.txt");
  return t;
}
