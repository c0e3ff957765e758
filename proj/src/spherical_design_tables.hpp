#pragma once

#include <vector>

namespace wavekin::detail {

struct DesignTable {
  int size;
  int strength;
  bool antipodal;
  const char* provenance;
  const double* xyz;  // size x 3, row-major
};

const std::vector<DesignTable>& design_tables();

}  // namespace wavekin::detail
