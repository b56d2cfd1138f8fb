#pragma once
#include <string>
#include "transemi/abstract_system.hpp"
#include "transemi/instance_io.hpp"

namespace testsupport {

inline transemi::InstanceFile load(const std::string& name) {
  return transemi::parse_instance(std::string(TRANSEMI_TEST_DATA) + "/" + name);
}

inline transemi::AbstractSystem load_abstract(const std::string& name) {
  return std::get<transemi::AbstractSystem>(load(name).body);
}

inline transemi::AbstractSystem single(bool with_delta) {
  transemi::BitMatrix xi(1), delta(1);
  xi.set(0, 0);
  if (with_delta) delta.set(0, 0);
  return transemi::AbstractSystem(1, {0}, {0}, xi, delta);
}

}  // namespace testsupport
