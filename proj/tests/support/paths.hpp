#pragma once

#include <filesystem>
#include <string>

namespace testpaths {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SCIOMAP_FIXTURES) / name;
}

/// Fresh, empty directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::path(SCIOMAP_SCRATCH) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testpaths
