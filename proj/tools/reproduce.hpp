#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace skewres {

struct ReproduceRow {
  std::string fixture;
  std::string check;
  bool pass = false;
  std::string detail;
};

std::vector<ReproduceRow> reproduce_fixtures(const std::filesystem::path& dir, int width);

}  // namespace skewres
