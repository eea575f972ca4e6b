#pragma once

#include <string>
#include <vector>

#include "sutra/cli.hpp"

namespace golden {

struct Case {
  std::string method;
  std::string operands;
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {"vedic.add.placevalue", "123,456,789"},
      {"traditional.add.column", "123,456,789"},
      {"vedic.subtract.complement", "823,456"},
      {"traditional.subtract.borrow", "823,456"},
      {"vedic.multiply.crisscross", "123,456"},
      {"traditional.multiply.long", "123,456"},
      {"vedic.sqrt.duplex", "152399025"},
      {"traditional.sqrt.longdivision", "152399025"},
  };
  return all;
}

inline std::string path(const Case& c) { return std::string(SUTRA_GOLDEN_DIR) + "/" + c.method + ".json"; }

inline std::vector<sutra::DigitString> operands(const Case& c) { return sutra::cli::parseOperandList(c.operands); }

}  // namespace golden
