#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "strata/error.hpp"
#include "strata/io.hpp"
#include "strata/tree.hpp"

namespace support {

inline strata::StableTree tree(int n, const std::string& text) { return strata::parse_tree_text(n, text); }

inline std::vector<strata::StableTree> trees(int n, const std::vector<std::string>& texts) {
  std::vector<strata::StableTree> out;
  for (const auto& text : texts) out.push_back(tree(n, text));
  std::sort(out.begin(), out.end());
  return out;
}

template <typename F>
strata::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const strata::StrataError& error) {
    return error.code();
  }
  FAIL("expected a StrataError");
  return strata::ErrorCode::ParseError;
}

}  // namespace support
