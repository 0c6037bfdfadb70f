#pragma once

#include <string_view>

namespace bt {

/// Trivalent answer for membership questions that an envelope may not settle.
enum class Decision { yes, no, undecidable };

constexpr std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecidable: return "undecidable";
  }
  return "undecidable";
}

constexpr Decision from_bool(bool b) { return b ? Decision::yes : Decision::no; }

}  // namespace bt
