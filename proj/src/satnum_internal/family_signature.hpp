#pragma once

#include <string_view>

#include "satnum/families.hpp"

namespace satnum::detail {

struct FamilySignature {
  FamilyKind kind;
  std::string_view name;
  std::string_view args;
};

const FamilySignature& signature(FamilyKind kind);
const FamilySignature* find_signature(std::string_view name);

}  // namespace satnum::detail
