#pragma once

#include <string_view>
#include <vector>

#include "lgroup/io.hpp"

namespace lgroup {

/// Built-in instances:
///   a2     Z^2, u = (1,1), a Keimel task
///   c3     Z^3, u = (1,2,1), a zero-set task whose zero sets cover Max
///   lex    Z ×→ Z, u = (1,0), the two-congruence system with no solution
///   mix    Z × (Z ×→ Z), u = (1,(1,0)), a strong task
///   chang  Γ(Z ×→ Z, (1,0)), Chang's MV-algebra
const std::vector<std::string_view>& gallery_names();

/// Throws Error(parse_error) for an unknown name.
Instance gallery(std::string_view name);

}  // namespace lgroup
