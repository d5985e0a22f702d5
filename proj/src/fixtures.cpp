#include "spearlab/fixtures.hpp"

#include "spearlab/error.hpp"

namespace spearlab {

LinOp standard_operator(const std::string& name) {
  if (name == "example52_G1") {
    return LinOp(standard_space("example52_X1"), standard_space("example52_Y1"),
                 RatMatrix::identity(4), name);
  }
  if (name == "example52_G2") {
    LinOp g1 = standard_operator("example52_G1");
    return LinOp(standard_space("example52_X2"), standard_space("example52_Y2"),
                 g1.matrix().transpose(), name);
  }
  if (name == "example52_G") {
    const LinOp parts[] = {standard_operator("example52_G1"), standard_operator("example52_G2")};
    return block_sum(parts, SumKind::Infinity).with_label(name);
  }
  if (name.rfind("id:", 0) == 0) {
    return LinOp::identity(standard_space(name.substr(3))).with_label(name);
  }
  fail(ErrorCode::UnknownSpec, "unknown operator fixture '" + name + "'");
}

std::vector<std::string> standard_operator_names() {
  return {"example52_G", "example52_G1", "example52_G2", "id:<space>"};
}

}  // namespace spearlab
