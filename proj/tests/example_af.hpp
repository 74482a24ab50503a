#pragma once

#include "pafdp/framework.hpp"

namespace pafdp::testing {

// Five arguments, ten attacks; every attack certain.
inline ArgumentationFramework example_af() {
  return ArgumentationFramework({"a", "b", "c", "d", "e"},
                                {{"a", "b"}, {"a", "d"}, {"b", "a"}, {"b", "c"}, {"c", "b"},
                                 {"c", "d"}, {"d", "c"}, {"d", "a"}, {"d", "e"}, {"e", "d"}});
}

}  // namespace pafdp::testing
