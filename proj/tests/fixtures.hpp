#pragma once

#include <string>
#include <vector>

namespace fixtures {

inline const char* kThreeColour =
    "E R. E G. E B. (A x. x in R | x in G | x in B) &"
    " A x. A y. adj(x,y) -> ~(x in R & y in R) & ~(x in G & y in G) & ~(x in B & y in B)";
inline const char* kIsolated = "E x. A y. ~adj(x,y)";
inline const char* kEdgeless = "A x. A y. ~adj(x,y)";
inline const char* kDominating = "E x. A y. x = y | adj(x,y)";

inline std::vector<std::string> sentences() {
  return {kThreeColour, kIsolated, kEdgeless, kDominating};
}

}  // namespace fixtures
