#pragma once

#include <string>
#include <vector>

#include "cuberep/cube.hpp"
#include "cuberep/representation.hpp"

namespace cuberep::testing {

inline const std::vector<std::string> kC8Edges = {
    "[1*00]", "[*100]", "[01*0]", "[0*10]", "[001*]", "[00*1]", "[*001]", "[100*]",
};
inline const std::vector<int> kC8Sigma = {1, 2, 1, 2};

inline const std::vector<std::string> kC14Edges = {
    "[11*0000]", "[*110000]", "[011*000]", "[01*1000]", "[0101*00]", "[010*100]", "[*100100]",
    "[1*00100]", "[10001*0]", "[1000*10]", "[100001*]", "[10000*1]", "[1*00001]", "[110000*]",
};
inline const std::vector<int> kC14Sigma = {1, 2, 3, 1, 3, 2, 3};

inline CubeSubgraph cube_from(int n, const std::vector<std::string>& edges) {
  std::vector<CubeEdge> es;
  for (const auto& s : edges) es.push_back(parse_edge(s));
  return CubeSubgraph(n, es);
}

inline Representation c8_rep() { return Representation(4, 2, cube_from(4, kC8Edges), kC8Sigma); }
inline Representation c14_rep() { return Representation(7, 3, cube_from(7, kC14Edges), kC14Sigma); }

}  // namespace cuberep::testing
