#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cuberep/cube.hpp"
#include "cuberep/graph.hpp"
#include "cuberep/representation.hpp"

namespace cuberep {

enum class GeneratorFamily { cycle_graph, even_rep, odd_rep, c14_diag, cycle_in_cube, random };

/// CLI family names: cycle-graph, even-rep, odd-rep, c14-diag, cycle-in-cube, random.
GeneratorFamily parse_family(std::string_view name);
std::string family_name(GeneratorFamily family);

struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::cycle_graph;
  int t = 0;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// C_length on vertices 0..length-1 with edges (i, i+1 mod length).
AbstractGraph cycle_graph(int length);

/// C_{2t}; t >= 2.
AbstractGraph gen_cycle_graph(int t);

/// 2-partite representation of C_{2t} for even t >= 4 on l = t
/// coordinates: the walk {1},{1,2},{2},{2,3},...,{t},{t,1}; its hypergraph
/// is the t-cycle and sigma alternates 1,2.
Representation gen_even_cycle_representation(int t);

/// 3-partite representation of C_{2t} for odd t >= 7 on l = t coordinates.
/// For t divisible by 3 the tight cycle {i,i+1,i+2} is used with
/// sigma(i) = i mod 3. Otherwise the host walks the pairs
/// 12, 23, 24, 25, 15, 16, ..., 1t and back to 12, passing through each
/// pair's union with its successor; sigma = 1,2,3,1,3 on positions 1..5 and
/// alternates 2,3 from position 6 on. For t = 7 this is exactly the
/// classical C_14 table.
Representation gen_odd_cycle_representation(int t);

/// The t = 7 representation plus the chord [1100*00].
Representation gen_c14_with_diagonal();

/// C_{2t} inside Q_n for 2 <= t <= n: flip positions 1..t on, then 1..t off.
CubeSubgraph gen_cycle_in_cube(int t, int n);

/// SplitMix64 in counter mode: the i-th edge of Q_n in canonical order
/// (i from 0) is kept iff u_i < p, where u_i is the top 53 bits of
/// splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15) scaled to [0, 1).
CubeSubgraph random_subgraph(int n, double p, std::uint64_t seed);

/// The SplitMix64 finalizer applied to `x`.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-mode draw in [0, 1).
double counter_uniform(std::uint64_t seed, std::uint64_t index);

}  // namespace cuberep
