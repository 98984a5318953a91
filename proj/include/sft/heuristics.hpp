#ifndef SFT_HEURISTICS_HPP
#define SFT_HEURISTICS_HPP

#include <boost/rational.hpp>

#include "sft/graph.hpp"

namespace sft {

using Rational = boost::rational<long long>;

// Kruskal on edge weight deg_G(u)*deg_G(v), heaviest first, ties by
// smallest edge id.
SpanningTree heuristic1(const Graph& g);

// Grow from a maximum-degree vertex; at each step the tree vertex with the
// most neighbors outside the tree attaches all of them. Ties by smallest id.
SpanningTree heuristic2(const Graph& g);

// opt / heur as an exact rational; >= 1 when opt is exact.
Rational approx_ratio(long long opt_value, long long heur_value);

} // namespace sft

#endif
