#ifndef DLMKIT_PATTERNS_HPP
#define DLMKIT_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlmkit/graph.hpp"

namespace dlm {

/// The 4- and 5-vertex patterns used by the structural arguments. I1..I5 are
/// a P_4 path v1v2v3v4 plus a fifth vertex u attached to {v2}, {v1,v2},
/// {v1,v3}, {v2,v3}, {v1,v2,v3} respectively; J1 is C_5, J2 is C_5 plus one
/// chord, J3 is a P_4 plus a vertex adjacent to all four.
enum class Pattern { P4, P5, I1, I2, I3, I4, I5, J1, J2, J3 };

const Graph& pattern_graph(Pattern p);
std::string pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string& name);
const std::vector<Pattern>& all_patterns();

/// True iff some vertex subset of g induces a graph isomorphic to the
/// pattern. Plain backtracking over injections with degree pruning.
bool contains_induced(const Graph& g, const Graph& pattern);
bool contains_induced(const Graph& g, Pattern p);

bool is_p5_free(const Graph& g);
bool is_p4_free(const Graph& g);

/// Recursive cograph test: single vertex, or a disconnected graph with
/// cograph components, or a graph whose complement is disconnected with
/// cograph complement-components. Agrees with is_p4_free.
bool is_cograph(const Graph& g);

struct JGraphShape {
    int a = 0, b = 0;     // pendant-set sizes, a >= b
    int root_a = 0, root_b = 0; // witness roots at distance 3
};

/// Recognizes J(a,b): two star roots whose pendant sets are completely
/// joined to each other. Returns nothing when g is not such a graph.
std::optional<JGraphShape> j_graph_recognize(const Graph& g);

} // namespace dlm

#endif
