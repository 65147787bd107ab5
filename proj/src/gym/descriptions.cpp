#include <map>

#include "problems.hpp"

// Problem statements follow the published Name/Input/Question structure,
// rendered to plain text. Schemas document the exact wire layout of payloads
// and solutions; error lists give the 1-based semantic codes in the order
// the verifier applies them.

namespace nppc::gym::detail {

namespace {

struct Entry {
  ProblemText text;
  std::vector<std::string> errors;
};

const std::map<Problem, Entry>& table() {
  static const std::map<Problem, Entry> t = [] {
    std::map<Problem, Entry> m;

    m[Problem::three_sat] = Entry{
        {"3-Satisfiability (3SAT)",
         "- Name: 3-Satisfiability (3SAT)\n"
         "- Input: A set of m clauses {C_1, C_2, ..., C_m} over a set of n "
         "Boolean valued variables X_n = {x_1, x_2, ..., x_n}, such that each "
         "clause depends on exactly three distinct variables from X_n. A "
         "clause being a Boolean expression of the form (y_i or y_j or y_k) "
         "where each y is of the form x or not(x) (i.e. negation of x) with x "
         "being some variable in X_n. For example if n = 4 and m = 3, a "
         "possible instance could be the (set of) Boolean expressions: "
         "C_1 = (x_1 or not(x_2) or not(x_3)), C_2 = (x_2 or x_3 or "
         "not(x_4)), C_3 = (not(x_1) or x_3 or x_4).\n"
         "- Question: Can each variable x_i of X_n be assigned a Boolean "
         "value alpha_i in {true, false} in such a way that every clause "
         "evaluates to the Boolean result true under the assignment "
         "<x_i := alpha_i, i in {1, ..., n}>?",
         "object {num_variables: int, clauses: [[l1, l2, l3], ...]} where "
         "each literal is a non-zero integer in [-num_variables, "
         "num_variables]; literal v > 0 means variable x_v, literal -v means "
         "not(x_v); the three literals of a clause use distinct variables",
         "list of num_variables booleans; entry i is the value assigned to "
         "variable x_(i+1)"},
        {"The solution length mismatches the number of variables.",
         "Some clauses are not satisfied."}};

    m[Problem::vertex_cover] = Entry{
        {"Vertex Cover",
         "- Name: Vertex Cover\n"
         "- Input: An n-node undirected graph G = (V, E) with node set V and "
         "edge set E; a positive integer k with k <= n.\n"
         "- Question: Is there a subset W of V having size at most k and "
         "such that for every edge {u, v} in E at least one of u and v "
         "belongs to W?",
         "object {num_nodes: int, cover_size: int, edges: [[u, v], ...]} "
         "with 0-based node indices and u < v",
         "list of distinct 0-based node indices, at most cover_size entries"},
        {"Wrong solution format.", "The cover is empty.",
         "Invalid vertex index, i.e., above the max or below the min.",
         "The cover size exceeds the limit.", "Some edges are not covered."}};

    m[Problem::three_dm] = Entry{
        {"3-Dimensional Matching (3DM)",
         "- Name: 3-Dimensional Matching (3DM)\n"
         "- Input: 3 disjoint sets X, Y, and Z, each containing exactly n "
         "elements; a set M of m triples {(x_i, y_i, z_i): 1 <= i <= m} such "
         "that x_i is in X, y_i in Y, and z_i in Z, i.e. M is a subset of "
         "X x Y x Z.\n"
         "- Question: Does M contain a matching, i.e., is there a subset Q "
         "of M such that |Q| = n and for all distinct pairs of triples "
         "(u, v, w) and (x, y, z) in Q it holds that u != x and v != y and "
         "w != z?",
         "object {n: int, triples: [[x, y, z], ...]} where elements of X are "
         "0..n-1, elements of Y are n..2n-1 and elements of Z are 2n..3n-1",
         "list of n triples [x, y, z] drawn from the instance's triples"},
        {"Not all triples in the matching are in the original set.",
         "The size of matching is wrong",
         "The elements in the matching are not mutually exclusive."}};

    m[Problem::tsp] = Entry{
        {"Travelling Salesman",
         "- Name: Travelling Salesman\n"
         "- Input: A set C of n cities {c_1, ..., c_n}; a positive integer "
         "distance d(i, j) for each pair of cities (c_i, c_j), i < j; a "
         "positive integer B representing the maximum allowed travel "
         "distance.\n"
         "- Question: Is there an ordering <pi(1), pi(2), ..., pi(n)> of the "
         "n cities such that the total travel distance, calculated as the "
         "sum of d(pi(i), pi(i+1)) for i = 1 to n-1, plus d(pi(n), pi(1)), "
         "is at most B?",
         "object {num_cities: int, target_length: int, distances: n x n "
         "symmetric matrix of positive integers with zero diagonal} with "
         "0-based city indices",
         "list of num_cities 0-based city indices, each city exactly once; "
         "the return leg to the first city is counted automatically"},
        {"Tour length mismatches number of cities.",
         "Invalid city index, i.e., above the max or below the min.",
         "There exists cities not be visited exactly once.",
         "Tour length exceeds target length."}};

    m[Problem::hamiltonian_cycle] = Entry{
        {"Hamiltonian Cycle",
         "- Name: Hamiltonian Cycle\n"
         "- Input: n-node graph G = (V, E).\n"
         "- Question: Is there a cycle in G that visits every node in V "
         "exactly once and returns to the starting node, and thus contains "
         "exactly n edges?",
         "object {num_nodes: int, directed: bool, edges: [[u, v], ...]} with "
         "0-based node indices; undirected edges have u < v, directed edges "
         "mean u -> v",
         "list of num_nodes 0-based node indices (the cycle closes back to "
         "the first entry); a list of num_nodes + 1 indices whose last entry "
         "repeats the first is also accepted"},
        {"Path length is wrong.", "Path does not return to start.",
         "Not all vertices visited exactly once.",
         "There exists invalid vertex in path.",
         "There exists invalid edges in path."}};

    m[Problem::three_col] = Entry{
        {"Graph 3-Colourability (3-COL)",
         "- Name: Graph 3-Colourability (3-COL)\n"
         "- Input: An n-node undirected graph G = (V, E) with node set V and "
         "edge set E.\n"
         "- Question: Can each node of G = (V, E) be assigned exactly one of "
         "three colours - Red, Blue, Green - in such a way that no two nodes "
         "which are joined by an edge, are assigned the same colour?",
         "object {num_nodes: int, edges: [[u, v], ...]} with 0-based node "
         "indices and u < v",
         "list of num_nodes colours, one per node, each colour an integer "
         "in {0, 1, 2}"},
        {"The two nodes of an edge have the same color"}};

    m[Problem::bin_packing] = Entry{
        {"Bin Packing",
         "- Name: Bin Packing\n"
         "- Input: A finite set U of m items; for each item u in U a "
         "positive integer size s(u); positive integers B (bin capacity) and "
         "k, where k <= m.\n"
         "- Question: Can U be partitioned into k disjoint sets U_1, ..., "
         "U_k such that the total size of the items in each subset U_i (for "
         "1 <= i <= k) does not exceed B?",
         "object {sizes: [int, ...], bin_capacity: int, num_bins: int}",
         "list with one 0-based bin index per item, in item order"},
        {"Solution length mismatches the number of items.",
         "Invalid bin index.", "The total size exceeds bin capacity."}};

    m[Problem::max_leaf_span_tree] = Entry{
        {"Maximum Leaf Spanning Tree",
         "- Name: Maximum Leaf Spanning Tree\n"
         "- Input: n-node undirected graph G = (V, E); positive integer "
         "k <= n.\n"
         "- Question: Does G have a spanning tree in which at least k nodes "
         "have degree 1?",
         "object {num_nodes: int, target_leaves: int, edges: [[u, v], ...]} "
         "with 0-based node indices and u < v",
         "list with one parent per node: parent[v] is the 0-based parent of "
         "node v in the spanning tree, and exactly one node (the root) has "
         "parent -1; every (v, parent[v]) pair must be an edge of G"},
        {"Solution length mismatches the number of vertices.",
         "There exists invalid edges in solution.",
         "The solution does not have exactly one root.",
         "The solution doesn't span all vertices.",
         "The number of leaves in the solution is less than target."}};

    m[Problem::qde] = Entry{
        {"Quadratic Diophantine Equations",
         "- Name: Quadratic Diophantine Equations\n"
         "- Input: Positive integers a, b, and c.\n"
         "- Question: Are there two positive integers x and y such that "
         "(a*x*x) + (b*y) = c?",
         "object {a: int, b: int, c: int}",
         "list [x, y] of two positive integers"},
        {"Solution length mismatches the number of integers.",
         "There exists non-positive values in the solution.",
         "The equation does not hold."}};

    m[Problem::min_sum_squares] = Entry{
        {"Minimum Sum of Squares",
         "- Name: Minimum Sum of Squares\n"
         "- Input: A set A of n elements; for each element a in A a positive "
         "integer size s(a); positive integers k <= n and J.\n"
         "- Question: Can A be partitioned into k disjoint sets A_1, ..., "
         "A_k such that the sum over i = 1..k of (sum of s(x) for x in A_i) "
         "squared is at most J?",
         "object {sizes: [int, ...], k: int, J: int}",
         "list with one 0-based subset index (0..k-1) per element, in "
         "element order"},
        {"Solution length mismatches the number of elements.",
         "The number of subsets exceeds the set limit.",
         "The sum exceeds the limit J."}};

    m[Problem::superstring] = Entry{
        {"Shortest Common Superstring",
         "- Name: Shortest Common Superstring\n"
         "- Input: A finite set R = {r_1, r_2, ..., r_m} of strings "
         "(sequences of symbols); positive integer k.\n"
         "- Question: Is there a string w of length at most k such that "
         "every string in R is a substring of w, i.e., for each r in R, w "
         "can be decomposed as w = w_0 r w_1 where w_0, w_1 are (possibly "
         "empty) strings?",
         "object {strings: [string, ...], max_length: int}; strings are "
         "lowercase a-z",
         "a single string of length at most max_length"},
        {"Wrong solution format.", "The solution length exceeds the limit.",
         "Some string is not the substring of the solution."}};

    m[Problem::bandwidth] = Entry{
        {"Bandwidth",
         "- Name: Bandwidth\n"
         "- Input: n-node undirected graph G = (V, E); positive integer "
         "k <= n.\n"
         "- Question: Is there a linear ordering of V with bandwidth at most "
         "k, i.e., a one-to-one function f: V -> {0, 1, 2, ..., n-1} such "
         "that for all edges {u, v} in G, |f(u) - f(v)| <= k?",
         "object {num_nodes: int, bandwidth: int, edges: [[u, v], ...]} with "
         "0-based node indices and u < v",
         "list of num_nodes integers where entry v is f(v); the entries "
         "must form a permutation of 0..num_nodes-1"},
        {"Layout length mismatches the number of vertices.",
         "Layout is not a permutation of vertices.",
         "There exists edge exceeds the bandwidth limit."}};

    m[Problem::clique] = Entry{
        {"Clique",
         "- Name: Clique\n"
         "- Input: An n-node undirected graph G = (V, E) with node set V and "
         "edge set E; a positive integer k with k <= n.\n"
         "- Question: Does G contain a k-clique, i.e. a subset W of the "
         "nodes V such that W has size k and for each distinct pair of nodes "
         "u, v in W, {u, v} is an edge of G?",
         "object {num_nodes: int, k: int, edges: [[u, v], ...]} with 0-based "
         "node indices and u < v",
         "list of k distinct 0-based node indices"},
        {"Wrong solution format.", "The clique size is wrong.",
         "Invalid or duplicated vertex index.",
         "Some pair of clique nodes is not joined by an edge."}};

    m[Problem::independent_set] = Entry{
        {"Independent Set",
         "- Name: Independent Set\n"
         "- Input: n-node undirected graph G = (V, E); positive integer "
         "k <= n.\n"
         "- Question: Does G have an independent set of size at least k, "
         "i.e., a subset W of at least k nodes from V such that no pair of "
         "nodes in W is joined by an edge in E?",
         "object {num_nodes: int, k: int, edges: [[u, v], ...]} with 0-based "
         "node indices and u < v",
         "list of at least k distinct 0-based node indices"},
        {"Wrong solution format.", "The independent set is too small.",
         "Invalid or duplicated vertex index.",
         "Some pair of chosen nodes is joined by an edge."}};

    m[Problem::dominating_set] = Entry{
        {"Dominating Set",
         "- Name: Dominating Set\n"
         "- Input: An undirected graph G(V, E) with n nodes; a positive "
         "integer k where k <= n.\n"
         "- Question: Does G contain a dominating set of size at most k, "
         "i.e. a subset W of V containing at most k nodes such that every "
         "node u in V - W (i.e. in V but not in W) has at least one neighbor "
         "w in W where {u, w} is an edge in E?",
         "object {num_nodes: int, k: int, edges: [[u, v], ...]} with 0-based "
         "node indices and u < v",
         "list of distinct 0-based node indices, at most k entries"},
        {"Wrong solution format.", "The dominating set is empty.",
         "Invalid or duplicated vertex index.",
         "The dominating set size exceeds the limit.",
         "Some node is neither in the set nor adjacent to it."}};

    m[Problem::set_splitting] = Entry{
        {"Set Splitting",
         "- Name: Set Splitting\n"
         "- Input: A finite set S; a collection C_1, ..., C_m of subsets of "
         "S.\n"
         "- Question: Can S be partitioned into two disjoint subsets - S_1 "
         "and S_2 - such that for each set C_i it holds that C_i is not a "
         "subset of S_1 and C_i is not a subset of S_2?",
         "object {num_elements: int, subsets: [[e, ...], ...]} with 0-based "
         "element indices",
         "list with one side label (0 or 1) per element, in element order"},
        {"Solution length mismatches the number of elements.",
         "Invalid side label (must be 0 or 1).",
         "Some subset is not split between the two sides."}};

    m[Problem::set_packing] = Entry{
        {"Set Packing",
         "- Name: Set Packing\n"
         "- Input: A collection C = (C_1, ..., C_m) of finite sets; a "
         "positive integer k <= m.\n"
         "- Question: Are there k sets - D_1, ..., D_k - from the collection "
         "C such that for all 1 <= i < j <= k, D_i and D_j have no common "
         "elements?",
         "object {num_elements: int, k: int, subsets: [[e, ...], ...]} with "
         "0-based element indices",
         "list of k distinct 0-based subset indices"},
        {"Wrong solution format.", "The number of chosen sets is wrong.",
         "Invalid or duplicated subset index.",
         "The chosen sets are not pairwise disjoint."}};

    m[Problem::x3c] = Entry{
        {"Exact Cover by 3-Sets (X3C)",
         "- Name: Exact Cover by 3-Sets (X3C)\n"
         "- Input: A finite set X containing exactly 3n elements; a "
         "collection C of subsets of X each of which contains exactly 3 "
         "elements.\n"
         "- Question: Does C contain an exact cover for X, i.e., a "
         "sub-collection of 3-element sets D = (D_1, ..., D_n) such that "
         "each element of X occurs in exactly one subset in D?",
         "object {num_elements: int, subsets: [[a, b, c], ...]} where "
         "num_elements = 3n and elements are 0..num_elements-1",
         "list of n distinct 0-based subset indices (n = num_elements / 3)"},
        {"Wrong solution format.", "The number of chosen subsets is wrong.",
         "Invalid or duplicated subset index.",
         "The chosen subsets do not cover every element exactly once."}};

    m[Problem::minimum_cover] = Entry{
        {"Minimum Cover",
         "- Name: Minimum Cover\n"
         "- Input: A finite set S; a collection C = (C_1, ..., C_m) of "
         "subsets of S; a positive integer k <= m.\n"
         "- Question: Does C contain a cover for S comprising at most k "
         "subsets, i.e., a collection D = (D_1, ..., D_t), where t <= k, "
         "each D_i is a set in C, and such that every element in S belongs "
         "to at least one set in D?",
         "object {num_elements: int, k: int, sets: [[e, ...], ...]} with "
         "0-based element indices",
         "list of distinct 0-based set indices, at most k entries"},
        {"Wrong solution format.", "The cover uses too many sets.",
         "Invalid or duplicated set index.",
         "Some element is not covered."}};

    m[Problem::partition] = Entry{
        {"Partition",
         "- Name: Partition\n"
         "- Input: Finite set A; for each element a in A a positive integer "
         "size s(a).\n"
         "- Question: Can A be partitioned into 2 disjoint sets A_1 and A_2 "
         "in such a way that the sum of s(a) over A_1 equals the sum of "
         "s(a) over A_2?",
         "object {sizes: [int, ...]}",
         "list with one side label (0 or 1) per element, in element order"},
        {"Solution length mismatches the number of elements.",
         "Invalid side label (must be 0 or 1).",
         "The two sides do not have equal sums."}};

    m[Problem::subset_sum] = Entry{
        {"Subset Sum",
         "- Name: Subset Sum\n"
         "- Input: Finite set A; for each element a in A a positive integer "
         "size s(a); a positive integer K.\n"
         "- Question: Is there a subset B of A such that the sum of s(a) "
         "over all a in B equals K?",
         "object {sizes: [int, ...], target: int} where target holds K",
         "list of distinct 0-based element indices (the chosen subset; may "
         "be empty only if K could be 0, which generated instances never "
         "have)"},
        {"Wrong solution format.", "Invalid or duplicated element index.",
         "The chosen subset does not sum to the target."}};

    m[Problem::hitting_string] = Entry{
        {"Hitting String",
         "- Name: Hitting String\n"
         "- Input: Finite set S = {s_1, ..., s_m}, each s_i being a string "
         "of n symbols over {0, 1, *}.\n"
         "- Question: Is there a binary string x = x_1 x_2 ... x_n of length "
         "n such that for each s_j in S, s_j and x agree in at least one "
         "position?",
         "object {n: int, strings: [string, ...]} where each string has "
         "length n over the alphabet {0, 1, *}",
         "a single binary string of length n (characters 0 or 1)"},
        {"Solution length mismatches n.",
         "The solution contains non-binary characters.",
         "Some string does not agree with the solution in any position."}};

    m[Problem::quadratic_congruences] = Entry{
        {"Quadratic Congruences",
         "- Name: Quadratic Congruences\n"
         "- Input: Positive integers a, b, and c.\n"
         "- Question: Is there a positive integer x whose value is less than "
         "c and is such that x^2 mod b == a, i.e., the remainder when x^2 is "
         "divided by b is equal to a?",
         "object {a: int, b: int, c: int}",
         "a single positive integer x with x < c"},
        {"The solution is not positive.",
         "The solution is not less than c.",
         "The congruence does not hold."}};

    m[Problem::betweenness] = Entry{
        {"Betweenness",
         "- Name: Betweenness\n"
         "- Input: A finite set A of size n; a set C of ordered triples "
         "(a, b, c) of distinct elements from A.\n"
         "- Question: Is there a one-to-one function f: A -> {0, 1, 2, ..., "
         "n-1} such that for each triple (a, b, c) in C it holds that either "
         "f(a) < f(b) < f(c) or f(c) < f(b) < f(a)?",
         "object {num_elements: int, triples: [[a, b, c], ...]} with 0-based "
         "element indices",
         "list of num_elements integers where entry e is f(e); the entries "
         "must form a permutation of 0..num_elements-1"},
        {"Solution length mismatches the number of elements.",
         "The solution is not a permutation of 0..n-1.",
         "Some triple violates the betweenness condition."}};

    m[Problem::clustering] = Entry{
        {"Clustering",
         "- Name: Clustering\n"
         "- Input: Finite set X; for each pair of elements x and y in X, a "
         "positive integer distance d(x, y); positive integer B.\n"
         "- Question: Is there a partition of X into 3 disjoint sets X_1, "
         "X_2, X_3 with which: for each set X_i, i in {1, 2, 3}, for all "
         "pairs x and y in X_i, it holds that d(x, y) <= B?",
         "object {num_elements: int, B: int, distances: n x n symmetric "
         "matrix of positive integers with zero diagonal}",
         "list with one cluster index (0, 1 or 2) per element, in element "
         "order"},
        {"Solution length mismatches the number of elements.",
         "Invalid cluster index (must be 0, 1 or 2).",
         "Some intra-cluster pair exceeds the distance bound."}};

    return m;
  }();
  return t;
}

}  // namespace

const ProblemText& problem_text(Problem p) { return table().at(p).text; }

const std::vector<std::string>& error_descriptions(Problem p) {
  return table().at(p).errors;
}

}  // namespace nppc::gym::detail
