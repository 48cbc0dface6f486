#pragma once

#include <symlab/aut.hpp>
#include <symlab/graph.hpp>

#include <span>
#include <vector>

namespace symlab {

struct DistinguishingResult {
    int d;
    Coloring witness;
};

struct CostResult {
    int d;
    int rho;
    /// d-distinguishing coloring with a class of size rho.
    Coloring witness;
};

struct DeterminingResult {
    int det;
    /// Lexicographically least minimum determining set.
    VertexSet witness;
};

struct SubsetLabeling {
    int d;
    /// Labels of the subset's vertices, in the subset's (sorted) order.
    std::vector<int> labels;
};

/// D(G): least r admitting an r-labeling preserved only by the identity.
DistinguishingResult distinguishing_number(const Graph & g, const SearchBudget & budget = {});

/// rho_d(G) with d = D(G): least class size over all d-distinguishing
/// labelings. The two-argument form trusts the caller's d = D(G).
CostResult cost(const Graph & g, const SearchBudget & budget = {});
CostResult cost(const Graph & g, int d, const SearchBudget & budget = {});

/// Det(G): least size of a vertex set with trivial pointwise stabilizer.
DeterminingResult determining_number(const Graph & g, const SearchBudget & budget = {});

/// Minimum determining sets of size det in lexicographic order, at most
/// limit of them.
std::vector<VertexSet> minimum_determining_sets(const Graph & g, int det, std::size_t limit,
    const SearchBudget & budget = {});

bool is_determining_set(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget = {});

/// True iff every automorphism that maps w onto itself and preserves the
/// given label classes of w fixes w pointwise. labels[i] labels w[i].
bool subset_is_d_distinguishable(const Graph & g, std::span<const Vertex> w, std::span<const int> labels,
    const SearchBudget & budget = {});

/// Least d for which w has a d-distinguishing labeling, with one such
/// labeling. The empty set gives d = 1.
SubsetLabeling subset_distinguishing_number(const Graph & g, std::span<const Vertex> w,
    const SearchBudget & budget = {});

/// One representative of every orbit of Aut(G) on k-subsets (possibly a few
/// equivalent extras), sorted lexicographically.
std::vector<VertexSet> orbit_representative_subsets(const Graph & g, int k, const SearchBudget & budget = {});

} // namespace symlab
