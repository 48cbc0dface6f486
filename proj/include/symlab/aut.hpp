#pragma once

#include <symlab/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symlab {

/// Total vertex labeling with labels 1..d, every label in use.
class Coloring {
public:
    /// All vertices labeled 1.
    static Coloring uniform(int n);
    /// Validates that the labels form the contiguous range 1..d.
    static Coloring from_labels(std::vector<int> labels);
    /// Relabels arbitrary integer keys by rank: the smallest key becomes 1.
    static Coloring from_keys(std::span<const int> keys);

    int order() const { return static_cast<int>(labels_.size()); }
    int num_labels() const { return num_labels_; }
    int label(Vertex v) const { return labels_[v]; }
    const std::vector<int> & labels() const { return labels_; }

    /// Label classes C_1..C_d, each sorted.
    std::vector<VertexSet> classes() const;
    std::vector<int> class_sizes() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<int> labels_;
    int num_labels_ = 0;
};

class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Permutation = std::vector<Vertex>;
using GroupOrder = boost::multiprecision::cpp_int;

std::string to_string(const Permutation & p);
bool is_identity(const Permutation & p);
Permutation compose(const Permutation & outer, const Permutation & inner);

/// Permutation group given by generators, with its exact order and orbits.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators, GroupOrder order);

    int degree() const { return degree_; }
    const std::vector<Permutation> & generators() const { return generators_; }
    const GroupOrder & order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// Smallest vertex in v's orbit.
    Vertex orbit_representative(Vertex v) const { return orbit_rep_[v]; }
    bool in_singleton_orbit(Vertex v) const { return orbit_size_[orbit_rep_[v]] == 1; }
    int orbit_size(Vertex v) const { return orbit_size_[orbit_rep_[v]]; }

private:
    int degree_;
    std::vector<Permutation> generators_;
    GroupOrder order_;
    std::vector<Vertex> orbit_rep_;
    std::vector<int> orbit_size_;
};

/// Cap on search-tree nodes for a single search. Exceeding it throws
/// BudgetExceeded; a search never returns a partial answer.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string & where, std::uint64_t limit);
};

/// Counts nodes against a SearchBudget.
class NodeCounter {
public:
    NodeCounter(const SearchBudget & budget, const char * where) : limit_(budget.max_nodes), where_(where) {}
    void tick()
    {
        if (++used_ > limit_)
            throw BudgetExceeded(where_, limit_);
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    const char * where_;
};

/// Coarsest equitable coloring refining the given one. Cells are ordered
/// by (previous cell, sorted neighbour-cell multiset), so the result commutes
/// with every color-preserving automorphism.
Coloring refine(const Graph & g, const Coloring & coloring);

/// Group of adjacency- and color-preserving permutations of g.
PermGroup automorphisms(const Graph & g, const Coloring & coloring, const SearchBudget & budget = {});

/// True iff the identity is the only color-preserving automorphism.
bool is_color_rigid(const Graph & g, const Coloring & coloring, const SearchBudget & budget = {});

/// True iff the only automorphism fixing every vertex of s is the identity.
bool pointwise_stabilizer_is_trivial(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget = {});

/// Automorphisms fixing every vertex of s (s given as any index list).
PermGroup pointwise_stabilizer(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget = {});

std::vector<VertexSet> orbits_of(const PermGroup & group);

class GroupTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every element of the group, sorted. Throws GroupTooLarge when the order
/// exceeds cap.
std::vector<Permutation> enumerate_elements(const PermGroup & group, std::size_t cap);

} // namespace symlab
