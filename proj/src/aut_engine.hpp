#pragma once

#include <symlab/aut.hpp>

#include <optional>

namespace symlab::detail {

/// Individualization-refinement search over one graph, reusable across
/// many colored queries. Colors are passed as arbitrary nonnegative keys;
/// only their relative order matters.
class AutEngine {
public:
    explicit AutEngine(const Graph & g);

    struct Group {
        std::vector<Permutation> generators;
        GroupOrder order;
    };

    Group group(std::span<const int> keys, const SearchBudget & budget);
    bool rigid(std::span<const int> keys, const SearchBudget & budget);

    /// Equitable refinement; colors become ranks 0..k-1. Returns k.
    int refine(std::vector<int> & colors, int k);

    const Graph & graph() const { return g_; }

private:
    struct Node {
        std::vector<int> colors;
        int cells = 0;
        int target = -1;
        std::vector<int> invariant;
    };

    int normalise(std::span<const int> keys, std::vector<int> & colors);
    void individualise(std::vector<int> & colors, int & cells, Vertex v) const;
    int target_cell(const std::vector<int> & colors, int cells) const;
    void fill_invariant(Node & node);
    std::optional<Permutation> dive(std::size_t depth, Node & node, NodeCounter & counter);
    bool run(std::span<const int> keys, const SearchBudget & budget, bool stop_at_first, Group * out);

    const Graph & g_;
    int n_;
    std::vector<int> offsets_;
    std::vector<int> keybuf_;
    std::vector<int> order_;
    std::vector<int> scratch_;
    std::vector<int> initial_;
    std::vector<Node> path_;
    std::vector<Vertex> first_leaf_;
};

} // namespace symlab::detail
