#pragma once

#include <symlab/aut.hpp>
#include <symlab/graph.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symlab {

enum class InvariantSelection { D, rho, det, all };

InvariantSelection parse_invariant_selection(const std::string & text);

/// Computed invariants of one graph. Fields a selection did not ask for
/// stay empty and serialize as null.
struct InvariantReport {
    std::string graph6;
    int n = 0;
    GroupOrder aut_order;
    std::optional<int> D;
    std::optional<int> rho;
    std::optional<int> det;
    /// rho-witness when rho was computed, otherwise the D-witness.
    std::vector<int> witness_labeling;
    std::optional<VertexSet> witness_det_set;
    /// Sorted class sizes of witness_labeling.
    std::vector<int> class_sizes;
};

InvariantReport analyze(const Graph & g, InvariantSelection what, const SearchBudget & budget = {});

/// Exact orders that fit in 64 bits are JSON numbers, larger ones decimal
/// strings.
nlohmann::json to_json(const InvariantReport & report);
InvariantReport report_from_json(const nlohmann::json & j);

/// Re-verifies the witnesses in a report against g. Returns one message
/// per problem found; empty means the report checks out.
std::vector<std::string> check_witnesses(const Graph & g, const InvariantReport & report,
    const SearchBudget & budget = {});

} // namespace symlab
