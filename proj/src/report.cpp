#include <symlab/graph_io.hpp>
#include <symlab/invariants.hpp>
#include <symlab/report.hpp>

#include <algorithm>
#include <limits>

namespace symlab {

InvariantSelection parse_invariant_selection(const std::string & text)
{
    if (text == "D")
        return InvariantSelection::D;
    if (text == "rho")
        return InvariantSelection::rho;
    if (text == "det")
        return InvariantSelection::det;
    if (text == "all")
        return InvariantSelection::all;
    throw std::invalid_argument("unknown invariant '" + text + "', expected D, rho, det or all");
}

namespace {

std::vector<int> sorted_sizes(const Coloring & c)
{
    auto s = c.class_sizes();
    std::sort(s.begin(), s.end());
    return s;
}

nlohmann::json order_to_json(const GroupOrder & order)
{
    if (order <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(order);
    return order.str();
}

GroupOrder order_from_json(const nlohmann::json & j)
{
    if (j.is_string())
        return GroupOrder(j.get<std::string>());
    return GroupOrder(j.get<std::uint64_t>());
}

template <typename T>
nlohmann::json optional_json(const std::optional<T> & v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json & j, const char * key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

InvariantReport analyze(const Graph & g, InvariantSelection what, const SearchBudget & budget)
{
    InvariantReport r;
    r.graph6 = emit_graph6(g);
    r.n = g.order();
    r.aut_order = automorphisms(g, Coloring::uniform(g.order()), budget).order();

    const bool want_rho = what == InvariantSelection::rho || what == InvariantSelection::all;
    const bool want_d = what == InvariantSelection::D || want_rho;
    const bool want_det = what == InvariantSelection::det || what == InvariantSelection::all;

    if (want_rho) {
        auto c = cost(g, budget);
        r.D = c.d;
        r.rho = c.rho;
        r.witness_labeling = c.witness.labels();
        r.class_sizes = sorted_sizes(c.witness);
    }
    else if (want_d) {
        auto d = distinguishing_number(g, budget);
        r.D = d.d;
        r.witness_labeling = d.witness.labels();
        r.class_sizes = sorted_sizes(d.witness);
    }
    if (want_det) {
        auto d = determining_number(g, budget);
        r.det = d.det;
        r.witness_det_set = d.witness;
    }
    return r;
}

nlohmann::json to_json(const InvariantReport & r)
{
    nlohmann::json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["aut_order"] = order_to_json(r.aut_order);
    j["D"] = optional_json(r.D);
    j["rho"] = optional_json(r.rho);
    j["det"] = optional_json(r.det);
    j["witness_labeling"] = r.witness_labeling.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.witness_labeling);
    j["witness_det_set"] = optional_json(r.witness_det_set);
    j["class_sizes"] = r.class_sizes.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.class_sizes);
    return j;
}

InvariantReport report_from_json(const nlohmann::json & j)
{
    InvariantReport r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.aut_order = order_from_json(j.at("aut_order"));
    r.D = optional_from<int>(j, "D");
    r.rho = optional_from<int>(j, "rho");
    r.det = optional_from<int>(j, "det");
    if (auto w = optional_from<std::vector<int>>(j, "witness_labeling"))
        r.witness_labeling = *w;
    r.witness_det_set = optional_from<VertexSet>(j, "witness_det_set");
    if (auto s = optional_from<std::vector<int>>(j, "class_sizes"))
        r.class_sizes = *s;
    return r;
}

std::vector<std::string> check_witnesses(const Graph & g, const InvariantReport & r, const SearchBudget & budget)
{
    std::vector<std::string> problems;
    if (r.graph6 != emit_graph6(g))
        problems.push_back("graph6 field does not match the graph");
    if (r.n != g.order())
        problems.push_back("n is " + std::to_string(r.n) + ", graph has " + std::to_string(g.order()) + " vertices");
    const auto order = automorphisms(g, Coloring::uniform(g.order()), budget).order();
    if (r.aut_order != order)
        problems.push_back("aut_order is " + r.aut_order.str() + ", recomputed " + order.str());

    if (r.D) {
        if (static_cast<int>(r.witness_labeling.size()) != g.order()) {
            problems.push_back("witness_labeling has the wrong length");
        }
        else {
            try {
                auto c = Coloring::from_labels(r.witness_labeling);
                if (c.num_labels() != *r.D)
                    problems.push_back("witness_labeling uses " + std::to_string(c.num_labels()) + " labels, D is "
                        + std::to_string(*r.D));
                if (!is_color_rigid(g, c, budget))
                    problems.push_back("witness_labeling is not distinguishing");
                if (sorted_sizes(c) != r.class_sizes)
                    problems.push_back("class_sizes do not match witness_labeling");
                if (r.rho && r.class_sizes.front() != *r.rho)
                    problems.push_back("smallest witness class is " + std::to_string(r.class_sizes.front())
                        + ", rho is " + std::to_string(*r.rho));
            }
            catch (const ColoringError & e) {
                problems.push_back(std::string("witness_labeling: ") + e.what());
            }
        }
        if ((*r.D == 1) != (order == 1))
            problems.push_back("D = 1 must coincide with a trivial automorphism group");
    }
    if (r.det) {
        if (!r.witness_det_set) {
            problems.push_back("det given without witness_det_set");
        }
        else {
            const auto & s = *r.witness_det_set;
            if (static_cast<int>(s.size()) != *r.det)
                problems.push_back("witness_det_set has size " + std::to_string(s.size()) + ", det is "
                    + std::to_string(*r.det));
            if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return v < 0 || v >= g.order(); }))
                problems.push_back("witness_det_set has an out-of-range vertex");
            else if (!is_determining_set(g, s, budget))
                problems.push_back("witness_det_set is not determining");
        }
    }
    return problems;
}

} // namespace symlab
