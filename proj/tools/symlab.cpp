#include <symlab/corpus.hpp>
#include <symlab/family_spec.hpp>
#include <symlab/graph_io.hpp>
#include <symlab/report.hpp>
#include <symlab/verifier.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace symlab;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, budget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream & in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_source(const std::string & path)
{
    if (path == "-")
        return read_all(std::cin);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return read_all(in);
}

void write_sink(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::uint64_t default_budget()
{
    if (const char * env = std::getenv("SYMLAB_BUDGET")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::strlen(env) && v > 0)
                return v;
        }
        catch (const std::exception &) {
        }
        throw UsageError(std::string("SYMLAB_BUDGET must be a positive integer, got '") + env + "'");
    }
    return SearchBudget{}.max_nodes;
}

struct ComputeArgs {
    std::string family, g6, edgelist;
    std::string invariant = "all";
    std::uint64_t budget = 0;
    bool json = false;
    std::string output;
    std::string check_witness;
};

Graph load_input(const ComputeArgs & a)
{
    const int given = !a.family.empty() + !a.g6.empty() + !a.edgelist.empty();
    if (given != 1)
        throw UsageError("give exactly one of --family, --g6, --edgelist");
    if (!a.family.empty())
        return build(parse_family_spec(a.family));
    if (!a.g6.empty()) {
        std::string text = a.g6 == "-" ? read_all(std::cin) : a.g6;
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
            text.pop_back();
        return parse_graph6(text);
    }
    return parse_edge_list(read_source(a.edgelist));
}

std::string table(const InvariantReport & r)
{
    std::ostringstream out;
    auto row = [&](const char * key, const std::string & value) {
        out << key << std::string(13 - std::strlen(key), ' ') << value << '\n';
    };
    auto join = [](const std::vector<int> & v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    row("graph6", r.graph6);
    row("n", std::to_string(r.n));
    row("|Aut|", r.aut_order.str());
    if (r.D)
        row("D", std::to_string(*r.D));
    if (r.rho)
        row("rho", std::to_string(*r.rho));
    if (r.det)
        row("det", std::to_string(*r.det));
    if (!r.witness_labeling.empty())
        row("labeling", join(r.witness_labeling));
    if (!r.class_sizes.empty())
        row("class sizes", join(r.class_sizes));
    if (r.witness_det_set)
        row("det set", "{" + join(*r.witness_det_set) + "}");
    return out.str();
}

int run_compute(const ComputeArgs & a)
{
    const auto g = load_input(a);
    const SearchBudget budget{a.budget ? a.budget : default_budget()};

    if (!a.check_witness.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_source(a.check_witness));
        }
        catch (const nlohmann::json::parse_error & e) {
            throw UsageError(std::string("witness report is not JSON: ") + e.what());
        }
        InvariantReport r;
        try {
            r = report_from_json(j);
        }
        catch (const nlohmann::json::exception & e) {
            throw UsageError(std::string("witness report is malformed: ") + e.what());
        }
        auto problems = check_witnesses(g, r, budget);
        for (const auto & p : problems)
            std::cerr << "witness check: " << p << '\n';
        if (!problems.empty())
            return failure;
        write_sink(a.output, "witness ok\n");
        return ok;
    }

    const auto what = parse_invariant_selection(a.invariant);
    const auto r = analyze(g, what, budget);
    std::string text;
    if (a.json)
        text = to_json(r).dump(2) + "\n";
    else if (what == InvariantSelection::D)
        text = std::to_string(*r.D) + "\n";
    else if (what == InvariantSelection::rho)
        text = std::to_string(*r.rho) + "\n";
    else if (what == InvariantSelection::det)
        text = std::to_string(*r.det) + "\n";
    else
        text = table(r);
    write_sink(a.output, text);
    return ok;
}

struct VerifyArgs {
    std::string suite = "default";
    std::string corpus;
    bool json = false;
    int jobs = 1;
    std::uint64_t budget = 0;
    std::string output;
};

int run_verify(const VerifyArgs & a)
{
    std::vector<std::string> ids;
    try {
        ids = expand_suite(a.suite);
    }
    catch (const UnknownCheck & e) {
        throw UsageError(e.what());
    }
    VerifyOptions options;
    options.budget.max_nodes = a.budget ? a.budget : default_budget();
    options.jobs = a.jobs;
    Verifier verifier(options);
    std::vector<TheoremReport> reports;
    try {
        reports = verifier.run_suite(ids, a.corpus);
    }
    catch (const CorpusError & e) {
        throw UsageError(e.what());
    }

    std::string text;
    if (a.json) {
        auto arr = nlohmann::json::array();
        for (const auto & r : reports)
            arr.push_back(to_json(r));
        text = arr.dump(2) + "\n";
    }
    else {
        std::ostringstream out;
        for (const auto & r : reports) {
            out << r.theorem << std::string(r.theorem.size() < 14 ? 14 - r.theorem.size() : 1, ' ')
                << to_string(r.status) << "  checked=" << r.checked << " hypothesis=" << r.hypothesis_met
                << "  [" << r.corpus << "]\n";
            if (!r.note.empty())
                out << "    " << r.note << '\n';
            if (r.replay)
                out << "    replay: " << *r.replay << '\n';
        }
        text = out.str();
    }
    write_sink(a.output, text);

    bool counterexample = false, over_budget = false;
    for (const auto & r : reports) {
        counterexample |= r.status == CheckStatus::counterexample;
        over_budget |= r.status == CheckStatus::budget_exceeded;
    }
    if (counterexample)
        return failure;
    return over_budget ? budget : ok;
}

struct ConvertArgs {
    std::string from, to;
    std::string input = "-";
    std::string output;
};

int run_convert(const ConvertArgs & a)
{
    const auto text = read_source(a.input);
    Graph g = a.from == "graph6" ? [&] {
        std::string t = text;
        while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' '))
            t.pop_back();
        return parse_graph6(t);
    }()
                                 : parse_edge_list(text);
    write_sink(a.output, a.to == "graph6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
    return ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Symmetry-breaking invariants of finite graphs"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto * compute = app.add_subcommand("compute", "Compute D, rho and Det with witnesses");
    compute->add_option("--family", ca.family, "Family spec, e.g. friendship:5 or corona:(path:3),(complete:2)");
    compute->add_option("--g6", ca.g6, "graph6 string, or - to read stdin");
    compute->add_option("--edgelist", ca.edgelist, "Edge-list file, or - for stdin");
    compute->add_option("--invariant", ca.invariant, "D, rho, det or all")
        ->check(CLI::IsMember({"D", "rho", "det", "all"}));
    compute->add_option("--budget", ca.budget, "Search-node cap per search (default $SYMLAB_BUDGET or 1e7)")
        ->check(CLI::PositiveNumber);
    compute->add_flag("--json", ca.json, "Print the report as JSON");
    compute->add_option("--output", ca.output, "Write to this file instead of stdout");
    compute->add_option("--check-witness", ca.check_witness, "Re-verify a JSON report (file or -) for the input graph");

    VerifyArgs va;
    auto * verify = app.add_subcommand("verify", "Machine-check the results over corpora");
    verify->add_option("--suite", va.suite, "default, or a comma list of check ids");
    verify->add_option("--corpus", va.corpus, "Corpus spec overriding each check's default");
    verify->add_flag("--json", va.json, "Print the reports as a JSON array");
    verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", va.budget, "Search-node cap per search")->check(CLI::PositiveNumber);
    verify->add_option("--output", va.output, "Write to this file instead of stdout");
    bool list = false;
    verify->add_flag("--list", list, "List check ids and default corpora");

    ConvertArgs cv;
    auto * convert = app.add_subcommand("convert", "Convert between edge-list and graph6");
    convert->add_option("--from", cv.from, "Input format")->required()->check(CLI::IsMember({"edgelist", "graph6"}));
    convert->add_option("--to", cv.to, "Output format")->required()->check(CLI::IsMember({"edgelist", "graph6"}));
    convert->add_option("--input", cv.input, "Input file, - for stdin");
    convert->add_option("--output", cv.output, "Output file, default stdout");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*compute)
            return run_compute(ca);
        if (*verify) {
            if (list) {
                for (const auto & id : registered_checks())
                    std::cout << id << "  " << default_corpus(id) << '\n';
                return ok;
            }
            return run_verify(va);
        }
        return run_convert(cv);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "symlab: " << e.what() << '\n';
        return budget;
    }
    catch (const UsageError & e) {
        std::cerr << "symlab: " << e.what() << '\n';
        return usage;
    }
    catch (const std::invalid_argument & e) {
        // malformed graph, family spec or corpus
        std::cerr << "symlab: " << e.what() << '\n';
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "symlab: " << e.what() << '\n';
        return failure;
    }
}
