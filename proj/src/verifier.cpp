#include <symlab/corpus.hpp>
#include <symlab/families.hpp>
#include <symlab/graph_io.hpp>
#include <symlab/invariants.hpp>
#include <symlab/verifier.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace symlab {

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::verified:
        return "verified";
    case CheckStatus::counterexample:
        return "counterexample";
    case CheckStatus::hypothesis_never_met:
        return "hypothesis-never-met";
    case CheckStatus::budget_exceeded:
        return "budget-exceeded";
    case CheckStatus::not_refuted:
        return "not-refuted";
    }
    return "unknown";
}

nlohmann::json to_json(const TheoremReport & r)
{
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["corpus"] = r.corpus;
    j["checked"] = r.checked;
    j["hypothesis_met"] = r.hypothesis_met;
    j["status"] = to_string(r.status);
    j["counterexample"] = r.counterexample ? *r.counterexample : nlohmann::json(nullptr);
    j["note"] = r.note;
    j["replay"] = r.replay ? nlohmann::json(*r.replay) : nlohmann::json(nullptr);
    if (!r.data.is_null())
        j["data"] = r.data;
    return j;
}

namespace {

const std::string bounds_corpus = "all-connected:<=6";

struct Facts {
    int n = 0;
    GroupOrder aut;
    int d = 0;
    int rho = 0;
    Coloring rho_witness;
    int det = 0;
    VertexSet det_witness;
};

nlohmann::json facts_json(const Graph & g, const Facts & f)
{
    return {
        {"graph6", emit_graph6(g)},
        {"n", f.n},
        {"aut_order", f.aut.str()},
        {"D", f.d},
        {"rho", f.rho},
        {"det", f.det},
        {"witness_labeling", f.rho_witness.labels()},
        {"witness_det_set", f.det_witness},
    };
}

enum class Verdict { pass, fail, budget, restricted };

struct Outcome {
    bool hypothesis = false;
    Verdict verdict = Verdict::pass;
    nlohmann::json detail;
};


bool corona_connected_pair(const CorpusItem & item, int min_h_order)
{
    if (!item.corona_parts)
        return false;
    const auto & [g, h] = *item.corona_parts;
    return g.order() >= 2 && h.order() >= min_h_order && is_connected(g) && is_connected(h);
}

struct CheckDef;

} // namespace

struct Verifier::Impl {
    VerifyOptions options;
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const Facts>> facts;
    std::map<std::string, std::shared_ptr<const std::vector<CorpusItem>>> corpora;

    std::shared_ptr<const Facts> facts_of(const Graph & g)
    {
        const auto key = emit_graph6(g);
        {
            std::lock_guard lock(mutex);
            if (auto it = facts.find(key); it != facts.end())
                return it->second;
        }
        auto f = std::make_shared<Facts>();
        f->n = g.order();
        f->aut = automorphisms(g, Coloring::uniform(g.order()), options.budget).order();
        auto c = cost(g, options.budget);
        f->d = c.d;
        f->rho = c.rho;
        f->rho_witness = c.witness;
        auto det = determining_number(g, options.budget);
        f->det = det.det;
        f->det_witness = det.witness;
        std::lock_guard lock(mutex);
        return facts.emplace(key, std::move(f)).first->second;
    }

    std::shared_ptr<const std::vector<CorpusItem>> corpus(const std::string & spec)
    {
        {
            std::lock_guard lock(mutex);
            if (auto it = corpora.find(spec); it != corpora.end())
                return it->second;
        }
        auto items = std::make_shared<const std::vector<CorpusItem>>(load_corpus(spec));
        std::lock_guard lock(mutex);
        return corpora.emplace(spec, std::move(items)).first->second;
    }

    std::vector<Outcome> evaluate(const std::vector<CorpusItem> & items,
        const std::function<Outcome(const CorpusItem &)> & check);
};

namespace {

using Impl = Verifier::Impl;

struct CheckDef {
    std::string id;
    std::string corpus;
    std::function<Outcome(Impl &, const CorpusItem &)> item;
    /// Replaces the default reduction when set; runs after it.
    std::function<void(Impl &, const std::vector<CorpusItem> &, const std::vector<Outcome> &, TheoremReport &)>
        finish;
};

Outcome simple(Impl & ctx, const CorpusItem & item, const std::function<bool(const Facts &)> & hypothesis,
    const std::function<bool(const Facts &)> & holds)
{
    Outcome o;
    auto f = ctx.facts_of(item.graph);
    o.detail = facts_json(item.graph, *f);
    o.hypothesis = hypothesis(*f);
    if (o.hypothesis && !holds(*f))
        o.verdict = Verdict::fail;
    return o;
}

bool always(const Facts &)
{
    return true;
}

Outcome check_prop24(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    o.hypothesis = true;
    auto f = ctx.facts_of(item.graph);
    o.detail = facts_json(item.graph, *f);
    auto classes = f->rho_witness.classes();
    // drop one largest class: the last of maximal size
    std::size_t largest = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].size() >= classes[largest].size())
            largest = i;
    VertexSet rest;
    int bound = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (i != largest) {
            rest.insert(rest.end(), classes[i].begin(), classes[i].end());
            bound += static_cast<int>(classes[i].size());
        }
    std::sort(rest.begin(), rest.end());
    const bool determining = is_determining_set(item.graph, rest, ctx.options.budget);
    o.detail["union_without_largest_class"] = rest;
    o.detail["union_is_determining"] = determining;
    o.detail["bound"] = bound;
    if (!determining || f->det > bound)
        o.verdict = Verdict::fail;
    return o;
}

Outcome check_cor26(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    auto f = ctx.facts_of(item.graph);
    o.detail = facts_json(item.graph, *f);
    if (f->d < 2)
        return o;
    const auto & g = item.graph;
    auto sets = minimum_determining_sets(g, f->det, ctx.options.determining_set_limit, ctx.options.budget);
    nlohmann::json used = nlohmann::json::array();
    for (const auto & a : sets) {
        auto sub = induced_subgraph(g, a);
        auto sub_cost = cost(sub.graph, ctx.options.budget);
        if (sub_cost.d != f->d - 1)
            continue;
        o.hypothesis = true;
        std::vector<int> keys(g.order(), f->d);
        for (Vertex v : a)
            keys[v] = sub_cost.witness.label(sub.old_to_new[v]);
        auto built = Coloring::from_keys(keys);
        const int bound = std::min(f->n - f->det, sub_cost.rho);
        auto sizes = built.class_sizes();
        const int smallest = *std::min_element(sizes.begin(), sizes.end());
        const bool rigid = is_color_rigid(g, built, ctx.options.budget);
        used.push_back({{"A", a}, {"rho_GA", sub_cost.rho}, {"construction_distinguishing", rigid},
            {"construction_smallest_class", smallest}});
        if (!rigid || built.num_labels() != f->d || smallest != bound || f->rho > bound) {
            o.verdict = Verdict::fail;
            break;
        }
    }
    o.detail["determining_sets_used"] = used;
    return o;
}

Outcome check_thm11(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    o.hypothesis = true;
    auto f = ctx.facts_of(item.graph);
    o.detail = facts_json(item.graph, *f);
    const auto & g = item.graph;
    if (f->d == 1) {
        if (f->det != 0)
            o.verdict = Verdict::fail;
        return o;
    }
    const auto limit = ctx.options.determining_set_limit;
    auto sets = minimum_determining_sets(g, f->det, limit, ctx.options.budget);
    bool forward = false;
    std::size_t examined = 0;
    for (const auto & s : sets) {
        ++examined;
        auto sl = subset_distinguishing_number(g, s, ctx.options.budget);
        std::vector<int> keys(g.order(), sl.d + 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            keys[s[i]] = sl.labels[i];
        auto built = Coloring::from_keys(keys);
        // converse: a determining set labeled distinguishingly with k labels
        // plus one new label elsewhere distinguishes G
        if (!is_color_rigid(g, built, ctx.options.budget) || f->d > sl.d + 1) {
            o.verdict = Verdict::fail;
            o.detail["determining_set"] = s;
            o.detail["subset_labels"] = sl.labels;
            return o;
        }
        if (sl.d <= f->d - 1) {
            forward = true;
            o.detail["determining_set"] = s;
            o.detail["subset_labels"] = sl.labels;
            o.detail["labeling"] = built.labels();
            break;
        }
    }
    o.detail["minimum_sets_examined"] = examined;
    o.detail["minimum_sets_suffice"] = forward;
    if (forward)
        return o;
    // every class but one of a d-distinguishing labeling, with its labels
    const auto & w = f->rho_witness;
    for (int dropped = w.num_labels(); dropped >= 1 && !forward; --dropped) {
        VertexSet s;
        std::vector<int> labels;
        for (Vertex v = 0; v < g.order(); ++v)
            if (w.label(v) != dropped) {
                s.push_back(v);
                labels.push_back(w.label(v));
            }
        if (is_determining_set(g, s, ctx.options.budget)
            && subset_is_d_distinguishable(g, s, labels, ctx.options.budget)) {
            forward = true;
            o.detail["determining_set"] = s;
            o.detail["subset_labels"] = labels;
        }
    }
    if (!forward) {
        o.verdict = Verdict::restricted;
        o.detail["reason"] = sets.size() >= limit
            ? "no (d-1)-distinguishable set among the first minimum determining sets"
            : "no minimum determining set is (d-1)-distinguishable";
    }
    return o;
}

Outcome friendship_item(Impl & ctx, const CorpusItem & item, const std::function<bool(int, const Facts &)> & holds)
{
    Outcome o;
    if (!item.friendship_n)
        return o;
    auto f = ctx.facts_of(item.graph);
    o.detail = facts_json(item.graph, *f);
    o.detail["friendship_n"] = *item.friendship_n;
    o.hypothesis = true;
    if (!holds(*item.friendship_n, *f))
        o.verdict = Verdict::fail;
    return o;
}

Outcome check_thm33(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    if (!item.friendship_n || !families::friendship_rho(*item.friendship_n))
        return o;
    const auto expected = *families::friendship_rho(*item.friendship_n);
    o = friendship_item(ctx, item, [&](int, const Facts & f) { return f.rho == expected; });
    o.detail["expected_rho"] = expected;
    return o;
}

Outcome check_thm34(Impl & ctx, const CorpusItem & item)
{
    auto o = friendship_item(ctx, item, [&](int n, const Facts & f) {
        VertexSet odd;
        for (int k = 1; k <= 2 * n - 1; k += 2)
            odd.push_back(k);
        return f.det == n && is_determining_set(item.graph, odd, ctx.options.budget);
    });
    return o;
}

nlohmann::json corona_detail(const CorpusItem & item, const Facts & fg, const Facts & fh, const Facts & fc)
{
    const auto & [g, h] = *item.corona_parts;
    return {
        {"graph6", emit_graph6(item.graph)},
        {"G", emit_graph6(g)},
        {"H", emit_graph6(h)},
        {"n", fg.n},
        {"D_G", fg.d},
        {"D_H", fh.d},
        {"D_corona", fc.d},
        {"rho_G", fg.rho},
        {"rho_H", fh.rho},
        {"rho_corona", fc.rho},
        {"det_G", fg.det},
        {"det_H", fh.det},
        {"det_corona", fc.det},
        {"det_witness_corona", fc.det_witness},
    };
}

Outcome check_thm41(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    if (!corona_connected_pair(item, 2))
        return o;
    auto fg = ctx.facts_of(item.corona_parts->first);
    auto fh = ctx.facts_of(item.corona_parts->second);
    auto fc = ctx.facts_of(item.graph);
    o.hypothesis = true;
    o.detail = corona_detail(item, *fg, *fh, *fc);
    const auto expected = families::corona_det(fg->det, fg->n, fh->det);
    o.detail["expected_det"] = expected;
    if (fc->det != expected)
        o.verdict = Verdict::fail;
    return o;
}

Outcome check_thm42(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    if (!item.corona_parts || item.corona_parts->second.order() != 1)
        return o;
    const auto & g = item.corona_parts->first;
    if (g.order() < 2 || !is_connected(g))
        return o;
    auto fg = ctx.facts_of(g);
    auto fh = ctx.facts_of(item.corona_parts->second);
    auto fc = ctx.facts_of(item.graph);
    o.hypothesis = true;
    o.detail = corona_detail(item, *fg, *fh, *fc);
    const auto expected = families::corona_det_k1(fg->det);
    o.detail["expected_det"] = expected;
    if (fc->det != expected)
        o.verdict = Verdict::fail;
    return o;
}

Outcome check_thm43(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    if (!corona_connected_pair(item, 2))
        return o;
    auto fg = ctx.facts_of(item.corona_parts->first);
    auto fh = ctx.facts_of(item.corona_parts->second);
    auto fc = ctx.facts_of(item.graph);
    o.detail = corona_detail(item, *fg, *fh, *fc);
    const int k2 = std::max(fg->d, fh->d);
    o.detail["k2"] = k2;
    if (fc->d != k2) {
        o.detail["bound"] = "not applicable";
        return o;
    }
    o.hypothesis = true;
    const auto bound = families::corona_rho_bound(fg->rho, fg->n, fh->rho);
    o.detail["bound"] = bound;
    if (fc->rho > bound)
        o.verdict = Verdict::fail;
    return o;
}

Outcome check_corona_degree(Impl &, const CorpusItem & item)
{
    Outcome o;
    if (!corona_connected_pair(item, 1))
        return o;
    o.hypothesis = true;
    const auto & c = item.graph;
    const int n = item.corona_parts->first.order();
    std::set<int> g_degrees;
    for (Vertex v = 0; v < n; ++v)
        g_degrees.insert(c.degree(v));
    o.detail = {{"graph6", emit_graph6(c)}, {"G_degrees", g_degrees}};
    for (Vertex w = n; w < c.order(); ++w)
        if (g_degrees.count(c.degree(w))) {
            o.verdict = Verdict::fail;
            o.detail["vertex"] = w;
            o.detail["degree"] = c.degree(w);
            break;
        }
    return o;
}

Outcome friendship_values(Impl & ctx, const CorpusItem & item)
{
    Outcome o;
    if (!item.friendship_n)
        return o;
    const int n = *item.friendship_n;
    auto f = ctx.facts_of(item.graph);
    o.hypothesis = true;
    o.detail = facts_json(item.graph, *f);
    o.detail["friendship_n"] = n;
    return o;
}

std::string replay_command(const std::string & id, const std::string & corpus)
{
    return "symlab verify --suite " + id + " --corpus '" + corpus + "'";
}

void finish_thm11(Impl &, const std::vector<CorpusItem> &, const std::vector<Outcome> & outcomes,
    TheoremReport & r)
{
    std::size_t larger = 0;
    for (const auto & o : outcomes)
        if (o.detail.contains("minimum_sets_suffice") && !o.detail["minimum_sets_suffice"].get<bool>())
            ++larger;
    r.data = {{"graphs_needing_non_minimum_set", larger}};
    if (larger && r.note.empty())
        r.note = std::to_string(larger)
            + " graph(s) have no (d-1)-distinguishable minimum determining set; the forward direction holds there "
              "through a larger set (all classes but one of a distinguishing labeling)";
}

void finish_rem32(Impl &, const std::vector<CorpusItem> & items, const std::vector<Outcome> & outcomes,
    TheoremReport & r)
{
    if (r.status == CheckStatus::budget_exceeded)
        return;
    std::map<int, int> d_of;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (outcomes[i].hypothesis)
            d_of[*items[i].friendship_n] = outcomes[i].detail["D"].get<int>();
    auto covered = [&](long long hi) {
        for (long long n = 2; n <= hi; ++n)
            if (!d_of.count(static_cast<int>(n)))
                return false;
        return true;
    };
    nlohmann::json js = nlohmann::json::array();
    for (long long j = 3;; ++j) {
        const long long k = families::k_of(j);
        const long long last = k + j - 1;
        if (!covered(last))
            break;
        long long first = -1;
        for (long long n = 2; n <= last && first < 0; ++n)
            if (d_of[static_cast<int>(n)] == j)
                first = n;
        const int d_last = d_of[static_cast<int>(last)];
        js.push_back({{"j", j}, {"k_j", k}, {"least_n_with_D_j", first}, {"D_at_k_j_plus_j_minus_1", d_last}});
        if (first != k || d_last != j + 1) {
            r.status = CheckStatus::counterexample;
            r.counterexample = js.back();
            r.replay = replay_command(r.theorem, "friendship:2.." + std::to_string(last));
            break;
        }
    }
    r.data = {{"checked_j", js}};
    r.hypothesis_met = js.size();
    if (js.empty()) {
        r.status = CheckStatus::hypothesis_never_met;
        r.note = "corpus must contain F_2..F_{k_j+j-1} for some j";
    }
    else if (r.status != CheckStatus::counterexample) {
        r.status = CheckStatus::verified;
        r.note = "least n with D(F_n) = j and D(F_{k_j+j-1}) = j+1 checked for " + std::to_string(js.size())
            + " value(s) of j";
    }
}

void finish_thm28(Impl &, const std::vector<CorpusItem> & items, const std::vector<Outcome> & outcomes,
    TheoremReport & r)
{
    if (r.status != CheckStatus::verified)
        return;
    std::set<long long> gap_set;
    nlohmann::json gaps = nlohmann::json::object();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!outcomes[i].hypothesis)
            continue;
        const auto & d = outcomes[i].detail;
        const long long gap = std::llabs(d["det"].get<long long>() - d["rho"].get<long long>());
        gaps[std::to_string(*items[i].friendship_n)] = gap;
        gap_set.insert(gap);
    }
    r.data = {{"gaps", gaps}, {"gap_set", gap_set}};
    long long missing = 0;
    for (long long m = 1; m <= *gap_set.rbegin(); ++m)
        if (!gap_set.count(m)) {
            missing = m;
            break;
        }
    std::ostringstream note;
    note << "achieved gaps |Det - rho| = {";
    bool first = true;
    for (auto g : gap_set) {
        note << (first ? "" : ", ") << g;
        first = false;
    }
    note << "}; friendship graphs only give the triangular numbers (j-1)(j-2)/2 = k_j - 1";
    if (missing)
        note << ", so m = " << missing << " has no friendship witness";
    note << "; the claim for every positive m is not established by this family";
    r.note = note.str();
    r.status = CheckStatus::not_refuted;
}

const std::vector<CheckDef> & checks()
{
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto add_simple = [&](std::string id, std::function<bool(const Facts &)> hyp,
                              std::function<bool(const Facts &)> holds) {
            v.push_back({std::move(id), bounds_corpus,
                [hyp, holds](Impl & ctx, const CorpusItem & item) { return simple(ctx, item, hyp, holds); },
                nullptr});
        };
        v.push_back({"Thm1.1", bounds_corpus, check_thm11, finish_thm11});
        add_simple("Prop2.2i", always, [](const Facts & f) { return f.rho * f.d <= f.n; });
        add_simple("Prop2.2ii", always, [](const Facts & f) { return (f.d == 1) == (f.rho == f.n); });
        add_simple("Prop2.3i", [](const Facts & f) { return f.d >= 2; },
            [](const Facts & f) { return 2 * f.rho <= f.n; });
        add_simple("Prop2.3ii", [](const Facts & f) { return 2 * f.rho == f.n; },
            [](const Facts & f) { return f.d == 2; });
        v.push_back({"Prop2.4", bounds_corpus, check_prop24, nullptr});
        add_simple("Prop2.5", always, [](const Facts & f) { return f.rho <= f.n - f.det; });
        v.push_back({"Cor2.6", bounds_corpus, check_cor26, nullptr});
        add_simple("Cor2.7i", [](const Facts & f) { return f.det <= f.rho; },
            [](const Facts & f) { return 2 * f.det <= f.n; });
        add_simple("Cor2.7ii", [](const Facts & f) { return f.d == 2; },
            [](const Facts & f) { return 2 * f.det <= f.n; });
        v.push_back({"Thm2.8", "friendship:2..12",
            [](Impl & ctx, const CorpusItem & item) {
                auto o = friendship_values(ctx, item);
                if (o.hypothesis) {
                    const auto gap = std::llabs(o.detail["det"].get<long long>() - o.detail["rho"].get<long long>());
                    o.detail["gap"] = gap;
                    o.detail["expected_gap"] = families::gap(*item.friendship_n);
                    if (gap != families::gap(*item.friendship_n))
                        o.verdict = Verdict::fail;
                }
                return o;
            },
            finish_thm28});
        v.push_back({"Thm3.1", "friendship:2..8",
            [](Impl & ctx, const CorpusItem & item) {
                return friendship_item(
                    ctx, item, [](int n, const Facts & f) { return f.d == families::friendship_D(n); });
            },
            nullptr});
        v.push_back({"Rem3.2", "friendship:2..8", friendship_values, finish_rem32});
        v.push_back({"Thm3.3", "friendship:2..8", check_thm33, nullptr});
        v.push_back({"Thm3.4", "friendship:2..6", check_thm34, nullptr});
        v.push_back({"Thm4.1", "corona-pairs:(path:3),(complete:2);(path:2),(complete:2);(path:3),(path:2)",
            check_thm41, nullptr});
        v.push_back({"Thm4.2", "corona-pairs:(path:3),(complete:1);(cycle:4),(complete:1);(complete:3),(complete:1)",
            check_thm42, nullptr});
        v.push_back({"Thm4.3",
            "corona-pairs:(path:3),(complete:2);(path:2),(complete:2);(path:3),(path:2);(cycle:4),(path:2)",
            check_thm43, nullptr});
        v.push_back({"CoronaDegree",
            "corona-pairs:(path:3),(complete:2);(cycle:4),(path:3);(star:3),(cycle:4);(friendship:2),(complete:1);"
            "(complete:4),(complete_bipartite:1,3);(path:2),(complete:1)",
            check_corona_degree, nullptr});
        return v;
    }();
    return defs;
}

const CheckDef & find_check(const std::string & id)
{
    for (const auto & c : checks())
        if (c.id == id)
            return c;
    throw UnknownCheck("unknown check '" + id + "'");
}

} // namespace

const std::vector<std::string> & registered_checks()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto & c : checks())
            v.push_back(c.id);
        return v;
    }();
    return ids;
}

std::vector<std::string> expand_suite(const std::string & suite)
{
    if (suite == "default" || suite == "all")
        return registered_checks();
    static const std::map<std::string, std::vector<std::string>> groups{
        {"Prop2.2", {"Prop2.2i", "Prop2.2ii"}},
        {"Prop2.3", {"Prop2.3i", "Prop2.3ii"}},
        {"Cor2.7", {"Cor2.7i", "Cor2.7ii"}},
    };
    std::vector<std::string> out;
    std::stringstream in(suite);
    std::string id;
    while (std::getline(in, id, ',')) {
        if (id.empty())
            continue;
        if (auto it = groups.find(id); it != groups.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
            continue;
        }
        find_check(id);
        out.push_back(id);
    }
    if (out.empty())
        throw UnknownCheck("empty suite '" + suite + "'");
    return out;
}

const std::string & default_corpus(const std::string & id)
{
    return find_check(id).corpus;
}

std::vector<Outcome> Impl::evaluate(const std::vector<CorpusItem> & items,
    const std::function<Outcome(const CorpusItem &)> & check)
{
    std::vector<Outcome> out(items.size());
    auto one = [&](std::size_t i) {
        try {
            out[i] = check(items[i]);
        }
        catch (const BudgetExceeded & e) {
            out[i].verdict = Verdict::budget;
            out[i].detail = {{"graph6", emit_graph6(items[i].graph)}, {"error", e.what()}};
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i)
            one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
                one(i);
        });
    for (auto & w : workers)
        w.join();
    return out;
}

Verifier::Verifier(VerifyOptions options) : impl_(std::make_unique<Impl>())
{
    impl_->options = options;
}

Verifier::~Verifier() = default;

TheoremReport Verifier::run_check(const std::string & id, const std::string & corpus)
{
    const auto & def = find_check(id);
    TheoremReport r;
    r.theorem = id;
    r.corpus = corpus.empty() ? def.corpus : corpus;
    auto items = impl_->corpus(r.corpus);
    auto outcomes = impl_->evaluate(*items, [&](const CorpusItem & item) { return def.item(*impl_, item); });

    r.checked = items->size();
    std::size_t budget = 0, restricted = 0;
    std::optional<std::size_t> first_fail;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto & o = outcomes[i];
        r.hypothesis_met += o.hypothesis && o.verdict != Verdict::budget;
        if (o.verdict == Verdict::fail && !first_fail)
            first_fail = i;
        budget += o.verdict == Verdict::budget;
        restricted += o.verdict == Verdict::restricted;
    }
    if (first_fail) {
        r.status = CheckStatus::counterexample;
        r.counterexample = outcomes[*first_fail].detail;
        r.replay = replay_command(id, (*items)[*first_fail].replay);
    }
    else if (budget) {
        r.status = CheckStatus::budget_exceeded;
        r.note = std::to_string(budget) + " graph(s) exceeded the search budget of "
            + std::to_string(impl_->options.budget.max_nodes) + " nodes";
    }
    else if (restricted) {
        r.status = CheckStatus::not_refuted;
        r.note = std::to_string(restricted)
            + " graph(s) not settled by the restricted search over minimum determining sets";
    }
    else if (r.hypothesis_met == 0) {
        r.status = CheckStatus::hypothesis_never_met;
    }
    else {
        r.status = CheckStatus::verified;
    }
    if (def.finish)
        def.finish(*impl_, *items, outcomes, r);
    return r;
}

std::vector<TheoremReport> Verifier::run_suite(const std::vector<std::string> & ids, const std::string & corpus)
{
    std::vector<TheoremReport> out;
    for (const auto & id : ids)
        out.push_back(run_check(id, corpus));
    return out;
}

} // namespace symlab
