#pragma once

#include <symlab/aut.hpp>

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symlab {

enum class CheckStatus { verified, counterexample, hypothesis_never_met, budget_exceeded, not_refuted };

std::string to_string(CheckStatus status);

struct TheoremReport {
    std::string theorem;
    std::string corpus;
    /// Graphs examined.
    std::size_t checked = 0;
    /// Graphs on which the check's hypothesis held.
    std::size_t hypothesis_met = 0;
    CheckStatus status = CheckStatus::hypothesis_never_met;
    /// First failing graph in corpus order, with the computed values.
    std::optional<nlohmann::json> counterexample;
    std::string note;
    /// Command that reruns the check on the failing graph only.
    std::optional<std::string> replay;
    /// Extra per-check output (gap sets and the like).
    nlohmann::json data;
};

nlohmann::json to_json(const TheoremReport & report);

class UnknownCheck : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every check id, in the order the default suite runs them.
const std::vector<std::string> & registered_checks();

/// "default" (or "all") gives every registered check; otherwise a comma
/// list of ids. Prop2.2, Prop2.3 and Cor2.7 expand to their parts.
std::vector<std::string> expand_suite(const std::string & suite);

const std::string & default_corpus(const std::string & id);

struct VerifyOptions {
    SearchBudget budget;
    int jobs = 1;
    /// Thm1.1 and Cor2.6 look at no more minimum determining sets than this.
    std::size_t determining_set_limit = 1000;
};

class Verifier {
public:
    explicit Verifier(VerifyOptions options = {});
    ~Verifier();
    Verifier(const Verifier &) = delete;
    Verifier & operator=(const Verifier &) = delete;

    /// corpus empty means the check's default corpus.
    TheoremReport run_check(const std::string & id, const std::string & corpus = {});
    std::vector<TheoremReport> run_suite(const std::vector<std::string> & ids, const std::string & corpus = {});

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

} // namespace symlab
