#include "itcraft/certify.hpp"

#include "itcraft/error.hpp"
#include "itcraft/io.hpp"

#include <unordered_map>

namespace itcraft {

namespace {

    // Structure only; labels do not affect the search.
    std::string payload_key(const PartitionedGraph& g)
    {
        return canonical_string(PartitionedGraph(g.n(), g.edges(), g.blocks()));
    }

    class PayloadChecker {
    public:
        explicit PayloadChecker(const SearchBudget& budget) : budget_(budget) {}

        void check(const PartitionedGraph& g, std::size_t step, StepReport& rep)
        {
            auto key = payload_key(g);
            if (auto it = seen_.find(key); it != seen_.end()) {
                rep.cached = true;
                return;
            }
            const auto res = find_it(g, budget_);
            ++checks_;
            rep.base_nodes = res.nodes;
            if (res.status == SearchStatus::Found)
                throw Error(ErrorCode::BaseHasIT, "payload has an independent transversal", step);
            if (res.status == SearchStatus::BudgetExceeded)
                throw Error(ErrorCode::BaseBudgetExceeded, "payload check ran out of budget", step);
            seen_.emplace(std::move(key), res.nodes);
        }

        std::size_t checks() const { return checks_; }

    private:
        SearchBudget budget_;
        std::unordered_map<std::string, std::uint64_t> seen_;
        std::size_t checks_ = 0;
    };

} // namespace

VerifyReport verify_certificate(const Certificate& cert, const SearchBudget& base_budget)
{
    if (cert.version != 1)
        throw Error(ErrorCode::Malformed, "unsupported certificate version");
    if (cert.steps.empty() || !std::holds_alternative<BaseStep>(cert.steps.front()))
        throw Error(ErrorCode::Malformed, "a certificate starts with a base step");

    PayloadChecker checker(base_budget);
    VerifyReport out;
    PartitionedGraph state;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        StepReport rep;
        rep.index = i;
        rep.kind = step_kind(step);
        if (const auto* base = std::get_if<BaseStep>(&step)) {
            if (i != 0)
                throw Error(ErrorCode::Malformed, "base step at position " + std::to_string(i));
            checker.check(base->graph, i, rep);
            state = base->graph;
        }
        else {
            if (const auto* j = std::get_if<JoinStep>(&step))
                checker.check(j->added, i, rep);
            try {
                state = apply_step(state, step);
            }
            catch (const Error& e) {
                throw Error(ErrorCode::StepPreconditionFailed,
                    "step " + std::to_string(i) + " (" + rep.kind + "): " + std::string(to_string(e.code())) + ": "
                        + e.what(),
                    i);
            }
        }
        rep.n = state.n();
        rep.r = state.r();
        out.steps.push_back(std::move(rep));
    }

    if (!cert.relabel.empty()) {
        if (cert.relabel.size() != state.n())
            throw Error(ErrorCode::Malformed, "relabel length does not match the replayed graph");
        std::vector<char> hit(state.n(), 0);
        for (auto v : cert.relabel) {
            if (v < 0 || static_cast<std::size_t>(v) >= state.n() || hit[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::Malformed, "relabel is not a permutation");
            hit[static_cast<std::size_t>(v)] = 1;
        }
        state = relabel(state, cert.relabel);
    }
    out.graph = std::move(state);
    out.payload_checks = checker.checks();
    return out;
}

bool certifies(const Certificate& cert, const PartitionedGraph& target, const SearchBudget& base_budget)
{
    return canonical_string(verify_certificate(cert, base_budget).graph) == canonical_string(target);
}

CrossReport cross_validate(const Certificate& cert, const SearchBudget& budget, const SearchBudget& base_budget)
{
    const auto verified = verify_certificate(cert, base_budget);
    const auto res = find_it(verified.graph, budget);
    if (res.status == SearchStatus::BudgetExceeded)
        throw Error(ErrorCode::BudgetExceeded, "exhaustive search on the replayed graph ran out of budget");
    CrossReport out;
    out.nodes = res.nodes;
    out.agree = res.status == SearchStatus::None;
    out.counterexample = res.transversal;
    return out;
}

} // namespace itcraft
