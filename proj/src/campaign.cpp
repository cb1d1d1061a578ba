#include "bkpvc/campaign.hpp"

#include <array>
#include <numeric>
#include <random>
#include <sstream>

#include "bkpvc/error.hpp"
#include "bkpvc/forest_io.hpp"
#include "bkpvc/generate.hpp"
#include "bkpvc/solver.hpp"

namespace bkpvc {

std::string Gap::str() const {
    if (denominator == 1) return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

constexpr std::array<double, 3> biases{0.0, 0.1, 0.3};

std::uint64_t trial_seed(std::uint64_t seed, ForestKind kind, std::size_t n, std::size_t k, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(kind), static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                      static_cast<std::uint32_t>(trial)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

Gap gap_of(std::size_t psi_b, const BoundValue& bound) {
    std::int64_t num = static_cast<std::int64_t>(psi_b) * bound.denominator - bound.numerator;
    std::int64_t den = bound.denominator;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

std::string reproducer(const AnyForest& forest, const TrialRecord& partial, const std::string& what) {
    std::ostringstream out;
    out << "trial failed (" << what << "); kind=" << to_string(partial.kind) << " n=" << partial.n
        << " k=" << partial.k << " seed=" << partial.seed << " bias=" << partial.component_bias
        << " forest=" << to_json(forest).dump();
    return out.str();
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config, const std::function<void(const TrialRecord&)>& on_record) {
    if (config.n_min > config.n_max || config.k_min > config.k_max) {
        throw Error(Errc::invalid_params, "empty n or k range");
    }
    if (config.k_min < 2) throw Error(Errc::invalid_params, "k must be at least 2");
    const std::size_t min_n = config.kind == ForestKind::directed ? 1 : 2;
    if (config.n_min < min_n) {
        throw Error(Errc::invalid_params, std::string(to_string(config.kind)) + " campaigns need n >= " +
                                              std::to_string(min_n));
    }

    CampaignReport report;
    auto evaluate = [&](const AnyForest& forest, TrialRecord record) {
        try {
            const auto result = solve(forest, record.k);
            if (!verify_fast(forest, record.k, result.witness).ok()) {
                throw CampaignError(reproducer(forest, record, "solver witness failed verification"));
            }
            record.psi_b = result.value;
        } catch (const Error& e) {
            throw CampaignError(reproducer(forest, record, e.what()));
        }
        record.bound = lower_bound(record.kind, record.n, record.k);
        record.gap = gap_of(record.psi_b, record.bound);
        record.violation = static_cast<std::int64_t>(record.psi_b) < record.bound.ceiling;
        ++report.trials;
        if (record.violation) ++report.violations;
        if (!report.min_gap || record.gap < *report.min_gap) report.min_gap = record.gap;
        if (on_record) on_record(record);
        report.records.push_back(std::move(record));
    };

    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
        for (std::size_t k = config.k_min; k <= config.k_max; ++k) {
            std::size_t trial = 0;
            for (; trial < config.trials_per_cell; ++trial) {
                TrialRecord record{config.kind, n, k, trial, "random", trial_seed(config.seed, config.kind, n, k, trial),
                                   biases[trial % biases.size()], 0, {}, {}, false};
                evaluate(gen_random(config.kind, n, record.seed, record.component_bias), std::move(record));
            }
            if (!config.include_extremal) continue;
            // n = k(2i-1) (+1 when undirected)
            const std::size_t offset = config.kind == ForestKind::directed ? 0 : 1;
            if (n < k + offset || (n - offset) % k != 0 || ((n - offset) / k) % 2 == 0) continue;
            const std::size_t i = ((n - offset) / k + 1) / 2;
            TrialRecord record{config.kind, n, k, trial, "extremal", 0, 0.0, 0, {}, {}, false};
            if (config.kind == ForestKind::directed) {
                evaluate(AnyForest{gen_directed_extremal(i, k)}, std::move(record));
            } else {
                evaluate(AnyForest{gen_undirected_extremal(i, k)}, std::move(record));
            }
        }
    }
    return report;
}

nlohmann::json to_json(const TrialRecord& r) {
    return {{"kind", to_string(r.kind)},
            {"n", r.n},
            {"k", r.k},
            {"trial", r.trial},
            {"source", r.source},
            {"seed", r.seed},
            {"component_bias", r.component_bias},
            {"psi_b", r.psi_b},
            {"bound", std::to_string(r.bound.numerator) + "/" + std::to_string(r.bound.denominator)},
            {"bound_ceiling", r.bound.ceiling},
            {"gap", r.gap.str()},
            {"violation", r.violation}};
}

nlohmann::json summary_json(const CampaignReport& report) {
    return {{"summary", true},
            {"trials", report.trials},
            {"violations", report.violations},
            {"min_gap", report.min_gap ? nlohmann::json(report.min_gap->str()) : nlohmann::json(nullptr)}};
}

std::string csv_header() { return "kind,n,k,trial,source,seed,component_bias,psi_b,bound,bound_ceiling,gap,violation"; }

std::string to_csv(const TrialRecord& r) {
    std::ostringstream out;
    out << to_string(r.kind) << ',' << r.n << ',' << r.k << ',' << r.trial << ',' << r.source << ',' << r.seed << ','
        << r.component_bias << ',' << r.psi_b << ',' << r.bound.numerator << '/' << r.bound.denominator << ','
        << r.bound.ceiling << ',' << r.gap.str() << ',' << (r.violation ? 1 : 0);
    return out.str();
}

}  // namespace bkpvc
