#ifndef BKPVC_CAMPAIGN_HPP
#define BKPVC_CAMPAIGN_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bkpvc/bounds.hpp"
#include "bkpvc/forest.hpp"

namespace bkpvc {

struct CampaignConfig {
    ForestKind kind = ForestKind::directed;
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    std::size_t k_min = 2;
    std::size_t k_max = 2;
    std::size_t trials_per_cell = 1;
    std::uint64_t seed = 0;
    // Adds F_i for every (i, k) in the grid whose size falls in [n_min, n_max].
    bool include_extremal = false;
};

/// Non-negative rational kept in lowest terms.
struct Gap {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    bool operator<(const Gap& other) const noexcept {
        return numerator * other.denominator < other.numerator * denominator;
    }
    std::string str() const;
};

struct TrialRecord {
    ForestKind kind;
    std::size_t n;
    std::size_t k;
    std::size_t trial;         // index within the cell; extremal entries follow the random ones
    std::string source;        // "random" or "extremal"
    std::uint64_t seed;        // per-trial generator seed, 0 for extremal entries
    double component_bias;
    std::size_t psi_b;
    BoundValue bound;
    Gap gap;                   // psi_b minus the exact bound
    bool violation;            // psi_b below the bound ceiling
};

struct CampaignReport {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<Gap> min_gap;
    std::vector<TrialRecord> records;
};

// A trial could not be evaluated; the message carries a reproducer (the
// forest JSON and its generator seed).
class CampaignError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Deterministic in the config. Records are ordered by (n, k, trial).
/// `on_record` sees each record as soon as it is produced. InvalidParams for
/// empty ranges, k < 2, or n below the bound's domain.
CampaignReport run_campaign(const CampaignConfig& config,
                            const std::function<void(const TrialRecord&)>& on_record = {});

nlohmann::json to_json(const TrialRecord& record);
nlohmann::json summary_json(const CampaignReport& report);
std::string csv_header();
std::string to_csv(const TrialRecord& record);

}  // namespace bkpvc

#endif
