#pragma once

#include "corrnet/panel.hpp"

#include <cstdint>
#include <vector>

namespace corrnet {

/// Block one-factor model with known population correlations: rho_in inside
/// a block, rho_out across blocks.
struct FactorSpec {
    int n_series = 0;
    int n_records = 0;
    std::vector<int> block_assignment; // size n_series
    double rho_in = 0.0;
    double rho_out = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

inline constexpr Date kSynthAnchor{2000, 1, 3}; // a Monday

/// Gaussian returns with unit variance and population correlation rho for
/// every pair, on a Mon-Fri calendar starting at `start`. Accepts the full
/// positive-definite range -1/(n-1) < rho < 1.
ReturnPanel gen_equicorrelated(int n, int t, double rho, std::uint64_t seed,
                               Date start = kSynthAnchor);

/// r = sqrt(rho_out) g + sqrt(rho_in - rho_out) f_block + sqrt(1 - rho_in) eps.
ReturnPanel gen_blocks(const FactorSpec& spec, Date start = kSynthAnchor);

/// Concatenated panel: `before` drives the records up to the last business
/// day before shift_month, `after` drives the rest; the switch lands exactly
/// on the first business day of shift_month.
ReturnPanel gen_regime_shift(const FactorSpec& before, const FactorSpec& after,
                             YearMonth shift_month);

/// Prices reconstructed as base * exp(scale * cumulative returns), with one
/// leading price date so that log_returns round-trips the panel.
PricePanel to_prices(const ReturnPanel& panel, double scale = 1.0, double base = 100.0);

/// Convenience: uniform blocks of the given sizes (block i repeated sizes[i] times).
std::vector<int> block_assignment_from_sizes(const std::vector<int>& sizes);

} // namespace corrnet
