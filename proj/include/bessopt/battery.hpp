#pragma once

// Battery physics used on both sides of the toolkit: the MILP builder reads
// these structures as constraint coefficients, while the dynamic-programming
// oracle and the feasibility auditor evaluate them directly.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bessopt {

enum class CycleMode { Charge, Discharge };

// Fixed plant parameters. Capacities in MWh, powers in MW, costs in $.
struct BatteryParams {
    double rated_capacity_mwh = 1.0;      // C_r
    double max_discharge_mw = 1.337;      // p_d^Max
    double max_charge_mw = 1.337;         // p_c^Max
    double soc_upper = 0.85;              // S_up
    double soc_lower = 0.30;              // S_dn
    double initial_energy_mwh = 0.5;      // C_int
    double initial_capacity = 1.0;        // Q_int, p.u.
    double eol = 0.8;                     // remaining-capacity retirement criterion
    double calendar_life_days = 3650.0;   // L_cal
    double replacement_cost_per_mwh = 165000.0;   // gamma_b
    double variable_om_per_mwh = 2.3;             // gamma_b,VOM, per MWh discharged
    double fixed_om_per_kw_year = 8.0;
    double investment_per_kwh = 165.0;
    double offshore_cost_multiplier = 1.2;
    double basic_roundtrip_efficiency = 0.9;      // constant-efficiency tier only

    std::vector<std::string> validate() const;
};

// One linear segment of a loss curve: within its width, each MW of cycling
// power loses `slope` MW. Slopes must be non-decreasing across a bin so the
// greedy fill (and the LP relaxation) picks cheap segments first.
struct CurvePiece {
    double width_mw = 0.0;
    double slope = 0.0;
};

struct SocBinCurve {
    std::vector<CurvePiece> discharge_pieces;
    std::vector<CurvePiece> charge_pieces;
    double max_discharge_mw = 0.0;
    double max_charge_mw = 0.0;
};

// Piecewise loss and power-limit description over an ascending SOC grid.
// soc_bins has K+1 edges; bins[k] covers [soc_bins[k], soc_bins[k+1]].
// Boundary SOC values resolve to the lower-index bin.
struct BatteryCurves {
    std::vector<double> soc_bins;
    std::vector<SocBinCurve> bins;

    std::size_t bin_count() const { return bins.size(); }
    std::size_t bin_index(double soc) const;
};

// Cycle life as a function of depth of discharge, interpolated linearly in
// (DOD, log cycle_life). Queries outside the table clamp to the nearest row.
struct CycleLifeTable {
    struct Row {
        double dod = 0.0;
        double cycle_life = 0.0;
    };
    std::vector<Row> rows;

    std::vector<std::string> validate() const;
};

// Per-day capacity bookkeeping, p.u. of initial capacity.
struct DegradationState {
    int day = 1;
    double calendar_capacity = 1.0;   // Q_cal(d)
    double cycle_capacity = 1.0;      // Q_cyc(d)
    double actual_capacity = 1.0;     // C_act(d) = min of the two
    double cumulative_charge_mwh = 0.0;
};

inline std::vector<std::string> BatteryParams::validate() const {
    std::vector<std::string> issues;
    auto bad = [&](const std::string& msg) { issues.push_back("battery: " + msg); };
    if (!(soc_lower >= 0.0 && soc_lower < soc_upper && soc_upper <= 1.0))
        bad("require 0 <= soc_lower < soc_upper <= 1");
    if (rated_capacity_mwh < 0.0) bad("rated_capacity must be >= 0");
    if (rated_capacity_mwh > 0.0) {
        if (initial_energy_mwh < rated_capacity_mwh * soc_lower - 1e-12 ||
            initial_energy_mwh > rated_capacity_mwh * soc_upper + 1e-12)
            bad("initial_energy outside the usable SOC window");
        if (max_discharge_mw <= 0.0 || max_charge_mw <= 0.0)
            bad("max powers must be > 0");
    }
    if (!(eol > 0.0 && eol < 1.0)) bad("eol must lie in (0,1)");
    if (calendar_life_days < 1.0) bad("calendar_life_days must be >= 1");
    if (initial_capacity <= 0.0 || initial_capacity > 1.0 + 1e-12)
        bad("initial_capacity must lie in (0,1]");
    if (replacement_cost_per_mwh < 0.0 || variable_om_per_mwh < 0.0 ||
        fixed_om_per_kw_year < 0.0 || investment_per_kwh < 0.0)
        bad("costs must be >= 0");
    if (!(basic_roundtrip_efficiency > 0.0 && basic_roundtrip_efficiency <= 1.0))
        bad("basic_roundtrip_efficiency must lie in (0,1]");
    if (offshore_cost_multiplier < 0.0) bad("offshore_cost_multiplier must be >= 0");
    return issues;
}

inline std::size_t BatteryCurves::bin_index(double soc) const {
    if (soc_bins.size() < 2 || bins.empty())
        throw std::domain_error("battery curves are empty");
    const double lo = soc_bins.front(), hi = soc_bins.back();
    if (soc < lo - 1e-9 || soc > hi + 1e-9)
        throw std::domain_error("soc outside the usable window");
    // Ties on an interior edge resolve to the lower bin.
    for (std::size_t k = 0; k + 1 < soc_bins.size(); ++k)
        if (soc <= soc_bins[k + 1] + 1e-12) return k;
    return bins.size() - 1;
}

inline double max_power(const BatteryCurves& curves, double soc, CycleMode mode) {
    const SocBinCurve& bin = curves.bins[curves.bin_index(soc)];
    return mode == CycleMode::Discharge ? bin.max_discharge_mw : bin.max_charge_mw;
}

// Loss at `power_mw` when cycling at the given SOC: fill the active bin's
// pieces in index order until they cover the power, summing width * slope.
inline double eval_loss(const BatteryCurves& curves, double soc, double power_mw,
                        CycleMode mode) {
    if (power_mw < -1e-12) throw std::domain_error("power must be >= 0");
    const SocBinCurve& bin = curves.bins[curves.bin_index(soc)];
    const double cap =
        mode == CycleMode::Discharge ? bin.max_discharge_mw : bin.max_charge_mw;
    if (power_mw > cap + 1e-9)
        throw std::domain_error("power above the bin's maximum");
    const auto& pieces =
        mode == CycleMode::Discharge ? bin.discharge_pieces : bin.charge_pieces;
    double remaining = std::max(power_mw, 0.0);
    double loss = 0.0;
    for (const CurvePiece& piece : pieces) {
        if (remaining <= 0.0) break;
        const double used = std::min(remaining, piece.width_mw);
        loss += used * piece.slope;
        remaining -= used;
    }
    return loss;
}

// Q_cal(d): linear fade with age, floored at the end-of-life capacity.
inline double calendar_capacity(const BatteryParams& p, int day) {
    if (day < 1) throw std::domain_error("day index starts at 1");
    const double q = p.initial_capacity *
                     (1.0 - (1.0 - p.eol) * (static_cast<double>(day) - 1.0) /
                                p.calendar_life_days);
    return std::max(q, p.eol * p.initial_capacity);
}

// Q_cyc(d): fade proportional to equivalent full cycles accumulated through
// the end of day d-1, floored at end-of-life. Day 1 carries no cycle fade.
inline double cycle_capacity(const BatteryParams& p, double cycle_life,
                             double cumulative_charge_mwh, int day) {
    if (day < 1) throw std::domain_error("day index starts at 1");
    if (cycle_life <= 0.0) throw std::domain_error("cycle_life must be > 0");
    if (day == 1) return p.initial_capacity;
    const double q =
        p.initial_capacity *
        (1.0 - (1.0 - p.eol) * cumulative_charge_mwh /
                   (p.rated_capacity_mwh * cycle_life));
    return std::max(q, p.eol * p.initial_capacity);
}

inline double cycle_life_for_dod(const CycleLifeTable& table, double dod) {
    if (table.rows.empty())
        throw std::runtime_error("cycle-life table is empty");
    if (!(dod > 0.0 && dod <= 1.0))
        throw std::domain_error("dod must lie in (0,1]");
    const auto& rows = table.rows;
    if (dod <= rows.front().dod) return rows.front().cycle_life;
    if (dod >= rows.back().dod) return rows.back().cycle_life;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (dod <= rows[i + 1].dod) {
            const double f = (dod - rows[i].dod) / (rows[i + 1].dod - rows[i].dod);
            const double lg = (1.0 - f) * std::log(rows[i].cycle_life) +
                              f * std::log(rows[i + 1].cycle_life);
            return std::exp(lg);
        }
    }
    return rows.back().cycle_life;
}

inline std::vector<std::string> CycleLifeTable::validate() const {
    std::vector<std::string> issues;
    if (rows.empty()) {
        issues.push_back("cycle-life table: no rows");
        return issues;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i].dod > 0.0 && rows[i].dod <= 1.0))
            issues.push_back("cycle-life table: dod out of (0,1] at row " +
                             std::to_string(i + 1));
        if (rows[i].cycle_life <= 0.0)
            issues.push_back("cycle-life table: cycle_life must be > 0 at row " +
                             std::to_string(i + 1));
        if (i > 0) {
            if (rows[i].dod <= rows[i - 1].dod)
                issues.push_back("cycle-life table: dod not strictly ascending at row " +
                                 std::to_string(i + 1));
            if (rows[i].cycle_life > rows[i - 1].cycle_life)
                issues.push_back("cycle-life table: cycle_life increases with dod at row " +
                                 std::to_string(i + 1));
        }
    }
    return issues;
}

// Structural checks on a curve set against the battery it describes.
// Violations come back as data so a validator can report all of them at once.
inline std::vector<std::string> validate_curves(const BatteryCurves& curves,
                                                const BatteryParams& params) {
    std::vector<std::string> issues;
    auto bad = [&](const std::string& msg) { issues.push_back("curves: " + msg); };
    if (curves.soc_bins.size() < 2 || curves.bins.empty()) {
        bad("need at least one SOC bin");
        return issues;
    }
    if (curves.bins.size() + 1 != curves.soc_bins.size())
        bad("bin count does not match the SOC edge count");
    for (std::size_t k = 0; k + 1 < curves.soc_bins.size(); ++k)
        if (!(curves.soc_bins[k] < curves.soc_bins[k + 1]))
            bad("bins not strictly ascending at edge " + std::to_string(k + 1));
    if (std::abs(curves.soc_bins.front() - params.soc_lower) > 1e-9)
        bad("first SOC edge must equal soc_lower");
    if (std::abs(curves.soc_bins.back() - params.soc_upper) > 1e-9)
        bad("last SOC edge must equal soc_upper");

    auto check_side = [&](const std::vector<CurvePiece>& pieces, double bin_max,
                          std::size_t k, const char* side) {
        const std::string where =
            std::string(side) + " pieces, bin " + std::to_string(k + 1);
        if (pieces.empty() && bin_max > 0.0) bad("no " + where);
        double width_sum = 0.0;
        double prev_slope = -1.0;
        for (const CurvePiece& piece : pieces) {
            if (!(piece.width_mw > 0.0)) bad("non-positive piece width in " + where);
            if (!(piece.slope >= 0.0 && piece.slope < 1.0))
                bad("slope out of [0,1) in " + where);
            if (piece.slope < prev_slope - 1e-12)
                bad("slopes decrease (loss curve not convex) in " + where);
            prev_slope = piece.slope;
            width_sum += piece.width_mw;
        }
        if (bin_max < 0.0) bad("negative max power in " + where);
        if (width_sum < bin_max - 1e-9)
            bad("piece widths cover less than the bin's max power in " + where);
    };
    for (std::size_t k = 0; k < curves.bins.size(); ++k) {
        check_side(curves.bins[k].discharge_pieces, curves.bins[k].max_discharge_mw,
                   k, "discharge");
        check_side(curves.bins[k].charge_pieces, curves.bins[k].max_charge_mw,
                   k, "charge");
    }
    return issues;
}

// Shipped stand-in for measured efficiency data: three SOC bins, three pieces
// per bin, one-way losses around 4-8%, and max power dipping 15% in the
// outermost bins. Deliberately synthetic; real studies should load measured
// curves from file.
inline BatteryCurves default_synthetic_curves(const BatteryParams& p) {
    BatteryCurves curves;
    const int K = 3;
    curves.soc_bins.resize(K + 1);
    for (int k = 0; k <= K; ++k)
        curves.soc_bins[k] =
            p.soc_lower + (p.soc_upper - p.soc_lower) * static_cast<double>(k) / K;
    // Exact edge values at the window ends.
    curves.soc_bins.front() = p.soc_lower;
    curves.soc_bins.back() = p.soc_upper;

    auto make_side = [](double pmax, double s1, double s2, double s3) {
        // Widths sum to the full rating so mid-bin power is always coverable.
        return std::vector<CurvePiece>{{0.5 * pmax, s1}, {0.3 * pmax, s2},
                                       {0.2 * pmax, s3}};
    };
    for (int k = 0; k < K; ++k) {
        const bool edge_bin = (k == 0 || k == K - 1);
        SocBinCurve bin;
        const double derate = edge_bin ? 0.85 : 1.0;
        bin.max_discharge_mw = derate * p.max_discharge_mw;
        bin.max_charge_mw = derate * p.max_charge_mw;
        const double bump = edge_bin ? 0.010 : 0.0;
        bin.discharge_pieces =
            make_side(p.max_discharge_mw, 0.035 + bump, 0.050 + bump, 0.070 + bump);
        bin.charge_pieces =
            make_side(p.max_charge_mw, 0.037 + bump, 0.053 + bump, 0.074 + bump);
        curves.bins.push_back(std::move(bin));
    }
    return curves;
}

// Shipped stand-in for measured cycle-life data; log-linear interpolation
// captures the sharply super-linear decay with DOD.
inline CycleLifeTable default_cycle_life_table() {
    return CycleLifeTable{{{0.10, 15000.0},
                           {0.25, 8000.0},
                           {0.50, 4000.0},
                           {0.75, 2000.0},
                           {1.00, 1000.0}}};
}

}  // namespace bessopt
