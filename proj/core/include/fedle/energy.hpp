#pragma once

#include <optional>
#include <vector>

#include "fedle/rng.hpp"

namespace fedle {

enum class PowerRole { Low, High };

// Per-client discharge profile, fixed for the lifetime of the client.
// b0: initial level; r: standby cost per round; s: model-upload cost per
// selected round; a: cost of any other communication event.
struct BatteryParams {
    double b0 = 0.0;
    double r = 0.0;
    double s = 0.0;
    double a = 0.0;
};

struct BatteryState {
    double level = 0.0;
    bool alive = true;
    std::optional<int> death_round;
};

// Multipliers applied to the nominal r/s/a ranges. The nominal ranges drain
// any battery within a handful of rounds, so runs use calibrated scales.
struct BatteryScales {
    double r_scale = 1.0;
    double s_scale = 1.0;
    double a_scale = 1.0;
};

// b0 in [0.245, 0.265] (low) or [0.895, 0.905] (high); r in [0.1, 0.15] * r_scale,
// s in [0.4, 0.5] * s_scale, a in [0.24, 0.25] * a_scale.
BatteryParams draw_battery_params(PowerRole role, const BatteryScales& scales, Rng& rng);

// One round of discharge: r always, plus s + a when selected, plus a per extra
// communication event. Level clamps at 0; alive means level > delta.
// Stepping a dead client throws ContractError.
BatteryState step_battery(const BatteryState& state, const BatteryParams& params,
                          double delta, bool selected, int extra_comm_events);

// True while the dead fraction (level <= delta) is below dead_fraction_stop.
bool network_alive(const std::vector<BatteryState>& states, double delta,
                   double dead_fraction_stop);

}  // namespace fedle
