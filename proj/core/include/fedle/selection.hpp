#pragma once

#include <string>
#include <vector>

#include "fedle/energy.hpp"
#include "fedle/rng.hpp"
#include "fedle/similarity.hpp"

namespace fedle {

enum class Strategy { FedAvgB, FedBO, FedLE };

Strategy strategy_from_string(const std::string& name);
std::string to_string(Strategy strategy);

// Everything a selection policy may look at for one round.
struct SelectionContext {
    int round = 0;
    std::vector<int> alive;                     // alive client ids, ascending
    std::vector<double> battery_levels;         // indexed by client id
    std::vector<BatteryParams> battery_params;  // indexed by client id
    const ClusterModel* clusters = nullptr;     // required for FedLE
    int m = 1;                                  // clients per round
    double delta = 0.2;
    double w_maj = 0.2;                         // majority-cluster weight
};

// Uniform sample of m distinct alive clients.
std::vector<int> select_uniform(const SelectionContext& ctx, Rng& rng);

// floor((b0 - delta) / (r + s + a)), floored at 0: selected rounds the client
// could survive on its initial charge.
int capacity(const BatteryParams& params, double delta);

// Sequential weighted sampling without replacement, weight proportional to
// capacity; zero-capacity clients keep a vanishing epsilon weight.
std::vector<int> select_battery_only(const SelectionContext& ctx,
                                     const std::vector<int>& capacities, Rng& rng);

// Cluster-first sampling: pick a cluster (majority weighted w_maj, others 1.0,
// renormalized over clusters that still hold unselected alive clients), then a
// client within it with weight max(level - delta, epsilon).
std::vector<int> select_fedle(const SelectionContext& ctx, Rng& rng);

// Dispatch on strategy. capacities is only read by FedBO.
std::vector<int> select_clients(Strategy strategy, const SelectionContext& ctx,
                                const std::vector<int>& capacities, Rng& rng);

}  // namespace fedle
