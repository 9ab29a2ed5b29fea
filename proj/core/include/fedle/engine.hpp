#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fedle/data.hpp"
#include "fedle/energy.hpp"
#include "fedle/nn.hpp"
#include "fedle/selection.hpp"
#include "fedle/similarity.hpp"

namespace fedle {

// Where the training/evaluation data comes from.
struct DatasetSpec {
    enum class Source { Synthetic, Mnist };
    Source source = Source::Synthetic;

    std::string mnist_images;
    std::string mnist_labels;
    std::string mnist_test_images;
    std::string mnist_test_labels;

    int synthetic_classes = 6;
    int synthetic_dim = 12;
    int synthetic_per_class = 400;
    double synthetic_spread = 0.08;
    std::uint64_t synthetic_seed = 1;
    double holdout_fraction = 0.2;  // synthetic test split
};

struct ExperimentConfig {
    int client_count = 40;   // K
    double fraction = 0.05;  // C in (0, 1]
    Strategy strategy = Strategy::FedAvgB;
    int local_epochs = 1;    // E
    int batch_size = 10;
    double learning_rate = 0.1;
    int max_rounds = 50;
    double delta = 0.2;
    double dead_fraction_stop = 0.5;
    int cluster_count = 3;   // k
    double w_maj = 0.2;
    Metric metric = Metric::Cosine;
    ClusterSpace cluster_space = ClusterSpace::Embedding;
    double low_power_fraction = 0.5;
    BatteryScales scales{0.0095, 0.045, 0.045};  // calibrated defaults, see README
    std::vector<int> hidden_dims{32};

    int shard_clients = 20;
    int shard_size = 80;
    int majority_class = 0;

    std::uint64_t partition_seed = 1;
    std::uint64_t init_seed = 2;
    std::uint64_t battery_seed = 3;
    std::uint64_t selection_seed = 4;

    DatasetSpec dataset;

    bool diagnostic_similarity = false;  // rebuild the matrix after the last round (FedLE)
    bool train_enabled = true;           // lifespan-only runs skip model training
    int threads = 1;                     // local-training fan-out inside a run

    // Clients per round, max(1, round(K*C)).
    int clients_per_round() const;

    // Throws ConfigError with the offending field named.
    void validate() const;
};

struct RoundRecord {
    int round = 0;                 // 1-based
    std::vector<int> selected;
    double test_accuracy = 0.0;
    int alive_count = 0;           // after this round's discharge
    std::vector<double> battery;   // per-client level after this round
    double wall_ms = 0.0;          // not serialized; reruns must be byte-identical
};

// Per-client energy ledger, enough to audit every charged cost.
struct ClientSummary {
    int id = 0;
    bool low_power = false;
    BatteryParams params;
    double initial_level = 0.0;
    double final_level = 0.0;
    int death_round = -1;          // -1 while alive
    int standby_rounds = 0;        // rounds charged r
    int selected_rounds = 0;       // rounds additionally charged s + a
    double init_charge = 0.0;      // FedLE setup cost (r + a), else 0
};

// FedLE-only diagnostics captured from the bootstrap pass.
struct SimilarityDiagnostics {
    SimilarityMatrix initial;
    Matrix embedding;
    ClusterModel clusters;
    std::optional<SimilarityMatrix> final_matrix;     // diagnostic rebuild
    std::optional<double> stability_correlation;      // off-diagonal Pearson r
};

struct ExperimentHistory {
    ExperimentConfig config;
    std::vector<RoundRecord> rounds;
    int rounds_lasted = 0;
    double final_accuracy = 0.0;
    std::vector<ClientSummary> clients;
    std::optional<SimilarityDiagnostics> similarity;
};

// Dataset, holdout test set and partition for a config; immutable afterwards
// and freely shared between concurrent runs.
struct PreparedData {
    Dataset train;
    Dataset test;
    Partition partition;
    std::vector<int> layer_dims;
};

PreparedData prepare_data(const ExperimentConfig& config);

struct LocalTrainResult {
    ModelParams model;
    int sample_count = 0;
    int steps = 0;
};

// Train a copy of the global model on one client's samples: E epochs of
// seeded-shuffled minibatch SGD.
LocalTrainResult local_train(const Dataset& data, const std::vector<std::size_t>& indices,
                             const ModelParams& global_model, int epochs, double lr,
                             int batch_size, Rng& rng);

// FedAvg: parameterwise mean weighted by sample counts.
ModelParams aggregate(const std::vector<LocalTrainResult>& updates);

// One experiment run. Owns all mutable state; rounds are serial.
class Simulation {
public:
    explicit Simulation(const ExperimentConfig& config,
                        std::shared_ptr<const PreparedData> data = nullptr);

    // FedLE setup pass. Runs at most once; the first call charges every client
    // r + a, later calls return the cached result without touching batteries.
    const BootstrapResult& ensure_bootstrap();

    // False once the network is dead or fewer than m clients remain.
    bool can_run_round() const;

    RoundRecord run_round();

    // Full loop: bootstrap (FedLE), rounds until stop, history assembly.
    ExperimentHistory run();

    int current_round() const { return round_; }
    const std::vector<BatteryState>& battery_states() const { return states_; }
    const ModelParams& global_model() const { return global_; }
    const PreparedData& data() const { return *data_; }

private:
    std::vector<int> alive_ids() const;
    SelectionContext make_context() const;
    double evaluate_global() const;

    ExperimentConfig cfg_;
    std::shared_ptr<const PreparedData> data_;
    ModelParams global_;
    std::vector<BatteryParams> params_;
    std::vector<BatteryState> states_;
    std::vector<bool> low_power_;
    std::vector<int> capacities_;
    std::vector<ClientSummary> ledger_;
    std::optional<BootstrapResult> bootstrap_;
    Rng selection_rng_;
    int round_ = 0;
    Batch test_batch_;
};

ExperimentHistory run_experiment(const ExperimentConfig& config);

// History serialization: JSON (schema in the README) and per-round CSV.
std::string history_to_json(const ExperimentHistory& history);
std::string history_to_csv(const ExperimentHistory& history);

}  // namespace fedle
