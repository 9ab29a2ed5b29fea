#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fedle/matrix.hpp"
#include "fedle/nn.hpp"

namespace fedle {

struct Dataset {
    Matrix inputs;            // N x d, values in [0, 1]
    std::vector<int> labels;  // N entries in [0, class_count)
    int class_count = 0;

    std::size_t size() const { return labels.size(); }
};

// Per-client index lists into one Dataset. Lists are pairwise disjoint and
// non-empty; leftover samples stay unassigned.
struct Partition {
    std::vector<std::vector<std::size_t>> client_indices;
    int client_count = 0;
    int effective_shard_size = 0;  // after feasibility clamping
};

// IDX-format reader. Pixels are scaled to [0, 1] (byte / 255).
Dataset load_mnist(const std::string& images_path, const std::string& labels_path);

// Isotropic Gaussian blobs with class means on a fixed lattice inside the
// unit cube, samples clipped to [0, 1]. Deterministic in the seed.
Dataset gen_synthetic(int class_count, int dim, int per_class, double spread,
                      std::uint64_t seed);

// Label-sorted shard partitioning with a reserved majority class:
// samples of majority_class go round-robin to the last
// (client_count - shard_clients) clients; the rest are sorted by label and
// cut into shard_clients contiguous shards, shard i to client i. shard_size
// is clamped to the feasible maximum (a warning is printed to stderr).
Partition partition_noniid(const Dataset& dataset, int client_count, int shard_clients,
                           int shard_size, int majority_class, std::uint64_t seed);

// Seeded split into (train, test) with ceil(N * test_fraction) test samples.
std::pair<Dataset, Dataset> split_holdout(const Dataset& dataset, double test_fraction,
                                          std::uint64_t seed);

// Materialize the samples at the given indices.
Batch gather(const Dataset& dataset, const std::vector<std::size_t>& indices);

// The whole dataset as one batch.
Batch as_batch(const Dataset& dataset);

}  // namespace fedle
