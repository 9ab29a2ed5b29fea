#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fedle/data.hpp"
#include "fedle/matrix.hpp"
#include "fedle/nn.hpp"

namespace fedle {

enum class Metric { Dot, Cosine };

Metric metric_from_string(const std::string& name);
std::string to_string(Metric metric);

// K x K symmetric similarity scores with per-row sums.
struct SimilarityMatrix {
    Matrix scores;
    std::vector<double> row_sums;
    Metric metric = Metric::Cosine;

    std::size_t client_count() const { return scores.rows(); }
};

// Cluster assignment of the K clients plus the anchor pair that spans the
// embedding axes.
struct ClusterModel {
    std::vector<int> labels;         // per client, in [0, k)
    Matrix centroids;                // k x dim
    int majority = 0;                // largest cluster, ties to lowest id
    std::pair<int, int> anchor{0, 1};  // lowest-similarity pair (alpha, beta)
};

// Pairwise scores between the clients' flattened weight vectors. Cosine
// requires nonzero vectors and pins the diagonal at exactly 1.
SimilarityMatrix build_similarity_matrix(const std::vector<std::vector<double>>& vectors,
                                         Metric metric);

// Argmin over off-diagonal entries, ties to the smallest (alpha, beta).
std::pair<int, int> lowest_pair(const SimilarityMatrix& m);

// Client i maps to (scores[i][alpha], scores[i][beta]).
Matrix embed_clients(const SimilarityMatrix& m, int alpha, int beta);

struct KMeansResult {
    std::vector<int> labels;
    Matrix centroids;
    std::vector<double> objective_trace;  // within-cluster SSE after each Lloyd iteration
    int iterations = 0;
};

// Lloyd iterations from k-means++ seeding until the assignment is a fixpoint,
// the centroid shift drops below tol, or max_iters. Empty clusters are
// repaired by donating the point farthest from its current centroid.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed,
                    int max_iters = 100, double tol = 1e-12);

// Largest cluster, ties to the lowest cluster index.
int majority_cluster(const std::vector<int>& labels);

enum class ClusterSpace { Embedding, Rows };

ClusterSpace cluster_space_from_string(const std::string& name);
std::string to_string(ClusterSpace space);

struct BootstrapOptions {
    Metric metric = Metric::Cosine;
    ClusterSpace space = ClusterSpace::Embedding;
    int cluster_count = 3;
    int local_epochs = 1;
    double learning_rate = 0.1;
    int batch_size = 10;
    std::uint64_t seed = 0;         // drives per-client shuffles and k-means seeding
    int threads = 1;
    bool full_weights = false;      // diagnostic: flatten the whole model instead
};

struct BootstrapResult {
    SimilarityMatrix matrix;
    Matrix embedding;       // K x 2 (or K x K in rows mode)
    ClusterModel clusters;
};

// The one-time setup pass: every client trains local_epochs from the shared
// global model, the flattened (partial) weights feed the similarity matrix,
// the lowest pair spans the embedding, and k-means clusters the clients.
// Pure; battery accounting belongs to the caller.
BootstrapResult bootstrap_similarity(const Dataset& data, const Partition& partition,
                                     const ModelParams& global_model,
                                     const BootstrapOptions& opts);

// Diagnostic CSV exports (row-major, header row carries client ids).
std::string similarity_matrix_csv(const SimilarityMatrix& m);
std::string embedding_csv(const Matrix& points, const std::vector<int>& labels);

}  // namespace fedle
