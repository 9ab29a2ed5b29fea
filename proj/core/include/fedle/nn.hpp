#pragma once

#include <cstdint>
#include <vector>

#include "fedle/matrix.hpp"
#include "fedle/rng.hpp"

namespace fedle {

// One dense layer: out x in weight block plus a bias per output unit.
struct Layer {
    Matrix weight;             // out x in
    std::vector<double> bias;  // out
    bool operator==(const Layer&) const = default;
};

// Feed-forward network parameters. Hidden layers apply ReLU; the final layer
// produces linear logits consumed by softmax cross-entropy.
struct ModelParams {
    std::vector<Layer> layers;
    std::vector<int> layer_dims;  // input dim, hidden dims..., class count
    bool operator==(const ModelParams&) const = default;
};

// A slice of data with class labels.
struct Batch {
    Matrix inputs;            // n x d
    std::vector<int> labels;  // n entries in [0, class_count)
};

// Weights uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.
// Identical (layer_dims, seed) gives bitwise-identical parameters.
ModelParams init_model(const std::vector<int>& layer_dims, std::uint64_t seed);

// Logits for a batch of inputs, n x class_count.
Matrix forward(const ModelParams& model, const Matrix& inputs);

struct LossGrad {
    double loss = 0.0;
    ModelParams grads;  // same shapes as the model it was computed for
};

// Mean softmax cross-entropy and its exact gradient.
LossGrad loss_and_grad(const ModelParams& model, const Batch& batch);

// p <- p - lr * g for every parameter; pure, inputs untouched.
ModelParams sgd_step(const ModelParams& model, const ModelParams& grads, double lr);

// Concatenation of the first and last layer parameters (weights row-major,
// then biases, first layer before last). A single-layer model flattens once.
std::vector<double> flatten_partial(const ModelParams& model);

// Every layer's parameters in order, same per-layer layout as flatten_partial.
std::vector<double> flatten_full(const ModelParams& model);

// Fraction of argmax(logits) == label; ties resolve to the lowest class index.
double evaluate(const ModelParams& model, const Batch& test);

struct TrainResult {
    ModelParams model;
    int steps = 0;  // SGD steps actually taken
};

// Seeded-shuffle minibatch SGD for a number of epochs. The trailing partial
// batch of an epoch is used, so one epoch takes ceil(n / batch_size) steps.
TrainResult train_sgd(const ModelParams& model, const Matrix& inputs,
                      const std::vector<int>& labels, int epochs, double lr,
                      int batch_size, Rng& rng);

}  // namespace fedle
