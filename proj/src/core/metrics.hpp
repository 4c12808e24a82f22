#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mat.hpp"

namespace pod {

struct ConfusionCounts {
    int64_t tp = 0;
    int64_t fp = 0;
    int64_t tn = 0;
    int64_t fn = 0;

    int64_t total() const { return tp + fp + tn + fn; }
};

ConfusionCounts confusion(const std::vector<int>& labels, const std::vector<int>& predictions);

double sensitivity(const ConfusionCounts& c);  // TP / (TP + FN)
double specificity(const ConfusionCounts& c);  // TN / (TN + FP)
double youden(const ConfusionCounts& c);       // sensitivity + specificity - 1

// Rank (Mann-Whitney) AUROC; ties count half. Equals the probability that a
// uniformly random positive outscores a uniformly random negative.
double auroc(const std::vector<int>& labels, const std::vector<double>& scores);

// Area under the precision-recall step curve, descending-score sweep with
// equal scores processed as one threshold block (no interpolation).
double auprc(const std::vector<int>& labels, const std::vector<double>& scores);

// One row of the evaluation report (Tables-style column structure).
struct MetricRow {
    int pod_index = 0;            // 1..3
    std::string model;            // "logistic" | "svm"
    std::string representation;   // "with" | "without"
    double sensitivity = 0.0;
    double specificity = 0.0;
    double youden = 0.0;
    double auroc = 0.0;
    double auprc = 0.0;
};

struct MetricReport {
    std::vector<MetricRow> rows;
};

// Principal components of the row set of x: components are returned as
// columns of a (cols x n_components) matrix, ordered by descending
// variance; the sign of each component is fixed by making its
// largest-magnitude loading positive.
struct PcaResult {
    Vec mean;         // per-column mean
    Mat components;   // (d x k), orthonormal columns
    Vec variances;    // k eigenvalues, descending
};

PcaResult pca_fit(const Mat& x, int n_components);
Mat pca_project(const Mat& x, const PcaResult& p);

} // namespace pod
