#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace pod {

ConfusionCounts confusion(const std::vector<int>& labels, const std::vector<int>& predictions) {
    if (labels.size() != predictions.size())
        fail_argument("confusion: labels and predictions differ in length");
    ConfusionCounts c;
    for (size_t i = 0; i < labels.size(); ++i) {
        const bool y = labels[i] != 0;
        const bool p = predictions[i] != 0;
        if (y && p) ++c.tp;
        else if (y && !p) ++c.fn;
        else if (!y && p) ++c.fp;
        else ++c.tn;
    }
    return c;
}

double sensitivity(const ConfusionCounts& c) {
    if (c.tp + c.fn == 0) fail_numeric("sensitivity undefined: no positive samples");
    return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

double specificity(const ConfusionCounts& c) {
    if (c.tn + c.fp == 0) fail_numeric("specificity undefined: no negative samples");
    return static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
}

double youden(const ConfusionCounts& c) {
    return sensitivity(c) + specificity(c) - 1.0;
}

namespace {

void check_scores(const std::vector<int>& labels, const std::vector<double>& scores,
                  const char* what) {
    if (labels.size() != scores.size())
        fail_argument(std::string(what) + ": labels and scores differ in length");
    for (double s : scores)
        if (!std::isfinite(s)) fail_numeric(std::string(what) + ": non-finite score");
}

} // namespace

double auroc(const std::vector<int>& labels, const std::vector<double>& scores) {
    check_scores(labels, scores, "auroc");
    const int64_t n = static_cast<int64_t>(labels.size());
    int64_t n_pos = 0;
    for (int y : labels) n_pos += (y != 0);
    const int64_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) fail_numeric("auroc undefined: only one class present");

    std::vector<int> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return scores[a] < scores[b]; });

    // Integer arithmetic throughout: twice_ranksum accumulates 2 * (average
    // rank) per positive, so tie handling is exact and the result matches a
    // brute-force pairwise count bit for bit.
    int64_t twice_ranksum_pos = 0;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        const int64_t twice_rank = static_cast<int64_t>(i + 1) + static_cast<int64_t>(j + 1);
        for (size_t k = i; k <= j; ++k)
            if (labels[order[k]] != 0) twice_ranksum_pos += twice_rank;
        i = j + 1;
    }
    const int64_t numer2 = twice_ranksum_pos - n_pos * (n_pos + 1);  // = 2 * U
    return static_cast<double>(numer2) / (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double auprc(const std::vector<int>& labels, const std::vector<double>& scores) {
    check_scores(labels, scores, "auprc");
    int64_t n_pos = 0;
    for (int y : labels) n_pos += (y != 0);
    if (n_pos == 0) fail_numeric("auprc undefined: no positive samples");

    std::vector<int> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return scores[a] > scores[b]; });

    double area = 0.0;
    int64_t tp = 0, fp = 0;
    double prev_recall = 0.0;
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        for (size_t k = i; k <= j; ++k) {
            if (labels[order[k]] != 0) ++tp;
            else ++fp;
        }
        const double recall = static_cast<double>(tp) / static_cast<double>(n_pos);
        const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        area += (recall - prev_recall) * precision;
        prev_recall = recall;
        i = j + 1;
    }
    return area;
}

// ---------------------------------------------------------------------------
// PCA via cyclic Jacobi eigendecomposition of the covariance matrix.

namespace {

void jacobi_eigen(Mat a, Vec& eigenvalues, Mat& eigenvectors) {
    const int n = a.rows;
    eigenvectors = Mat(n, n);
    for (int i = 0; i < n; ++i) eigenvectors.at(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (off < 1e-24) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = eigenvectors.at(k, p), vkq = eigenvectors.at(k, q);
                    eigenvectors.at(k, p) = c * vkp - s * vkq;
                    eigenvectors.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    eigenvalues.assign(n, 0.0);
    for (int i = 0; i < n; ++i) eigenvalues[i] = a.at(i, i);
}

} // namespace

PcaResult pca_fit(const Mat& x, int n_components) {
    if (n_components < 1) fail_argument("pca: n_components must be >= 1");
    if (x.rows < n_components)
        fail_argument("pca: fewer rows (" + std::to_string(x.rows) + ") than components requested (" +
                      std::to_string(n_components) + ")");
    if (n_components > x.cols) fail_argument("pca: more components than columns");

    const int n = x.rows, d = x.cols;
    PcaResult out;
    out.mean.assign(d, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) out.mean[j] += x.at(i, j);
    for (int j = 0; j < d; ++j) out.mean[j] /= n;

    Mat cov(d, d);
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < d; ++a) {
            const double xa = x.at(i, a) - out.mean[a];
            for (int b = a; b < d; ++b)
                cov.at(a, b) += xa * (x.at(i, b) - out.mean[b]) / denom;
        }
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < a; ++b) cov.at(a, b) = cov.at(b, a);

    Vec evals;
    Mat evecs;
    jacobi_eigen(cov, evals, evecs);

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return evals[a] > evals[b]; });

    out.components = Mat(d, n_components);
    out.variances.assign(n_components, 0.0);
    for (int k = 0; k < n_components; ++k) {
        const int src = order[k];
        out.variances[k] = evals[src];
        // Sign convention: largest-magnitude loading positive.
        int arg = 0;
        for (int j = 1; j < d; ++j)
            if (std::abs(evecs.at(j, src)) > std::abs(evecs.at(arg, src))) arg = j;
        const double sign = evecs.at(arg, src) < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < d; ++j) out.components.at(j, k) = sign * evecs.at(j, src);
    }
    return out;
}

Mat pca_project(const Mat& x, const PcaResult& p) {
    if (x.cols != p.components.rows) fail_argument("pca_project: dimension mismatch");
    Mat out(x.rows, p.components.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < p.components.cols; ++k) {
            double s = 0.0;
            for (int j = 0; j < x.cols; ++j)
                s += (x.at(i, j) - p.mean[j]) * p.components.at(j, k);
            out.at(i, k) = s;
        }
    return out;
}

} // namespace pod
