#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "error.hpp"
#include "mat.hpp"

namespace pod {

// Missing samples are carried as quiet NaN until interpolation fills them.
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double x) { return std::isnan(x); }

enum class PatientType { Unclassified, TypeI, TypeII };

inline const char* to_string(PatientType t) {
    switch (t) {
        case PatientType::TypeI: return "TYPE_I";
        case PatientType::TypeII: return "TYPE_II";
        default: return "UNCLASSIFIED";
    }
}

// Diagnosis indicators for postoperative days 1..3.
struct LabelTriple {
    bool pod1 = false;
    bool pod2 = false;
    bool pod3 = false;

    bool get(int pod_index) const {
        switch (pod_index) {
            case 1: return pod1;
            case 2: return pod2;
            case 3: return pod3;
        }
        fail_argument("pod index must be 1, 2 or 3");
    }

    bool operator==(const LabelTriple&) const = default;
};

// One acquisition source (e.g. aEEG, vitals): channel count and the native
// sampling resolution in seconds per sample.
struct ModalitySpec {
    std::string name;
    int dims = 0;
    double native_resolution = 0.0;  // seconds per sample

    void validate() const {
        if (name.empty()) fail_config("modality name must be non-empty");
        if (dims < 1) fail_config("modality '" + name + "': dims must be >= 1");
        if (!(native_resolution > 0.0))
            fail_config("modality '" + name + "': native_resolution must be > 0");
    }
};

// Boolean mask per (timestamp, channel), one block per modality.
using AnomalyMask = std::vector<std::vector<uint8_t>>;

// One patient's multi-channel time series, grouped by modality. Matrices
// are rows = timestamps, cols = channels; lengths may differ per modality
// until temporal alignment.
struct MultiModalRecord {
    std::string patient_id;
    std::vector<ModalitySpec> specs;
    std::vector<Mat> data;       // data[m] is (length_m x specs[m].dims)
    AnomalyMask mask;            // same shapes as data, 0/1
    LabelTriple labels;
    PatientType patient_type = PatientType::Unclassified;

    int modality_count() const { return static_cast<int>(specs.size()); }

    int total_dims() const {
        int d = 0;
        for (const auto& s : specs) d += s.dims;
        return d;
    }

    void init_mask_false() {
        mask.clear();
        for (const auto& m : data) mask.push_back(std::vector<uint8_t>(m.size(), 0));
    }

    void validate_shapes() const {
        if (specs.size() != data.size()) fail_argument("record: specs/data count mismatch");
        if (!mask.empty() && mask.size() != data.size())
            fail_argument("record: mask/data count mismatch");
        for (size_t m = 0; m < data.size(); ++m) {
            if (data[m].cols != specs[m].dims)
                fail_argument("record: modality '" + specs[m].name + "' column count mismatch");
            if (!mask.empty() && mask[m].size() != data[m].size())
                fail_argument("record: modality '" + specs[m].name + "' mask shape mismatch");
        }
    }

    // Valid only once all modalities share one aligned length.
    int aligned_length() const {
        if (data.empty()) return 0;
        const int len = data[0].rows;
        for (const auto& m : data)
            if (m.rows != len) fail_state("record '" + patient_id + "' is not temporally aligned");
        return len;
    }

    // Flattens the modality blocks into one (length x D) matrix, columns in
    // modality order. Requires alignment.
    Mat stacked() const {
        const int len = aligned_length();
        Mat out(len, total_dims());
        int col0 = 0;
        for (const auto& block : data) {
            for (int t = 0; t < len; ++t)
                for (int c = 0; c < block.cols; ++c) out.at(t, col0 + c) = block.at(t, c);
            col0 += block.cols;
        }
        return out;
    }

    // "<modality>.<channel>" naming used by range tables and statistics.
    std::vector<std::string> channel_names() const {
        std::vector<std::string> names;
        for (const auto& s : specs)
            for (int c = 0; c < s.dims; ++c) names.push_back(s.name + "." + std::to_string(c));
        return names;
    }
};

// A fixed-length training sample: input segment, the forecast target that
// follows it, and the record's labels.
struct Window {
    Mat input;    // (window_len x D)
    Mat target;   // (horizon_len x D)
    LabelTriple labels;
    std::string patient_id;
    int64_t start_index = 0;
};

} // namespace pod
