#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "preddiff/errors.hpp"

namespace preddiff {

struct ValueRange {
    float lo = 0.0f;
    float hi = 1.0f;
};

// Dense n-dimensional array: 1-3 spatial dims first, optional channel dim
// last, row-major. channels() == 0 means there is no channel axis at all
// (gray images, volumes); channels() >= 1 means the last axis holds that
// many interleaved channels.
class ImageTensor {
public:
    ImageTensor() = default;
    ImageTensor(std::vector<int> spatial_shape, int channels, std::vector<float> data,
                ValueRange range = {});

    static ImageTensor zeros(std::vector<int> spatial_shape, int channels, ValueRange range = {});

    const std::vector<int>& spatial_shape() const { return spatial_shape_; }
    int spatial_rank() const { return static_cast<int>(spatial_shape_.size()); }
    int channels() const { return channels_; }
    // Spatial dims plus the channel dim when present.
    std::vector<int> full_shape() const;
    std::size_t size() const { return data_.size(); }
    ValueRange value_range() const { return range_; }

    std::span<const float> data() const { return data_; }
    std::span<float> data() { return data_; }

    // Flat offset of a spatial position; channel 0 when channels are present.
    std::size_t flat_index(std::span<const int> spatial_pos, int channel = 0) const;

    float& at(std::span<const int> spatial_pos, int channel = 0) {
        return data_[flat_index(spatial_pos, channel)];
    }
    float at(std::span<const int> spatial_pos, int channel = 0) const {
        return data_[flat_index(spatial_pos, channel)];
    }

    bool same_shape(const ImageTensor& other) const {
        return spatial_shape_ == other.spatial_shape_ && channels_ == other.channels_;
    }

    void clamp_to_range();

private:
    std::vector<int> spatial_shape_;
    int channels_ = 0;
    std::vector<float> data_;
    ValueRange range_;
};

std::size_t shape_product(std::span<const int> shape);
std::string shape_to_string(std::span<const int> shape);

} // namespace preddiff
