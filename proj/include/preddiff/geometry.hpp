#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "preddiff/tensor.hpp"

namespace preddiff {

// Sliding-window geometry: inner window of size k per spatial dim, outer
// conditioning patch of size l >= k, stride per dim. Windows are enumerated
// fully inside the image; the outer patch is shifted to stay inside while
// containing the inner window.
struct PatchGeometry {
    std::vector<int> inner;   // k
    std::vector<int> outer;   // l
    std::vector<int> stride;  // default all 1
    bool spans_channels = true;

    static PatchGeometry cubic(int k, int l, int rank, int stride = 1);
    // Paper-regime defaults: k=10, l=14 for 2D images; k=3, l=7 for volumes.
    static PatchGeometry defaults_for(const ImageTensor& image);

    int rank() const { return static_cast<int>(inner.size()); }
    void validate_for(std::span<const int> spatial_shape, int channels) const;

    // Flattened element count of the inner window / outer patch, channels
    // included when the geometry spans them.
    std::size_t inner_elems(int channels) const;
    std::size_t outer_elems(int channels) const;
};

struct WindowIndex {
    std::vector<int> origin;
    std::vector<int> outer_origin;
    int channel = -1;  // -1: window covers all channels (or image has none)
};

// A rectangular region of a tensor; channel == -1 selects all channels.
struct Region {
    std::vector<int> origin;
    std::vector<int> size;
    int channel = -1;
};

Region inner_region(const PatchGeometry& geom, const WindowIndex& w);
Region outer_region(const PatchGeometry& geom, const WindowIndex& w);

// All inner windows at the given stride, row-major over spatial origins
// (channel index innermost when spans_channels is false on a multi-channel
// image). Each WindowIndex carries the resolved outer patch.
std::vector<WindowIndex> enumerate_windows(std::span<const int> spatial_shape, int channels,
                                           const PatchGeometry& geom);

// Row-major flat values of a region. Writing the same vector back restores
// the tensor exactly.
std::vector<float> extract(const ImageTensor& t, const Region& r);
void write_region(ImageTensor& t, const Region& r, std::span<const float> values);

// Per-element window coverage, full tensor shape, closed form per dim.
std::vector<int> coverage_counts(std::span<const int> spatial_shape, int channels,
                                 const PatchGeometry& geom);

// Mask (length outer_elems) marking the inner window's cells inside the
// flattened outer patch of window w.
std::vector<std::uint8_t> inner_mask_in_outer(const PatchGeometry& geom, const WindowIndex& w,
                                              int channels);

// Stable per-window RNG stream id.
std::uint64_t window_seed(std::uint64_t base, const WindowIndex& w);

} // namespace preddiff
