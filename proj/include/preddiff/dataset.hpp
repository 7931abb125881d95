#pragma once

#include <string>
#include <vector>

#include "preddiff/tensor.hpp"

namespace preddiff {

// Reference images used for empirical marginal sampling and for fitting
// patch distributions. All images share one shape and value range.
struct ReferenceDataset {
    std::vector<ImageTensor> images;
    std::string source;

    void validate() const;
    const ImageTensor& front() const { return images.front(); }
    std::size_t count() const { return images.size(); }
};

} // namespace preddiff
