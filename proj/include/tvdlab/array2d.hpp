#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace tvd {

/// Dense 2D array indexed (i, j) with i along x and j along y. Storage is
/// i-major: element (i, j) lives at i * ny + j.
template <typename T>
class Array2D {
public:
    Array2D() = default;
    Array2D(std::size_t nx, std::size_t ny, T init = T{})
        : nx_(nx), ny_(ny), data_(nx * ny, init) {}

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t size() const { return data_.size(); }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < nx_ && j < ny_);
        return data_[i * ny_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < nx_ && j < ny_);
        return data_[i * ny_ + j];
    }

    std::span<T> flat() { return data_; }
    std::span<const T> flat() const { return data_; }

    void fill(const T& value) { std::fill(data_.begin(), data_.end(), value); }

    bool operator==(const Array2D&) const = default;

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<T> data_;
};

}  // namespace tvd
