#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpd {

// Uniform periodic grid, 1D or 2D, cell-centered with x_i = i*dx.
// 2D arrays are stored row-major as [y][x]; axis 0 is y, axis 1 is x.
struct Grid {
    int ndim = 0;
    std::array<int, 2> shape{0, 0};        // cells per axis
    std::array<double, 2> length{0.0, 0.0};  // physical length per axis

    Grid() = default;
    static Grid make_1d(int n, double len);
    static Grid make_2d(int ny, int nx, double ly, double lx);

    double dx(int axis) const { return length[axis] / shape[axis]; }
    long cells() const {
        long c = 1;
        for (int a = 0; a < ndim; ++a) c *= shape[a];
        return c;
    }
    bool operator==(const Grid& o) const {
        return ndim == o.ndim && shape == o.shape && length == o.length;
    }
};

// Multi-channel field on a grid: values[channel][space...], row-major.
struct Field {
    Grid grid;
    int channels = 0;
    std::vector<double> values;

    Field() = default;
    Field(const Grid& g, int ch)
        : grid(g), channels(ch), values(static_cast<size_t>(ch) * g.cells(), 0.0) {}

    double& at(int c, int i) { return values[static_cast<size_t>(c) * grid.cells() + i]; }
    double at(int c, int i) const { return values[static_cast<size_t>(c) * grid.cells() + i]; }
    // 2D accessor (y, x)
    double& at(int c, int y, int x) {
        return values[(static_cast<size_t>(c) * grid.shape[0] + y) * grid.shape[1] + x];
    }
    double at(int c, int y, int x) const {
        return values[(static_cast<size_t>(c) * grid.shape[0] + y) * grid.shape[1] + x];
    }

    bool finite() const;
};

// Periodic ghost-cell padding. Output shape grows by 2*width per spatial
// axis; layout matches Field values but with padded extents.
std::vector<double> pad_periodic(const Field& f, int width);

// Strided subsampling at offset 0. factor must divide every axis extent.
Field coarsen_space(const Field& f, int factor);

// Keep snapshots 0, stride, 2*stride, ...
std::vector<Field> coarsen_time(const std::vector<Field>& series, int stride);

}  // namespace mpd
