#include "mpd/field.hpp"

#include <cmath>

namespace mpd {

Grid Grid::make_1d(int n, double len) {
    if (n <= 0 || len <= 0.0) throw std::invalid_argument("grid extents must be positive");
    Grid g;
    g.ndim = 1;
    g.shape = {n, 1};
    g.length = {len, 0.0};
    return g;
}

Grid Grid::make_2d(int ny, int nx, double ly, double lx) {
    if (ny <= 0 || nx <= 0 || ly <= 0.0 || lx <= 0.0)
        throw std::invalid_argument("grid extents must be positive");
    Grid g;
    g.ndim = 2;
    g.shape = {ny, nx};
    g.length = {ly, lx};
    return g;
}

bool Field::finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

std::vector<double> pad_periodic(const Field& f, int width) {
    if (width < 0) throw std::invalid_argument("pad width must be >= 0");
    for (int a = 0; a < f.grid.ndim; ++a)
        if (width > f.grid.shape[a]) throw std::invalid_argument("pad exceeds grid");

    if (f.grid.ndim == 1) {
        const int n = f.grid.shape[0];
        const int np = n + 2 * width;
        std::vector<double> out(static_cast<size_t>(f.channels) * np);
        for (int c = 0; c < f.channels; ++c)
            for (int i = 0; i < np; ++i) {
                int src = ((i - width) % n + n) % n;
                out[static_cast<size_t>(c) * np + i] = f.at(c, src);
            }
        return out;
    }

    const int ny = f.grid.shape[0], nx = f.grid.shape[1];
    const int nyp = ny + 2 * width, nxp = nx + 2 * width;
    std::vector<double> out(static_cast<size_t>(f.channels) * nyp * nxp);
    for (int c = 0; c < f.channels; ++c)
        for (int y = 0; y < nyp; ++y) {
            int sy = ((y - width) % ny + ny) % ny;
            for (int x = 0; x < nxp; ++x) {
                int sx = ((x - width) % nx + nx) % nx;
                out[(static_cast<size_t>(c) * nyp + y) * nxp + x] = f.at(c, sy, sx);
            }
        }
    return out;
}

Field coarsen_space(const Field& f, int factor) {
    if (factor < 1) throw std::invalid_argument("coarsen factor must be >= 1");
    for (int a = 0; a < f.grid.ndim; ++a)
        if (f.grid.shape[a] % factor != 0)
            throw std::invalid_argument("coarsen factor does not divide grid");
    if (factor == 1) return f;

    Grid g = f.grid;
    for (int a = 0; a < g.ndim; ++a) g.shape[a] /= factor;
    Field out(g, f.channels);
    if (f.grid.ndim == 1) {
        for (int c = 0; c < f.channels; ++c)
            for (int i = 0; i < g.shape[0]; ++i) out.at(c, i) = f.at(c, i * factor);
    } else {
        for (int c = 0; c < f.channels; ++c)
            for (int y = 0; y < g.shape[0]; ++y)
                for (int x = 0; x < g.shape[1]; ++x)
                    out.at(c, y, x) = f.at(c, y * factor, x * factor);
    }
    return out;
}

std::vector<Field> coarsen_time(const std::vector<Field>& series, int stride) {
    if (series.empty()) throw std::invalid_argument("empty series");
    if (stride < 1) throw std::invalid_argument("time stride must be >= 1");
    std::vector<Field> out;
    for (size_t i = 0; i < series.size(); i += stride) out.push_back(series[i]);
    return out;
}

}  // namespace mpd
