#include "chromasym/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chromasym/rng.hpp"

namespace chromasym {

namespace {

struct Disk {
    double cx, cy, r;
};

// Canonical labeling of the NW section: a function (x, y) -> id over
// x in [0, w), y in [0, h) with w = W/2, h = H/2.
class CanonicalLayout {
public:
    CanonicalLayout(const PartitionSpec& spec, int w, int h) : w_(w), h_(h) {
        if (const auto* tri = std::get_if<TriangularSpec>(&spec)) {
            kind_ = Kind::Triangular;
            count_ = static_cast<std::uint32_t>(tri->triangles);
            boundary_len_ = static_cast<double>(w_) + static_cast<double>(h_);
        } else if (const auto* grid = std::get_if<GridSpec>(&spec)) {
            kind_ = Kind::Grid;
            rows_ = grid->rows;
            cols_ = grid->cols;
            if (w_ / cols_ == 0 || h_ / rows_ == 0)
                throw std::invalid_argument(
                    "grid cells would be empty for this image size");
            cell_w_ = w_ / cols_;
            cell_h_ = h_ / rows_;
            count_ = static_cast<std::uint32_t>(rows_ * cols_);
        } else if (const auto* bub = std::get_if<BubbleSpec>(&spec)) {
            kind_ = Kind::Bubble;
            const double minwh = std::min(w_, h_);
            if (bub->rmin * minwh < 0.5)
                throw std::invalid_argument(
                    "bubble radii infeasible for section size");
            SplitMix64 rng(bub->seed);
            disks_.reserve(bub->count);
            for (int k = 0; k < bub->count; ++k) {
                const double r = (bub->rmin +
                                  rng.next_double() * (bub->rmax - bub->rmin)) *
                                 minwh;
                const double cx = r + rng.next_double() * (w_ - 2.0 * r);
                const double cy = r + rng.next_double() * (h_ - 2.0 * r);
                disks_.push_back({cx, cy, r});
            }
            count_ = static_cast<std::uint32_t>(bub->count) + 1;
        } else {
            kind_ = Kind::PerPixel;
            count_ = static_cast<std::uint32_t>(w_) * h_;
        }
    }

    std::uint32_t count() const { return count_; }

    std::uint32_t id(int x, int y) const {
        switch (kind_) {
            case Kind::Triangular: return triangular_id(x, y);
            case Kind::Grid: {
                const int col = std::min(cols_ - 1, x / cell_w_);
                const int row = std::min(rows_ - 1, y / cell_h_);
                return static_cast<std::uint32_t>(row * cols_ + col);
            }
            case Kind::Bubble: {
                const double px = x + 0.5, py = y + 0.5;
                for (std::size_t k = 0; k < disks_.size(); ++k) {
                    const double dx = px - disks_[k].cx;
                    const double dy = py - disks_[k].cy;
                    if (dx * dx + dy * dy <= disks_[k].r * disks_[k].r)
                        return static_cast<std::uint32_t>(k) + 1;
                }
                return 0;
            }
            case Kind::PerPixel:
                return static_cast<std::uint32_t>(y) * w_ + x;
        }
        return 0;
    }

private:
    // Fan of wedges from the section's inner corner (the image center).
    // The outer boundary polyline runs from (w, 0) along the top edge to
    // (0, 0), then down the left edge to (0, h); it is split into `count_`
    // arcs of equal length and a pixel takes the wedge its center's ray
    // lands in.
    std::uint32_t triangular_id(int x, int y) const {
        const double ax = w_, ay = h_;  // apex in section-local coords
        const double dx = (x + 0.5) - ax;
        const double dy = (y + 0.5) - ay;
        // dx, dy < 0 for every pixel center in the section
        double arc;
        const double t_top = -ay / dy;
        const double x_top = ax + t_top * dx;
        if (x_top >= 0.0) {
            arc = ax - x_top;  // hit the top edge
        } else {
            const double t_left = -ax / dx;
            arc = ax + (ay + t_left * dy);  // past the corner, down the left edge
        }
        const double step = boundary_len_ / count_;
        const auto k = static_cast<std::uint32_t>(arc / step);
        return std::min(k, count_ - 1);
    }

    enum class Kind { Triangular, Grid, Bubble, PerPixel };
    Kind kind_ = Kind::PerPixel;
    int w_, h_;
    std::uint32_t count_ = 0;
    int rows_ = 0, cols_ = 0, cell_w_ = 0, cell_h_ = 0;
    double boundary_len_ = 0.0;
    std::vector<Disk> disks_;
};

}  // namespace

void validate_spec(const PartitionSpec& spec) {
    if (const auto* tri = std::get_if<TriangularSpec>(&spec)) {
        if (tri->triangles < 1)
            throw std::invalid_argument("triangular: need at least 1 triangle");
    } else if (const auto* grid = std::get_if<GridSpec>(&spec)) {
        if (grid->rows < 1 || grid->cols < 1)
            throw std::invalid_argument("grid: rows and cols must be >= 1");
    } else if (const auto* bub = std::get_if<BubbleSpec>(&spec)) {
        if (bub->count < 1)
            throw std::invalid_argument("bubble: need at least 1 disk");
        if (!(bub->rmin > 0.0 && bub->rmin <= bub->rmax && bub->rmax <= 0.5))
            throw std::invalid_argument(
                "bubble: radii must satisfy 0 < rmin <= rmax <= 0.5");
    }
}

Partition build_partition(const PartitionSpec& spec, Dims dims) {
    require_even(dims);
    validate_spec(spec);
    const int w = dims.width / 2;
    const int h = dims.height / 2;

    const CanonicalLayout layout(spec, w, h);

    Partition part;
    part.dims = dims;
    part.canonical_count = layout.count();
    part.lambda = 4 * part.canonical_count;
    part.labels.resize(static_cast<std::size_t>(dims.width) * dims.height);

    for (int y = 0; y < dims.height; ++y) {
        for (int x = 0; x < dims.width; ++x) {
            const PixelCoord p{x, y};
            const Section s = section_of(p, dims);
            // transport into the NW section (each transport is an involution)
            const PixelCoord q = map_coord(section_transport(s), p, dims);
            const std::uint32_t k = layout.id(q.x, q.y);
            part.labels[static_cast<std::size_t>(y) * dims.width + x] =
                static_cast<std::uint32_t>(s) * part.canonical_count + k;
        }
    }
    return part;
}

PairSet pair_set(const Partition& part, GroupElement g) {
    if (g == GroupElement::E)
        throw std::invalid_argument("pair_set: identity element has no pairs");

    const std::uint32_t K = part.canonical_count;
    PairSet ps;
    ps.element = g;
    ps.partner.resize(part.lambda);
    ps.pairs.reserve(part.lambda / 2);

    for (std::uint32_t sec = 0; sec < 4; ++sec) {
        const auto target =
            static_cast<std::uint32_t>(section_apply(g, static_cast<Section>(sec)));
        for (std::uint32_t k = 0; k < K; ++k)
            ps.partner[sec * K + k] = target * K + k;
    }
    // first member in NW/NE for Rot and RefH, in NW/SW for RefV
    const std::array<std::uint32_t, 2> upper =
        g == GroupElement::RefV
            ? std::array<std::uint32_t, 2>{0, 2}
            : std::array<std::uint32_t, 2>{0, 1};
    for (std::uint32_t sec : upper)
        for (std::uint32_t k = 0; k < K; ++k) {
            const std::uint32_t id = sec * K + k;
            ps.pairs.emplace_back(id, ps.partner[id]);
        }
    return ps;
}

}  // namespace chromasym
