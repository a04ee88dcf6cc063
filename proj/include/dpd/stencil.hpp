#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpd/cell_grid.hpp"

namespace dpd {

// Per local cell: the <= 27 cells within one offset on each axis (wrapped
// where the grid wraps), as unified ranks in strictly increasing order.
// Depends only on the grid geometry, so it is built once per run.
struct CoarseStencil {
    std::vector<std::uint32_t> offsets; // n_local_cells + 1
    std::vector<std::uint32_t> cells;

    std::span<const std::uint32_t> of(std::uint32_t cell_rank) const {
        return {cells.data() + offsets[cell_rank],
                cells.data() + offsets[cell_rank + 1]};
    }
};

CoarseStencil build_coarse_stencil(const CellGrid& grid, const SimBox& box);

// Coarse stencils expanded to the actual particle indices they cover.
// Strictly increasing within each stencil because cell ranks are increasing
// and particle numbering follows cell rank.
struct FineStencil {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> indices;

    std::span<const std::uint32_t> of(std::uint32_t cell_rank) const {
        return {indices.data() + offsets[cell_rank],
                indices.data() + offsets[cell_rank + 1]};
    }
};

FineStencil expand_fine_stencil(const CoarseStencil& coarse, const CellGrid& grid,
                                WorkerPool& pool);

} // namespace dpd
