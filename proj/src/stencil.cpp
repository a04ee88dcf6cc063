#include "dpd/stencil.hpp"

#include <algorithm>

namespace dpd {

CoarseStencil build_coarse_stencil(const CellGrid& grid, const SimBox& box) {
    (void)box; // periodic wrap is already folded into grid.wrapmode
    CoarseStencil st;
    st.offsets.assign(grid.n_local_cells + 1, 0);
    std::vector<std::vector<std::uint32_t>> per_cell(grid.n_local_cells);

    for (std::uint32_t r = 0; r < grid.n_local_cells; ++r) {
        const IVec3 c = grid.ext_coords(grid.cell_of_rank[r]);
        std::vector<std::uint32_t>& list = per_cell[r];
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const IVec3 off{dx, dy, dz};
                    IVec3 nc;
                    bool ok = true;
                    for (int k = 0; k < 3; ++k) {
                        int v = c[k] + off[k];
                        if (grid.wrapmode[k]) {
                            v = (v + grid.ncell[k]) % grid.ncell[k];
                        } else if (v < 0 || v >= grid.ncell_ext[k]) {
                            ok = false;
                            break;
                        }
                        nc[k] = v;
                    }
                    if (ok) list.push_back(grid.rank_of_cell[grid.ext_index(nc)]);
                }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        st.offsets[r + 1] = st.offsets[r] + std::uint32_t(list.size());
    }
    st.cells.reserve(st.offsets.back());
    for (auto& list : per_cell) st.cells.insert(st.cells.end(), list.begin(), list.end());
    return st;
}

FineStencil expand_fine_stencil(const CoarseStencil& coarse, const CellGrid& grid,
                                WorkerPool& pool) {
    const std::uint32_t nc = std::uint32_t(coarse.offsets.size() - 1);
    FineStencil fine;
    fine.offsets.assign(nc + 1, 0);
    for (std::uint32_t r = 0; r < nc; ++r) {
        std::uint32_t count = 0;
        for (std::uint32_t cr : coarse.of(r))
            count += grid.cell_start[cr + 1] - grid.cell_start[cr];
        fine.offsets[r + 1] = fine.offsets[r] + count;
    }
    fine.indices.resize(fine.offsets.back());
    pool.for_each(nc, [&](std::size_t r) {
        std::uint32_t w = fine.offsets[r];
        for (std::uint32_t cr : coarse.of(std::uint32_t(r)))
            for (std::uint32_t i = grid.cell_start[cr]; i < grid.cell_start[cr + 1]; ++i)
                fine.indices[w++] = i;
    });
    return fine;
}

} // namespace dpd
