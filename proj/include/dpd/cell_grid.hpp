#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpd/core.hpp"
#include "dpd/parallel.hpp"
#include "dpd/radix_sort.hpp"

namespace dpd {

// Binning geometry for one domain slab. Local cells tile the slab; where a
// neighboring domain exists, one layer of ghost cells is appended on that
// side. On axes the domain covers entirely (dims == 1, periodic) stencils
// wrap instead and no ghost layer exists.
//
// Cells are ranked so that the sorted particle array reads: all local
// particles in (cell Morton rank, sub-cell Morton rank, input order), then
// all ghosts grouped the same way. cell_start is indexed by rank.
struct CellGrid {
    IVec3 ncell{1, 1, 1};     // local cells per axis
    IVec3 ncell_ext{1, 1, 1}; // including ghost layers
    IVec3 ghost_lo{0, 0, 0};  // 1 if a ghost layer exists below / above
    IVec3 ghost_hi{0, 0, 0};
    std::array<bool, 3> wrapmode{false, false, false};
    Vec3 cell_size, inv_cell;
    Vec3 slab_lo, slab_hi;
    Vec3 origin; // lo corner of the extended grid
    int sub_bits = 2;
    int bits_per_axis = 1;
    std::uint32_t n_local_cells = 0;
    std::uint32_t n_total_cells = 0;
    std::vector<std::uint32_t> rank_of_cell; // ext lattice index -> rank
    std::vector<std::uint32_t> cell_of_rank; // rank -> ext lattice index
    std::vector<std::uint32_t> cell_start;   // per rank, filled by build_cell_list

    // Single-domain grid over the whole box.
    static CellGrid make(const SimBox& box, double cell_target, int sub_bits = 2);
    // Slab grid for domain my_coords of a dims decomposition.
    static CellGrid make(const SimBox& box, const Vec3& slab_lo, const Vec3& slab_hi,
                         const IVec3& dims, const IVec3& my_coords, double cell_target,
                         int sub_bits = 2);

    std::size_t ext_index(const IVec3& c) const {
        return (std::size_t(c[2]) * ncell_ext[1] + c[1]) * ncell_ext[0] + c[0];
    }
    IVec3 ext_coords(std::size_t idx) const {
        const int x = int(idx % ncell_ext[0]);
        idx /= ncell_ext[0];
        return {x, int(idx % ncell_ext[1]), int(idx / ncell_ext[1])};
    }
    bool is_local_cell(const IVec3& c) const {
        for (int k = 0; k < 3; ++k)
            if (c[k] < ghost_lo[k] || c[k] >= ghost_lo[k] + ncell[k]) return false;
        return true;
    }

    // Ext lattice coords of a local particle; errors if x is outside the
    // slab (a missed migration).
    IVec3 local_cell_of(const Vec3& x) const;
    // Ext lattice coords for a ghost particle, clamped into the grid.
    IVec3 ghost_cell_of(const Vec3& x) const;

    std::uint32_t sub_code(const Vec3& x, const IVec3& cell) const;
    std::uint32_t sort_key(std::uint32_t rank, std::uint32_t sub) const {
        return (rank << (3 * sub_bits)) | sub;
    }
    int key_bits() const; // rounded up to a multiple of 4 for the radix sort
};

// cell_start[r] = index of the first particle whose cell rank >= r, found by
// boundary detection in the rank-sorted key array. Errors on unsorted input.
void build_cell_list(CellGrid& grid, std::span<const std::uint32_t> ranks);

// Two-level Morton reorder of all local particles; permutes every
// per-particle array together and returns the permutation old -> new.
std::vector<std::uint32_t> reorder_particles(ParticleStore& store, const CellGrid& grid,
                                             RadixSorter& sorter, WorkerPool& pool);

// Cell rank per (already reordered) local particle, for build_cell_list.
std::vector<std::uint32_t> local_cell_ranks(const ParticleStore& store, const CellGrid& grid,
                                            WorkerPool& pool);

} // namespace dpd
