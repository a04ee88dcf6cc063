#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dpd/core.hpp"
#include "dpd/stencil.hpp"

namespace dpd {

// Per-particle neighbor lists with a core/skin partition. Core entries
// (|r| <= r_c at build time) fill each row from the front in strictly
// increasing order; skin entries (r_c < |r| <= r_c+skin) fill from the back
// in reverse, so reading back-to-front is increasing too. The two counts
// are carried as short integers. No sorting happens anywhere: order falls
// out of the fine stencil and ballot-style batch insertion.
struct NeighborTable {
    std::uint32_t n_rows = 0;
    std::uint32_t max_neighbors = 0; // row capacity, multiple of 32
    std::uint32_t n_rows_pad = 0;    // rows padded to a multiple of 32
    bool tiled = false;              // 32x32 tile-transposed layout
    bool joined = false;             // core+skin rewritten contiguously
    std::vector<std::uint32_t> entries; // n_rows_pad * max_neighbors
    std::vector<std::uint16_t> core_count, skin_count;

    std::size_t raw_index(std::uint32_t i, std::uint32_t k) const {
        if (!tiled) return std::size_t(i) * max_neighbors + k;
        // locally transposed 32x32 tiles
        return std::size_t((i & ~31u) + (k & 31u)) * max_neighbors + (k & ~31u) + (i & 31u);
    }
    std::uint32_t entry(std::uint32_t i, std::uint32_t k) const { return entries[raw_index(i, k)]; }

    // k-th core neighbor, ascending
    std::uint32_t core_at(std::uint32_t i, std::uint32_t k) const { return entry(i, k); }
    // k-th skin neighbor, ascending
    std::uint32_t skin_at(std::uint32_t i, std::uint32_t k) const {
        return joined ? entry(i, core_count[i] + k) : entry(i, max_neighbors - 1 - k);
    }
};

// Builds the table for all local particles (rows 0..n_local). Distance
// checks run in 32-bit precision on coordinates relative to the slab
// center; the result is bitwise independent of the worker count.
NeighborTable build_neighbor_table(const ParticleStore& store, const CellGrid& grid,
                                   const FineStencil& fine, const SimBox& box, double r_c,
                                   double skin, std::uint32_t max_neighbors, WorkerPool& pool);

// Rewrites each row as core entries followed by skin entries, both
// ascending, making the split transparent to consumers.
void join_core_skin(NeighborTable& table, WorkerPool& pool);

// In-place transpose of each 32x32 tile; applying it twice restores the
// original layout. Readers go through the accessors either way.
void tile_transpose(NeighborTable& table, WorkerPool& pool);

// Debug dump for oracle comparison: i_tag, j_tag, distance, partition.
void dump_neighbor_csv(const NeighborTable& table, const ParticleStore& store,
                       const SimBox& box, const std::array<bool, 3>& wrap, std::ostream& os);

} // namespace dpd
