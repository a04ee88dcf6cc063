#include "dpd/cell_grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "dpd/morton.hpp"

namespace dpd {

namespace {

int ceil_log2(std::uint32_t v) { return v <= 1 ? 0 : 32 - std::countl_zero(v - 1); }

void assign_ranks(CellGrid& g) {
    const std::size_t total =
        std::size_t(g.ncell_ext[0]) * g.ncell_ext[1] * g.ncell_ext[2];
    g.n_total_cells = std::uint32_t(total);
    g.n_local_cells = std::uint32_t(g.ncell[0]) * g.ncell[1] * g.ncell[2];
    g.bits_per_axis = std::max({ceil_log2(g.ncell_ext[0]), ceil_log2(g.ncell_ext[1]),
                                ceil_log2(g.ncell_ext[2]), 1});
    if (3 * g.bits_per_axis > 32)
        fail(ErrorCategory::config, "cell grid: too many cells per axis");

    // locals sorted by local-lattice Morton code, ghosts after them by
    // ext-lattice code
    std::vector<std::pair<std::uint32_t, std::uint32_t>> local_codes, ghost_codes;
    local_codes.reserve(g.n_local_cells);
    ghost_codes.reserve(total - g.n_local_cells);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const IVec3 c = g.ext_coords(idx);
        if (g.is_local_cell(c)) {
            const std::uint32_t code =
                morton_encode(std::uint32_t(c[0] - g.ghost_lo[0]),
                              std::uint32_t(c[1] - g.ghost_lo[1]),
                              std::uint32_t(c[2] - g.ghost_lo[2]), g.bits_per_axis);
            local_codes.emplace_back(code, std::uint32_t(idx));
        } else {
            const std::uint32_t code = morton_encode(
                std::uint32_t(c[0]), std::uint32_t(c[1]), std::uint32_t(c[2]), g.bits_per_axis);
            ghost_codes.emplace_back(code, std::uint32_t(idx));
        }
    }
    std::sort(local_codes.begin(), local_codes.end());
    std::sort(ghost_codes.begin(), ghost_codes.end());

    g.rank_of_cell.assign(total, 0);
    g.cell_of_rank.assign(total, 0);
    std::uint32_t rank = 0;
    for (const auto& [code, idx] : local_codes) {
        g.rank_of_cell[idx] = rank;
        g.cell_of_rank[rank] = idx;
        ++rank;
    }
    for (const auto& [code, idx] : ghost_codes) {
        g.rank_of_cell[idx] = rank;
        g.cell_of_rank[rank] = idx;
        ++rank;
    }
}

} // namespace

CellGrid CellGrid::make(const SimBox& box, double cell_target, int sub_bits) {
    return make(box, box.lo, box.hi, {1, 1, 1}, {0, 0, 0}, cell_target, sub_bits);
}

CellGrid CellGrid::make(const SimBox& box, const Vec3& slab_lo, const Vec3& slab_hi,
                        const IVec3& dims, const IVec3& my_coords, double cell_target,
                        int sub_bits) {
    if (cell_target <= 0) fail(ErrorCategory::config, "cell grid: cell target must be positive");
    CellGrid g;
    g.slab_lo = slab_lo;
    g.slab_hi = slab_hi;
    g.sub_bits = sub_bits;
    for (int k = 0; k < 3; ++k) {
        const double len = slab_hi[k] - slab_lo[k];
        if (len < cell_target)
            fail(ErrorCategory::config, "cell grid: slab thinner than cutoff+skin on axis " +
                                            std::to_string(k));
        g.ncell[k] = std::max(1, int(std::floor(len / cell_target)));
        g.cell_size[k] = len / g.ncell[k];
        g.inv_cell[k] = g.ncell[k] / len;
        g.wrapmode[k] = dims[k] == 1 && box.periodic[k];
        const bool lower_nbr = dims[k] > 1 && (my_coords[k] > 0 || box.periodic[k]);
        const bool upper_nbr = dims[k] > 1 && (my_coords[k] < dims[k] - 1 || box.periodic[k]);
        g.ghost_lo[k] = lower_nbr ? 1 : 0;
        g.ghost_hi[k] = upper_nbr ? 1 : 0;
        g.ncell_ext[k] = g.ncell[k] + g.ghost_lo[k] + g.ghost_hi[k];
        g.origin[k] = slab_lo[k] - g.ghost_lo[k] * g.cell_size[k];
    }
    assign_ranks(g);
    return g;
}

IVec3 CellGrid::local_cell_of(const Vec3& x) const {
    IVec3 c;
    for (int k = 0; k < 3; ++k) {
        if (!(x[k] >= slab_lo[k] && x[k] < slab_hi[k]))
            fail(ErrorCategory::protocol,
                 "particle outside its domain slab (missed migration), axis " + std::to_string(k));
        int ci = int(std::floor((x[k] - slab_lo[k]) * inv_cell[k]));
        ci = std::clamp(ci, 0, ncell[k] - 1);
        c[k] = ci + ghost_lo[k];
    }
    return c;
}

IVec3 CellGrid::ghost_cell_of(const Vec3& x) const {
    IVec3 c;
    for (int k = 0; k < 3; ++k) {
        int ci = int(std::floor((x[k] - origin[k]) * inv_cell[k]));
        c[k] = std::clamp(ci, 0, ncell_ext[k] - 1);
    }
    return c;
}

std::uint32_t CellGrid::sub_code(const Vec3& x, const IVec3& cell) const {
    const int nsub = 1 << sub_bits;
    std::uint32_t s[3];
    for (int k = 0; k < 3; ++k) {
        const double cell_lo = origin[k] + cell[k] * cell_size[k];
        int si = int(std::floor((x[k] - cell_lo) * inv_cell[k] * nsub));
        s[k] = std::uint32_t(std::clamp(si, 0, nsub - 1));
    }
    return morton_encode(s[0], s[1], s[2], sub_bits);
}

int CellGrid::key_bits() const {
    const int bits = ceil_log2(n_total_cells) + 3 * sub_bits;
    if (bits > 32) fail(ErrorCategory::config, "cell grid: sort key exceeds 32 bits");
    return (bits + 3) & ~3;
}

void build_cell_list(CellGrid& grid, std::span<const std::uint32_t> ranks) {
    const std::size_t n = ranks.size();
    grid.cell_start.assign(grid.n_total_cells + 1, std::uint32_t(n));
    std::uint32_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t r = ranks[i];
        if (!first && r < prev)
            fail(ErrorCategory::protocol, "cell list: particle array not sorted by cell rank");
        if (first || r != prev) {
            const std::uint32_t from = first ? 0 : prev + 1;
            for (std::uint32_t c = from; c <= r; ++c) grid.cell_start[c] = std::uint32_t(i);
            prev = r;
            first = false;
        }
    }
    // leading cells of an empty array
    if (first)
        for (std::uint32_t c = 0; c < grid.n_total_cells; ++c) grid.cell_start[c] = 0;
}

std::vector<std::uint32_t> local_cell_ranks(const ParticleStore& store, const CellGrid& grid,
                                            WorkerPool& pool) {
    std::vector<std::uint32_t> ranks(store.n);
    pool.for_each(store.n, [&](std::size_t i) {
        ranks[i] = grid.rank_of_cell[grid.ext_index(grid.local_cell_of(store.position(i)))];
    });
    return ranks;
}

std::vector<std::uint32_t> reorder_particles(ParticleStore& store, const CellGrid& grid,
                                             RadixSorter& sorter, WorkerPool& pool) {
    const std::size_t n = store.n;
    std::vector<std::uint32_t> keys(n), order(n);
    pool.for_each(n, [&](std::size_t i) {
        const Vec3 x = store.position(i);
        const IVec3 cell = grid.local_cell_of(x);
        const std::uint32_t rank = grid.rank_of_cell[grid.ext_index(cell)];
        keys[i] = grid.sort_key(rank, grid.sub_code(x, cell));
        order[i] = std::uint32_t(i);
    });
    sorter.sort(keys, order, grid.key_bits(), pool);

    ParticleStore scratch;
    scratch.resize(n);
    pool.for_each(n, [&](std::size_t to) {
        const std::uint32_t from = order[to];
        for (int k = 0; k < 3; ++k) {
            scratch.coord[k][to] = store.coord[k][from];
            scratch.veloc[k][to] = store.veloc[k][from];
            scratch.force[k][to] = store.force[k][from];
        }
        scratch.tag[to] = store.tag[from];
        scratch.species[to] = store.species[from];
        scratch.signature[to] = store.signature[from];
        scratch.molecule[to] = store.molecule[from];
    });
    store = std::move(scratch);

    std::vector<std::uint32_t> perm(n);
    pool.for_each(n, [&](std::size_t to) { perm[order[to]] = std::uint32_t(to); });
    return perm;
}

} // namespace dpd
