#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dpd/error.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

// Simulation box in reduced DPD units. Per axis exactly one of
// periodic / wall / free applies; wall means bounce-forward planes at lo/hi.
struct SimBox {
    Vec3 lo{0, 0, 0};
    Vec3 hi{1, 1, 1};
    std::array<bool, 3> periodic{true, true, true};
    std::array<bool, 3> wall{false, false, false};

    double length(int k) const { return hi[k] - lo[k]; }
    double volume() const { return length(0) * length(1) * length(2); }
    Vec3 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2, (lo.z + hi.z) / 2}; }
    void validate() const;
};

// Structure-of-arrays particle storage: each vector component lives in its
// own contiguous array. Tags are globally unique across all domains.
struct ParticleStore {
    std::size_t n = 0;
    std::array<std::vector<double>, 3> coord;
    std::array<std::vector<double>, 3> veloc;
    std::array<std::vector<double>, 3> force;
    std::vector<std::uint32_t> tag;
    std::vector<std::uint8_t> species;
    std::vector<std::uint32_t> signature;
    std::vector<std::uint32_t> molecule; // 0 = solvent

    void resize(std::size_t m);
    void reserve(std::size_t m);
    Vec3 position(std::size_t i) const { return {coord[0][i], coord[1][i], coord[2][i]}; }
    Vec3 velocity(std::size_t i) const { return {veloc[0][i], veloc[1][i], veloc[2][i]}; }
    // Appends particle i of src (all fields).
    void append_from(const ParticleStore& src, std::size_t i);
    // Keeps rows where keep[i], preserving order.
    void compact(const std::vector<std::uint8_t>& keep);
};

// Species-pair DPD coefficients. sigma is always derived from gamma so that
// sigma_ij^2 = 2 gamma_ij kbt holds exactly.
struct PairParams {
    std::size_t n_species = 1;
    std::vector<double> a;     // n x n, symmetric
    std::vector<double> gamma; // n x n, symmetric
    std::vector<double> sigma; // n x n, derived
    double s = 1.0;            // weight exponent, w_R = w_C^s
    double r_c = 1.0;
    double kbt = 1.0;
    double dt = 0.01;

    static PairParams make(std::size_t n_species, std::vector<double> a,
                           std::vector<double> gamma, double kbt, double s,
                           double r_c, double dt);

    double a_of(unsigned i, unsigned j) const { return a[i * n_species + j]; }
    double gamma_of(unsigned i, unsigned j) const { return gamma[i * n_species + j]; }
    double sigma_of(unsigned i, unsigned j) const { return sigma[i * n_species + j]; }
};

struct Bond {
    std::uint32_t tag_i, tag_j;
    double k;  // spring constant
    double r0; // equilibrium length
};

struct BondTopology {
    std::vector<Bond> bonds;
    void validate() const; // no self bonds, no duplicates
};

enum class WallMode { specular, bounce_back };

struct RunConfig {
    std::int64_t steps = 0;
    int rebuild_every = 10;
    double skin = 0.3;
    double body_force = 0.0; // double Poiseuille drive magnitude g
    int drive_axis = 2;
    int partition_axis = 0;
    std::uint32_t seed = 1;
    unsigned workers = 1;
    IVec3 domains{1, 1, 1};
    WallMode wall_mode = WallMode::specular;
    std::uint32_t max_neighbors = 128;

    // output cadence (0 = off)
    std::int64_t thermo_every = 0;
    std::int64_t trajectory_every = 0;
    std::int64_t restart_every = 0;
    // profiles
    int profile_bins = 50;
    double profile_window = 0.5;      // half-width in time units
    double profile_start = -1;        // steady profile: accumulate from t >= start
    std::vector<double> profile_times; // transient windows
    // cluster trace (self-assembly): check cadence in steps (0 = off)
    std::int64_t cluster_every = 0;

    void validate() const;
};

// Maps periodic components of dr into [-L/2, L/2); wall/free axes unchanged.
Vec3 minimum_image(Vec3 dr, const SimBox& box);

// k_B T estimate: sum m|v|^2 / (3n) with the center-of-mass drift
// subtracted first (m = 1 in reduced units). Errors on n = 0.
double compute_temperature(const ParticleStore& store);

} // namespace dpd
