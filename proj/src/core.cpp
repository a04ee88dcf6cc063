#include "dpd/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dpd {

void SimBox::validate() const {
    for (int k = 0; k < 3; ++k) {
        if (!(hi[k] > lo[k]))
            fail(ErrorCategory::config, "box: hi must exceed lo on axis " + std::to_string(k));
        if (periodic[k] && wall[k])
            fail(ErrorCategory::config,
                 "box: axis " + std::to_string(k) + " cannot be periodic and walled");
    }
}

void ParticleStore::resize(std::size_t m) {
    n = m;
    for (int k = 0; k < 3; ++k) {
        coord[k].resize(m);
        veloc[k].resize(m);
        force[k].resize(m);
    }
    tag.resize(m);
    species.resize(m);
    signature.resize(m);
    molecule.resize(m);
}

void ParticleStore::reserve(std::size_t m) {
    for (int k = 0; k < 3; ++k) {
        coord[k].reserve(m);
        veloc[k].reserve(m);
        force[k].reserve(m);
    }
    tag.reserve(m);
    species.reserve(m);
    signature.reserve(m);
    molecule.reserve(m);
}

void ParticleStore::append_from(const ParticleStore& src, std::size_t i) {
    for (int k = 0; k < 3; ++k) {
        coord[k].push_back(src.coord[k][i]);
        veloc[k].push_back(src.veloc[k][i]);
        force[k].push_back(src.force[k][i]);
    }
    tag.push_back(src.tag[i]);
    species.push_back(src.species[i]);
    signature.push_back(src.signature[i]);
    molecule.push_back(src.molecule[i]);
    ++n;
}

void ParticleStore::compact(const std::vector<std::uint8_t>& keep) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        if (w != i) {
            for (int k = 0; k < 3; ++k) {
                coord[k][w] = coord[k][i];
                veloc[k][w] = veloc[k][i];
                force[k][w] = force[k][i];
            }
            tag[w] = tag[i];
            species[w] = species[i];
            signature[w] = signature[i];
            molecule[w] = molecule[i];
        }
        ++w;
    }
    resize(w);
}

PairParams PairParams::make(std::size_t n_species, std::vector<double> a,
                            std::vector<double> gamma, double kbt, double s,
                            double r_c, double dt) {
    if (r_c <= 0) fail(ErrorCategory::config, "pair params: r_c must be positive");
    if (s <= 0) fail(ErrorCategory::config, "pair params: weight exponent s must be positive");
    if (a.size() != n_species * n_species || gamma.size() != n_species * n_species)
        fail(ErrorCategory::config, "pair params: matrix size mismatch");
    for (std::size_t i = 0; i < n_species; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (a[i * n_species + j] != a[j * n_species + i] ||
                gamma[i * n_species + j] != gamma[j * n_species + i])
                fail(ErrorCategory::config, "pair params: matrices must be symmetric");
        }
    PairParams p;
    p.n_species = n_species;
    p.a = std::move(a);
    p.gamma = std::move(gamma);
    p.sigma.resize(n_species * n_species);
    for (std::size_t i = 0; i < p.sigma.size(); ++i)
        p.sigma[i] = std::sqrt(2.0 * p.gamma[i] * kbt);
    p.kbt = kbt;
    p.s = s;
    p.r_c = r_c;
    p.dt = dt;
    return p;
}

void BondTopology::validate() const {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const Bond& b : bonds) {
        if (b.tag_i == b.tag_j)
            fail(ErrorCategory::config, "bond topology: self bond on tag " + std::to_string(b.tag_i));
        auto key = std::minmax(b.tag_i, b.tag_j);
        if (!seen.insert(key).second)
            fail(ErrorCategory::config, "bond topology: duplicate bond " +
                                            std::to_string(key.first) + "-" + std::to_string(key.second));
    }
}

void RunConfig::validate() const {
    if (steps < 0) fail(ErrorCategory::config, "run: steps must be >= 0");
    if (rebuild_every < 1) fail(ErrorCategory::config, "run: rebuild interval must be >= 1");
    if (skin < 0) fail(ErrorCategory::config, "run: skin distance must be >= 0");
    if (workers < 1) fail(ErrorCategory::config, "run: workers must be >= 1");
    for (int k = 0; k < 3; ++k)
        if (domains[k] < 1) fail(ErrorCategory::config, "run: domain grid dims must be >= 1");
    if (drive_axis < 0 || drive_axis > 2 || partition_axis < 0 || partition_axis > 2)
        fail(ErrorCategory::config, "run: axes must be 0, 1 or 2");
    if (restart_every > 0 && restart_every % rebuild_every != 0)
        fail(ErrorCategory::config, "run: restart cadence must be a multiple of the rebuild interval");
}

Vec3 minimum_image(Vec3 dr, const SimBox& box) {
    for (int k = 0; k < 3; ++k) {
        if (!box.periodic[k]) continue;
        const double L = box.length(k);
        if (dr[k] >= 0.5 * L)
            dr[k] -= L;
        else if (dr[k] < -0.5 * L)
            dr[k] += L;
    }
    return dr;
}

double compute_temperature(const ParticleStore& store) {
    if (store.n == 0) fail(ErrorCategory::physics, "temperature of an empty system");
    Vec3 vbar{0, 0, 0};
    for (std::size_t i = 0; i < store.n; ++i) vbar += store.velocity(i);
    vbar *= 1.0 / double(store.n);
    double sum = 0;
    for (std::size_t i = 0; i < store.n; ++i) sum += (store.velocity(i) - vbar).norm2();
    return sum / (3.0 * double(store.n));
}

} // namespace dpd
