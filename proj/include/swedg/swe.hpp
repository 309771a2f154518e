#pragma once

// Shallow-water physics: conservative/entropy variable maps, entropy
// function and potential, physical and entropy-conservative fluxes,
// Lax-Friedrichs penalization, and reflective wall ghost states.

#include <array>
#include <cmath>
#include <stdexcept>

namespace swedg {

struct ConsState {
    double h = 0.0;
    double hu = 0.0;
    double hv = 0.0;
};

struct EntropyState {
    double v1 = 0.0;  // g(h+b) - (u^2+v^2)/2
    double v2 = 0.0;  // u
    double v3 = 0.0;  // v
};

struct PositivityError : std::runtime_error {
    explicit PositivityError(double h)
        : std::runtime_error("nonpositive water height h = " + std::to_string(h)) {}
};

inline void check_positive(double h) {
    if (!(h > 0.0)) throw PositivityError(h);
}

inline EntropyState entropy_vars(const ConsState& u, double b, double g) {
    check_positive(u.h);
    double vx = u.hu / u.h, vy = u.hv / u.h;
    return {g * (u.h + b) - 0.5 * (vx * vx + vy * vy), vx, vy};
}

inline ConsState cons_from_entropy(const EntropyState& v, double b, double g) {
    double h = (v.v1 + 0.5 * (v.v2 * v.v2 + v.v3 * v.v3)) / g - b;
    check_positive(h);
    return {h, h * v.v2, h * v.v3};
}

// Entropy function: total energy.
inline double entropy(const ConsState& u, double b, double g) {
    check_positive(u.h);
    double vx = u.hu / u.h, vy = u.hv / u.h;
    return 0.5 * u.h * (vx * vx + vy * vy) + 0.5 * g * u.h * u.h + g * u.h * b;
}

// Entropy potential: psi^x = g h^2 u / 2, psi^y = g h^2 v / 2.
inline double entropy_potential(const ConsState& u, double g, int direction) {
    check_positive(u.h);
    double vel = (direction == 0 ? u.hu : u.hv) / u.h;
    return 0.5 * g * u.h * u.h * vel;
}

inline std::array<double, 3> flux(const ConsState& u, double g, int direction) {
    check_positive(u.h);
    double vx = u.hu / u.h, vy = u.hv / u.h;
    double p = 0.5 * g * u.h * u.h;
    if (direction == 0) return {u.hu, u.hu * vx + p, u.hu * vy};
    return {u.hv, u.hv * vx, u.hv * vy + p};
}

// Entropy conservative two-point flux.
inline std::array<double, 3> ec_flux(const ConsState& uL, const ConsState& uR, double g,
                                     int direction) {
    check_positive(uL.h);
    check_positive(uR.h);
    double uxL = uL.hu / uL.h, uyL = uL.hv / uL.h;
    double uxR = uR.hu / uR.h, uyR = uR.hv / uR.h;
    double h_avg = 0.5 * (uL.h + uR.h);
    double h2_avg = 0.5 * (uL.h * uL.h + uR.h * uR.h);
    double ux_avg = 0.5 * (uxL + uxR), uy_avg = 0.5 * (uyL + uyR);
    double p = g * h_avg * h_avg - 0.5 * g * h2_avg;
    if (direction == 0) {
        double hu_avg = 0.5 * (uL.hu + uR.hu);
        return {hu_avg, hu_avg * ux_avg + p, hu_avg * uy_avg};
    }
    double hv_avg = 0.5 * (uL.hv + uR.hv);
    return {hv_avg, hv_avg * ux_avg, hv_avg * uy_avg + p};
}

inline double wave_speed(const ConsState& u, double g, double nx, double ny) {
    check_positive(u.h);
    double un = (u.hu * nx + u.hv * ny) / u.h;
    return std::abs(un) + std::sqrt(g * u.h);
}

// Local Lax-Friedrichs dissipation: lambda/2 * (uR - uL).
inline std::array<double, 3> lf_penalty(const ConsState& uL, const ConsState& uR, double g,
                                        double nx, double ny) {
    double lam = std::max(wave_speed(uL, g, nx, ny), wave_speed(uR, g, nx, ny));
    return {0.5 * lam * (uR.h - uL.h), 0.5 * lam * (uR.hu - uL.hu),
            0.5 * lam * (uR.hv - uL.hv)};
}

// Reflective wall: normal velocity flipped, height and tangential kept.
inline ConsState wall_ghost(const ConsState& u, double nx, double ny) {
    double un = u.hu * nx + u.hv * ny;
    return {u.h, u.hu - 2.0 * un * nx, u.hv - 2.0 * un * ny};
}

}  // namespace swedg
