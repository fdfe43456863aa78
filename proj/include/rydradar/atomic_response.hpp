// SPDX-License-Identifier: Apache-2.0
//
// rydradar - Rydberg atomic receiver radar simulation toolkit
// Copyright (C) 2026 The rydradar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "rydradar/constants.hpp"

namespace rydradar
{
    // Four-level ladder atom |1> -> |2> -> |3> -> |4> driven by probe, coupling
    // and RF/LO fields. All Rabi frequencies and decay rates are angular (rad/s).
    struct AtomicSystem
    {
        double gamma2;           // decay rate of |2>
        double omega_p;          // probe Rabi frequency
        double omega_c;          // coupling Rabi frequency
        double omega_lo;         // LO Rabi frequency on the |3> <-> |4> transition
        double dipole_12;        // probe transition dipole moment, C m
        double dipole_rf;        // Rydberg RF transition dipole moment, C m
        double density_n0;       // atomic number density, m^-3
        double cell_length;      // vapor cell length, m
        double probe_wavelength; // m
        double probe_dc_power;   // DC probe power at the detector, W

        /// Throws DomainError naming the first non-positive field.
        void validate() const;
    };

    /// Omega = dipole * E / hbar.
    double rabi_from_field(double dipole, double field_amplitude, const PhysicalConstants &k = kCodata);

    /// Inverse of rabi_from_field: E = hbar * Omega / dipole.
    double field_from_rabi(double dipole, double rabi, const PhysicalConstants &k = kCodata);

    /// Peak field amplitude of a plane wave of intensity I (W/m^2): sqrt(2 I / (c eps0)).
    double field_from_intensity(double intensity, const PhysicalConstants &k = kCodata);

    /// On-axis intensity 2P / (pi w^2) of a Gaussian beam with 1/e^2 radius w.
    double gaussian_peak_intensity(double power, double waist_radius);

    /// Susceptibility scale C0 = -2 N0 d12^2 / (eps0 hbar Omega_p), so that chi = C0 rho21.
    double c0_coefficient(const AtomicSystem &sys, const PhysicalConstants &k = kCodata);

    /// Imaginary part of rho21 at zero probe and RF detuning with the |3>,|4>
    /// decays neglected. The (delta_c = 0, omega_rf = 0) dark resonance returns 0.
    double im_rho21_resonant(double omega_p, double omega_c, double omega_rf, double delta_c, double gamma2);

    double probe_wavenumber(const AtomicSystem &sys);

    /// P_in exp(-k_p L Im chi). Negative Im chi (gain) is rejected.
    double probe_transmission(double p_in, const AtomicSystem &sys, double im_chi);

    /// Lambda(a, b) = b^2 / (a^2 + b^2).
    double lambda_ratio(double a, double b);

    /// EIT linewidth Gamma = Omega_p sqrt(2 (Omega_c^2 + Omega_p^2) / (2 Omega_p^2 + gamma2^2)).
    double eit_linewidth_gamma(double omega_p, double omega_c, double gamma2);

    /// d Lambda(a, Gamma) / da evaluated at a = omega_lo.
    double kappa_p_slope(double omega_lo, double gamma_eit);

    /// A_bar = gamma2 Omega_p / (gamma2^2 + 2 Omega_p^2).
    double dc_absorption_abar(double gamma2, double omega_p);

    // Every intermediate of the LO-dressed gain chain, signed.
    struct OpticalGainChain
    {
        double c0;           // dimensionless
        double abar;         // dimensionless
        double gamma_eit;    // rad/s
        double lambda;       // Lambda(Omega_LO, Gamma), dimensionless
        double kappa_p;      // s/rad
        double wavenumber;   // rad/m
        double alpha;        // dimensionless
        double kappa;        // W s/rad
        double c_signed;     // W/(V/m)

        double c_magnitude() const;
    };

    OpticalGainChain optical_gain_chain(const AtomicSystem &sys, const PhysicalConstants &k = kCodata);

    /// |C| in W per (V/m): converts echo field amplitude into probe power modulation.
    double optical_gain_c(const AtomicSystem &sys, const PhysicalConstants &k = kCodata);

} // namespace rydradar
