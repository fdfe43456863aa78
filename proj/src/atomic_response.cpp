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

#include "rydradar/atomic_response.hpp"
#include "rydradar/errors.hpp"

#include <cmath>
#include <string>

namespace rydradar
{
    using detail::require;

    void AtomicSystem::validate() const
    {
        const auto positive = [](double v, const char *name)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string("AtomicSystem.") + name + " must be positive and finite");
        };
        positive(gamma2, "gamma2");
        positive(omega_p, "omega_p");
        positive(omega_c, "omega_c");
        positive(omega_lo, "omega_lo");
        positive(dipole_12, "dipole_12");
        positive(dipole_rf, "dipole_rf");
        positive(density_n0, "density_n0");
        positive(cell_length, "cell_length");
        positive(probe_wavelength, "probe_wavelength");
        positive(probe_dc_power, "probe_dc_power");
    }

    double rabi_from_field(double dipole, double field_amplitude, const PhysicalConstants &k)
    {
        require(dipole >= 0.0, "rabi_from_field: dipole must be >= 0");
        require(field_amplitude >= 0.0, "rabi_from_field: field amplitude must be >= 0");
        return dipole * field_amplitude / k.hbar;
    }

    double field_from_rabi(double dipole, double rabi, const PhysicalConstants &k)
    {
        require(dipole > 0.0, "field_from_rabi: dipole must be > 0");
        require(rabi >= 0.0, "field_from_rabi: Rabi frequency must be >= 0");
        return k.hbar * rabi / dipole;
    }

    double field_from_intensity(double intensity, const PhysicalConstants &k)
    {
        require(intensity >= 0.0, "field_from_intensity: intensity must be >= 0");
        return std::sqrt(2.0 * intensity / (k.light_speed * k.epsilon0));
    }

    double gaussian_peak_intensity(double power, double waist_radius)
    {
        require(power >= 0.0, "gaussian_peak_intensity: power must be >= 0");
        require(waist_radius > 0.0, "gaussian_peak_intensity: waist radius must be > 0");
        return 2.0 * power / (kPi * waist_radius * waist_radius);
    }

    double c0_coefficient(const AtomicSystem &sys, const PhysicalConstants &k)
    {
        sys.validate();
        return -2.0 * sys.density_n0 * sys.dipole_12 * sys.dipole_12 / (k.epsilon0 * k.hbar * sys.omega_p);
    }

    double im_rho21_resonant(double omega_p, double omega_c, double omega_rf, double delta_c, double gamma2)
    {
        require(omega_p > 0.0 && omega_c > 0.0 && gamma2 > 0.0,
                "im_rho21_resonant: omega_p, omega_c and gamma2 must be > 0");
        require(omega_rf >= 0.0, "im_rho21_resonant: omega_rf must be >= 0");
        require(std::isfinite(delta_c), "im_rho21_resonant: delta_c must be finite");

        // Omega_c^4 / (8 (Omega_rf^2 / (4 dc) + dc)^2) rewritten without the 1/dc pole.
        const double spread = omega_rf * omega_rf + 4.0 * delta_c * delta_c;
        if (spread == 0.0)
            return 0.0;

        const double oc2 = omega_c * omega_c;
        const double ratio = oc2 * delta_c / spread;
        const double dressing = 2.0 * ratio * ratio;
        if (std::isinf(dressing))
            return 0.0;
        return -omega_p * gamma2 / (dressing + 2.0 * gamma2 * gamma2);
    }

    double probe_wavenumber(const AtomicSystem &sys)
    {
        require(sys.probe_wavelength > 0.0, "probe_wavenumber: wavelength must be > 0");
        return kTwoPi / sys.probe_wavelength;
    }

    double probe_transmission(double p_in, const AtomicSystem &sys, double im_chi)
    {
        require(p_in >= 0.0, "probe_transmission: input power must be >= 0");
        require(im_chi >= 0.0, "probe_transmission: Im(chi) < 0 describes a gain medium, which is not modeled");
        require(sys.cell_length > 0.0, "probe_transmission: cell length must be > 0");
        return p_in * std::exp(-probe_wavenumber(sys) * sys.cell_length * im_chi);
    }

    double lambda_ratio(double a, double b)
    {
        const double b2 = b * b;
        const double denom = a * a + b2;
        require(denom > 0.0, "lambda_ratio: a and b cannot both be zero");
        return b2 / denom;
    }

    double eit_linewidth_gamma(double omega_p, double omega_c, double gamma2)
    {
        require(omega_p > 0.0 && omega_c >= 0.0 && gamma2 > 0.0,
                "eit_linewidth_gamma: rates must be positive");
        const double op2 = omega_p * omega_p;
        return omega_p * std::sqrt(2.0 * (omega_c * omega_c + op2) / (2.0 * op2 + gamma2 * gamma2));
    }

    double kappa_p_slope(double omega_lo, double gamma_eit)
    {
        require(gamma_eit > 0.0, "kappa_p_slope: EIT linewidth must be > 0");
        const double g2 = gamma_eit * gamma_eit;
        const double denom = omega_lo * omega_lo + g2;
        return -2.0 * omega_lo * g2 / (denom * denom);
    }

    double dc_absorption_abar(double gamma2, double omega_p)
    {
        require(gamma2 > 0.0 && omega_p >= 0.0, "dc_absorption_abar: rates must be positive");
        return gamma2 * omega_p / (gamma2 * gamma2 + 2.0 * omega_p * omega_p);
    }

    double OpticalGainChain::c_magnitude() const { return std::abs(c_signed); }

    OpticalGainChain optical_gain_chain(const AtomicSystem &sys, const PhysicalConstants &k)
    {
        sys.validate();

        OpticalGainChain chain{};
        chain.c0 = c0_coefficient(sys, k);
        chain.abar = dc_absorption_abar(sys.gamma2, sys.omega_p);
        chain.gamma_eit = eit_linewidth_gamma(sys.omega_p, sys.omega_c, sys.gamma2);
        chain.lambda = lambda_ratio(sys.omega_lo, chain.gamma_eit);
        chain.kappa_p = kappa_p_slope(sys.omega_lo, chain.gamma_eit);
        chain.wavenumber = probe_wavenumber(sys);
        chain.alpha = chain.wavenumber * sys.cell_length * chain.c0 * chain.abar;
        chain.kappa = chain.alpha * sys.probe_dc_power * chain.kappa_p;
        chain.c_signed = chain.kappa * sys.dipole_rf / k.hbar;
        return chain;
    }

    double optical_gain_c(const AtomicSystem &sys, const PhysicalConstants &k)
    {
        return optical_gain_chain(sys, k).c_magnitude();
    }

} // namespace rydradar
