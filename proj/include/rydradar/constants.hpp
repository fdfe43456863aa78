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

namespace rydradar
{
    // CODATA 2018 values. The free-space impedance is the rounded 377 ohm used
    // throughout the radar link budget.
    struct PhysicalConstants
    {
        const double hbar = 1.054571817e-34;          // J s
        const double epsilon0 = 8.8541878128e-12;     // F/m
        const double electron_charge = 1.602176634e-19; // C
        const double bohr_radius = 5.29177210903e-11; // m
        const double boltzmann = 1.380649e-23;        // J/K
        const double light_speed = 299792458.0;       // m/s
        const double free_space_impedance = 377.0;    // ohm

        /// Dipole moment in C m for a value given in units of e a0.
        constexpr double dipole_from_ea0(double ea0) const { return ea0 * (electron_charge * bohr_radius); }
    };

    inline constexpr PhysicalConstants kCodata{};

    inline constexpr double kPi = 3.14159265358979323846;
    inline constexpr double kTwoPi = 2.0 * kPi;

} // namespace rydradar
