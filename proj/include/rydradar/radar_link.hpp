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
    struct RadarLink
    {
        double transmit_power;         // P_t, W
        double transmit_gain;          // G_t, linear
        double rcs;                    // sigma, m^2
        double sensor_area;            // A_e of the vapor cell, m^2
        double classical_antenna_area; // A_s, m^2
        double carrier_f1;             // Hz

        void validate() const;
    };

    struct ReceiverNoise
    {
        double apd_gain;         // M
        double responsivity;     // A/W
        double load_resistance;  // ohm
        double dc_optical_power; // P_0, W
        double dark_current;     // A
        double temperature;      // K
        double bandwidth;        // B_e, Hz

        void validate() const;

        /// Primary (unmultiplied) photocurrent I_0 = R P_0.
        double dc_photocurrent() const { return responsivity * dc_optical_power; }
    };

    struct ClassicalReceiver
    {
        double system_temperature; // T_s, K

        void validate() const;
    };

    struct NoiseBreakdown
    {
        double shot;    // 2 q (I_0 + I_d) M^2.3 B_e
        double thermal; // 4 k_B T B_e / R_l

        double total() const { return shot + thermal; }
    };

    /// Excess-noise exponent on the APD gain in the shot term.
    inline constexpr double kApdExcessExponent = 2.3;

    /// Monostatic radar equation P_t G_t sigma A_e / ((4 pi)^2 R^4).
    double received_power(const RadarLink &link, double range_m);

    /// Average power P_r = A2^2 A_e / (2 Z) collected by an aperture from a field of amplitude A2.
    double incident_power(double field_amplitude, double sensor_area, const PhysicalConstants &k = kCodata);

    /// Inverse of incident_power: A2 = sqrt(2 Z P_r / A_e).
    double echo_field_amplitude(double received_power_w, double sensor_area, const PhysicalConstants &k = kCodata);

    NoiseBreakdown noise_components(const ReceiverNoise &rx, const PhysicalConstants &k = kCodata);

    /// APD output noise variance sigma_z^2 in A^2.
    double noise_variance(const ReceiverNoise &rx, const PhysicalConstants &k = kCodata);

    /// gamma = 0.5 (M R C A2)^2 / sigma_z^2.
    double quantum_snr_from_amplitude(double echo_amplitude, double c_gain, const ReceiverNoise &rx,
                                      const PhysicalConstants &k = kCodata);

    /// Rydberg receiver SNR versus target range.
    double quantum_snr(const RadarLink &link, const ReceiverNoise &rx, double c_gain, double range_m,
                       const PhysicalConstants &k = kCodata);

    /// Dipole-antenna receiver SNR P_t G_t sigma A_s / ((4 pi)^2 R^4 k_B T_s B_e).
    double classical_snr(const RadarLink &link, const ClassicalReceiver &cls, double bandwidth, double range_m,
                         const PhysicalConstants &k = kCodata);

    /// Beat (intermediate) frequency 2 v f1 / c. Positive velocity gives a positive shift.
    double doppler_shift(double velocity, double carrier_f1, const PhysicalConstants &k = kCodata);

    /// tau_d = 2 R / c.
    double round_trip_delay(double range_m, const PhysicalConstants &k = kCodata);

    double to_db(double linear);
    double from_db(double db);

} // namespace rydradar
