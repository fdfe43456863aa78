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

#include "rydradar/radar_link.hpp"
#include "rydradar/errors.hpp"

#include <cmath>
#include <string>

namespace rydradar
{
    using detail::require;

    namespace
    {
        void positive(double v, const char *type, const char *name)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string(type) + "." + name + " must be positive and finite");
        }

        // (4 pi)^2 R^4
        double spreading_loss(double range_m)
        {
            require(range_m > 0.0 && std::isfinite(range_m), "range must be positive and finite");
            const double four_pi = 4.0 * kPi;
            const double r2 = range_m * range_m;
            return four_pi * four_pi * r2 * r2;
        }
    } // namespace

    void RadarLink::validate() const
    {
        positive(transmit_power, "RadarLink", "transmit_power");
        positive(transmit_gain, "RadarLink", "transmit_gain");
        positive(rcs, "RadarLink", "rcs");
        positive(sensor_area, "RadarLink", "sensor_area");
        positive(classical_antenna_area, "RadarLink", "classical_antenna_area");
        positive(carrier_f1, "RadarLink", "carrier_f1");
        if (carrier_f1 < 1e6 || carrier_f1 > 1e12)
            throw DomainError("RadarLink.carrier_f1 outside the 1 MHz .. 1 THz band");
    }

    void ReceiverNoise::validate() const
    {
        positive(apd_gain, "ReceiverNoise", "apd_gain");
        positive(responsivity, "ReceiverNoise", "responsivity");
        positive(load_resistance, "ReceiverNoise", "load_resistance");
        positive(dc_optical_power, "ReceiverNoise", "dc_optical_power");
        positive(temperature, "ReceiverNoise", "temperature");
        positive(bandwidth, "ReceiverNoise", "bandwidth");
        if (apd_gain < 1.0)
            throw DomainError("ReceiverNoise.apd_gain must be >= 1");
        if (!(dark_current >= 0.0) || !std::isfinite(dark_current))
            throw DomainError("ReceiverNoise.dark_current must be >= 0");
    }

    void ClassicalReceiver::validate() const
    {
        positive(system_temperature, "ClassicalReceiver", "system_temperature");
    }

    double received_power(const RadarLink &link, double range_m)
    {
        return link.transmit_power * link.transmit_gain * link.rcs * link.sensor_area / spreading_loss(range_m);
    }

    double incident_power(double field_amplitude, double sensor_area, const PhysicalConstants &k)
    {
        require(field_amplitude >= 0.0, "incident_power: field amplitude must be >= 0");
        require(sensor_area > 0.0, "incident_power: sensor area must be > 0");
        return field_amplitude * field_amplitude * sensor_area / (2.0 * k.free_space_impedance);
    }

    double echo_field_amplitude(double received_power_w, double sensor_area, const PhysicalConstants &k)
    {
        require(received_power_w >= 0.0, "echo_field_amplitude: received power must be >= 0");
        require(sensor_area > 0.0, "echo_field_amplitude: sensor area must be > 0");
        return std::sqrt(2.0 * k.free_space_impedance * received_power_w / sensor_area);
    }

    NoiseBreakdown noise_components(const ReceiverNoise &rx, const PhysicalConstants &k)
    {
        // Bypasses validate(): the all-sources-off limit (T = 0, P_0 = 0) is legal here.
        require(rx.apd_gain >= 1.0 && rx.bandwidth > 0.0 && rx.load_resistance > 0.0,
                "noise_components: invalid receiver parameters");
        require(rx.dark_current >= 0.0 && rx.temperature >= 0.0 && rx.dc_optical_power >= 0.0,
                "noise_components: currents, power and temperature must be >= 0");
        NoiseBreakdown n{};
        n.shot = 2.0 * k.electron_charge * (rx.dc_photocurrent() + rx.dark_current) *
                 std::pow(rx.apd_gain, kApdExcessExponent) * rx.bandwidth;
        n.thermal = 4.0 * k.boltzmann * rx.temperature * rx.bandwidth / rx.load_resistance;
        return n;
    }

    double noise_variance(const ReceiverNoise &rx, const PhysicalConstants &k)
    {
        return noise_components(rx, k).total();
    }

    double quantum_snr_from_amplitude(double echo_amplitude, double c_gain, const ReceiverNoise &rx,
                                      const PhysicalConstants &k)
    {
        require(echo_amplitude >= 0.0, "quantum_snr_from_amplitude: amplitude must be >= 0");
        require(c_gain >= 0.0, "quantum_snr_from_amplitude: optical gain must be >= 0");
        const double alpha = rx.apd_gain * rx.responsivity * c_gain * echo_amplitude;
        const double variance = noise_variance(rx, k);
        require(variance > 0.0, "quantum_snr_from_amplitude: noise variance is zero");
        return 0.5 * alpha * alpha / variance;
    }

    double quantum_snr(const RadarLink &link, const ReceiverNoise &rx, double c_gain, double range_m,
                       const PhysicalConstants &k)
    {
        require(c_gain >= 0.0, "quantum_snr: optical gain must be >= 0");
        const double gain = rx.apd_gain * rx.responsivity * c_gain;
        const double field_sq = 2.0 * k.free_space_impedance * link.transmit_power * link.transmit_gain *
                                link.rcs / spreading_loss(range_m);
        const double variance = noise_variance(rx, k);
        require(variance > 0.0, "quantum_snr: noise variance is zero");
        return 0.5 * gain * gain * field_sq / variance;
    }

    double classical_snr(const RadarLink &link, const ClassicalReceiver &cls, double bandwidth, double range_m,
                         const PhysicalConstants &k)
    {
        require(cls.system_temperature > 0.0, "classical_snr: system temperature must be > 0");
        require(bandwidth > 0.0, "classical_snr: bandwidth must be > 0");
        return link.transmit_power * link.transmit_gain * link.rcs * link.classical_antenna_area /
               (spreading_loss(range_m) * k.boltzmann * cls.system_temperature * bandwidth);
    }

    double doppler_shift(double velocity, double carrier_f1, const PhysicalConstants &k)
    {
        require(std::abs(velocity) < k.light_speed, "doppler_shift: |velocity| must be below c");
        return 2.0 * velocity * carrier_f1 / k.light_speed;
    }

    double round_trip_delay(double range_m, const PhysicalConstants &k)
    {
        require(range_m >= 0.0, "round_trip_delay: range must be >= 0");
        return 2.0 * range_m / k.light_speed;
    }

    double to_db(double linear) { return 10.0 * std::log10(linear); }

    double from_db(double db) { return std::pow(10.0, db / 10.0); }

} // namespace rydradar
