// Copyright 2026 The zenogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENO_UNITS_H
#define ZENO_UNITS_H

namespace zeno {

/// SI constants and the conversions into natural units (hbar = c = eps0 = 1).
///
/// The natural-unit base is the second: lengths become times (L / c), areas
/// become s^2, masses and energies become angular frequencies (s^-1), and
/// intensities become s^-4. Frequencies quoted in Hz are taken as angular
/// frequencies and pass through unchanged.
struct UnitSystem {
    static constexpr double fine_structure = 7.2973525693e-3;
    static constexpr double speed_of_light = 299792458.0;    // m / s
    static constexpr double hbar = 1.054571817e-34;          // J s
    static constexpr double bohr_radius = 5.29177210903e-11; // m
    static constexpr double electron_mass = 9.1093837015e-31; // kg

    // Laboratory units to SI.
    static constexpr double from_nm(double v) { return v * 1e-9; }
    static constexpr double from_um(double v) { return v * 1e-6; }
    static constexpr double from_nm2(double v) { return v * 1e-18; }
    static constexpr double from_bohr(double v) { return v * bohr_radius; }
    static constexpr double from_per_cm3(double v) { return v * 1e6; }
    static constexpr double to_nm(double m) { return m * 1e9; }

    // SI to natural units and back.
    static double length_to_time(double meters);
    static double time_to_length(double seconds);
    static double area_to_time2(double square_meters);
    static double time2_to_area(double seconds2);
    /// W / cm^2 -> s^-4
    static double intensity_to_natural(double w_per_cm2);
    static double natural_to_intensity(double per_s4);
    /// kg -> s^-1 (m c^2 / hbar)
    static double mass_to_natural(double kg);
    static double natural_to_mass(double per_s);
    /// Angular frequency 2 pi c / lambda for a vacuum wavelength in meters.
    static double wavelength_to_angular(double meters);
    static double angular_to_wavelength(double per_s);
    /// Angular frequency passes through.
    static constexpr double hz_angular(double v) { return v; }
};

}  // namespace zeno

#endif
