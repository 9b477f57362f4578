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

#include "zeno/units.h"

#include <numbers>

namespace zeno {

namespace {
constexpr double c = UnitSystem::speed_of_light;
constexpr double hbar = UnitSystem::hbar;
}  // namespace

double UnitSystem::length_to_time(double meters) {
    return meters / c;
}

double UnitSystem::time_to_length(double seconds) {
    return seconds * c;
}

double UnitSystem::area_to_time2(double square_meters) {
    return square_meters / (c * c);
}

double UnitSystem::time2_to_area(double seconds2) {
    return seconds2 * (c * c);
}

double UnitSystem::intensity_to_natural(double w_per_cm2) {
    // W/cm^2 -> W/m^2 -> (s^-1 per J) * (s^2 per m^2 -> c^2)
    return w_per_cm2 * 1e4 * (c * c) / hbar;
}

double UnitSystem::natural_to_intensity(double per_s4) {
    return per_s4 * hbar / (c * c) / 1e4;
}

double UnitSystem::mass_to_natural(double kg) {
    return kg * (c * c) / hbar;
}

double UnitSystem::natural_to_mass(double per_s) {
    return per_s * hbar / (c * c);
}

double UnitSystem::wavelength_to_angular(double meters) {
    return 2 * std::numbers::pi * c / meters;
}

double UnitSystem::angular_to_wavelength(double per_s) {
    return 2 * std::numbers::pi * c / per_s;
}

}  // namespace zeno
