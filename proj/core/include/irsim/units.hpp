// SPDX-License-Identifier: Apache-2.0
//
// irsim - simulation and optimization toolkit for distributed-IRS assisted
// multi-user MISO downlinks
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

#ifndef IRSIM_UNITS_HPP
#define IRSIM_UNITS_HPP

#include <cmath>

namespace irsim
{

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Speed of light in vacuum [m/s]
inline constexpr double speed_of_light = 299792458.0;

inline double deg_to_rad(double deg) { return pi * deg / 180.0; }

inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

inline double wavelength_from_ghz(double carrier_ghz) { return speed_of_light / (carrier_ghz * 1e9); }

} // namespace irsim

#endif
