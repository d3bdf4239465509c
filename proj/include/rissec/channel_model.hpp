// SPDX-License-Identifier: Apache-2.0
//
// rissec: secure RIS-assisted beamforming with statistical eavesdropper CSI
// Copyright (C) 2026 The rissec authors
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

#ifndef RISSEC_CHANNEL_MODEL_HPP
#define RISSEC_CHANNEL_MODEL_HPP

#include "rissec/types.hpp"

#include <cstdint>
#include <limits>

namespace rissec
{
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        bool operator==(const Point2 &) const = default;
    };

    double distance(Point2 a, Point2 b);

    /// Sine of the angle of `to` seen from `from`, measured from the x axis (array broadside).
    /// Arrays lie along y, so this is the spatial frequency factor of the steering vector.
    double sin_angle(Point2 from, Point2 to);

    // Node placement and array sizes. Defaults are the reference deployment: 8-antenna AP at
    // (5,0), RIS at (0,50), user at (5,60), eavesdropper at (10,55), half-wavelength spacing.
    // ris_cols == 0 models an absent RIS (N = 0).
    struct Geometry
    {
        Point2 ap{5.0, 0.0};
        Point2 ris{0.0, 50.0};
        Point2 user{5.0, 60.0};
        Point2 eve{10.0, 55.0};
        int num_antennas = 8;
        int ris_rows = 16; // Ny, elements along y
        int ris_cols = 2;  // Nz, elements along z
        double ap_spacing = 0.5;
        double ris_spacing = 0.5;

        int ris_elements() const { return ris_rows * ris_cols; }

        /// Throws std::invalid_argument on a violated invariant.
        void validate() const;

        bool operator==(const Geometry &) const = default;
    };

    struct LinkFading
    {
        double exponent = 2.0;
        double k_factor = 0.0; // linear; +inf means pure line of sight

        bool operator==(const LinkFading &) const = default;
    };

    struct FadingStats
    {
        double zeta0 = 1e-3; // -30 dB path gain at the reference distance
        double d0 = 1.0;
        LinkFading ap_user{3.67, 0.0};
        LinkFading ap_eve{3.67, 0.0};
        LinkFading ris_user{2.2, 7.943282347242815}; // 10^0.9
        LinkFading ris_eve{2.2, 7.943282347242815};
        LinkFading ap_ris{2.0, std::numeric_limits<double>::infinity()};
        double noise_user = 1e-12; // -90 dBm
        double noise_eve = 1e-12;

        NoisePowers noise() const { return {noise_user, noise_eve}; }

        void validate() const;

        bool operator==(const FadingStats &) const = default;
    };

    /// User-side channels, perfectly known at the AP.
    struct ScenarioChannels
    {
        CVector h_au; // M, AP -> user
        CMatrix h_ai; // N x M, AP -> RIS
        CVector h_iu; // N, RIS -> user
        CMatrix h_u;  // N x M, diag(conj(h_iu)) * h_ai

        Eigen::Index num_antennas() const { return h_au.size(); }
        Eigen::Index num_elements() const { return h_iu.size(); }

        /// Builds the struct and the cascaded channel from its three components.
        static ScenarioChannels compose(CVector h_au, CMatrix h_ai, CVector h_iu);
    };

    /// One eavesdropper link: h = sqrt(path_gain) * (sqrt(K/(K+1)) los + sqrt(1/(K+1)) nlos).
    struct EveLink
    {
        double path_gain = 0.0;
        double k_factor = 0.0;
        CVector los; // unit-modulus LoS response

        double los_weight() const;  // sqrt(K/(K+1)), 1 at K = inf
        double nlos_weight() const; // sqrt(1/(K+1)), 0 at K = inf

        CVector mean() const;
        double nlos_variance() const;
    };

    // Eavesdropper statistics. The link parameters are the source of truth; the dense
    // second-moment matrices are derived from them at construction:
    //   g_a  = E[h_ae h_ae^H] = m_ae m_ae^H + v_ae I
    //   g_i  = E[h_ie h_ie^H] = m_ie m_ie^H + v_ie I
    //   g_ai = E[h_ae] E[h_ie]^H = m_ae m_ie^H
    struct EveStatistics
    {
        EveLink ap_eve;
        EveLink ris_eve;
        CMatrix g_a;  // M x M
        CMatrix g_i;  // N x N
        CMatrix g_ai; // M x N

        static EveStatistics from_links(EveLink ap_eve, EveLink ris_eve);
    };

    struct EveSample
    {
        CVector h_ae;
        CVector h_ie;
    };

    /// exp(j 2pi spacing m sin_angle), m = 0..count-1. Throws std::domain_error if |sin_angle| > 1.
    CVector ula_response(double sin_angle, int count, double spacing);

    /// ula_response(sin_azimuth, ny, spacing) (x) ones(nz); all nodes sit in the z = 0 plane.
    CVector upa_response(double sin_azimuth, int ny, int nz, double spacing);

    /// zeta0 * (d / d0)^(-alpha). Throws std::domain_error for d <= 0.
    double pathloss_gain(double d, double alpha, double zeta0, double d0);

    /// Draws the user-side channels. A pure function of its arguments.
    ScenarioChannels build_scenario(const Geometry &geom, const FadingStats &stats, std::uint64_t seed);

    EveStatistics eve_second_moments(const Geometry &geom, const FadingStats &stats);

    /// One eavesdropper channel realization. Draw `draw` of `seed` is the same no matter which
    /// other draws are taken; h_ae consumes the first M normals, h_ie the next N.
    EveSample sample_eve_channels(const EveStatistics &es, std::uint64_t seed, std::uint64_t draw = 0);

    /// The same scenario with the RIS removed (N = 0).
    ScenarioChannels without_ris(const ScenarioChannels &sc);
    EveStatistics without_ris(const EveStatistics &es);
} // namespace rissec

#endif
