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

#include "rissec/channel_model.hpp"

#include "rissec/rng.hpp"

#include <stdexcept>
#include <string>

namespace rissec
{
    namespace
    {
        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw std::invalid_argument(what);
        }

        bool valid_k(double k) { return k >= 0.0; } // NaN fails, +inf passes

        void check_link(const LinkFading &l, const char *name)
        {
            require(l.exponent >= 0.0 && std::isfinite(l.exponent), std::string("path-loss exponent of ") + name + " must be finite and >= 0");
            require(valid_k(l.k_factor), std::string("K-factor of ") + name + " must be >= 0");
        }

        double los_weight_of(double k)
        {
            return std::isinf(k) ? 1.0 : std::sqrt(k / (k + 1.0));
        }

        double nlos_weight_of(double k)
        {
            return std::isinf(k) ? 0.0 : std::sqrt(1.0 / (k + 1.0));
        }

        // sqrt(gain) * (los_w * los + nlos_w * CN(0, I)), drawing normals only when needed.
        CVector rician_vector(const CVector &los, double gain, double k, CounterRng &rng)
        {
            const double lw = los_weight_of(k);
            const double nw = nlos_weight_of(k);
            CVector h = lw * los;
            if (nw > 0.0)
            {
                for (Eigen::Index i = 0; i < h.size(); ++i)
                    h[i] += nw * rng.complex_normal();
            }
            return std::sqrt(gain) * h;
        }
    } // namespace

    double distance(Point2 a, Point2 b)
    {
        return std::hypot(b.x - a.x, b.y - a.y);
    }

    double sin_angle(Point2 from, Point2 to)
    {
        const double d = distance(from, to);
        if (!(d > 0.0))
            throw std::domain_error("sin_angle: coincident points");
        return (to.y - from.y) / d;
    }

    void Geometry::validate() const
    {
        require(num_antennas >= 1, "num_antennas must be >= 1");
        require(ris_rows >= 1, "ris_rows must be >= 1");
        require(ris_cols >= 0, "ris_cols must be >= 0 (0 means no RIS)");
        require(ap_spacing > 0.0 && ris_spacing > 0.0, "element spacings must be > 0");
        const Point2 nodes[] = {ap, ris, user, eve};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                require(distance(nodes[i], nodes[j]) > 0.0, "node positions must be pairwise distinct");
    }

    void FadingStats::validate() const
    {
        require(zeta0 > 0.0 && std::isfinite(zeta0), "zeta0 must be > 0");
        require(d0 > 0.0 && std::isfinite(d0), "d0 must be > 0");
        check_link(ap_user, "ap_user");
        check_link(ap_eve, "ap_eve");
        check_link(ris_user, "ris_user");
        check_link(ris_eve, "ris_eve");
        check_link(ap_ris, "ap_ris");
        require(noise_user > 0.0 && noise_eve > 0.0, "noise powers must be > 0");
    }

    ScenarioChannels ScenarioChannels::compose(CVector h_au, CMatrix h_ai, CVector h_iu)
    {
        if (h_ai.rows() != h_iu.size() || h_ai.cols() != h_au.size())
            throw std::invalid_argument("ScenarioChannels::compose: dimension mismatch");
        ScenarioChannels sc;
        sc.h_u = h_iu.conjugate().asDiagonal() * h_ai;
        sc.h_au = std::move(h_au);
        sc.h_ai = std::move(h_ai);
        sc.h_iu = std::move(h_iu);
        return sc;
    }

    double EveLink::los_weight() const { return los_weight_of(k_factor); }
    double EveLink::nlos_weight() const { return nlos_weight_of(k_factor); }

    CVector EveLink::mean() const
    {
        return std::sqrt(path_gain) * los_weight() * los;
    }

    double EveLink::nlos_variance() const
    {
        const double nw = nlos_weight();
        return path_gain * nw * nw;
    }

    EveStatistics EveStatistics::from_links(EveLink ap_eve, EveLink ris_eve)
    {
        EveStatistics es;
        const CVector ma = ap_eve.mean();
        const CVector mi = ris_eve.mean();
        const auto m = ma.size();
        const auto n = mi.size();
        es.g_a = ma * ma.adjoint() + ap_eve.nlos_variance() * CMatrix::Identity(m, m);
        es.g_i = mi * mi.adjoint() + ris_eve.nlos_variance() * CMatrix::Identity(n, n);
        es.g_ai = ma * mi.adjoint();
        es.ap_eve = std::move(ap_eve);
        es.ris_eve = std::move(ris_eve);
        return es;
    }

    CVector ula_response(double sin_angle, int count, double spacing)
    {
        if (!(std::abs(sin_angle) <= 1.0))
            throw std::domain_error("ula_response: |sin_angle| must be <= 1");
        if (count < 0)
            throw std::invalid_argument("ula_response: negative count");
        CVector a(count);
        for (int m = 0; m < count; ++m)
            a[m] = std::polar(1.0, 2.0 * kPi * spacing * m * sin_angle);
        return a;
    }

    CVector upa_response(double sin_azimuth, int ny, int nz, double spacing)
    {
        const CVector ay = ula_response(sin_azimuth, ny, spacing);
        CVector a(static_cast<Eigen::Index>(ny) * nz);
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z)
                a[static_cast<Eigen::Index>(y) * nz + z] = ay[y];
        return a;
    }

    double pathloss_gain(double d, double alpha, double zeta0, double d0)
    {
        if (!(d > 0.0))
            throw std::domain_error("pathloss_gain: distance must be > 0");
        return zeta0 * std::pow(d / d0, -alpha);
    }

    ScenarioChannels build_scenario(const Geometry &geom, const FadingStats &stats, std::uint64_t seed)
    {
        geom.validate();
        stats.validate();
        const int m = geom.num_antennas;
        const int ny = geom.ris_rows;
        const int nz = geom.ris_cols;

        const auto gain = [&](Point2 a, Point2 b, const LinkFading &l)
        { return pathloss_gain(distance(a, b), l.exponent, stats.zeta0, stats.d0); };

        CounterRng rng_au(seed, streams::kApUser);
        const CVector los_au = ula_response(sin_angle(geom.ap, geom.user), m, geom.ap_spacing);
        CVector h_au = rician_vector(los_au, gain(geom.ap, geom.user, stats.ap_user), stats.ap_user.k_factor, rng_au);

        // AP -> RIS: departure from the AP array, arrival on the RIS panel.
        const CVector dep = ula_response(sin_angle(geom.ap, geom.ris), m, geom.ap_spacing);
        const CVector arr = upa_response(sin_angle(geom.ris, geom.ap), ny, nz, geom.ris_spacing);
        const double g_ai = gain(geom.ap, geom.ris, stats.ap_ris);
        CMatrix h_ai = (los_weight_of(stats.ap_ris.k_factor) * arr) * dep.adjoint();
        const double nw_ai = nlos_weight_of(stats.ap_ris.k_factor);
        if (nw_ai > 0.0)
        {
            CounterRng rng_ai(seed, streams::kApRis);
            for (Eigen::Index c = 0; c < h_ai.cols(); ++c)
                for (Eigen::Index r = 0; r < h_ai.rows(); ++r)
                    h_ai(r, c) += nw_ai * rng_ai.complex_normal();
        }
        h_ai *= std::sqrt(g_ai);

        CounterRng rng_iu(seed, streams::kRisUser);
        const CVector los_iu = upa_response(sin_angle(geom.ris, geom.user), ny, nz, geom.ris_spacing);
        CVector h_iu = rician_vector(los_iu, gain(geom.ris, geom.user, stats.ris_user), stats.ris_user.k_factor, rng_iu);

        return ScenarioChannels::compose(std::move(h_au), std::move(h_ai), std::move(h_iu));
    }

    EveStatistics eve_second_moments(const Geometry &geom, const FadingStats &stats)
    {
        geom.validate();
        stats.validate();
        EveLink ae;
        ae.path_gain = pathloss_gain(distance(geom.ap, geom.eve), stats.ap_eve.exponent, stats.zeta0, stats.d0);
        ae.k_factor = stats.ap_eve.k_factor;
        ae.los = ula_response(sin_angle(geom.ap, geom.eve), geom.num_antennas, geom.ap_spacing);

        EveLink ie;
        ie.path_gain = pathloss_gain(distance(geom.ris, geom.eve), stats.ris_eve.exponent, stats.zeta0, stats.d0);
        ie.k_factor = stats.ris_eve.k_factor;
        ie.los = upa_response(sin_angle(geom.ris, geom.eve), geom.ris_rows, geom.ris_cols, geom.ris_spacing);

        return EveStatistics::from_links(std::move(ae), std::move(ie));
    }

    EveSample sample_eve_channels(const EveStatistics &es, std::uint64_t seed, std::uint64_t draw)
    {
        CounterRng rng(seed, streams::kEve, draw);
        EveSample s;
        const CVector mean_ae = es.ap_eve.mean();
        const CVector mean_ie = es.ris_eve.mean();
        const double sa = std::sqrt(es.ap_eve.nlos_variance());
        const double si = std::sqrt(es.ris_eve.nlos_variance());
        s.h_ae.resize(mean_ae.size());
        s.h_ie.resize(mean_ie.size());
        // Normals are always consumed so the h_ie draw does not depend on the h_ae K-factor.
        for (Eigen::Index i = 0; i < mean_ae.size(); ++i)
            s.h_ae[i] = mean_ae[i] + sa * rng.complex_normal();
        for (Eigen::Index i = 0; i < mean_ie.size(); ++i)
            s.h_ie[i] = mean_ie[i] + si * rng.complex_normal();
        return s;
    }

    ScenarioChannels without_ris(const ScenarioChannels &sc)
    {
        const auto m = sc.num_antennas();
        return ScenarioChannels::compose(sc.h_au, CMatrix(0, m), CVector(0));
    }

    EveStatistics without_ris(const EveStatistics &es)
    {
        EveLink ie = es.ris_eve;
        ie.los = CVector(0);
        return EveStatistics::from_links(es.ap_eve, std::move(ie));
    }
} // namespace rissec
