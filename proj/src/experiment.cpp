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

#include "rissec/experiment.hpp"

#include "rissec/parallel.hpp"
#include "rissec/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rissec
{
    using nlohmann::json;

    namespace
    {
        [[noreturn]] void fail(const std::string &where, const std::string &what)
        {
            throw std::invalid_argument("config: " + where + ": " + what);
        }

        void check_keys(const json &obj, const std::string &where, std::initializer_list<const char *> allowed)
        {
            if (!obj.is_object())
                fail(where, "expected an object");
            const std::set<std::string> ok(allowed.begin(), allowed.end());
            for (const auto &item : obj.items())
                if (!ok.count(item.key()))
                    fail(where, "unknown key '" + item.key() + "'");
        }

        double number(const json &v, const std::string &where)
        {
            if (v.is_string())
            {
                const std::string s = v.get<std::string>();
                if (s == "inf" || s == "+inf" || s == "Infinity")
                    return std::numeric_limits<double>::infinity();
                fail(where, "expected a number, got \"" + s + "\"");
            }
            if (!v.is_number())
                fail(where, "expected a number");
            return v.get<double>();
        }

        int integer(const json &v, const std::string &where)
        {
            if (!v.is_number_integer())
                fail(where, "expected an integer");
            return v.get<int>();
        }

        // Reads `key` (linear) or `key_db` (decibel, converted); both present is an error.
        template <class Convert>
        void read_either(const json &obj, const std::string &where, const char *linear_key, const char *db_key,
                         double &out, Convert from_db)
        {
            const bool has_lin = obj.contains(linear_key);
            const bool has_db = obj.contains(db_key);
            if (has_lin && has_db)
                fail(where, std::string("give either '") + linear_key + "' or '" + db_key + "', not both");
            if (has_lin)
                out = number(obj.at(linear_key), where + "." + linear_key);
            if (has_db)
                out = from_db(number(obj.at(db_key), where + "." + db_key));
        }

        Point2 read_point(const json &v, const std::string &where)
        {
            if (!v.is_array() || v.size() != 2)
                fail(where, "expected [x, y]");
            return {number(v[0], where + "[0]"), number(v[1], where + "[1]")};
        }

        json number_json(double x)
        {
            if (std::isinf(x) && x > 0.0)
                return "inf";
            return x;
        }

        std::vector<double> read_doubles(const json &v, const std::string &where)
        {
            if (!v.is_array())
                fail(where, "expected an array");
            std::vector<double> out;
            for (std::size_t i = 0; i < v.size(); ++i)
                out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
            return out;
        }

        Geometry parse_geometry(const json &g)
        {
            check_keys(g, "geometry",
                       {"ap", "ris", "user", "eve", "num_antennas", "ris_rows", "ris_cols", "ap_spacing",
                        "ris_spacing"});
            Geometry out;
            if (g.contains("ap"))
                out.ap = read_point(g["ap"], "geometry.ap");
            if (g.contains("ris"))
                out.ris = read_point(g["ris"], "geometry.ris");
            if (g.contains("user"))
                out.user = read_point(g["user"], "geometry.user");
            if (g.contains("eve"))
                out.eve = read_point(g["eve"], "geometry.eve");
            if (g.contains("num_antennas"))
                out.num_antennas = integer(g["num_antennas"], "geometry.num_antennas");
            if (g.contains("ris_rows"))
                out.ris_rows = integer(g["ris_rows"], "geometry.ris_rows");
            if (g.contains("ris_cols"))
                out.ris_cols = integer(g["ris_cols"], "geometry.ris_cols");
            if (g.contains("ap_spacing"))
                out.ap_spacing = number(g["ap_spacing"], "geometry.ap_spacing");
            if (g.contains("ris_spacing"))
                out.ris_spacing = number(g["ris_spacing"], "geometry.ris_spacing");
            return out;
        }

        LinkFading parse_link(const json &l, const std::string &where, LinkFading out)
        {
            check_keys(l, where, {"exponent", "k_factor", "k_factor_db"});
            if (l.contains("exponent"))
                out.exponent = number(l["exponent"], where + ".exponent");
            read_either(l, where, "k_factor", "k_factor_db", out.k_factor, db_to_linear);
            return out;
        }

        FadingStats parse_fading(const json &f)
        {
            check_keys(f, "fading",
                       {"zeta0", "zeta0_db", "d0", "links", "noise_user_w", "noise_user_dbm", "noise_eve_w",
                        "noise_eve_dbm"});
            FadingStats out;
            read_either(f, "fading", "zeta0", "zeta0_db", out.zeta0, db_to_linear);
            if (f.contains("d0"))
                out.d0 = number(f["d0"], "fading.d0");
            read_either(f, "fading", "noise_user_w", "noise_user_dbm", out.noise_user, dbm_to_watts);
            read_either(f, "fading", "noise_eve_w", "noise_eve_dbm", out.noise_eve, dbm_to_watts);
            if (f.contains("links"))
            {
                const json &l = f["links"];
                check_keys(l, "fading.links", {"ap_user", "ap_eve", "ris_user", "ris_eve", "ap_ris"});
                if (l.contains("ap_user"))
                    out.ap_user = parse_link(l["ap_user"], "fading.links.ap_user", out.ap_user);
                if (l.contains("ap_eve"))
                    out.ap_eve = parse_link(l["ap_eve"], "fading.links.ap_eve", out.ap_eve);
                if (l.contains("ris_user"))
                    out.ris_user = parse_link(l["ris_user"], "fading.links.ris_user", out.ris_user);
                if (l.contains("ris_eve"))
                    out.ris_eve = parse_link(l["ris_eve"], "fading.links.ris_eve", out.ris_eve);
                if (l.contains("ap_ris"))
                    out.ap_ris = parse_link(l["ap_ris"], "fading.links.ap_ris", out.ap_ris);
            }
            return out;
        }

        SweepRanges parse_sweeps(const json &s)
        {
            check_keys(s, "sweeps", {"power_dbm", "elements", "eve_y", "user_y", "ris_y"});
            SweepRanges out;
            if (s.contains("power_dbm"))
                out.power_dbm = read_doubles(s["power_dbm"], "sweeps.power_dbm");
            if (s.contains("elements"))
            {
                const json &e = s["elements"];
                if (!e.is_array())
                    fail("sweeps.elements", "expected an array");
                out.elements.clear();
                for (std::size_t i = 0; i < e.size(); ++i)
                    out.elements.push_back(integer(e[i], "sweeps.elements[" + std::to_string(i) + "]"));
            }
            if (s.contains("eve_y"))
                out.eve_y = read_doubles(s["eve_y"], "sweeps.eve_y");
            if (s.contains("user_y"))
                out.user_y = read_doubles(s["user_y"], "sweeps.user_y");
            if (s.contains("ris_y"))
                out.ris_y = read_doubles(s["ris_y"], "sweeps.ris_y");
            return out;
        }

        PdcaConfig parse_pdca(const json &p)
        {
            check_keys(p, "pdca",
                       {"rho0", "rho_decrease", "eta", "eps_outer", "eps_inner", "alpha_phase_ini", "alpha_beam_ini",
                        "shrink_phase", "shrink_beam", "armijo_phase", "armijo_beam", "max_outer", "max_inner",
                        "max_backtracks", "structured", "record_steps"});
            PdcaConfig c;
            auto num = [&](const char *k, double &dst)
            {
                if (p.contains(k))
                    dst = number(p[k], std::string("pdca.") + k);
            };
            auto in = [&](const char *k, int &dst)
            {
                if (p.contains(k))
                    dst = integer(p[k], std::string("pdca.") + k);
            };
            auto flag = [&](const char *k, bool &dst)
            {
                if (p.contains(k))
                {
                    if (!p[k].is_boolean())
                        fail(std::string("pdca.") + k, "expected true/false");
                    dst = p[k].get<bool>();
                }
            };
            num("rho0", c.rho0);
            num("rho_decrease", c.rho_decrease);
            num("eta", c.eta);
            num("eps_outer", c.eps_outer);
            num("eps_inner", c.eps_inner);
            num("alpha_phase_ini", c.alpha_phase_ini);
            num("alpha_beam_ini", c.alpha_beam_ini);
            num("shrink_phase", c.shrink_phase);
            num("shrink_beam", c.shrink_beam);
            num("armijo_phase", c.armijo_phase);
            num("armijo_beam", c.armijo_beam);
            in("max_outer", c.max_outer);
            in("max_inner", c.max_inner);
            in("max_backtracks", c.max_backtracks);
            flag("structured", c.structured);
            flag("record_steps", c.record_steps);
            return c;
        }

        AoConfig parse_ao(const json &a)
        {
            check_keys(a, "ao", {"grid_points", "tolerance", "max_rounds"});
            AoConfig c;
            if (a.contains("grid_points"))
                c.grid_points = integer(a["grid_points"], "ao.grid_points");
            if (a.contains("tolerance"))
                c.tolerance = number(a["tolerance"], "ao.tolerance");
            if (a.contains("max_rounds"))
                c.max_rounds = integer(a["max_rounds"], "ao.max_rounds");
            return c;
        }

        json link_json(const LinkFading &l)
        {
            return {{"exponent", l.exponent}, {"k_factor", number_json(l.k_factor)}};
        }

        json point_json(Point2 p) { return json::array({p.x, p.y}); }

        std::string fmt(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }

        // Geometry and transmit power at one sweep point.
        struct SweepPoint
        {
            double value = 0.0;
            Geometry geometry;
            double p_max_dbm = 0.0;
        };

        std::vector<SweepPoint> sweep_points(const ExperimentConfig &cfg, SweepKind kind)
        {
            std::vector<SweepPoint> pts;
            auto push = [&](double v, Geometry g, double p)
            {
                g.validate();
                pts.push_back({v, g, p});
            };
            switch (kind)
            {
            case SweepKind::Power:
                for (double p : cfg.sweeps.power_dbm)
                    push(p, cfg.geometry, p);
                break;
            case SweepKind::Elements:
                for (int n : cfg.sweeps.elements)
                    push(n, with_elements(cfg.geometry, n), cfg.p_max_dbm);
                break;
            case SweepKind::EveY:
                for (double y : cfg.sweeps.eve_y)
                {
                    Geometry g = cfg.geometry;
                    g.eve.y = y;
                    push(y, g, cfg.p_max_dbm);
                }
                break;
            case SweepKind::UserY:
                for (double y : cfg.sweeps.user_y)
                {
                    Geometry g = cfg.geometry;
                    g.user.y = y;
                    push(y, g, cfg.p_max_dbm);
                }
                break;
            case SweepKind::RisY:
                for (double y : cfg.sweeps.ris_y)
                {
                    Geometry g = cfg.geometry;
                    g.ris.y = y;
                    push(y, g, cfg.p_max_dbm);
                }
                break;
            }
            if (pts.empty())
                throw std::invalid_argument("sweep '" + std::string(sweep_kind_id(kind)) + "' has no points");
            return pts;
        }

        struct CellResult
        {
            double lesr = 0.0;
            double esr_mean = 0.0;
            double esr_stderr = 0.0;
            int iterations = 0;
            double wall_time_s = 0.0;
        };
    } // namespace

    std::string_view sweep_kind_id(SweepKind k)
    {
        switch (k)
        {
        case SweepKind::Power:
            return "power";
        case SweepKind::Elements:
            return "elements";
        case SweepKind::EveY:
            return "eve-y";
        case SweepKind::UserY:
            return "user-y";
        case SweepKind::RisY:
            return "ris-y";
        }
        return "unknown";
    }

    SweepKind parse_sweep_kind(std::string_view id)
    {
        for (SweepKind k : {SweepKind::Power, SweepKind::Elements, SweepKind::EveY, SweepKind::UserY, SweepKind::RisY})
            if (sweep_kind_id(k) == id)
                return k;
        throw std::invalid_argument("unknown sweep kind '" + std::string(id) + "'");
    }

    void ExperimentConfig::validate() const
    {
        geometry.validate();
        fading.validate();
        pdca.validate();
        ao.validate();
        if (!std::isfinite(p_max_dbm))
            throw std::invalid_argument("config: p_max_dbm must be finite");
        if (n_mc < 2)
            throw std::invalid_argument("config: n_mc must be >= 2");
        if (n_user_realizations < 1)
            throw std::invalid_argument("config: n_user_realizations must be >= 1");
        if (schemes.empty())
            throw std::invalid_argument("config: schemes must not be empty");
        for (double p : sweeps.power_dbm)
            if (!std::isfinite(p))
                throw std::invalid_argument("config: sweeps.power_dbm entries must be finite");
        for (int n : sweeps.elements)
            with_elements(geometry, n);
    }

    ExperimentConfig parse_config(const json &doc)
    {
        check_keys(doc, "<root>",
                   {"geometry", "fading", "p_max_dbm", "p_max_w", "sweeps", "schemes", "n_mc",
                    "n_user_realizations", "seed", "pdca", "ao", "output", "record_wall_time"});
        ExperimentConfig c;
        if (doc.contains("geometry"))
            c.geometry = parse_geometry(doc["geometry"]);
        if (doc.contains("fading"))
            c.fading = parse_fading(doc["fading"]);
        if (doc.contains("p_max_dbm") && doc.contains("p_max_w"))
            fail("<root>", "give either 'p_max_dbm' or 'p_max_w', not both");
        if (doc.contains("p_max_dbm"))
            c.p_max_dbm = number(doc["p_max_dbm"], "p_max_dbm");
        if (doc.contains("p_max_w"))
        {
            const double w = number(doc["p_max_w"], "p_max_w");
            if (!(w > 0.0))
                fail("p_max_w", "must be > 0");
            c.p_max_dbm = watts_to_dbm(w);
        }
        if (doc.contains("sweeps"))
            c.sweeps = parse_sweeps(doc["sweeps"]);
        if (doc.contains("schemes"))
        {
            const json &s = doc["schemes"];
            if (!s.is_array())
                fail("schemes", "expected an array of scheme ids");
            c.schemes.clear();
            for (const auto &id : s)
            {
                if (!id.is_string())
                    fail("schemes", "expected scheme id strings");
                c.schemes.push_back(parse_scheme(id.get<std::string>()));
            }
        }
        if (doc.contains("n_mc"))
        {
            if (!doc["n_mc"].is_number_integer())
                fail("n_mc", "expected an integer");
            c.n_mc = doc["n_mc"].get<long>();
        }
        if (doc.contains("n_user_realizations"))
            c.n_user_realizations = integer(doc["n_user_realizations"], "n_user_realizations");
        if (doc.contains("seed"))
        {
            if (!doc["seed"].is_number_unsigned())
                fail("seed", "expected a non-negative integer");
            c.seed = doc["seed"].get<std::uint64_t>();
        }
        if (doc.contains("pdca"))
            c.pdca = parse_pdca(doc["pdca"]);
        if (doc.contains("ao"))
            c.ao = parse_ao(doc["ao"]);
        if (doc.contains("output"))
        {
            if (!doc["output"].is_string())
                fail("output", "expected a path string");
            c.output = doc["output"].get<std::string>();
        }
        if (doc.contains("record_wall_time"))
        {
            if (!doc["record_wall_time"].is_boolean())
                fail("record_wall_time", "expected true/false");
            c.record_wall_time = doc["record_wall_time"].get<bool>();
        }
        c.validate();
        return c;
    }

    ExperimentConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config '" + path + "'");
        json doc;
        try
        {
            doc = json::parse(in);
        }
        catch (const json::parse_error &e)
        {
            throw std::invalid_argument("config '" + path + "': " + e.what());
        }
        return parse_config(doc);
    }

    json to_json(const ExperimentConfig &c)
    {
        json doc;
        doc["geometry"] = {{"ap", point_json(c.geometry.ap)},
                           {"ris", point_json(c.geometry.ris)},
                           {"user", point_json(c.geometry.user)},
                           {"eve", point_json(c.geometry.eve)},
                           {"num_antennas", c.geometry.num_antennas},
                           {"ris_rows", c.geometry.ris_rows},
                           {"ris_cols", c.geometry.ris_cols},
                           {"ap_spacing", c.geometry.ap_spacing},
                           {"ris_spacing", c.geometry.ris_spacing}};
        doc["fading"] = {{"zeta0", c.fading.zeta0},
                         {"d0", c.fading.d0},
                         {"noise_user_w", c.fading.noise_user},
                         {"noise_eve_w", c.fading.noise_eve},
                         {"links",
                          {{"ap_user", link_json(c.fading.ap_user)},
                           {"ap_eve", link_json(c.fading.ap_eve)},
                           {"ris_user", link_json(c.fading.ris_user)},
                           {"ris_eve", link_json(c.fading.ris_eve)},
                           {"ap_ris", link_json(c.fading.ap_ris)}}}};
        doc["p_max_dbm"] = c.p_max_dbm;
        doc["sweeps"] = {{"power_dbm", c.sweeps.power_dbm},
                         {"elements", c.sweeps.elements},
                         {"eve_y", c.sweeps.eve_y},
                         {"user_y", c.sweeps.user_y},
                         {"ris_y", c.sweeps.ris_y}};
        json schemes = json::array();
        for (Scheme s : c.schemes)
            schemes.push_back(std::string(scheme_id(s)));
        doc["schemes"] = schemes;
        doc["n_mc"] = c.n_mc;
        doc["n_user_realizations"] = c.n_user_realizations;
        doc["seed"] = c.seed;
        const PdcaConfig &p = c.pdca;
        doc["pdca"] = {{"rho0", p.rho0},
                       {"rho_decrease", p.rho_decrease},
                       {"eta", p.eta},
                       {"eps_outer", p.eps_outer},
                       {"eps_inner", p.eps_inner},
                       {"alpha_phase_ini", p.alpha_phase_ini},
                       {"alpha_beam_ini", p.alpha_beam_ini},
                       {"shrink_phase", p.shrink_phase},
                       {"shrink_beam", p.shrink_beam},
                       {"armijo_phase", p.armijo_phase},
                       {"armijo_beam", p.armijo_beam},
                       {"max_outer", p.max_outer},
                       {"max_inner", p.max_inner},
                       {"max_backtracks", p.max_backtracks},
                       {"structured", p.structured},
                       {"record_steps", p.record_steps}};
        doc["ao"] = {{"grid_points", c.ao.grid_points},
                     {"tolerance", c.ao.tolerance},
                     {"max_rounds", c.ao.max_rounds}};
        doc["output"] = c.output;
        doc["record_wall_time"] = c.record_wall_time;
        return doc;
    }

    Geometry with_elements(const Geometry &geom, int n)
    {
        if (n < 0)
            throw std::invalid_argument("element count must be >= 0");
        if (geom.ris_rows < 1 || n % geom.ris_rows != 0)
            throw std::invalid_argument("element count " + std::to_string(n) + " is not a multiple of ris_rows = " +
                                        std::to_string(geom.ris_rows));
        Geometry g = geom;
        g.ris_cols = n / geom.ris_rows;
        return g;
    }

    std::uint64_t realization_seed(std::uint64_t master, int realization)
    {
        return derive_seed(master, streams::kRealization, static_cast<std::uint64_t>(realization));
    }

    SecrecyProblem make_problem(const Geometry &geom, const FadingStats &fading, double p_max_dbm,
                                std::uint64_t seed)
    {
        SecrecyProblem p;
        p.channels = build_scenario(geom, fading, seed);
        p.eve = eve_second_moments(geom, fading);
        p.noise = fading.noise();
        p.p_max = dbm_to_watts(p_max_dbm);
        return p;
    }

    SchemeOutcome run_scheme(Scheme scheme, const SecrecyProblem &problem, const ExperimentConfig &cfg,
                             std::uint64_t seed)
    {
        SchemeOutcome out;
        out.scheme = scheme;
        switch (scheme)
        {
        case Scheme::Pdca:
        {
            const auto [phi0, w0] = initial_point(problem, seed);
            PdcaResult r = pdca_solve(problem, cfg.pdca, phi0, w0);
            out.solution = std::move(r.solution);
            out.iterations = static_cast<int>(r.trace.outer.size());
            out.trace = std::move(r.trace);
            break;
        }
        case Scheme::NoRis:
        {
            BaselineResult r = no_ris_beamformer(problem);
            out.solution = std::move(r.solution);
            out.iterations = r.iterations;
            break;
        }
        case Scheme::AoElementwise:
        {
            BaselineResult r = ao_elementwise(problem, cfg.ao, seed);
            out.solution = std::move(r.solution);
            out.iterations = r.iterations;
            break;
        }
        case Scheme::RandomPhase:
        {
            BaselineResult r = random_phase_mrt(problem, seed);
            out.solution = std::move(r.solution);
            out.iterations = r.iterations;
            break;
        }
        }
        return out;
    }

    std::vector<SweepRow> run_sweep(const ExperimentConfig &cfg, SweepKind kind, int workers)
    {
        cfg.validate();
        const std::vector<SweepPoint> points = sweep_points(cfg, kind);
        const std::size_t n_real = static_cast<std::size_t>(cfg.n_user_realizations);
        const std::size_t n_sch = cfg.schemes.size();
        std::vector<CellResult> cells(points.size() * n_real * n_sch);

        // One task per (point, realization). Realization seeds do not depend on the sweep
        // point, so every point and scheme sees the same user-channel and Eve draws.
        parallel_for(
            points.size() * n_real,
            [&](std::size_t task)
            {
                const std::size_t pi = task / n_real;
                const int r = static_cast<int>(task % n_real);
                const std::uint64_t rs = realization_seed(cfg.seed, r);
                const SweepPoint &pt = points[pi];
                const SecrecyProblem problem = make_problem(pt.geometry, cfg.fading, pt.p_max_dbm, rs);
                const std::uint64_t mc_seed = derive_seed(rs, streams::kMonteCarlo);
                for (std::size_t si = 0; si < n_sch; ++si)
                {
                    const auto t0 = std::chrono::steady_clock::now();
                    const SchemeOutcome o = run_scheme(cfg.schemes[si], problem, cfg, rs);
                    const EsrEstimate e = esr_estimate(o.solution, problem, cfg.n_mc, mc_seed, 1);
                    const auto t1 = std::chrono::steady_clock::now();
                    CellResult &c = cells[task * n_sch + si];
                    c.lesr = o.solution.lesr;
                    c.esr_mean = e.mean;
                    c.esr_stderr = e.std_error;
                    c.iterations = o.iterations;
                    c.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
                }
            },
            workers);

        std::vector<SweepRow> rows;
        for (std::size_t pi = 0; pi < points.size(); ++pi)
        {
            for (std::size_t si = 0; si < n_sch; ++si)
            {
                CompensatedSum lesr, esr, var, iters, wall;
                for (std::size_t r = 0; r < n_real; ++r)
                {
                    const CellResult &c = cells[(pi * n_real + r) * n_sch + si];
                    lesr.add(c.lesr);
                    esr.add(c.esr_mean);
                    var.add(c.esr_stderr * c.esr_stderr);
                    iters.add(c.iterations);
                    wall.add(c.wall_time_s);
                }
                const double R = static_cast<double>(n_real);
                SweepRow row;
                row.kind = kind;
                row.sweep_value = points[pi].value;
                row.num_antennas = points[pi].geometry.num_antennas;
                row.num_elements = points[pi].geometry.ris_elements();
                row.p_max_dbm = points[pi].p_max_dbm;
                row.scheme = cfg.schemes[si];
                row.seed = cfg.seed;
                row.realizations = cfg.n_user_realizations;
                row.n_mc = cfg.n_mc;
                row.lesr = lesr.value() / R;
                row.esr_mean = esr.value() / R;
                row.esr_stderr = std::sqrt(var.value()) / R;
                row.iterations = iters.value() / R;
                row.wall_time_s = wall.value() / R;
                rows.push_back(row);
            }
        }
        return rows;
    }

    std::string sweep_csv_header(bool with_wall_time)
    {
        std::string h = "schema_version,sweep_kind,sweep_value,num_antennas,num_elements,p_max_dbm,scheme,"
                        "scheme_label,seed,realizations,n_mc,lesr,esr_mean,esr_stderr,iterations";
        if (with_wall_time)
            h += ",wall_time_s";
        return h;
    }

    std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_wall_time)
    {
        std::ostringstream os;
        os << sweep_csv_header(with_wall_time) << '\n';
        for (const SweepRow &r : rows)
        {
            os << kCsvSchemaVersion << ',' << sweep_kind_id(r.kind) << ',' << fmt(r.sweep_value) << ','
               << r.num_antennas << ',' << r.num_elements << ',' << fmt(r.p_max_dbm) << ',' << scheme_id(r.scheme)
               << ',' << scheme_label(r.scheme) << ',' << r.seed << ',' << r.realizations << ',' << r.n_mc << ','
               << fmt(r.lesr) << ',' << fmt(r.esr_mean) << ',' << fmt(r.esr_stderr) << ',' << fmt(r.iterations);
            if (with_wall_time)
                os << ',' << fmt(r.wall_time_s);
            os << '\n';
        }
        return os.str();
    }

    void write_text_file(const std::string &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << content;
        if (!out)
            throw std::runtime_error("write to '" + path + "' failed");
    }

    SolveOutput solve_once(const ExperimentConfig &cfg, Scheme scheme, int workers)
    {
        cfg.validate();
        const std::uint64_t rs = realization_seed(cfg.seed, 0);
        SolveOutput out;
        out.problem = make_problem(cfg.geometry, cfg.fading, cfg.p_max_dbm, rs);
        out.outcome = run_scheme(scheme, out.problem, cfg, rs);
        out.esr = esr_estimate(out.outcome.solution, out.problem, cfg.n_mc, derive_seed(rs, streams::kMonteCarlo),
                               workers);
        return out;
    }

    std::string trace_csv_header()
    {
        return "schema_version,level,outer,inner,rho,violation,lesr,al_inner,al_outer,inner_iterations,"
               "alpha_phase,alpha_beam,phase_accepted,beam_accepted,multiplier_updated,esr_mean,esr_stderr";
    }

    std::string trace_csv(const SolveOutput &out)
    {
        std::ostringstream os;
        os << trace_csv_header() << '\n';
        const auto b = [](bool x)
        { return x ? "1" : "0"; };
        if (out.outcome.trace)
        {
            const SolveTrace &t = *out.outcome.trace;
            std::size_t ii = 0;
            for (const OuterRecord &o : t.outer)
            {
                for (; ii < t.inner.size() && t.inner[ii].outer == o.outer; ++ii)
                {
                    const InnerRecord &r = t.inner[ii];
                    os << kCsvSchemaVersion << ",inner," << r.outer << ',' << r.inner << ',' << fmt(o.rho) << ','
                       << fmt(r.violation) << ",," << fmt(r.al_value) << ",,," << fmt(r.alpha_phase) << ','
                       << fmt(r.alpha_beam) << ',' << b(r.phase_accepted) << ',' << b(r.beam_accepted) << ",,,\n";
                }
                os << kCsvSchemaVersion << ",outer," << o.outer << ",," << fmt(o.rho) << ',' << fmt(o.violation)
                   << ',' << fmt(o.lesr) << ",," << fmt(o.al_value) << ',' << o.inner_iterations << ','
                   << fmt(o.alpha_phase) << ',' << fmt(o.alpha_beam) << ",,," << b(o.multiplier_updated) << ",,\n";
            }
        }
        const Solution &s = out.outcome.solution;
        const double viol = out.outcome.scheme == Scheme::NoRis ? 0.0 : unit_modulus_violation(s.phi);
        os << kCsvSchemaVersion << ",final," << out.outcome.iterations << ",,," << fmt(viol) << ',' << fmt(s.lesr)
           << ",,,,,,,,," << fmt(out.esr.mean) << ',' << fmt(out.esr.std_error) << '\n';
        return os.str();
    }
} // namespace rissec
