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


#include "support.hpp"

using namespace rissec;
using namespace rissec::test;

namespace
{
    GradientCheckOptions quick_options()
    {
        GradientCheckOptions o;
        o.instances = 3;
        o.directions = 4;
        return o;
    }

    CVector correct_phase(const CVector &phi, const StructuredPhaseQuadratics &q, const DualState &d)
    {
        return grad_phase(phi, q, d);
    }

    CVector correct_beam(const CVector &w, const BeamQuadratics &q)
    {
        return grad_beam(w, q);
    }
} // namespace

TEST_CASE("gradient check passes for the library gradients", "[validation]")
{
    const OracleReport r = check_gradients(quick_options(), correct_phase, correct_beam);
    INFO(r.detail);
    CHECK(r.passed);
    CHECK(r.metric <= r.threshold);
}

TEST_CASE("gradient check catches a sign-flipped phase gradient", "[validation][mutation]")
{
    const OracleReport r = check_gradients(
        quick_options(), [](const CVector &phi, const StructuredPhaseQuadratics &q, const DualState &d)
        { return CVector(-grad_phase(phi, q, d)); },
        correct_beam);
    CHECK_FALSE(r.passed);
}

TEST_CASE("gradient check catches a conjugated beam gradient", "[validation][mutation]")
{
    const OracleReport r = check_gradients(quick_options(), correct_phase,
                                           [](const CVector &w, const BeamQuadratics &q)
                                           { return CVector(grad_beam(w, q).conjugate()); });
    CHECK_FALSE(r.passed);
}

TEST_CASE("gradient check catches a gradient off by a factor of two", "[validation][mutation]")
{
    const OracleReport r = check_gradients(
        quick_options(), [](const CVector &phi, const StructuredPhaseQuadratics &q, const DualState &d)
        { return CVector(0.5 * grad_phase(phi, q, d)); },
        correct_beam);
    CHECK_FALSE(r.passed);
}

TEST_CASE("structural oracles pass", "[validation]")
{
    std::vector<OracleReport> reports{check_structured_dense(10, 1), check_ratio_routes(10, 2)};
    for (const OracleReport &r : check_descent_and_feasibility(3, 3))
        reports.push_back(r);
    CHECK(reports.size() == 4);
    for (const OracleReport &r : reports)
    {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("complexity check returns a finite slope", "[validation]")
{
    const OracleReport r = check_complexity({16, 32, 64}, 5, 100.0);
    INFO(r.detail);
    CHECK(std::isfinite(r.metric));
    CHECK(r.passed);
}

TEST_CASE("report formatting", "[validation]")
{
    OracleReport r;
    r.name = "demo";
    r.detail = "metric 1 <= 2";
    r.passed = true;
    CHECK(format_report(r) == "PASS demo: metric 1 <= 2");
    r.passed = false;
    CHECK(format_report(r) == "FAIL demo: metric 1 <= 2");
}

TEST_CASE("reference_problem is deterministic and sized", "[validation]")
{
    const SecrecyProblem a = reference_problem(16, 5), b = reference_problem(16, 5);
    CHECK(a.num_elements() == 16);
    CHECK((a.channels.h_au - b.channels.h_au).norm() == 0.0);
    CHECK((a.channels.h_iu - b.channels.h_iu).norm() == 0.0);
}
