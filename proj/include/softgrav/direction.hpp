//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 softgrav developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file softgrav/direction.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>

#include "kinematics.hpp"

namespace softgrav
{
//---------------------------------------------------------------------------//
/*!
 * Emission direction on the unit sphere as (polar cosine, azimuth).
 */
struct UnitDirection
{
    double z{1};
    double azimuth{0};

    Vec3 vector() const
    {
        double const sin_polar = std::sqrt(std::max(0.0, (1 - z) * (1 + z)));
        return {sin_polar * std::cos(azimuth), sin_polar * std::sin(azimuth),
                z};
    }

    static UnitDirection from_vector(Vec3 v)
    {
        double const r = norm(v);
        return {std::clamp(v.z / r, -1.0, 1.0), std::atan2(v.y, v.x)};
    }
};

//---------------------------------------------------------------------------//
}  // namespace softgrav
