#pragma once

// SVG rendering of one- and two-dimensional halfspace systems, for figures
// only.  This is the single module allowed to use floating point; nothing
// here feeds back into a certificate.

#include <optional>
#include <string>

#include "orthantgeo/realization.hpp"
#include "orthantgeo/verifier.hpp"

namespace og {

// Arrangement lines solid, cone facets dashed; regions labeled at their
// witness points when a report is supplied.
std::string render_svg(const HalfspaceSystem& sys, const VerificationReport* report = nullptr);

}  // namespace og
