#pragma once

// Shared fixtures: the running 4-element convex geometry (11 convex sets) and
// the 4-element bouquet that is not an ideal of any geometry on the same
// universe, plus small family builders.

#include <string>
#include <vector>

#include "orthantgeo/convex_geometry.hpp"

namespace og::testing {

inline Universe universe_n(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Universe(labels);
}

inline SetFamily make_family(const Universe& u,
                             const std::vector<std::vector<std::string>>& sets) {
    std::vector<Mask> members;
    for (const auto& s : sets) members.push_back(u.mask_of(s));
    return SetFamily::make(u, std::move(members));
}

// 11 convex sets on {1,2,3,4}
inline SetFamily geometry4_family() {
    const Universe u = universe_n(4);
    return make_family(u, {{},
                           {"1"},
                           {"2"},
                           {"3"},
                           {"4"},
                           {"1", "2"},
                           {"2", "3"},
                           {"3", "4"},
                           {"1", "2", "3"},
                           {"2", "3", "4"},
                           {"1", "2", "3", "4"}});
}

inline ConvexGeometry geometry4() { return ConvexGeometry::from_family(geometry4_family()); }

// bouquet on {1,2,3,4}: drops the full set, gains {1,4}
inline SetFamily bouquet4_family() {
    const Universe u = universe_n(4);
    return make_family(u, {{},
                           {"1"},
                           {"2"},
                           {"3"},
                           {"4"},
                           {"1", "2"},
                           {"1", "4"},
                           {"2", "3"},
                           {"3", "4"},
                           {"1", "2", "3"},
                           {"2", "3", "4"}});
}

inline ConvexGeometry chain3() {
    const Universe u = universe_n(3);
    return ConvexGeometry::from_family(
        make_family(u, {{}, {"1"}, {"1", "2"}, {"1", "2", "3"}}));
}

inline ConvexGeometry free_geometry(int n) {
    const Universe u = universe_n(n);
    std::vector<Mask> members;
    for (Mask m = 0; m <= u.full_mask(); ++m) {
        members.push_back(m);
        if (m == u.full_mask()) break;
    }
    return ConvexGeometry::from_family(SetFamily::make(u, std::move(members)));
}

}  // namespace og::testing
