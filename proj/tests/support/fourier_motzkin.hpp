#pragma once

// Fourier-Motzkin elimination as an independent feasibility oracle for strict
// systems in low dimension.  Test-only: exponential row blowup, never a
// production path.

#include <algorithm>
#include <set>
#include <vector>

#include "orthantgeo/exact_lp.hpp"

namespace og::testing {

inline bool fm_strictly_feasible(const StrictSystem& sys) {
    using Row = std::pair<RatVec, Rational>;  // a.x > b
    std::vector<Row> rows;
    for (const auto& raw : sys.rows) {
        RatVec a = raw.coeffs;
        Rational b = raw.rhs;
        if (raw.rel == Rel::Less) {
            for (auto& c : a) c = -c;
            b = -b;
        }
        rows.push_back({std::move(a), std::move(b)});
    }

    auto normalize = [](Row r) {
        // scale so the first nonzero entry (or rhs) is +/-1, for dedup
        Rational scale(0);
        for (const auto& c : r.first)
            if (!c.is_zero()) {
                scale = c;
                break;
            }
        if (scale.is_zero()) scale = r.second.is_zero() ? Rational(1) : r.second;
        if (scale.sign() < 0) scale = -scale;
        if (scale.is_zero()) scale = Rational(1);
        for (auto& c : r.first) c /= scale;
        r.second /= scale;
        return r;
    };

    for (int var = sys.dimension - 1; var >= 0; --var) {
        std::vector<Row> lows, highs, rest;
        for (auto& r : rows) {
            const int s = r.first[var].sign();
            if (s > 0)
                lows.push_back(std::move(r));
            else if (s < 0)
                highs.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        std::set<std::vector<std::string>> seen;
        auto add = [&](Row r) {
            r = normalize(std::move(r));
            std::vector<std::string> key;
            for (const auto& c : r.first) key.push_back(c.str());
            key.push_back(r.second.str());
            if (seen.insert(key).second) rest.push_back(std::move(r));
        };
        for (const auto& lo : lows)
            for (const auto& hi : highs) {
                // lo: p x_var > b_lo - rest_lo ; hi: -q x_var > b_hi - rest_hi
                const Rational p = lo.first[var];
                const Rational q = -hi.first[var];
                Row combined;
                combined.first.resize(sys.dimension, Rational(0));
                for (int i = 0; i < sys.dimension; ++i)
                    combined.first[i] = q * lo.first[i] + p * hi.first[i];
                combined.second = q * lo.second + p * hi.second;
                combined.first[var] = Rational(0);
                add(std::move(combined));
            }
        rows = std::move(rest);
        // early contradiction check on constant rows
        for (const auto& r : rows) {
            bool constant = true;
            for (const auto& c : r.first)
                if (!c.is_zero()) {
                    constant = false;
                    break;
                }
            if (constant && !(Rational(0) > r.second)) return false;
        }
    }
    for (const auto& r : rows)
        if (!(Rational(0) > r.second)) return false;
    return true;
}

}  // namespace og::testing
