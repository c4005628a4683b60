#include "orthantgeo/exact_lp.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace og {

namespace {

// ---------------------------------------------------------------------------
// Two-phase primal simplex on the equality form  max c.z  s.t.  A z = b, z >= 0.
// Dense exact tableau, Bland's rule on both the entering and the leaving
// choice, so cycling is impossible.
// ---------------------------------------------------------------------------

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    RatVec z;       // length = number of structural columns
    Rational obj;
};

class Simplex {
   public:
    Simplex(std::vector<RatVec> a, RatVec b) : a_(std::move(a)), b_(std::move(b)) {
        m_ = a_.size();
        k_ = m_ ? a_[0].size() : 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (b_[i].sign() < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
        }
        // append the artificial identity block; artificials start as the basis
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            a_[i].resize(k_ + m_, Rational(0));
            a_[i][k_ + i] = Rational(1);
            basis_[i] = static_cast<int>(k_ + i);
        }
    }

    LpOutcome run(const RatVec& c) {
        // Phase 1: maximize -sum(artificials).
        rc_.assign(k_ + m_, Rational(0));
        obj_ = Rational(0);
        for (std::size_t j = 0; j < k_; ++j) {
            Rational r(0);
            for (std::size_t i = 0; i < m_; ++i) r += a_[i][j];
            rc_[j] = r;
        }
        for (std::size_t i = 0; i < m_; ++i) obj_ -= b_[i];
        if (!iterate(/*cols=*/k_ + m_)) throw std::logic_error("simplex: phase 1 unbounded");
        if (obj_.sign() < 0) return {LpStatus::Infeasible, {}, {}};
        purge_artificials();

        // Phase 2 over structural columns only.
        rc_.assign(k_, Rational(0));
        obj_ = Rational(0);
        for (std::size_t j = 0; j < k_; ++j) rc_[j] = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int bi = basis_[rows_[i]];
            if (bi < static_cast<int>(k_) && c[bi].sign() != 0) {
                const Rational cb = c[bi];
                for (std::size_t j = 0; j < k_; ++j) rc_[j] -= cb * a_[rows_[i]][j];
                obj_ += cb * b_[rows_[i]];
            }
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int bi = basis_[rows_[i]];
            if (bi < static_cast<int>(k_)) rc_[bi] = Rational(0);
        }
        if (!iterate(/*cols=*/k_)) return {LpStatus::Unbounded, {}, {}};

        LpOutcome out;
        out.status = LpStatus::Optimal;
        out.obj = obj_;
        out.z.assign(k_, Rational(0));
        for (std::size_t r : rows_) {
            const int bi = basis_[r];
            if (bi < static_cast<int>(k_)) out.z[bi] = b_[r];
        }
        return out;
    }

   private:
    // Bland pivoting until no improving column.  Returns false on unbounded.
    bool iterate(std::size_t cols) {
        if (rows_.empty()) {
            rows_.resize(m_);
            for (std::size_t i = 0; i < m_; ++i) rows_[i] = i;
        }
        while (true) {
            int enter = -1;
            for (std::size_t j = 0; j < cols; ++j) {
                if (rc_[j].sign() > 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;  // index into rows_
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const auto r = rows_[i];
                if (a_[r][enter].sign() <= 0) continue;
                const Rational ratio = b_[r] / a_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[rows_[leave]])) {
                    best = ratio;
                    leave = static_cast<int>(i);
                }
            }
            if (leave < 0) return false;
            pivot(rows_[leave], enter, cols);
        }
    }

    void pivot(std::size_t row, int col, std::size_t cols) {
        const Rational p = a_[row][col];
        for (std::size_t j = 0; j < cols; ++j)
            if (a_[row][j].sign() != 0) a_[row][j] /= p;
        a_[row][col] = Rational(1);
        b_[row] /= p;
        for (std::size_t r : rows_) {
            if (r == row || a_[r][col].sign() == 0) continue;
            const Rational f = a_[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                if (a_[row][j].sign() != 0) a_[r][j] -= f * a_[row][j];
            a_[r][col] = Rational(0);
            b_[r] -= f * b_[row];
        }
        if (rc_[col].sign() != 0) {
            const Rational f = rc_[col];
            for (std::size_t j = 0; j < cols; ++j)
                if (a_[row][j].sign() != 0) rc_[j] -= f * a_[row][j];
            rc_[col] = Rational(0);
            obj_ += f * b_[row];
        }
        basis_[row] = col;
    }

    // After phase 1, pivot artificials out of the basis where possible and
    // drop redundant rows.
    void purge_artificials() {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t r = rows_[i];
            if (basis_[r] < static_cast<int>(k_)) {
                kept.push_back(r);
                continue;
            }
            int col = -1;
            for (std::size_t j = 0; j < k_; ++j) {
                if (a_[r][j].sign() != 0) {
                    col = static_cast<int>(j);
                    break;
                }
            }
            if (col >= 0) {
                pivot(r, col, k_ + m_);
                kept.push_back(r);
            }
            // else: all-zero over structurals, a redundant constraint; drop it
        }
        rows_ = std::move(kept);
    }

    std::vector<RatVec> a_;
    RatVec b_;
    RatVec rc_;
    Rational obj_;
    std::size_t m_ = 0, k_ = 0;
    std::vector<int> basis_;
    std::vector<std::size_t> rows_;  // live row indices
};

LpOutcome solve_eq(std::vector<RatVec> a, RatVec b, const RatVec& c) {
    Simplex s(std::move(a), std::move(b));
    return s.run(c);
}

// Normalizes a row to the form a.x > rhs.
StrictRow as_greater(const StrictRow& r) {
    if (r.rel == Rel::Greater) return r;
    StrictRow out;
    out.coeffs.reserve(r.coeffs.size());
    for (const auto& c : r.coeffs) out.coeffs.push_back(-c);
    out.rhs = -r.rhs;
    out.rel = Rel::Greater;
    return out;
}

}  // namespace

bool satisfies_strictly(const StrictSystem& s, const RatVec& x) {
    if (static_cast<int>(x.size()) != s.dimension) return false;
    for (const auto& row : s.rows) {
        const Rational v = dot(row.coeffs, x);
        if (row.rel == Rel::Greater ? !(v > row.rhs) : !(v < row.rhs)) return false;
    }
    return true;
}

std::optional<RatVec> strictly_feasible(const StrictSystem& s) {
    const int d = s.dimension;
    const std::size_t m = s.rows.size();
    if (m == 0) return RatVec(d, Rational(0));

    // Columns: u(d), v(d), t, row slacks(m), ceiling slack.
    const std::size_t cols = 2 * d + 1 + m + 1;
    const std::size_t tcol = 2 * d;
    std::vector<RatVec> a(m + 1, RatVec(cols, Rational(0)));
    RatVec b(m + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
        const StrictRow row = as_greater(s.rows[j]);
        if (static_cast<int>(row.coeffs.size()) != d)
            throw std::invalid_argument("strictly_feasible: row width mismatch");
        for (int i = 0; i < d; ++i) {
            a[j][i] = row.coeffs[i];
            a[j][d + i] = -row.coeffs[i];
        }
        a[j][tcol] = Rational(-1);
        a[j][2 * d + 1 + j] = Rational(-1);
        b[j] = row.rhs;
    }
    a[m][tcol] = Rational(1);
    a[m][cols - 1] = Rational(1);
    b[m] = Rational(1);

    RatVec c(cols, Rational(0));
    c[tcol] = Rational(1);

    const LpOutcome out = solve_eq(std::move(a), std::move(b), c);
    if (out.status == LpStatus::Infeasible) return std::nullopt;
    if (out.status != LpStatus::Optimal) throw std::logic_error("strictly_feasible: unbounded slack");
    if (!(out.obj > Rational(0))) return std::nullopt;
    RatVec x(d);
    for (int i = 0; i < d; ++i) x[i] = out.z[i] - out.z[d + i];
    if (!satisfies_strictly(s, x)) throw std::logic_error("strictly_feasible: witness failed substitution");
    return x;
}

std::optional<RatVec> homogeneous_strictly_feasible(const StrictSystem& s) {
    const int d = s.dimension;
    for (const auto& row : s.rows)
        if (!row.rhs.is_zero())
            throw std::invalid_argument("homogeneous_strictly_feasible: nonzero rhs");
    const std::size_t m = s.rows.size();
    if (m == 0) return RatVec(d, Rational(0));

    // a.x > 0 for all rows iff a.x >= 1 for all rows is (weakly) feasible.
    const std::size_t cols = 2 * d + m;
    std::vector<RatVec> a(m, RatVec(cols, Rational(0)));
    RatVec b(m, Rational(1));
    for (std::size_t j = 0; j < m; ++j) {
        const StrictRow row = as_greater(s.rows[j]);
        if (static_cast<int>(row.coeffs.size()) != d)
            throw std::invalid_argument("homogeneous_strictly_feasible: row width mismatch");
        for (int i = 0; i < d; ++i) {
            a[j][i] = row.coeffs[i];
            a[j][d + i] = -row.coeffs[i];
        }
        a[j][2 * d + j] = Rational(-1);
    }
    const RatVec c(cols, Rational(0));
    const LpOutcome out = solve_eq(std::move(a), std::move(b), c);
    if (out.status != LpStatus::Optimal) return std::nullopt;
    RatVec x(d);
    for (int i = 0; i < d; ++i) x[i] = out.z[i] - out.z[d + i];
    if (!satisfies_strictly(s, x))
        throw std::logic_error("homogeneous_strictly_feasible: witness failed substitution");
    return x;
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points) {
    const std::size_t d = p.size();
    for (const auto& v : points)
        if (v.size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    if (points.empty()) return false;

    const std::size_t k = points.size();
    std::vector<RatVec> a(d + 1, RatVec(k, Rational(0)));
    RatVec b(d + 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = points[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < k; ++j) a[d][j] = Rational(1);
    b[d] = Rational(1);
    const RatVec c(k, Rational(0));
    return solve_eq(std::move(a), std::move(b), c).status == LpStatus::Optimal;
}

std::optional<RatVec> strictly_feasible_1d(const StrictSystem& s) {
    if (s.dimension != 1) throw std::invalid_argument("strictly_feasible_1d: dimension != 1");
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const auto& raw : s.rows) {
        const StrictRow row = as_greater(raw);
        const Rational& a = row.coeffs[0];
        if (a.sign() == 0) {
            if (!(Rational(0) > row.rhs)) return std::nullopt;
            continue;
        }
        const Rational bound = row.rhs / a;
        if (a.sign() > 0) {
            if (!has_lo || bound > lo) lo = bound;
            has_lo = true;
        } else {
            if (!has_hi || bound < hi) hi = bound;
            has_hi = true;
        }
    }
    Rational x(0);
    if (has_lo && has_hi) {
        if (!(lo < hi)) return std::nullopt;
        x = (lo + hi) / Rational(2);
    } else if (has_lo) {
        x = lo + Rational(1);
    } else if (has_hi) {
        x = hi - Rational(1);
    }
    RatVec w{x};
    if (!satisfies_strictly(s, w)) throw std::logic_error("strictly_feasible_1d: witness failed");
    return w;
}

std::optional<RatVec> strictly_feasible_2d_boxed(const StrictSystem& s, const Box2& box) {
    if (s.dimension != 2) throw std::invalid_argument("strictly_feasible_2d_boxed: dimension != 2");
    using Pt = std::pair<Rational, Rational>;
    std::vector<Pt> poly{{box.xmin, box.ymin}, {box.xmax, box.ymin},
                         {box.xmax, box.ymax}, {box.xmin, box.ymax}};
    for (const auto& raw : s.rows) {
        const StrictRow row = as_greater(raw);
        // keep side a.p >= rhs
        std::vector<Pt> next;
        const std::size_t k = poly.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Pt& p = poly[i];
            const Pt& q = poly[(i + 1) % k];
            const Rational sp = row.coeffs[0] * p.first + row.coeffs[1] * p.second - row.rhs;
            const Rational sq = row.coeffs[0] * q.first + row.coeffs[1] * q.second - row.rhs;
            if (sp.sign() >= 0) next.push_back(p);
            if ((sp.sign() > 0 && sq.sign() < 0) || (sp.sign() < 0 && sq.sign() > 0)) {
                const Rational t = sp / (sp - sq);
                next.push_back({p.first + t * (q.first - p.first),
                                p.second + t * (q.second - p.second)});
            }
        }
        poly = std::move(next);
        if (poly.empty()) return std::nullopt;
    }
    // positive area <=> the open region is nonempty
    Rational area2(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % poly.size()];
        area2 += p.first * q.second - q.first * p.second;
    }
    if (area2.is_zero()) return std::nullopt;
    Rational cx(0), cy(0);
    for (const auto& p : poly) {
        cx += p.first;
        cy += p.second;
    }
    const Rational k(static_cast<long>(poly.size()));
    RatVec w{cx / k, cy / k};
    if (!satisfies_strictly(s, w)) throw std::logic_error("strictly_feasible_2d_boxed: witness failed");
    return w;
}

}  // namespace og
