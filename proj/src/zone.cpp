#include "qtpm/zone.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtpm {

bool Bound::admits(const Rational& d) const {
    if (infinite_) return true;
    return strict_ ? d < value_ : d <= value_;
}

Zone::Zone(std::size_t dim) : dim_(dim), m_(dim * dim, Bound::infinity()) {
    if (dim == 0) throw std::invalid_argument("zone dimension must include the reference clock");
}

Zone Zone::universe(std::size_t dim) {
    Zone z(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        z.ref(i, i) = Bound::le(0);
        z.ref(0, i) = Bound::le(0);
    }
    return z;
}

Zone Zone::zero(std::size_t dim) {
    Zone z(dim);
    std::fill(z.m_.begin(), z.m_.end(), Bound::le(0));
    return z;
}

Zone Zone::empty(std::size_t dim) {
    Zone z = zero(dim);
    z.mark_empty();
    return z;
}

Zone Zone::from_matrix(std::size_t dim, std::vector<Bound> entries) {
    if (entries.size() != dim * dim) throw std::invalid_argument("matrix size does not match dimension");
    Zone z(dim);
    z.m_ = std::move(entries);
    z.canonicalize();
    return z;
}

void Zone::mark_empty() {
    empty_ = true;
    std::fill(m_.begin(), m_.end(), Bound::le(0));
}

void Zone::canonicalize() {
    if (empty_) return;
    const std::size_t n = dim_;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const Bound& ik = m_[i * n + k];
            if (ik.is_infinite()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Bound& kj = m_[k * n + j];
                if (kj.is_infinite()) continue;
                Bound via = ik + kj;
                if (via < m_[i * n + j]) m_[i * n + j] = via;
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i * n + i] < Bound::le(0)) {
            mark_empty();
            return;
        }
        m_[i * n + i] = Bound::le(0);
    }
}

// Re-closes after entry (a, b) was tightened on a canonical matrix.
void Zone::close_from(std::size_t a, std::size_t b) {
    const std::size_t n = dim_;
    if (m_[b * n + a] + m_[a * n + b] < Bound::le(0)) {
        mark_empty();
        return;
    }
    const Bound ab = at(a, b);
    for (std::size_t i = 0; i < n; ++i) {
        const Bound ia = at(i, a);
        if (ia.is_infinite()) continue;
        const Bound iab = ia + ab;
        for (std::size_t j = 0; j < n; ++j) {
            const Bound& bj = at(b, j);
            if (bj.is_infinite()) continue;
            Bound via = iab + bj;
            if (via < at(i, j)) ref(i, j) = via;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (at(i, i) < Bound::le(0)) {
            mark_empty();
            return;
        }
}

Zone& Zone::constrain(std::size_t i, std::size_t j, const Bound& b) {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("clock index out of range");
    if (empty_ || !(b < at(i, j))) return *this;
    ref(i, j) = b;
    close_from(i, j);
    return *this;
}

Zone& Zone::intersect(const ClockConstraint& c) {
    switch (c.op) {
    case Cmp::Lt: return constrain(c.clock, 0, Bound::lt(c.constant));
    case Cmp::Le: return constrain(c.clock, 0, Bound::le(c.constant));
    case Cmp::Gt: return constrain(0, c.clock, Bound::lt(-c.constant));
    case Cmp::Ge: return constrain(0, c.clock, Bound::le(-c.constant));
    }
    return *this;
}

Zone& Zone::intersect(std::span<const ClockConstraint> guard) {
    for (const auto& c : guard) {
        if (empty_) break;
        intersect(c);
    }
    return *this;
}

Zone& Zone::intersect(const Zone& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("zone dimension mismatch");
    if (empty_) return *this;
    if (other.empty_) {
        mark_empty();
        return *this;
    }
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] = std::min(m_[k], other.m_[k]);
    canonicalize();
    return *this;
}

Zone& Zone::reset(std::span<const std::size_t> clocks) {
    if (empty_) return *this;
    for (std::size_t r : clocks) {
        if (r == 0 || r >= dim_) throw std::out_of_range("reset clock index out of range");
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j == r) continue;
            ref(r, j) = at(0, j);
            ref(j, r) = at(j, 0);
        }
        ref(r, r) = Bound::le(0);
    }
    return *this;
}

Zone& Zone::elapse() {
    if (empty_) return *this;
    for (std::size_t i = 1; i < dim_; ++i) {
        ref(i, 0) = Bound::infinity();
        if (!at(0, i).is_infinite()) ref(0, i) = Bound::lt(at(0, i).value());
    }
    // Dropping upper bounds and making lower bounds strict keeps a closed
    // matrix closed, so no re-tightening is needed.
    return *this;
}

Zone& Zone::clamp_time(std::size_t time_clock, const TimeWindow& w) {
    switch (w.kind) {
    case TimeWindow::Kind::Punctual:
        constrain(time_clock, 0, Bound::le(w.hi));
        constrain(0, time_clock, Bound::le(-w.hi));
        break;
    case TimeWindow::Kind::Open:
        constrain(time_clock, 0, Bound::lt(w.hi));
        constrain(0, time_clock, Bound::lt(-w.lo));
        break;
    case TimeWindow::Kind::HalfOpen:
        constrain(time_clock, 0, Bound::lt(w.hi));
        constrain(0, time_clock, Bound::le(-w.lo));
        break;
    }
    return *this;
}

bool Zone::includes(const Zone& other) const {
    if (other.dim_ != dim_) return false;
    if (other.empty_) return true;
    if (empty_) return false;
    for (std::size_t k = 0; k < m_.size(); ++k)
        if (other.m_[k] > m_[k]) return false;
    return true;
}

bool Zone::contains(std::span<const Rational> point) const {
    if (point.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    if (empty_) return false;
    auto coord = [&](std::size_t i) { return i == 0 ? Rational(0) : point[i]; };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (i != j && !at(i, j).admits(coord(i) - coord(j))) return false;
    return true;
}

bool operator==(const Zone& a, const Zone& b) {
    if (a.dim_ != b.dim_ || a.empty_ != b.empty_) return false;
    return a.empty_ || a.m_ == b.m_;
}

std::strong_ordering operator<=>(const Zone& a, const Zone& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (a.empty_ != b.empty_) return a.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.empty_) return std::strong_ordering::equal;
    for (std::size_t k = 0; k < a.m_.size(); ++k)
        if (auto c = a.m_[k] <=> b.m_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t Zone::hash() const {
    std::size_t h = dim_ * 0x9e3779b97f4a7c15ULL + (empty_ ? 1 : 0);
    if (empty_) return h;
    for (const auto& b : m_) {
        const std::size_t v = b.is_infinite()
                                  ? 0x51ed27ULL
                                  : static_cast<std::size_t>(b.value().num()) * 31 +
                                        static_cast<std::size_t>(b.value().den()) * 7 + (b.strict() ? 1 : 0);
        h = (h ^ v) * 0x100000001b3ULL;
    }
    return h;
}

std::string Zone::to_string(std::span<const std::string> names) const {
    if (empty_) return "false";
    auto name = [&](std::size_t i) -> std::string {
        if (i < names.size()) return names[i];
        return i == 0 ? "0" : "x" + std::to_string(i);
    };
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || at(i, j).is_infinite()) continue;
            // skip the implicit non-negativity constraints
            if (i == 0 && at(i, j) == Bound::le(0)) continue;
            if (!out.empty()) out += " && ";
            std::string lhs = (j == 0) ? name(i) : (i == 0 ? "-" + name(j) : name(i) + "-" + name(j));
            out += lhs + (at(i, j).strict() ? "<" : "<=") + at(i, j).value().to_string();
        }
    return out.empty() ? "true" : out;
}

bool satisfies_time_bounds(const Zone& z, std::size_t time_clock, const Rational& horizon) {
    if (z.is_empty()) return true;
    if (!(z.at(time_clock, 0) <= Bound::le(horizon))) return false;
    for (std::size_t c = 1; c < z.dim(); ++c) {
        if (!(z.at(0, c) <= Bound::le(0))) return false;
        if (c != time_clock && !(z.at(c, time_clock) <= Bound::le(0))) return false;
    }
    return true;
}

Zone2D::Zone2D(Zone z) : zone_(std::move(z)) {
    if (zone_.dim() != 3) throw std::invalid_argument("Zone2D needs a 3x3 matrix over (0, t, t')");
}

bool Zone2D::contains(const Rational& t, const Rational& t_prime) const {
    const Rational p[3] = {Rational(0), t, t_prime};
    return zone_.contains(p);
}

std::string render_interval(const Bound& neg_lower, const Bound& upper) {
    std::string out;
    if (neg_lower.is_infinite())
        out = "(-inf";
    else
        out = (neg_lower.strict() ? "(" : "[") + (-neg_lower.value()).to_string();
    out += ",";
    if (upper.is_infinite())
        out += "inf)";
    else
        out += upper.value().to_string() + (upper.strict() ? ")" : "]");
    return out;
}

std::string Zone2D::to_string() const {
    if (zone_.is_empty()) return "empty";
    return "t in " + render_interval(zone_.at(0, kT), zone_.at(kT, 0)) + ", t' in " +
           render_interval(zone_.at(0, kTPrime), zone_.at(kTPrime, 0)) + ", t'-t in " +
           render_interval(zone_.at(kT, kTPrime), zone_.at(kTPrime, kT));
}

Zone2D project_match(const Zone& z, std::size_t time_clock, std::size_t start_clock) {
    if (z.is_empty()) return Zone2D(Zone::empty(3));
    // (0, t, t') correspond to the old (T, T', 0) with differences reversed:
    // y_i - y_j = x_{perm[j]} - x_{perm[i]}.
    const std::size_t perm[3] = {time_clock, start_clock, 0};
    std::vector<Bound> m;
    m.reserve(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.push_back(z.at(perm[j], perm[i]));
    return Zone2D(Zone::from_matrix(3, std::move(m)));
}

}  // namespace qtpm
