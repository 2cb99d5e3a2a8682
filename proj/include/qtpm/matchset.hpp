#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtpm/errors.hpp"
#include "qtpm/rational.hpp"
#include "qtpm/semiring.hpp"
#include "qtpm/zone.hpp"

namespace qtpm {

struct MatchPiece {
    Zone2D region;
    Value value;
};

// "t in [0,7.5), t' in (0,17.5], t'-t in (0,10) : 5"
std::string format_piece(const MatchPiece& piece, Semiring sr);

// Quantitative matching function as (region, value) pieces. Regions may
// overlap; a query takes the oplus over every piece containing the point.
class MatchSet {
public:
    enum class Insert { Added, Raised, Unchanged };

    explicit MatchSet(Semiring sr) : sr_(sr) {}

    Semiring semiring() const { return sr_; }
    const std::vector<MatchPiece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }

    // Merges with oplus into an identical region if present, else appends.
    // Empty regions are ignored (reported as Unchanged).
    Insert insert(const Zone2D& region, Value value);
    const MatchPiece* find(const Zone2D& region) const;

    // Requires 0 <= t < t_prime; throws DomainError otherwise.
    Value query(const Rational& t, const Rational& t_prime) const;

    // One piece per line in insertion order.
    void export_text(std::ostream& os) const;
    // TSV "t\tt'\tvalue" for every (k*delta, k'*delta) with 0 <= k*delta < k'*delta <= horizon.
    void export_grid(std::ostream& os, const Rational& delta, const Rational& horizon) const;

private:
    Semiring sr_;
    std::vector<MatchPiece> pieces_;
    std::unordered_map<Zone, std::size_t, ZoneHash> index_;
};

}  // namespace qtpm
