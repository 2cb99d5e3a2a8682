#include "qtpm/matchset.hpp"

#include "qtpm/errors.hpp"

namespace qtpm {

std::string format_piece(const MatchPiece& piece, Semiring sr) {
    return piece.region.to_string() + " : " + sr.format(piece.value);
}

MatchSet::Insert MatchSet::insert(const Zone2D& region, Value value) {
    if (region.is_empty()) return Insert::Unchanged;
    auto [it, fresh] = index_.try_emplace(region.zone(), pieces_.size());
    if (fresh) {
        pieces_.push_back({region, value});
        return Insert::Added;
    }
    Value& slot = pieces_[it->second].value;
    const Value merged = sr_.oplus(slot, value);
    if (merged == slot) return Insert::Unchanged;
    slot = merged;
    return Insert::Raised;
}

const MatchPiece* MatchSet::find(const Zone2D& region) const {
    auto it = index_.find(region.zone());
    return it == index_.end() ? nullptr : &pieces_[it->second];
}

Value MatchSet::query(const Rational& t, const Rational& t_prime) const {
    if (t.sign() < 0 || !(t < t_prime)) throw DomainError("query needs 0 <= t < t'");
    Value acc = sr_.zero();
    for (const auto& p : pieces_)
        if (p.region.contains(t, t_prime)) acc = sr_.oplus(acc, p.value);
    return acc;
}

void MatchSet::export_text(std::ostream& os) const {
    for (const auto& p : pieces_) os << format_piece(p, sr_) << '\n';
}

void MatchSet::export_grid(std::ostream& os, const Rational& delta, const Rational& horizon) const {
    if (delta.sign() <= 0) throw DomainError("grid step must be positive");
    os << "t\tt'\tvalue\n";
    for (Rational t = 0; t < horizon; t += delta)
        for (Rational tp = t + delta; tp <= horizon; tp += delta)
            os << t << '\t' << tp << '\t' << sr_.format(query(t, tp)) << '\n';
}

}  // namespace qtpm
