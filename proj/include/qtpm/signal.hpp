#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtpm/errors.hpp"
#include "qtpm/rational.hpp"

namespace qtpm {

// Signal values indexed by variable position (see Signal::variables()).
using Valuation = std::vector<double>;
using ValuationView = std::span<const double>;

// Element of (D^X)^*: a value sequence without equal neighbours. Empty means epsilon.
class ValueSeq {
public:
    ValueSeq() = default;
    explicit ValueSeq(std::vector<Valuation> values);  // collapses equal neighbours

    bool empty() const { return size_ == 0; }
    std::size_t size() const { return size_; }
    ValuationView operator[](std::size_t i) const { return {flat_.data() + i * width_, width_}; }
    ValuationView back() const { return (*this)[size_ - 1]; }
    std::vector<Valuation> values() const;
    // All elements back to back; hashing reads this directly.
    const std::vector<double>& flat() const { return flat_; }

    // In-place absorbing append of a single valuation. Every element must
    // have the same width.
    void push(ValuationView v);

    friend bool operator==(const ValueSeq&, const ValueSeq&) = default;
    friend auto operator<=>(const ValueSeq&, const ValueSeq&) = default;

private:
    // One allocation per sequence: states copy these a lot.
    std::size_t size_ = 0;
    std::size_t width_ = 0;
    std::vector<double> flat_;
};

// a o b: concatenation that collapses an equal pair at the seam.
ValueSeq absorbing_concat(const ValueSeq& a, const ValueSeq& b);

struct Segment {
    Valuation value;
    Rational duration;
};

// Piecewise-constant signal a_1^{tau_1} ... a_n^{tau_n} with exact durations.
class Signal {
public:
    Signal() = default;
    explicit Signal(std::vector<std::string> variables, std::vector<Segment> segments = {});

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }
    bool empty() const { return segments_.empty(); }

    // Appends a segment; duration must be positive and arity must match.
    void append(Segment s);

    Rational duration() const { return boundaries_.empty() ? Rational(0) : boundaries_.back(); }
    // T_i = tau_1 + ... + tau_i for i in 1..n; boundary(0) == 0.
    Rational boundary(std::size_t i) const { return i == 0 ? Rational(0) : boundaries_[i - 1]; }

    // Index k (0-based) of the segment whose half-open interval contains t.
    std::size_t segment_at(const Rational& t) const;
    const Valuation& value_at(const Rational& t) const;

    // sigma([t, t')) with trimmed first/last segments.
    Signal restrict(const Rational& t, const Rational& t_end) const;

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<Segment> segments_;
    std::vector<Rational> boundaries_;
};

ValueSeq values(const Signal& sigma);

// Merges adjacent segments with equal values.
Signal normalize(const Signal& sigma);

// Re-orders and filters signal columns to match `variables`. Throws
// std::invalid_argument if one of them is missing. The result is normalized.
Signal bind_variables(const Signal& sigma, const std::vector<std::string>& variables);

// Incremental reader for the text signal format:
//
//   # comment
//   x y            <- header with variable names
//   3.5 7 1        <- duration (decimal or p/q) followed by one value per variable
//
// Segments are produced one line at a time so that a monitor can react before
// the input is complete.
class SignalReader {
public:
    explicit SignalReader(std::istream& in);

    // Reads up to the header. Returns false on end of input before a header.
    bool read_header();
    const std::vector<std::string>& variables() const { return variables_; }

    // Next segment, std::nullopt at end of input. Throws ParseError.
    std::optional<Segment> next();

private:
    bool next_content_line(std::string& line);

    std::istream& in_;
    std::vector<std::string> variables_;
    std::size_t line_no_ = 0;
    bool header_read_ = false;
};

// Reads a whole signal (not normalized).
Signal read_signal(std::istream& in);
Signal read_signal_file(const std::string& path);

}  // namespace qtpm
