#include "qtpm/signal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtpm {

ValueSeq::ValueSeq(std::vector<Valuation> values) {
    for (auto& v : values) push(v);
}

void ValueSeq::push(ValuationView v) {
    if (size_ == 0) {
        width_ = v.size();
    } else {
        if (v.size() != width_) throw std::invalid_argument("valuation width differs from the sequence");
        if (std::ranges::equal(back(), v)) return;
    }
    flat_.insert(flat_.end(), v.begin(), v.end());
    ++size_;
}

std::vector<Valuation> ValueSeq::values() const {
    std::vector<Valuation> out;
    for (std::size_t i = 0; i < size_; ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
    return out;
}

ValueSeq absorbing_concat(const ValueSeq& a, const ValueSeq& b) {
    ValueSeq out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.push(b[i]);
    return out;
}

Signal::Signal(std::vector<std::string> variables, std::vector<Segment> segments)
    : variables_(std::move(variables)) {
    for (auto& s : segments) append(std::move(s));
}

void Signal::append(Segment s) {
    if (s.duration.sign() <= 0) throw DomainError("segment duration must be positive");
    if (s.value.size() != variables_.size()) throw DomainError("segment arity does not match the variables");
    boundaries_.push_back(duration() + s.duration);
    segments_.push_back(std::move(s));
}

std::size_t Signal::segment_at(const Rational& t) const {
    if (t.sign() < 0 || t >= duration()) throw DomainError("time " + t.to_string() + " outside [0, |sigma|)");
    // first boundary strictly greater than t
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), t);
    return static_cast<std::size_t>(it - boundaries_.begin());
}

const Valuation& Signal::value_at(const Rational& t) const { return segments_[segment_at(t)].value; }

Signal Signal::restrict(const Rational& t, const Rational& t_end) const {
    if (t.sign() < 0 || !(t < t_end) || t_end > duration())
        throw DomainError("restriction interval [" + t.to_string() + ", " + t_end.to_string() + ") outside the domain");
    const std::size_t k = segment_at(t);
    // last segment l with T_{l-1} < t_end <= T_l
    const auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), t_end);
    const std::size_t l = static_cast<std::size_t>(it - boundaries_.begin());

    Signal out(variables_);
    for (std::size_t i = k; i <= l; ++i) {
        const Rational from = std::max(t, boundary(i));
        const Rational to = std::min(t_end, boundary(i + 1));
        out.append({segments_[i].value, to - from});
    }
    return out;
}

ValueSeq values(const Signal& sigma) {
    ValueSeq out;
    for (const auto& s : sigma.segments()) out.push(s.value);
    return out;
}

Signal normalize(const Signal& sigma) {
    std::vector<Segment> merged;
    for (const auto& s : sigma.segments()) {
        if (!merged.empty() && merged.back().value == s.value)
            merged.back().duration += s.duration;
        else
            merged.push_back(s);
    }
    return Signal(sigma.variables(), std::move(merged));
}

Signal bind_variables(const Signal& sigma, const std::vector<std::string>& variables) {
    std::vector<std::size_t> column;
    for (const auto& name : variables) {
        const auto it = std::find(sigma.variables().begin(), sigma.variables().end(), name);
        if (it == sigma.variables().end()) throw std::invalid_argument("signal has no column for variable '" + name + "'");
        column.push_back(static_cast<std::size_t>(it - sigma.variables().begin()));
    }
    Signal out(variables);
    for (const auto& s : sigma.segments()) {
        Valuation v;
        v.reserve(column.size());
        for (auto c : column) v.push_back(s.value[c]);
        out.append({std::move(v), s.duration});
    }
    return normalize(out);
}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(column == 0 ? "line " + std::to_string(line) + ": " + message
                                     : std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

double parse_real(const std::string& tok, std::size_t line) {
    double v = 0.0;
    const char* first = tok.data();
    if (!tok.empty() && tok[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || std::isnan(v))
        throw ParseError("non-numeric value '" + tok + "'", line);
    return v;
}

}  // namespace

SignalReader::SignalReader(std::istream& in) : in_(in) {}

bool SignalReader::next_content_line(std::string& line) {
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

bool SignalReader::read_header() {
    if (header_read_) return true;
    std::string line;
    if (!next_content_line(line)) return false;
    variables_ = split_ws(line);
    header_read_ = true;
    return true;
}

std::optional<Segment> SignalReader::next() {
    if (!header_read_ && !read_header()) return std::nullopt;
    std::string line;
    if (!next_content_line(line)) return std::nullopt;
    const auto fields = split_ws(line);
    if (fields.size() != variables_.size() + 1)
        throw ParseError("expected " + std::to_string(variables_.size() + 1) + " fields, found " +
                             std::to_string(fields.size()),
                         line_no_);
    Segment seg;
    try {
        seg.duration = Rational::parse(fields[0]);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad duration: ") + e.what(), line_no_);
    }
    if (seg.duration.sign() <= 0) throw ParseError("duration must be > 0", line_no_);
    for (std::size_t i = 1; i < fields.size(); ++i) seg.value.push_back(parse_real(fields[i], line_no_));
    return seg;
}

Signal read_signal(std::istream& in) {
    SignalReader reader(in);
    reader.read_header();
    Signal sigma(reader.variables());
    while (auto seg = reader.next()) sigma.append(std::move(*seg));
    return sigma;
}

Signal read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open signal file '" + path + "'");
    return read_signal(in);
}

}  // namespace qtpm
