#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtpm/automaton.hpp"
#include "qtpm/engine.hpp"
#include "qtpm/matchset.hpp"
#include "qtpm/signal.hpp"

namespace qtpm::cli {

namespace {

struct Config {
    std::string spec;
    std::string semiring = "supinf";
    std::string cost = "r";
    std::string signal = "-";
    std::vector<std::string> query;
    std::string grid;
};

// Thrown for input problems after option parsing; carries the exit status.
struct Failure {
    int status;
    std::string message;
};

TSWA load_spec(const Config& c) {
    const auto sr = Semiring::from_name(c.semiring);
    if (!sr) throw Failure{kUsage, "unknown semiring '" + c.semiring + "' (boolean, supinf, tropical)"};
    const auto cost = cost_from_name(c.cost);
    if (!cost) throw Failure{kUsage, "unknown cost function '" + c.cost + "' (b, r, t)"};
    TSA tsa;
    try {
        tsa = parse_tsa_file(c.spec);
    } catch (const ParseError& e) {
        throw Failure{kInputError, c.spec + ":" + e.what()};
    } catch (const std::exception& e) {
        throw Failure{kInputError, e.what()};
    }
    try {
        return TSWA(std::move(tsa), *cost, *sr);
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsage, e.what()};
    }
}

// Opens --signal, with "-" meaning the supplied input stream.
class SignalSource {
public:
    SignalSource(const std::string& path, std::istream& in) : name_(path == "-" ? "<stdin>" : path) {
        if (path == "-") {
            stream_ = &in;
        } else {
            file_ = std::make_unique<std::ifstream>(path);
            if (!*file_) throw Failure{kInputError, "cannot open signal file '" + path + "'"};
            stream_ = file_.get();
        }
        reader_.emplace(*stream_);
    }

    // Column positions of the automaton's variables in the input.
    void bind(const std::vector<std::string>& variables) {
        // No header at all is an empty signal, which evaluation reports.
        wrap([&] { at_end_ = !reader_->read_header(); });
        if (at_end_) return;
        const auto& cols = reader_->variables();
        for (const auto& v : variables) {
            std::size_t k = 0;
            while (k < cols.size() && cols[k] != v) ++k;
            if (k == cols.size()) throw Failure{kInputError, name_ + ": signal has no column '" + v + "'"};
            columns_.push_back(k);
        }
    }

    std::optional<Segment> next() {
        std::optional<Segment> s;
        if (at_end_) return s;
        wrap([&] { s = reader_->next(); });
        if (!s) return s;
        Valuation v;
        for (auto k : columns_) v.push_back(s->value[k]);
        s->value = std::move(v);
        return s;
    }

    Signal read_all(const std::vector<std::string>& variables) {
        Signal out(variables);
        while (auto s = next()) out.append(std::move(*s));
        return out;
    }

private:
    template <class F>
    void wrap(F&& f) {
        try {
            f();
        } catch (const ParseError& e) {
            throw Failure{kInputError, name_ + ":" + e.what()};
        } catch (const DomainError& e) {
            throw Failure{kInputError, name_ + ": " + e.what()};
        }
    }

    std::string name_;
    std::unique_ptr<std::ifstream> file_;
    std::istream* stream_ = nullptr;
    std::optional<SignalReader> reader_;
    std::vector<std::size_t> columns_;
    bool at_end_ = false;
};

Rational parse_time(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw Failure{kUsage, std::string("malformed ") + what + " '" + text + "'"};
    }
}

int cmd_tracevalue(const Config& c, std::istream& in, std::ostream& out) {
    const TSWA w = load_spec(c);
    SignalSource src(c.signal, in);
    src.bind(w.tsa.variables);
    const Signal sigma = src.read_all(w.tsa.variables);
    Value v{};
    try {
        v = trace_value(sigma, w);
    } catch (const DomainError& e) {
        throw Failure{kEvalError, e.what()};
    }
    out << w.semiring.format(v) << '\n';
    return kOk;
}

MatchSet run_monitor(const TSWA& w, SignalSource& src, std::ostream* live) {
    Monitor mon(w);
    while (auto seg = src.next()) {
        const auto pieces = mon.feed(*seg);
        if (live) {
            for (const auto& p : pieces) *live << format_piece(p, w.semiring) << '\n';
            live->flush();
        }
    }
    return mon.matches();
}

int cmd_monitor(const Config& c, std::istream& in, std::ostream& out) {
    const TSWA w = load_spec(c);
    SignalSource src(c.signal, in);
    src.bind(w.tsa.variables);
    run_monitor(w, src, &out);
    return kOk;
}

int cmd_query(const Config& c, std::istream& in, std::ostream& out) {
    const Rational t = parse_time(c.query[0], "time");
    const Rational tp = parse_time(c.query[1], "time");
    if (t.sign() < 0 || !(t < tp)) throw Failure{kUsage, "--query needs 0 <= T < TPRIME"};
    const TSWA w = load_spec(c);
    SignalSource src(c.signal, in);
    src.bind(w.tsa.variables);
    const MatchSet m = run_monitor(w, src, nullptr);
    out << w.semiring.format(m.query(t, tp)) << '\n';
    return kOk;
}

int cmd_grid(const Config& c, std::istream& in, std::ostream& out) {
    const Rational delta = parse_time(c.grid, "grid step");
    if (delta.sign() <= 0) throw Failure{kUsage, "--grid needs a positive step"};
    const TSWA w = load_spec(c);
    SignalSource src(c.signal, in);
    src.bind(w.tsa.variables);
    Signal sigma(w.tsa.variables);
    Monitor mon(w);
    while (auto seg = src.next()) {
        sigma.append(*seg);
        mon.feed(*seg);
    }
    mon.matches().export_grid(out, delta, sigma.duration());
    return kOk;
}

void add_common(CLI::App& sub, Config& c) {
    sub.add_option("--spec", c.spec, "automaton specification file")->required();
    sub.add_option("--semiring", c.semiring, "boolean | supinf | tropical")->capture_default_str();
    sub.add_option("--cost", c.cost, "b | r | t")->capture_default_str();
    sub.add_option("--signal", c.signal, "signal file, - for standard input")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online quantitative timed pattern matching over piecewise-constant signals", "qtpm"};
    app.require_subcommand(1);
    Config c;

    auto* trace = app.add_subcommand("tracevalue", "weight of the whole signal");
    add_common(*trace, c);
    auto* monitor = app.add_subcommand("monitor", "stream match pieces as segments arrive");
    add_common(*monitor, c);
    auto* query = app.add_subcommand("query", "value of the match function at one point");
    add_common(*query, c);
    query->add_option("--query", c.query, "T TPRIME")->expected(2)->required();
    auto* grid = app.add_subcommand("grid", "match function sampled on a grid, as TSV");
    add_common(*grid, c);
    grid->add_option("--grid", c.grid, "grid step DELTA")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*trace) return cmd_tracevalue(c, in, out);
        if (*monitor) return cmd_monitor(c, in, out);
        if (*query) return cmd_query(c, in, out);
        return cmd_grid(c, in, out);
    } catch (const Failure& f) {
        out.flush();
        err << "qtpm: " << f.message << '\n';
        return f.status;
    } catch (const DomainError& e) {
        err << "qtpm: " << e.what() << '\n';
        return kEvalError;
    } catch (const std::exception& e) {
        err << "qtpm: " << e.what() << '\n';
        return kEvalError;
    }
}

}  // namespace qtpm::cli
