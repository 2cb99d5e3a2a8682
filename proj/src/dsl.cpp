#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "qtpm/automaton.hpp"

namespace qtpm {

namespace {

enum class Tok { Ident, Number, Semi, Comma, LBracket, RBracket, LBrace, RBrace, Arrow, Lt, Le, Gt, Ge, And, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t cl = col;
        auto push = [&](Tok k, std::size_t len) {
            out.push_back({k, std::string(src.substr(i, len)), l, cl});
            advance(len);
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 1;
            while (i + n < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i + n])) || src[i + n] == '_' || src[i + n] == '\''))
                ++n;
            push(Tok::Ident, n);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && i + 1 < src.size() &&
                                                           (std::isdigit(static_cast<unsigned char>(src[i + 1])) ||
                                                            src[i + 1] == '.'))) {
            std::size_t n = 1;
            while (i + n < src.size() && (std::isdigit(static_cast<unsigned char>(src[i + n])) || src[i + n] == '.')) ++n;
            push(Tok::Number, n);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            push(Tok::Arrow, 2);
            continue;
        }
        if (c == '&' && i + 1 < src.size() && src[i + 1] == '&') {
            push(Tok::And, 2);
            continue;
        }
        if (c == '<' || c == '>') {
            const bool eq = i + 1 < src.size() && src[i + 1] == '=';
            push(c == '<' ? (eq ? Tok::Le : Tok::Lt) : (eq ? Tok::Ge : Tok::Gt), eq ? 2 : 1);
            continue;
        }
        switch (c) {
        case ';': push(Tok::Semi, 1); continue;
        case ',': push(Tok::Comma, 1); continue;
        case '[': push(Tok::LBracket, 1); continue;
        case ']': push(Tok::RBracket, 1); continue;
        case '{': push(Tok::LBrace, 1); continue;
        case '}': push(Tok::RBrace, 1); continue;
        default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct NameRef {
    std::string name;
    std::size_t line;
    std::size_t col;
};

struct RawAtom {
    NameRef name;
    Cmp op;
    Token number;
};

struct RawEdge {
    NameRef source;
    NameRef target;
    std::vector<RawAtom> guard;
    std::vector<NameRef> resets;
};

struct RawLocation {
    NameRef name;
    bool initial = false;
    bool accepting = false;
    std::vector<RawAtom> label;
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    TSA run() {
        while (peek().kind != Tok::End) item();
        return resolve();
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.col); }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
        return take();
    }

    bool keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

    NameRef ident(const char* what) {
        const Token& t = expect(Tok::Ident, what);
        return {t.text, t.line, t.col};
    }

    void declare(std::vector<NameRef>& into, const std::vector<NameRef>& other) {
        do {
            NameRef n = ident("identifier");
            for (const std::vector<NameRef>* list : {&std::as_const(into), &other})
                for (const auto& e : *list)
                    if (e.name == n.name) throw ParseError("duplicate declaration of '" + n.name + "'", n.line, n.col);
            into.push_back(n);
        } while (peek().kind == Tok::Comma && (take(), true));
        expect(Tok::Semi, "';'");
    }

    std::vector<RawAtom> constraint() {
        std::vector<RawAtom> atoms;
        if (keyword("true")) {
            take();
            return atoms;
        }
        do {
            RawAtom a;
            a.name = ident("identifier");
            const Token& op = take();
            switch (op.kind) {
            case Tok::Lt: a.op = Cmp::Lt; break;
            case Tok::Le: a.op = Cmp::Le; break;
            case Tok::Gt: a.op = Cmp::Gt; break;
            case Tok::Ge: a.op = Cmp::Ge; break;
            default: fail(op, "expected comparison operator, found " + describe(op));
            }
            a.number = expect(Tok::Number, "number");
            atoms.push_back(std::move(a));
        } while (peek().kind == Tok::And && (take(), true));
        return atoms;
    }

    void item() {
        const Token& head = peek();
        if (keyword("var")) {
            take();
            declare(vars_, clocks_);
        } else if (keyword("clock")) {
            take();
            declare(clocks_, vars_);
        } else if (keyword("location")) {
            take();
            RawLocation loc;
            loc.name = ident("location name");
            for (const auto& l : locations_)
                if (l.name.name == loc.name.name)
                    throw ParseError("duplicate location '" + loc.name.name + "'", loc.name.line, loc.name.col);
            while (keyword("init") || keyword("accept")) (take().text == "init" ? loc.initial : loc.accepting) = true;
            expect(Tok::LBracket, "'['");
            loc.label = constraint();
            expect(Tok::RBracket, "']'");
            expect(Tok::Semi, "';'");
            locations_.push_back(std::move(loc));
        } else if (keyword("edge")) {
            take();
            RawEdge e;
            e.source = ident("location name");
            expect(Tok::Arrow, "'->'");
            e.target = ident("location name");
            if (keyword("when")) {
                take();
                e.guard = constraint();
            }
            if (keyword("reset")) {
                take();
                expect(Tok::LBrace, "'{'");
                do e.resets.push_back(ident("clock name"));
                while (peek().kind == Tok::Comma && (take(), true));
                expect(Tok::RBrace, "'}'");
            }
            expect(Tok::Semi, "';'");
            edges_.push_back(std::move(e));
        } else {
            fail(head, "expected 'var', 'clock', 'location' or 'edge', found " + describe(head));
        }
    }

    static std::optional<std::size_t> index_of(const std::vector<NameRef>& names, const std::string& n) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i].name == n) return i;
        return std::nullopt;
    }

    TSA resolve() {
        if (locations_.empty()) throw ParseError("no locations", peek().line, peek().col);
        TSA tsa;
        for (const auto& v : vars_) tsa.variables.push_back(v.name);
        for (const auto& c : clocks_) tsa.clocks.push_back(c.name);
        for (const auto& raw : locations_) {
            Location loc{raw.name.name, {}, raw.initial, raw.accepting};
            for (const auto& a : raw.label) {
                const auto var = index_of(vars_, a.name.name);
                if (!var) throw ParseError("undeclared variable '" + a.name.name + "'", a.name.line, a.name.col);
                double d = 0.0;
                const auto& s = a.number.text;
                const char* first = s.data() + (s[0] == '+' ? 1 : 0);
                auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), d);
                if (ec != std::errc{} || ptr != s.data() + s.size())
                    throw ParseError("malformed number '" + s + "'", a.number.line, a.number.col);
                loc.label.push_back({*var, a.op, d});
            }
            tsa.locations.push_back(std::move(loc));
        }
        for (const auto& raw : edges_) {
            Transition t{};
            for (auto [ref, slot] : {std::pair{&raw.source, &t.source}, std::pair{&raw.target, &t.target}}) {
                const auto l = tsa.find_location(ref->name);
                if (!l) throw ParseError("unknown location '" + ref->name + "'", ref->line, ref->col);
                *slot = *l;
            }
            for (const auto& a : raw.guard) {
                const auto c = index_of(clocks_, a.name.name);
                if (!c) throw ParseError("undeclared clock '" + a.name.name + "'", a.name.line, a.name.col);
                std::int64_t k = 0;
                const auto& s = a.number.text;
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
                if (ec != std::errc{} || ptr != s.data() + s.size() || k < 0)
                    throw ParseError("guard constant must be a natural number, found '" + s + "'", a.number.line,
                                     a.number.col);
                t.guard.push_back({*c, a.op, k});
            }
            for (const auto& r : raw.resets) {
                const auto c = index_of(clocks_, r.name);
                if (!c) throw ParseError("undeclared clock '" + r.name + "'", r.line, r.col);
                if (std::find(t.resets.begin(), t.resets.end(), *c) == t.resets.end()) t.resets.push_back(*c);
            }
            tsa.transitions.push_back(std::move(t));
        }
        return tsa;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<NameRef> vars_;
    std::vector<NameRef> clocks_;
    std::vector<RawLocation> locations_;
    std::vector<RawEdge> edges_;
};

}  // namespace

TSA parse_tsa(std::string_view text) { return Parser(text).run(); }

TSA parse_tsa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open specification '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_tsa(ss.str());
}

}  // namespace qtpm
