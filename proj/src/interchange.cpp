#include "eventf/interchange.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace eventf {

namespace {

std::string position_prefix(const SourcePos& pos) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { End, Prefix, IriRef, Name, String, Caret, Dot, Semicolon, Comma };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

bool is_name_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
           c == '.' || c == ':' || c >= 0x80;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.pos = pos_;
        if (at_end()) return t;
        unsigned char c = peek();
        switch (c) {
        case '.': advance(); t.kind = Tok::Dot; t.text = "."; return t;
        case ';': advance(); t.kind = Tok::Semicolon; t.text = ";"; return t;
        case ',': advance(); t.kind = Tok::Comma; t.text = ","; return t;
        case '^':
            advance();
            if (at_end() || peek() != '^') fail(pos_, "'^^'", found_here());
            advance();
            t.kind = Tok::Caret;
            t.text = "^^";
            return t;
        case '<': return iri(t);
        case '"': return string(t);
        case '@': {
            advance();
            std::string word;
            while (!at_end() && ((peek() >= 'a' && peek() <= 'z') || (peek() >= 'A' && peek() <= 'Z'))) {
                word += static_cast<char>(advance());
            }
            if (word != "prefix") fail(t.pos, "'@prefix'", "@" + word);
            t.kind = Tok::Prefix;
            t.text = "@prefix";
            return t;
        }
        default: break;
        }
        if (is_name_char(c) && c != '.' && c != '-') return name(t);
        fail(pos_, "a term or punctuation", found_here());
    }

    SourcePos pos() const { return pos_; }

    [[noreturn]] static void fail(SourcePos pos, std::string expected, std::string found) {
        throw ParseError(pos, std::move(expected), std::move(found));
    }

    std::string found_here() const {
        if (at_end()) return "end of input";
        unsigned char c = peek();
        if (c == '\n') return "end of line";
        if (c < 0x20 || c == 0x7F) return "control character";
        std::size_t len = 1;
        while (offset() + len < text_.size() && (static_cast<unsigned char>(text_[offset() + len]) & 0xC0) == 0x80) {
            ++len;
        }
        return "'" + std::string(text_.substr(offset(), len)) + "'";
    }

private:
    std::size_t offset() const { return pos_.offset; }
    bool at_end() const { return pos_.offset >= text_.size(); }
    unsigned char peek(std::size_t ahead = 0) const {
        return pos_.offset + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_.offset + ahead]) : 0;
    }

    unsigned char advance() {
        unsigned char c = peek();
        ++pos_.offset;
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++pos_.column;
        }
        return c;
    }

    void skip_space() {
        while (!at_end()) {
            unsigned char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance_utf8("comment");
            } else {
                break;
            }
        }
    }

    // Consumes one code point, validating UTF-8; returns it.
    char32_t advance_utf8(const char* where) {
        SourcePos start = pos_;
        unsigned char c = peek();
        if (c < 0x80) return advance();
        std::size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 0;
        if (len == 0) fail(start, std::string("valid UTF-8 in ") + where, "invalid byte");
        char32_t cp = c & (0x7F >> len);
        for (std::size_t i = 1; i < len; ++i) {
            unsigned char cc = peek(i);
            if ((cc & 0xC0) != 0x80) fail(start, std::string("valid UTF-8 in ") + where, "truncated sequence");
            cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            fail(start, std::string("valid UTF-8 in ") + where, "overlong or invalid code point");
        }
        for (std::size_t i = 0; i < len; ++i) advance();
        return cp;
    }

    Token iri(Token& t) {
        advance();
        std::string out;
        while (true) {
            if (at_end()) fail(pos_, "'>'", "end of input");
            unsigned char c = peek();
            if (c == '>') break;
            if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`' ||
                c == '\\') {
                fail(pos_, "IRI character or '>'", found_here());
            }
            std::size_t from = offset();
            advance_utf8("IRI");
            out.append(text_.substr(from, offset() - from));
        }
        advance();
        t.kind = Tok::IriRef;
        t.text = std::move(out);
        return t;
    }

    unsigned hex_digits(std::size_t count, SourcePos escape_pos) {
        unsigned v = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (at_end()) fail(pos_, "hex digit", "end of input");
            unsigned char c = peek();
            unsigned d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else fail(pos_, "hex digit", found_here());
            v = v * 16 + d;
            advance();
        }
        if (v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) fail(escape_pos, "valid code point escape", "invalid code point");
        return v;
    }

    Token string(Token& t) {
        advance();
        std::string out;
        while (true) {
            if (at_end()) fail(pos_, "closing '\"'", "end of input");
            unsigned char c = peek();
            if (c == '"') break;
            if (c == '\n' || c == '\r') fail(pos_, "closing '\"'", "end of line");
            if (c == '\\') {
                SourcePos esc = pos_;
                advance();
                if (at_end()) fail(pos_, "escape character", "end of input");
                unsigned char e = peek();
                switch (e) {
                case 't': out += '\t'; advance(); break;
                case 'n': out += '\n'; advance(); break;
                case 'r': out += '\r'; advance(); break;
                case 'b': out += '\b'; advance(); break;
                case 'f': out += '\f'; advance(); break;
                case '"': out += '"'; advance(); break;
                case '\'': out += '\''; advance(); break;
                case '\\': out += '\\'; advance(); break;
                case 'u': advance(); append_utf8(out, hex_digits(4, esc)); break;
                case 'U': advance(); append_utf8(out, hex_digits(8, esc)); break;
                default: fail(esc, "valid escape sequence", "'\\" + found_here().substr(1));
                }
                continue;
            }
            std::size_t from = offset();
            advance_utf8("string");
            out.append(text_.substr(from, offset() - from));
        }
        advance();
        t.kind = Tok::String;
        t.text = std::move(out);
        return t;
    }

    Token name(Token& t) {
        std::size_t from = offset();
        std::size_t end = from;
        while (end < text_.size() && is_name_char(static_cast<unsigned char>(text_[end]))) ++end;
        // A trailing dot terminates the statement rather than the name.
        while (end > from && text_[end - 1] == '.') --end;
        while (offset() < end) advance_utf8("name");
        t.kind = Tok::Name;
        t.text = std::string(text_.substr(from, end - from));
        return t;
    }

    std::string_view text_;
    SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); }

    Document run() {
        Document doc;
        while (tok_.kind != Tok::End) {
            if (tok_.kind == Tok::Prefix) {
                doc.items.emplace_back(prefix());
            } else {
                doc.items.emplace_back(statement());
            }
        }
        return doc;
    }

private:
    void shift() { tok_ = lex_.next(); }

    std::string describe(const Token& t) const {
        switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::String: return "string literal";
        case Tok::IriRef: return "<" + t.text + ">";
        default: return "'" + t.text + "'";
        }
    }

    [[noreturn]] void unexpected(std::string expected) const {
        Lexer::fail(tok_.pos, std::move(expected), describe(tok_));
    }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) unexpected(what);
        shift();
    }

    PrefixDecl prefix() {
        PrefixDecl d;
        d.pos = tok_.pos;
        shift();
        if (tok_.kind != Tok::Name || tok_.text.empty() || tok_.text.back() != ':' ||
            !valid_prefix_name(std::string_view(tok_.text).substr(0, tok_.text.size() - 1))) {
            unexpected("prefix name ending in ':'");
        }
        d.prefix = tok_.text.substr(0, tok_.text.size() - 1);
        shift();
        if (tok_.kind != Tok::IriRef) unexpected("'<' IRI '>'");
        d.iri = tok_.text;
        shift();
        expect(Tok::Dot, "'.'");
        return d;
    }

    Term name_term(const char* what) {
        if (tok_.kind != Tok::Name || !split_qname(tok_.text)) unexpected(what);
        Term t{Term::Type::Name, tok_.text, {}, tok_.pos};
        shift();
        return t;
    }

    Term object() {
        if (tok_.kind == Tok::String) {
            Term t{Term::Type::String, tok_.text, {}, tok_.pos};
            shift();
            if (tok_.kind == Tok::Caret) {
                shift();
                if (tok_.kind != Tok::Name || !split_qname(tok_.text)) unexpected("datatype name");
                t.type = Term::Type::TypedLiteral;
                t.datatype = tok_.text;
                shift();
            }
            return t;
        }
        return name_term("object (prefixed name or string)");
    }

    Statement statement() {
        Statement s;
        s.subject = name_term("subject (prefixed name) or '@prefix'");
        while (true) {
            PredicateObjects po;
            if (tok_.kind == Tok::Name && tok_.text == "a") {
                po.predicate = Term{Term::Type::KindKeyword, "a", {}, tok_.pos};
                shift();
            } else {
                po.predicate = name_term("predicate (prefixed name or 'a')");
            }
            po.objects.push_back(object());
            while (tok_.kind == Tok::Comma) {
                shift();
                po.objects.push_back(object());
            }
            s.predicates.push_back(std::move(po));
            if (tok_.kind == Tok::Dot) break;
            if (tok_.kind != Tok::Semicolon) unexpected("'.', ';' or ','");
            while (tok_.kind == Tok::Semicolon) shift();
            if (tok_.kind == Tok::Dot) break;
        }
        shift();
        return s;
    }

    Lexer lex_;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Loader

enum class Annotation { Label, Value, Relation, RelativeTo, AppliesTo };

std::optional<Annotation> parse_annotation(std::string_view local) {
    if (local == "label") return Annotation::Label;
    if (local == "value") return Annotation::Value;
    if (local == "allenRelation") return Annotation::Relation;
    if (local == "relativeTo") return Annotation::RelativeTo;
    if (local == "appliesTo") return Annotation::AppliesTo;
    return std::nullopt;
}

class Loader {
public:
    Store run(const Document& doc) {
        // Pass 1: prefixes and kind assignments, so edges may refer forward.
        for (const auto& item : doc.items) {
            if (const auto* p = std::get_if<PrefixDecl>(&item)) {
                guarded(p->pos, [&] { store_.declare_prefix(p->prefix, p->iri); });
                continue;
            }
            const auto& s = std::get<Statement>(item);
            resolve(s.subject);
            for (const auto& po : s.predicates) {
                if (po.predicate.type != Term::Type::KindKeyword) resolve(po.predicate);
                for (const auto& o : po.objects) {
                    if (o.type == Term::Type::Name) resolve(o);
                    if (o.type == Term::Type::TypedLiteral) resolve_datatype(o);
                }
                if (po.predicate.type == Term::Type::KindKeyword) {
                    for (const auto& o : po.objects) declare(s.subject, o);
                }
            }
        }
        // Pass 2: edges and literals.
        for (const auto& item : doc.items) {
            const auto* s = std::get_if<Statement>(&item);
            if (!s) continue;
            EntityRef subject{s->subject.text};
            for (const auto& po : s->predicates) {
                if (po.predicate.type == Term::Type::KindKeyword) continue;
                for (const auto& o : po.objects) assert_one(subject, s->subject, po.predicate, o);
            }
        }
        return std::move(store_);
    }

private:
    template <class F>
    void guarded(const SourcePos& pos, F&& f) {
        try {
            f();
        } catch (const LoadError&) {
            throw;
        } catch (const Error& e) {
            throw LoadError(e.code(), pos, e.what());
        }
    }

    [[noreturn]] void fail(Errc code, const SourcePos& pos, const std::string& msg) {
        throw LoadError(code, pos, msg);
    }

    // Prefixes apply from their declaration onwards.
    void resolve(const Term& t) {
        auto q = split_qname(t.text);
        if (!store_.has_prefix(q->prefix)) {
            fail(Errc::UndeclaredPrefix, t.pos, "undeclared prefix '" + std::string(q->prefix) + "'");
        }
    }

    void resolve_datatype(const Term& t) {
        SourcePos pos = t.pos;
        auto q = split_qname(t.datatype);
        if (q->prefix != kVocabPrefix) fail(Errc::InvalidLiteral, pos, "unknown datatype '" + t.datatype + "'");
    }

    void declare(const Term& subject, const Term& kind_term) {
        if (kind_term.type != Term::Type::Name) fail(Errc::InvalidLiteral, kind_term.pos, "'a' expects a kind name");
        EntityRef k{kind_term.text};
        auto kind = k.prefix() == kVocabPrefix ? parse_kind(k.local()) : std::nullopt;
        if (!kind) fail(Errc::UnknownEntity, kind_term.pos, "unknown kind '" + kind_term.text + "'");
        guarded(subject.pos, [&] { store_.ensure_entity(subject.text, *kind); });
    }

    void assert_one(const EntityRef& subject, const Term& subject_term, const Term& pred, const Term& obj) {
        const Graph& g = store_.graph();
        if (!g.contains(subject)) {
            fail(Errc::UnknownEntity, subject_term.pos, "'" + subject.iri + "' has no kind ('a') statement");
        }
        EntityRef p{pred.text};
        if (p.prefix() != kVocabPrefix) fail(Errc::UnknownEntity, pred.pos, "unknown predicate '" + pred.text + "'");
        if (auto prop = parse_property(p.local())) {
            if (obj.type != Term::Type::Name) {
                fail(Errc::InvalidLiteral, obj.pos, std::string(property_name(*prop)) + " expects an entity");
            }
            EntityRef o{obj.text};
            if (!g.contains(o)) fail(Errc::UnknownEntity, obj.pos, "unknown entity '" + o.iri + "'");
            guarded(obj.pos, [&] { store_.assert_edge(subject, *prop, o); });
            return;
        }
        auto ann = parse_annotation(p.local());
        if (!ann) fail(Errc::UnknownEntity, pred.pos, "unknown predicate '" + pred.text + "'");
        if (!assigned_.insert({subject, *ann}).second) {
            fail(Errc::InvalidLiteral, obj.pos, "'" + subject.iri + "' has more than one " + pred.text);
        }
        guarded(obj.pos, [&] {
            switch (*ann) {
            case Annotation::Label:
                if (obj.type != Term::Type::String) fail(Errc::InvalidLiteral, obj.pos, "f:label expects a string");
                store_.set_label(subject, obj.text);
                break;
            case Annotation::Relation: {
                auto r = obj.type == Term::Type::String ? parse_allen_relation(obj.text) : std::nullopt;
                if (!r) fail(Errc::InvalidLiteral, obj.pos, "f:allenRelation expects a relation name string");
                store_.set_relation(subject, *r);
                break;
            }
            case Annotation::RelativeTo:
            case Annotation::AppliesTo: {
                if (obj.type != Term::Type::Name) fail(Errc::InvalidLiteral, obj.pos, pred.text + " expects an event");
                EntityRef o{obj.text};
                if (!g.contains(o)) fail(Errc::UnknownEntity, obj.pos, "unknown entity '" + o.iri + "'");
                if (*ann == Annotation::RelativeTo) {
                    store_.set_relative_to(subject, o);
                } else {
                    store_.set_applies_to(subject, o);
                }
                break;
            }
            case Annotation::Value: {
                if (obj.type != Term::Type::TypedLiteral) {
                    fail(Errc::InvalidLiteral, obj.pos, "f:value expects a typed literal");
                }
                auto dt = EntityRef{obj.datatype}.local();
                RegionValue v;
                if (dt == "timeInterval") v = parse_time_interval(obj.text);
                else if (dt == "geoBox") v = parse_geo_box(obj.text);
                else if (dt == "trajectory") v = parse_trajectory(obj.text);
                else fail(Errc::InvalidLiteral, obj.pos, "unknown datatype '" + obj.datatype + "'");
                store_.set_value(subject, std::move(v));
                break;
            }
            }
        });
    }

    Store store_;
    std::set<std::pair<EntityRef, Annotation>> assigned_;
};

// ---------------------------------------------------------------------------
// Writer

std::string escape(std::string_view s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20 || c == 0x7F) {
                static constexpr char kHex[] = "0123456789ABCDEF";
                out += "\\u00";
                out += kHex[c >> 4];
                out += kHex[c & 0xF];
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
    return out;
}

std::string typed_value(const RegionValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TimeInterval>) {
                return escape(format_time_interval(x)) + "^^f:timeInterval";
            } else if constexpr (std::is_same_v<T, GeoBox>) {
                return escape(format_geo_box(x)) + "^^f:geoBox";
            } else {
                return escape(format_trajectory(x)) + "^^f:trajectory";
            }
        },
        v);
}

} // namespace

ParseError::ParseError(SourcePos pos, std::string expected, std::string found)
    : std::runtime_error(position_prefix(pos) + "expected " + expected + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

LoadError::LoadError(Errc code, SourcePos pos, const std::string& message)
    : Error(code, position_prefix(pos) + message), pos_(pos) {}

Document parse_document(std::string_view text) { return Parser(text).run(); }

Store load(const Document& doc) { return Loader().run(doc); }

Store parse(std::string_view text) { return load(parse_document(text)); }

std::string serialize(const Graph& g) {
    if (g.empty()) return {};
    std::map<std::string, std::string> prefixes = g.prefixes();
    prefixes.emplace(std::string(kVocabPrefix), std::string(kVocabNamespace));
    std::string out;
    for (const auto& [p, ns] : prefixes) out += "@prefix " + p + ": <" + ns + "> .\n";

    auto by_iri = [&](const EntityRef& a, const EntityRef& b) {
        auto ea = g.expand(a), eb = g.expand(b);
        return ea != eb ? ea < eb : a < b;
    };
    std::vector<EntityRef> subjects;
    for (const auto& [e, k] : g.entities()) subjects.push_back(e);
    std::sort(subjects.begin(), subjects.end(), by_iri);

    for (const auto& s : subjects) {
        out += '\n';
        out += s.iri + " a f:" + std::string(kind_name(*g.kind_of(s)));
        auto line = [&](std::string_view predicate, const std::string& objects) {
            out += " ;\n    f:";
            out += predicate;
            out += ' ';
            out += objects;
        };
        auto edges = g.query(s, std::nullopt, std::nullopt);
        for (Property p : kAllProperties) {
            std::vector<EntityRef> objs;
            for (const auto& t : edges) {
                if (t.property == p) objs.push_back(t.object);
            }
            if (objs.empty()) continue;
            std::sort(objs.begin(), objs.end(), by_iri);
            std::string joined;
            for (const auto& o : objs) {
                if (!joined.empty()) joined += ", ";
                joined += o.iri;
            }
            line(property_name(p), joined);
        }
        if (const Attributes* a = g.attributes_of(s)) {
            if (a->label) line("label", escape(*a->label));
            if (a->relation) line("allenRelation", escape(allen_name(*a->relation)));
            if (a->relative_to) line("relativeTo", a->relative_to->iri);
            if (a->applies_to) line("appliesTo", a->applies_to->iri);
            if (a->value) line("value", typed_value(*a->value));
        }
        out += " .\n";
    }
    return out;
}

} // namespace eventf
