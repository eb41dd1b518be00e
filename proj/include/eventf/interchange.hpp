#pragma once

#include "eventf/error.hpp"
#include "eventf/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eventf {

/// 1-based line and column (columns count code points), 0-based byte offset.
struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
};

/// Syntax error at the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, std::string expected, std::string found);

    const SourcePos& pos() const noexcept { return pos_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    SourcePos pos_;
    std::string expected_;
    std::string found_;
};

/// Well-formed text whose content the store rejects (kind conflicts,
/// domain/range violations, unknown entities, bad literals).
class LoadError : public Error {
public:
    LoadError(Errc code, SourcePos pos, const std::string& message);

    const SourcePos& pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

struct Term {
    enum class Type { Name, KindKeyword, String, TypedLiteral };

    Type type = Type::Name;
    /// Qualified name, or the unescaped lexical form of a literal.
    std::string text;
    /// Datatype name of a typed literal.
    std::string datatype;
    SourcePos pos;
};

struct PredicateObjects {
    Term predicate;
    std::vector<Term> objects;
};

struct Statement {
    Term subject;
    std::vector<PredicateObjects> predicates;
};

struct PrefixDecl {
    std::string prefix;
    std::string iri;
    SourcePos pos;
};

/// Syntax tree of a `.f.ttl` document, in source order.
struct Document {
    std::vector<std::variant<PrefixDecl, Statement>> items;
};

/// Throws ParseError.
Document parse_document(std::string_view text);
/// Throws LoadError.
Store load(const Document& doc);
/// parse_document + load.
Store parse(std::string_view text);

/// Canonical text: sorted prefixes, subjects sorted by expanded IRI, one
/// block per subject, LF line endings and a single trailing newline.
std::string serialize(const Graph& graph);

} // namespace eventf
