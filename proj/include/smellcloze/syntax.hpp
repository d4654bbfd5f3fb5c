#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace smellcloze::java {

enum class NodeKind {
    CompilationUnit,
    TypeDeclaration,        // class, interface, enum, record, annotation, anonymous or local class
    MethodDeclaration,
    ConstructorDeclaration,
    Initializer,            // static or instance initializer block
    Block,                  // bare nested block statement
    If,
    For,
    ForEach,
    While,
    Do,
    Switch,                 // statement or expression
    CaseLabel,
    Try,
    Catch,
    Finally,
    Synchronized,
    Lambda,                 // only lambdas with a block body
    Conditional,            // ?:
    ConditionalAnd,         // &&
    ConditionalOr,          // ||
};

std::string_view to_string(NodeKind kind) noexcept;

struct SourceSpan {
    std::size_t begin = 0; // byte offsets, [begin, end)
    std::size_t end = 0;
    int begin_line = 1;
    int end_line = 1;
};

// One node of the structural syntax tree. Only the node kinds the pipeline
// consumes are materialized; ordinary expressions and simple statements are
// folded into their parent.
//
// Control-flow layout: the body of a statement is stored in its children.
// `else if` arms, `catch` clauses and `finally` blocks are stored as
// siblings of the statement they continue, so that a node's depth among
// its ancestors equals its block nesting depth.
struct Node {
    NodeKind kind = NodeKind::CompilationUnit;
    SourceSpan span;
    std::vector<Node> children;

    // TypeDeclaration: binary name ("Outer$Inner", "Outer$1").
    // Method/constructor: simple name.
    std::string name;

    // Method and constructor declarations only.
    std::string signature;
    std::vector<std::string> parameter_names;
    bool has_body = false;
};

struct SyntaxTree {
    std::string path;
    Node root;
};

// Pre-order visit. Returning false from the visitor skips the node's children.
void walk(const Node& node, const std::function<bool(const Node&)>& visit);

// Parses a Java compilation unit. Throws SyntaxError(path, line) when the
// text is not parseable Java.
SyntaxTree parse_java(std::string_view source, const std::string& path);

// Parses a single member declaration (method or constructor text as found in
// MethodRecord::body_text) and returns its declaration node.
Node parse_member_fragment(std::string_view member_text, const std::string& origin = "<fragment>");

} // namespace smellcloze::java
