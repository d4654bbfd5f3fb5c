#include "smellcloze/metrics.hpp"

#include "smellcloze/errors.hpp"
#include "smellcloze/java_lexer.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace smellcloze::metrics {

using java::Node;
using java::NodeKind;

namespace {

bool is_decision_point(NodeKind kind) {
    switch (kind) {
    case NodeKind::If:
    case NodeKind::For:
    case NodeKind::ForEach:
    case NodeKind::While:
    case NodeKind::Do:
    case NodeKind::CaseLabel:
    case NodeKind::Catch:
    case NodeKind::Conditional:
    case NodeKind::ConditionalAnd:
    case NodeKind::ConditionalOr:
        return true;
    default:
        return false;
    }
}

bool opens_block(NodeKind kind) {
    switch (kind) {
    case NodeKind::Block:
    case NodeKind::If:
    case NodeKind::For:
    case NodeKind::ForEach:
    case NodeKind::While:
    case NodeKind::Do:
    case NodeKind::Switch:
    case NodeKind::Try:
    case NodeKind::Catch:
    case NodeKind::Finally:
    case NodeKind::Synchronized:
    case NodeKind::Lambda:
        return true;
    default:
        return false;
    }
}

int count_decisions(const Node& node) {
    int n = 0;
    for (const auto& child : node.children) {
        if (child.kind == NodeKind::TypeDeclaration)
            continue;
        if (is_decision_point(child.kind))
            ++n;
        n += count_decisions(child);
    }
    return n;
}

int deepest(const Node& node, int depth) {
    int best = depth;
    for (const auto& child : node.children) {
        if (child.kind == NodeKind::TypeDeclaration)
            continue;
        best = std::max(best, deepest(child, opens_block(child.kind) ? depth + 1 : depth));
    }
    return best;
}

void require_callable(const Node& node) {
    if (node.kind != NodeKind::MethodDeclaration && node.kind != NodeKind::ConstructorDeclaration)
        throw Error("metrics require a method or constructor declaration node");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

int count_parameters(const ingest::MethodRecord& record) {
    return static_cast<int>(record.parameter_names.size());
}

int count_loc(std::string_view declaration_text) {
    std::set<int> lines;
    for (const auto& tok : java::tokenize(declaration_text)) {
        if (tok.kind == java::TokenKind::EndOfFile)
            break;
        for (int l = tok.line; l <= tok.end_line; ++l)
            lines.insert(l);
    }
    return static_cast<int>(lines.size());
}

int count_loc(const ingest::MethodRecord& record) {
    return count_loc(record.body_text);
}

int cyclomatic_complexity(const Node& declaration) {
    require_callable(declaration);
    return 1 + count_decisions(declaration);
}

int max_nesting(const Node& declaration) {
    require_callable(declaration);
    return deepest(declaration, 0);
}

int cyclomatic_complexity(const ingest::MethodRecord& record, const java::SyntaxTree& tree) {
    if (const Node* decl = ingest::find_declaration(tree, record))
        return cyclomatic_complexity(*decl);
    return cyclomatic_complexity(java::parse_member_fragment(record.body_text, record.file_path));
}

int max_nesting(const ingest::MethodRecord& record, const java::SyntaxTree& tree) {
    if (const Node* decl = ingest::find_declaration(tree, record))
        return max_nesting(*decl);
    return max_nesting(java::parse_member_fragment(record.body_text, record.file_path));
}

MethodMetrics compute(const ingest::MethodRecord& record, const java::SyntaxTree& tree) {
    return {count_parameters(record), count_loc(record), cyclomatic_complexity(record, tree),
            max_nesting(record, tree)};
}

MethodMetrics compute(const ingest::MethodRecord& record) {
    Node decl = java::parse_member_fragment(record.body_text, record.file_path);
    return {count_parameters(record), count_loc(record), cyclomatic_complexity(decl), max_nesting(decl)};
}

void write_csv(std::ostream& out, const std::vector<ingest::MethodRecord>& records,
               const std::vector<MethodMetrics>& metrics) {
    if (records.size() != metrics.size())
        throw LengthMismatch("records and metrics differ in length");
    out << "project,file,class,method,nop,loc,cyclo,max_nesting\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const auto& m = metrics[i];
        out << csv_field(r.project) << ',' << csv_field(r.file_path) << ',' << csv_field(r.class_name) << ','
            << csv_field(r.method_name) << ',' << m.nop << ',' << m.loc << ',' << m.cyclo << ',' << m.max_nesting
            << '\n';
    }
}

} // namespace smellcloze::metrics
