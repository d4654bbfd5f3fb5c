#pragma once

#include "smellcloze/ingest.hpp"
#include "smellcloze/syntax.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace smellcloze::metrics {

struct MethodMetrics {
    int nop = 0;         // declared parameters
    int loc = 0;         // non-blank, non-comment physical lines
    int cyclo = 1;       // McCabe complexity
    int max_nesting = 0; // deepest block nesting, method body = 0

    bool operator==(const MethodMetrics&) const = default;
};

int count_parameters(const ingest::MethodRecord& record);

// Lines of body_text that carry at least one token. Blank lines and lines
// holding only comments are excluded; a line with code and a trailing
// comment counts.
int count_loc(std::string_view declaration_text);
int count_loc(const ingest::MethodRecord& record);

// 1 + decision points: if, for, for-each, while, do, case label, catch,
// ?:, && and ||. Declarations of nested (anonymous/local) classes are not
// part of the method; lambda bodies are.
int cyclomatic_complexity(const java::Node& declaration);
int max_nesting(const java::Node& declaration);

// Tree-based variants locate the record's declaration in `tree`; when it is
// not found (tree from a different file) they fall back to re-parsing the
// record's body text.
int cyclomatic_complexity(const ingest::MethodRecord& record, const java::SyntaxTree& tree);
int max_nesting(const ingest::MethodRecord& record, const java::SyntaxTree& tree);

MethodMetrics compute(const ingest::MethodRecord& record, const java::SyntaxTree& tree);

// Self-contained: parses record.body_text as a member declaration.
// Throws SyntaxError when the text does not parse.
MethodMetrics compute(const ingest::MethodRecord& record);

// CSV with header `project,file,class,method,nop,loc,cyclo,max_nesting`.
void write_csv(std::ostream& out, const std::vector<ingest::MethodRecord>& records,
               const std::vector<MethodMetrics>& metrics);

} // namespace smellcloze::metrics
