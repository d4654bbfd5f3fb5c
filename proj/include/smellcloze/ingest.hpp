#pragma once

#include "smellcloze/syntax.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace smellcloze::ingest {

struct SourceFile {
    std::string path;    // as reported in records; scan_project uses root-relative paths
    std::string text;
    std::string project;
};

// One extracted method or constructor. body_text runs from the first
// modifier/annotation of the declaration through its closing brace.
struct MethodRecord {
    std::string project;
    std::string file_path;
    std::string class_name;  // binary-style: Outer$Inner, Outer$1
    std::string method_name;
    std::string signature;   // [type params] return type + name + parameter list
    int start_line = 0;
    int end_line = 0;
    std::string body_text;
    std::vector<std::string> parameter_names;

    bool operator==(const MethodRecord&) const = default;
};

struct ScanSummary {
    std::size_t seen = 0;
    std::size_t parsed = 0;
    std::size_t skipped = 0;
    // "path: reason" for every skipped file, in scan order
    std::vector<std::string> skipped_files;
};

struct ScanResult {
    std::vector<MethodRecord> records;
    ScanSummary summary;
};

java::SyntaxTree parse_source(const SourceFile& file);

// One record per method or constructor declaration that has a body, in
// source order. Methods of nested, local and anonymous classes are
// attributed to their innermost enclosing type.
std::vector<MethodRecord> extract_methods(const java::SyntaxTree& tree, const SourceFile& file);

// Recursive walk over *.java below root. Files are processed in
// lexicographic order of their root-relative path; unparseable or non-UTF-8
// files are skipped and listed in the summary. jobs == 0 means one worker
// per hardware thread. Throws IoError when root cannot be read.
ScanResult scan_project(const std::filesystem::path& root, const std::string& project_name, unsigned jobs = 0);

// Locates the declaration node a record was extracted from, or nullptr.
const java::Node* find_declaration(const java::SyntaxTree& tree, const MethodRecord& record);

bool is_valid_utf8(std::string_view text) noexcept;

// JSONL, one record per line, field names as in MethodRecord.
void write_records_jsonl(std::ostream& out, const std::vector<MethodRecord>& records);
void save_records_jsonl(const std::filesystem::path& path, const std::vector<MethodRecord>& records);
// Throws SchemaError carrying the 1-based line number of a malformed row.
std::vector<MethodRecord> read_records_jsonl(std::istream& in);
std::vector<MethodRecord> load_records_jsonl(const std::filesystem::path& path);

} // namespace smellcloze::ingest
