#include "smellcloze/ingest.hpp"

#include "smellcloze/errors.hpp"
#include "smellcloze/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace smellcloze::ingest {

namespace fs = std::filesystem;
using java::Node;
using java::NodeKind;
using json = nlohmann::ordered_json;

namespace {

void collect(const Node& node, const std::string& owner, const SourceFile& file, std::vector<MethodRecord>& out) {
    for (const auto& child : node.children) {
        if (child.kind == NodeKind::TypeDeclaration) {
            collect(child, child.name, file, out);
            continue;
        }
        bool callable = child.kind == NodeKind::MethodDeclaration || child.kind == NodeKind::ConstructorDeclaration;
        if (callable && child.has_body) {
            MethodRecord r;
            r.project = file.project;
            r.file_path = file.path;
            r.class_name = owner;
            r.method_name = child.name;
            r.signature = child.signature;
            r.start_line = child.span.begin_line;
            r.end_line = child.span.end_line;
            r.body_text = file.text.substr(child.span.begin, child.span.end - child.span.begin);
            r.parameter_names = child.parameter_names;
            out.push_back(std::move(r));
        }
        // Anonymous and local classes live below statements and initializers;
        // their methods must come after the enclosing method's record.
        collect(child, owner, file, out);
    }
}

const Node* find_in(const Node& node, const std::string& owner, const MethodRecord& r) {
    for (const auto& child : node.children) {
        const std::string& next_owner = child.kind == NodeKind::TypeDeclaration ? child.name : owner;
        bool callable = child.kind == NodeKind::MethodDeclaration || child.kind == NodeKind::ConstructorDeclaration;
        if (callable && owner == r.class_name && child.name == r.method_name &&
            child.span.begin_line == r.start_line && child.span.end_line == r.end_line)
            return &child;
        if (const Node* hit = find_in(child, next_owner, r))
            return hit;
    }
    return nullptr;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        return std::nullopt;
    return std::move(buf).str();
}

} // namespace

bool is_valid_utf8(std::string_view text) noexcept {
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        std::uint32_t cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= text.size())
            return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80)
                return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
        if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        i += extra + 1;
    }
    return true;
}

java::SyntaxTree parse_source(const SourceFile& file) {
    return java::parse_java(file.text, file.path);
}

std::vector<MethodRecord> extract_methods(const java::SyntaxTree& tree, const SourceFile& file) {
    std::vector<MethodRecord> out;
    collect(tree.root, "", file, out);
    return out;
}

const Node* find_declaration(const java::SyntaxTree& tree, const MethodRecord& record) {
    return find_in(tree.root, "", record);
}

ScanResult scan_project(const fs::path& root, const std::string& project_name, unsigned jobs) {
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw IoError("cannot read project root '" + root.string() + "': not a readable directory");

    std::vector<std::string> rel_paths;
    try {
        for (fs::recursive_directory_iterator it(root), end; it != end; ++it) {
            if (it->is_regular_file() && it->path().extension() == ".java")
                rel_paths.push_back(fs::relative(it->path(), root).generic_string());
        }
    } catch (const fs::filesystem_error& e) {
        throw IoError("cannot read project root '" + root.string() + "': " + e.what());
    }
    std::sort(rel_paths.begin(), rel_paths.end());

    struct FileOutcome {
        std::vector<MethodRecord> records;
        std::optional<std::string> skip_reason;
    };
    std::vector<FileOutcome> outcomes(rel_paths.size());

    parallel_for(rel_paths.size(), jobs, [&](std::size_t i) {
        auto& outcome = outcomes[i];
        auto text = read_file(root / rel_paths[i]);
        if (!text) {
            outcome.skip_reason = "unreadable file";
            return;
        }
        if (!is_valid_utf8(*text)) {
            outcome.skip_reason = "not valid UTF-8";
            return;
        }
        SourceFile file{rel_paths[i], std::move(*text), project_name};
        try {
            outcome.records = extract_methods(parse_source(file), file);
        } catch (const SyntaxError& e) {
            outcome.skip_reason = e.what();
        }
    });

    ScanResult result;
    result.summary.seen = rel_paths.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto& outcome = outcomes[i];
        if (outcome.skip_reason) {
            ++result.summary.skipped;
            result.summary.skipped_files.push_back(rel_paths[i] + ": " + *outcome.skip_reason);
            continue;
        }
        ++result.summary.parsed;
        std::move(outcome.records.begin(), outcome.records.end(), std::back_inserter(result.records));
    }
    return result;
}

// ---- JSONL -----------------------------------------------------------------

namespace {

json to_json(const MethodRecord& r) {
    json j;
    j["project"] = r.project;
    j["file_path"] = r.file_path;
    j["class_name"] = r.class_name;
    j["method_name"] = r.method_name;
    j["signature"] = r.signature;
    j["start_line"] = r.start_line;
    j["end_line"] = r.end_line;
    j["body_text"] = r.body_text;
    j["parameter_names"] = r.parameter_names;
    return j;
}

MethodRecord from_json(const json& j, std::size_t line) {
    if (!j.is_object())
        throw SchemaError("record is not a JSON object", line);
    auto field = [&](const char* name) -> const json& {
        auto it = j.find(name);
        if (it == j.end())
            throw SchemaError(std::string("missing field '") + name + "'", line);
        return *it;
    };
    try {
        MethodRecord r;
        r.project = field("project").get<std::string>();
        r.file_path = field("file_path").get<std::string>();
        r.class_name = field("class_name").get<std::string>();
        r.method_name = field("method_name").get<std::string>();
        r.signature = field("signature").get<std::string>();
        r.start_line = field("start_line").get<int>();
        r.end_line = field("end_line").get<int>();
        r.body_text = field("body_text").get<std::string>();
        r.parameter_names = field("parameter_names").get<std::vector<std::string>>();
        if (r.start_line < 1 || r.end_line < r.start_line)
            throw SchemaError("invalid line range", line);
        if (r.body_text.empty())
            throw SchemaError("empty body_text", line);
        return r;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad field type: ") + e.what(), line);
    }
}

} // namespace

void write_records_jsonl(std::ostream& out, const std::vector<MethodRecord>& records) {
    for (const auto& r : records)
        out << to_json(r).dump() << '\n';
}

void save_records_jsonl(const fs::path& path, const std::vector<MethodRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    write_records_jsonl(out, records);
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

std::vector<MethodRecord> read_records_jsonl(std::istream& in) {
    std::vector<MethodRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw SchemaError(std::string("malformed JSON: ") + e.what(), number);
        }
        out.push_back(from_json(j, number));
    }
    return out;
}

std::vector<MethodRecord> load_records_jsonl(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    return read_records_jsonl(in);
}

} // namespace smellcloze::ingest
