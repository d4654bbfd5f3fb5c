#pragma once

#include "smellcloze/errors.hpp"
#include "smellcloze/rules.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace smellcloze::prompt {

using rules::CombinedLabel;

// Model-agnostic mask marker; scorer backends translate it to their own
// mask token.
inline constexpr std::string_view kMaskMarker = "[MASK]";

class EmptyCode : public PromptError {
public:
    using PromptError::PromptError;
};

namespace segment {
struct Literal {
    std::string text;
    bool operator==(const Literal&) const = default;
};
struct Mask {
    bool operator==(const Mask&) const = default;
};
struct Soft {
    int index = 0;
    bool operator==(const Soft&) const = default;
};
struct CodeSlot {
    bool operator==(const CodeSlot&) const = default;
};
} // namespace segment

using Segment = std::variant<segment::Literal, segment::Mask, segment::Soft, segment::CodeSlot>;

// A cloze template. Grammar: literal text with the tokens [MASK], [CODE],
// [SOFT] and [SOFT]*k (k >= 1 consecutive soft tokens). Exactly one [MASK]
// and one [CODE] are required; soft tokens are numbered from 0 in order of
// appearance.
class PromptTemplate {
public:
    // Throws TemplateError.
    static PromptTemplate parse(std::string_view spec);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    int soft_count() const noexcept { return soft_count_; }

    // Canonical spec text; parse(spec()) reproduces the segments.
    std::string spec() const;

    bool operator==(const PromptTemplate&) const = default;

private:
    std::vector<Segment> segments_;
    int soft_count_ = 0;
};

// Opaque serialization of soft token k.
std::string soft_token(int index);

struct FilledPrompt {
    std::string text_before_code;
    std::string code;
    std::string text_after_code;
    std::string mask_marker{kMaskMarker};
    int soft_count = 0;

    std::string text() const { return text_before_code + code + text_after_code; }
};

// Literal text is kept verbatim. Throws EmptyCode for empty code and
// PromptError when the code itself contains the mask marker.
FilledPrompt fill(const PromptTemplate& tmpl, std::string_view code);

// P1 (hard), P2 (soft) and P3 (mixed), in that order.
const std::vector<std::pair<std::string, std::string>>& builtin_template_specs();
PromptTemplate builtin_template(std::string_view name);

class Verbalizer {
public:
    using Entry = std::pair<CombinedLabel, std::vector<std::string>>;

    // Words are trimmed and lower-cased, so case variants such as "LPL"
    // and "lpl" collapse into one alias. Throws VerbalizerError unless every
    // class 0..3 appears exactly once with at least one word and no word
    // belongs to two classes.
    explicit Verbalizer(std::vector<Entry> classes);

    // Sorted by class.
    const std::vector<Entry>& classes() const noexcept { return classes_; }
    const std::vector<std::string>& words(CombinedLabel c) const;
    std::size_t word_count() const noexcept;

    bool operator==(const Verbalizer&) const = default;

private:
    std::vector<Entry> classes_;
};

std::string fold_label_word(std::string_view word);

// V1 (one word per class) and V2 (synonyms and abbreviations).
const std::map<std::string, Verbalizer>& builtin_verbalizers();
const Verbalizer& builtin_verbalizer(std::string_view name);

struct AnswerSpace {
    std::vector<std::string> words;                   // class order, then intra-class order
    std::map<std::string, CombinedLabel> word_to_class;
};

AnswerSpace candidate_words(const Verbalizer& v);

// {"0": [str...], "1": [...], "2": [...], "3": [...]}
Verbalizer verbalizer_from_json(std::string_view json_text);
std::string to_json(const Verbalizer& v);

struct PromptConfig {
    PromptTemplate tmpl;
    Verbalizer verbalizer;
};

// {"template": str, "verbalizer": {...} | "V1" | "V2"}. "template" may name a
// built-in template (P1..P3) or be a template spec. Unknown keys are
// rejected with ConfigError.
PromptConfig prompt_config_from_json(std::string_view json_text);
PromptConfig load_prompt_config(const std::filesystem::path& path);

// Resolves a template name (P1..P3) or spec text.
PromptTemplate resolve_template(std::string_view name_or_spec);

} // namespace smellcloze::prompt
