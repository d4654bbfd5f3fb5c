#include "smellcloze/prompt.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace smellcloze::prompt {

namespace {

constexpr std::string_view kMaskToken = "[MASK]";
constexpr std::string_view kCodeToken = "[CODE]";
constexpr std::string_view kSoftToken = "[SOFT]";

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

PromptTemplate PromptTemplate::parse(std::string_view spec) {
    if (spec.empty())
        throw TemplateError("empty template spec");

    PromptTemplate t;
    std::string literal;
    int masks = 0, codes = 0;
    auto flush = [&] {
        if (!literal.empty())
            t.segments_.emplace_back(segment::Literal{std::move(literal)});
        literal.clear();
    };

    std::size_t i = 0;
    while (i < spec.size()) {
        auto rest = spec.substr(i);
        if (rest.starts_with(kMaskToken)) {
            flush();
            t.segments_.emplace_back(segment::Mask{});
            ++masks;
            i += kMaskToken.size();
        } else if (rest.starts_with(kCodeToken)) {
            flush();
            t.segments_.emplace_back(segment::CodeSlot{});
            ++codes;
            i += kCodeToken.size();
        } else if (rest.starts_with(kSoftToken)) {
            flush();
            i += kSoftToken.size();
            long repeat = 1;
            if (i < spec.size() && spec[i] == '*') {
                std::size_t digits = i + 1;
                while (digits < spec.size() && std::isdigit(static_cast<unsigned char>(spec[digits])))
                    ++digits;
                if (digits == i + 1 || digits - i - 1 > 4)
                    throw TemplateError("malformed soft-token repetition at offset " + std::to_string(i));
                repeat = std::stol(std::string(spec.substr(i + 1, digits - i - 1)));
                if (repeat < 1)
                    throw TemplateError("soft-token repetition count must be >= 1");
                i = digits;
            }
            for (long k = 0; k < repeat; ++k)
                t.segments_.emplace_back(segment::Soft{t.soft_count_++});
        } else {
            literal += spec[i++];
        }
    }
    flush();

    if (masks != 1)
        throw TemplateError("template must contain exactly one [MASK], found " + std::to_string(masks));
    if (codes != 1)
        throw TemplateError("template must contain exactly one [CODE], found " + std::to_string(codes));
    return t;
}

std::string PromptTemplate::spec() const {
    std::string out;
    for (std::size_t i = 0; i < segments_.size();) {
        if (std::holds_alternative<segment::Soft>(segments_[i])) {
            std::size_t run = 0;
            while (i + run < segments_.size() && std::holds_alternative<segment::Soft>(segments_[i + run]))
                ++run;
            out += kSoftToken;
            if (run > 1)
                out += "*" + std::to_string(run);
            i += run;
            continue;
        }
        std::visit(overloaded{
                       [&](const segment::Literal& l) { out += l.text; },
                       [&](const segment::Mask&) { out += kMaskToken; },
                       [&](const segment::CodeSlot&) { out += kCodeToken; },
                       [&](const segment::Soft&) {},
                   },
                   segments_[i]);
        ++i;
    }
    return out;
}

std::string soft_token(int index) {
    return "<soft_" + std::to_string(index) + ">";
}

FilledPrompt fill(const PromptTemplate& tmpl, std::string_view code) {
    if (code.empty())
        throw EmptyCode("cannot fill a template with empty code");
    if (code.find(kMaskMarker) != std::string_view::npos)
        throw PromptError("code contains the mask marker " + std::string(kMaskMarker));

    FilledPrompt p;
    p.code = std::string(code);
    p.soft_count = tmpl.soft_count();
    bool after = false;
    for (const auto& seg : tmpl.segments()) {
        std::string& target = after ? p.text_after_code : p.text_before_code;
        std::visit(overloaded{
                       [&](const segment::Literal& l) { target += l.text; },
                       [&](const segment::Mask&) { target += kMaskMarker; },
                       [&](const segment::Soft& s) { target += soft_token(s.index); },
                       [&](const segment::CodeSlot&) { after = true; },
                   },
                   seg);
    }
    return p;
}

const std::vector<std::pair<std::string, std::string>>& builtin_template_specs() {
    static const std::vector<std::pair<std::string, std::string>> specs = {
        {"P1", "The method has [MASK] code smell. [CODE]"},
        {"P2", "[SOFT]*3 [MASK] [SOFT]*2. [CODE]"},
        {"P3", "[SOFT]*3 [MASK] code smell. [CODE]"},
    };
    return specs;
}

PromptTemplate builtin_template(std::string_view name) {
    for (const auto& [n, spec] : builtin_template_specs())
        if (n == name)
            return PromptTemplate::parse(spec);
    throw TemplateError("unknown built-in template '" + std::string(name) + "'");
}

PromptTemplate resolve_template(std::string_view name_or_spec) {
    for (const auto& [n, spec] : builtin_template_specs())
        if (n == name_or_spec)
            return PromptTemplate::parse(spec);
    return PromptTemplate::parse(name_or_spec);
}

// ---- verbalizers -----------------------------------------------------------

std::string fold_label_word(std::string_view word) {
    auto first = word.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    auto last = word.find_last_not_of(" \t\r\n");
    std::string out(word.substr(first, last - first + 1));
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

Verbalizer::Verbalizer(std::vector<Entry> classes) {
    std::sort(classes.begin(), classes.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (classes.size() != CombinedLabel::kCount)
        throw VerbalizerError("verbalizer must map each of the 4 classes exactly once");
    std::set<std::string> seen;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto& [label, words] = classes[c];
        if (label.value() != static_cast<int>(c))
            throw VerbalizerError("verbalizer must map each of the 4 classes exactly once");
        std::vector<std::string> folded;
        for (const auto& w : words) {
            auto f = fold_label_word(w);
            if (f.empty())
                throw VerbalizerError("empty label word for class " + std::to_string(c));
            if (std::find(folded.begin(), folded.end(), f) != folded.end())
                continue; // case alias of a word already in this class
            if (!seen.insert(f).second)
                throw VerbalizerError("label word '" + f + "' is mapped to more than one class");
            folded.push_back(std::move(f));
        }
        if (folded.empty())
            throw VerbalizerError("class " + std::to_string(c) + " has no label words");
        words = std::move(folded);
    }
    classes_ = std::move(classes);
}

const std::vector<std::string>& Verbalizer::words(CombinedLabel c) const {
    return classes_[static_cast<std::size_t>(c.value())].second;
}

std::size_t Verbalizer::word_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [_, words] : classes_)
        n += words.size();
    return n;
}

const std::map<std::string, Verbalizer>& builtin_verbalizers() {
    static const std::map<std::string, Verbalizer> all = {
        {"V1", Verbalizer({{CombinedLabel(0), {"no"}},
                           {CombinedLabel(1), {"long parameter list"}},
                           {CombinedLabel(2), {"long method"}},
                           {CombinedLabel(3), {"long method and long parameter list"}}})},
        {"V2", Verbalizer({{CombinedLabel(0), {"no", "not", "zero"}},
                           {CombinedLabel(1), {"long parameter list", "lpl"}},
                           {CombinedLabel(2), {"long method", "lm"}},
                           {CombinedLabel(3), {"long method and long parameter list", "two", "all"}}})},
    };
    return all;
}

const Verbalizer& builtin_verbalizer(std::string_view name) {
    const auto& all = builtin_verbalizers();
    auto it = all.find(std::string(name));
    if (it == all.end())
        throw VerbalizerError("unknown built-in verbalizer '" + std::string(name) + "'");
    return it->second;
}

AnswerSpace candidate_words(const Verbalizer& v) {
    AnswerSpace space;
    for (const auto& [label, words] : v.classes()) {
        for (const auto& w : words) {
            space.words.push_back(w);
            space.word_to_class.emplace(w, label);
        }
    }
    return space;
}

namespace {

Verbalizer verbalizer_from(const nlohmann::json& j) {
    if (!j.is_object())
        throw VerbalizerError("verbalizer must be a JSON object keyed by class");
    std::vector<Verbalizer::Entry> entries;
    for (const auto& [key, value] : j.items()) {
        int label = -1;
        if (key.size() == 1 && key[0] >= '0' && key[0] <= '3')
            label = key[0] - '0';
        if (label < 0)
            throw VerbalizerError("verbalizer key '" + key + "' is not a class in 0..3");
        if (!value.is_array())
            throw VerbalizerError("verbalizer class '" + key + "' must map to an array of strings");
        std::vector<std::string> words;
        for (const auto& w : value) {
            if (!w.is_string())
                throw VerbalizerError("verbalizer class '" + key + "' must map to an array of strings");
            words.push_back(w.get<std::string>());
        }
        entries.emplace_back(CombinedLabel(label), std::move(words));
    }
    return Verbalizer(std::move(entries));
}

} // namespace

Verbalizer verbalizer_from_json(std::string_view json_text) {
    try {
        return verbalizer_from(nlohmann::json::parse(json_text));
    } catch (const nlohmann::json::parse_error& e) {
        throw VerbalizerError(std::string("verbalizer is not valid JSON: ") + e.what());
    }
}

std::string to_json(const Verbalizer& v) {
    nlohmann::ordered_json j;
    for (const auto& [label, words] : v.classes())
        j[std::to_string(label.value())] = words;
    return j.dump();
}

PromptConfig prompt_config_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("prompt config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("prompt config must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "template" && key != "verbalizer")
            throw ConfigError("unknown prompt config key '" + key + "'");
    if (!j.contains("template") || !j["template"].is_string())
        throw ConfigError("prompt config needs a string 'template'");
    if (!j.contains("verbalizer"))
        throw ConfigError("prompt config needs a 'verbalizer'");

    const auto& vj = j["verbalizer"];
    Verbalizer verbalizer = vj.is_string() ? builtin_verbalizer(vj.get<std::string>()) : verbalizer_from(vj);
    return PromptConfig{resolve_template(j["template"].get<std::string>()), std::move(verbalizer)};
}

PromptConfig load_prompt_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read prompt config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return prompt_config_from_json(buf.str());
}

} // namespace smellcloze::prompt
