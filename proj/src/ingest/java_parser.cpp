#include "smellcloze/syntax.hpp"

#include "smellcloze/errors.hpp"
#include "smellcloze/java_lexer.hpp"

#include <algorithm>
#include <initializer_list>

namespace smellcloze::java {

std::string_view to_string(NodeKind kind) noexcept {
    switch (kind) {
    case NodeKind::CompilationUnit: return "CompilationUnit";
    case NodeKind::TypeDeclaration: return "TypeDeclaration";
    case NodeKind::MethodDeclaration: return "MethodDeclaration";
    case NodeKind::ConstructorDeclaration: return "ConstructorDeclaration";
    case NodeKind::Initializer: return "Initializer";
    case NodeKind::Block: return "Block";
    case NodeKind::If: return "If";
    case NodeKind::For: return "For";
    case NodeKind::ForEach: return "ForEach";
    case NodeKind::While: return "While";
    case NodeKind::Do: return "Do";
    case NodeKind::Switch: return "Switch";
    case NodeKind::CaseLabel: return "CaseLabel";
    case NodeKind::Try: return "Try";
    case NodeKind::Catch: return "Catch";
    case NodeKind::Finally: return "Finally";
    case NodeKind::Synchronized: return "Synchronized";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::Conditional: return "Conditional";
    case NodeKind::ConditionalAnd: return "ConditionalAnd";
    case NodeKind::ConditionalOr: return "ConditionalOr";
    }
    return "?";
}

void walk(const Node& node, const std::function<bool(const Node&)>& visit) {
    if (!visit(node))
        return;
    for (const auto& child : node.children)
        walk(child, visit);
}

namespace {

using Stops = std::initializer_list<std::string_view>;

bool is_primitive(const Token& t) {
    static constexpr std::string_view kPrims[] = {"boolean", "byte", "char", "short", "int",
                                                  "long",    "float", "double", "void"};
    return t.kind == TokenKind::Keyword && std::find(std::begin(kPrims), std::end(kPrims), t.text) != std::end(kPrims);
}

bool is_modifier_keyword(const Token& t) {
    static constexpr std::string_view kMods[] = {"public",    "protected", "private",      "static",
                                                 "abstract",  "final",     "native",       "synchronized",
                                                 "transient", "volatile",  "strictfp",     "default"};
    return t.kind == TokenKind::Keyword && std::find(std::begin(kMods), std::end(kMods), t.text) != std::end(kMods);
}

class Parser {
public:
    Parser(std::string_view source, std::string path)
        : src_(source), path_(std::move(path)), toks_(tokenize(src_, path_)) {}

    Node parse_unit() {
        Node root;
        root.kind = NodeKind::CompilationUnit;
        while (!eof()) {
            if (accept(";"))
                continue;
            if (check("import") || check("package")) {
                skip_past(";");
                continue;
            }
            if (is_module_declaration()) {
                pos_ = toks_.size() - 1;
                break;
            }
            std::size_t start = pos_;
            skip_modifiers();
            if (check("package")) {
                skip_past(";");
                continue;
            }
            if (!is_type_decl_start())
                fail("expected a type declaration");
            root.children.push_back(parse_type_decl(start));
        }
        root.span.begin = 0;
        root.span.end = src_.size();
        root.span.begin_line = 1;
        root.span.end_line = toks_.back().line;
        return root;
    }

private:
    struct TypeScope {
        std::string binary;
        int anonymous = 0;
    };

    // ---- token access ------------------------------------------------------

    const Token& cur() const { return toks_[pos_]; }
    const Token& at(std::size_t ahead) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool eof() const { return cur().kind == TokenKind::EndOfFile; }
    bool check(std::string_view s) const { return cur().is(s); }
    bool prev_is(std::string_view s) const { return pos_ > 0 && toks_[pos_ - 1].is(s); }

    bool accept(std::string_view s) {
        if (!check(s))
            return false;
        ++pos_;
        return true;
    }

    void expect(std::string_view s) {
        if (!accept(s))
            fail("expected '" + std::string(s) + "'");
    }

    std::string expect_identifier(const char* what) {
        if (!cur().is_identifier())
            fail(std::string("expected ") + what);
        return std::string(toks_[pos_++].text);
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string near = eof() ? "end of file" : "'" + std::string(cur().text) + "'";
        throw SyntaxError(path_, cur().line, what + " near " + near);
    }

    SourceSpan span(std::size_t first, std::size_t last) const {
        SourceSpan s;
        s.begin = toks_[first].begin;
        s.begin_line = toks_[first].line;
        s.end = toks_[last].end;
        s.end_line = toks_[last].end_line;
        return s;
    }

    Node make(NodeKind kind, std::size_t token_index) const {
        Node n;
        n.kind = kind;
        n.span = span(token_index, token_index);
        return n;
    }

    // ---- skipping helpers --------------------------------------------------

    void skip_past(std::string_view s) {
        while (!eof() && !check(s))
            ++pos_;
        expect(s);
    }

    // Consumes a balanced (), [] or {} group starting at the current opener.
    void skip_balanced() {
        std::vector<char> stack;
        do {
            if (eof())
                fail("unbalanced brackets");
            const auto& t = cur();
            if (t.kind == TokenKind::Operator && t.text.size() == 1) {
                char c = t.text[0];
                if (c == '(' || c == '[' || c == '{') {
                    stack.push_back(c == '(' ? ')' : c == '[' ? ']' : '}');
                } else if (c == ')' || c == ']' || c == '}') {
                    if (stack.empty() || stack.back() != c)
                        fail("mismatched bracket");
                    stack.pop_back();
                }
            }
            ++pos_;
        } while (!stack.empty());
    }

    void skip_angle() {
        int depth = 0;
        do {
            if (eof() || check(";") || check("{") || check("}"))
                fail("malformed type arguments");
            if (check("(")) {
                skip_balanced();
                continue;
            }
            if (check("<"))
                ++depth;
            else if (check(">"))
                --depth;
            ++pos_;
        } while (depth > 0);
    }

    void skip_annotation() {
        expect("@");
        expect_identifier("annotation name");
        while (check(".") && at(1).is_identifier())
            pos_ += 2;
        if (check("("))
            skip_balanced();
    }

    bool at_non_sealed() const {
        return cur().is_identifier() && cur().text == "non" && at(1).is("-") && at(2).is_identifier() &&
               at(2).text == "sealed";
    }

    void skip_modifiers() {
        while (true) {
            if (check("@") && !at(1).is("interface")) {
                skip_annotation();
            } else if (is_modifier_keyword(cur())) {
                ++pos_;
            } else if (cur().is_identifier() && cur().text == "sealed" && !at(1).is("(") && !at(1).is("=") &&
                       !at(1).is(".")) {
                ++pos_;
            } else if (at_non_sealed()) {
                pos_ += 3;
            } else {
                return;
            }
        }
    }

    bool is_type_decl_start() const {
        if (check("class") || check("interface") || check("enum"))
            return true;
        if (check("@") && at(1).is("interface"))
            return true;
        return cur().is_identifier() && cur().text == "record" && at(1).is_identifier() &&
               (at(2).is("(") || at(2).is("<"));
    }

    bool is_module_declaration() const {
        if (!cur().is_identifier())
            return false;
        if (cur().text == "module")
            return at(1).is_identifier();
        return cur().text == "open" && at(1).is_identifier() && at(1).text == "module";
    }

    bool looks_like_local_type() {
        std::size_t save = pos_;
        skip_modifiers();
        bool result = is_type_decl_start();
        pos_ = save;
        return result;
    }

    // ---- declarations ------------------------------------------------------

    Node parse_type_decl(std::size_t start) {
        Node type;
        type.kind = NodeKind::TypeDeclaration;
        bool is_enum = check("enum");
        if (accept("@"))
            expect("interface");
        else
            ++pos_; // class | interface | enum | record
        std::string simple = expect_identifier("type name");
        type.name = scopes_.empty() ? simple : scopes_.back().binary + "$" + simple;

        while (!check("{")) {
            if (eof() || check(";") || check("}"))
                fail("malformed type declaration header");
            if (check("(") || check("["))
                skip_balanced();
            else
                ++pos_;
        }
        scopes_.push_back({type.name});
        parse_class_body(type, is_enum);
        scopes_.pop_back();
        type.span = span(start, pos_ - 1);
        return type;
    }

    Node parse_anonymous_body() {
        std::size_t start = pos_;
        Node type;
        type.kind = NodeKind::TypeDeclaration;
        if (scopes_.empty())
            fail("anonymous class outside of a type");
        type.name = scopes_.back().binary + "$" + std::to_string(++scopes_.back().anonymous);
        scopes_.push_back({type.name});
        parse_class_body(type, false);
        scopes_.pop_back();
        type.span = span(start, pos_ - 1);
        return type;
    }

    void parse_class_body(Node& type, bool is_enum) {
        expect("{");
        if (is_enum)
            parse_enum_constants(type);
        while (!check("}")) {
            if (eof())
                fail("unterminated class body");
            parse_member(type);
        }
        expect("}");
    }

    void parse_enum_constants(Node& type) {
        while (true) {
            if (accept(";") || check("}"))
                return;
            if (accept(","))
                continue;
            while (check("@"))
                skip_annotation();
            expect_identifier("enum constant");
            if (accept("(")) {
                scan_expression(type.children, {")"});
                expect(")");
            }
            if (check("{"))
                type.children.push_back(parse_anonymous_body());
            if (!check(",") && !check(";") && !check("}"))
                fail("malformed enum constant list");
        }
    }

    void parse_member(Node& type) {
        if (accept(";"))
            return;
        std::size_t start = pos_;
        if (check("{") || (check("static") && at(1).is("{"))) {
            accept("static");
            Node init = make(NodeKind::Initializer, start);
            parse_block_into(init.children);
            init.span = span(start, pos_ - 1);
            type.children.push_back(std::move(init));
            return;
        }
        skip_modifiers();
        if (is_type_decl_start()) {
            type.children.push_back(parse_type_decl(start));
            return;
        }
        std::size_t signature_start = pos_;
        bool generic = check("<");
        if (generic)
            skip_angle();
        if (cur().is_identifier() && at(1).is("(")) {
            parse_callable(type, start, signature_start, NodeKind::ConstructorDeclaration, false);
            return;
        }
        if (cur().is_identifier() && at(1).is("{") && !generic) {
            // compact canonical record constructor
            parse_callable(type, start, signature_start, NodeKind::ConstructorDeclaration, true);
            return;
        }
        parse_type();
        if (!cur().is_identifier())
            fail("expected member name");
        if (at(1).is("(")) {
            parse_callable(type, start, signature_start, NodeKind::MethodDeclaration, false);
            return;
        }
        // field declaration
        scan_expression(type.children, {";"});
        expect(";");
    }

    void parse_type() {
        while (check("@"))
            skip_annotation();
        if (!cur().is_identifier() && !is_primitive(cur()))
            fail("expected a type");
        ++pos_;
        while (true) {
            if (check("<")) {
                skip_angle();
                continue;
            }
            if (check(".") && (at(1).is_identifier() || at(1).is("@"))) {
                ++pos_;
                while (check("@"))
                    skip_annotation();
                expect_identifier("type name");
                continue;
            }
            break;
        }
        while (check("@") || (check("[") && at(1).is("]"))) {
            if (check("@"))
                skip_annotation();
            else
                pos_ += 2;
        }
    }

    std::string render(std::size_t first, std::size_t last) const {
        std::string out;
        for (std::size_t i = first; i <= last; ++i) {
            if (i > first && toks_[i].begin > toks_[i - 1].end)
                out += ' ';
            out += toks_[i].text;
        }
        return out;
    }

    void parse_callable(Node& type, std::size_t start, std::size_t signature_start, NodeKind kind, bool compact) {
        Node m = make(kind, start);
        std::size_t name_index = pos_;
        m.name = expect_identifier("method name");
        if (compact) {
            m.signature = m.name;
        } else {
            parse_parameters(m);
            m.signature = render(signature_start, pos_ - 1);
            (void)name_index;
            while (check("[") && at(1).is("]"))
                pos_ += 2;
            if (accept("throws")) {
                while (!check("{") && !check(";")) {
                    if (eof() || check("}"))
                        fail("malformed throws clause");
                    if (check("("))
                        skip_balanced();
                    else
                        ++pos_;
                }
            }
            if (accept("default")) {
                // annotation element default value
                std::vector<Node> discard;
                scan_expression(discard, {";"});
            }
        }
        if (check("{")) {
            m.has_body = true;
            parse_block_into(m.children);
        } else {
            expect(";");
        }
        m.span = span(start, pos_ - 1);
        type.children.push_back(std::move(m));
    }

    void parse_parameters(Node& m) {
        expect("(");
        std::vector<std::pair<std::size_t, std::size_t>> groups; // [first, last)
        std::size_t group_start = pos_;
        int paren = 0, angle = 0, bracket = 0;
        while (true) {
            if (eof() || check("{") || check("}") || check(";"))
                fail("unterminated parameter list");
            const auto& t = cur();
            if (t.is(")") && paren == 0)
                break;
            if (t.is("("))
                ++paren;
            else if (t.is(")"))
                --paren;
            else if (t.is("<"))
                ++angle;
            else if (t.is(">"))
                --angle;
            else if (t.is("["))
                ++bracket;
            else if (t.is("]"))
                --bracket;
            else if (t.is(",") && paren == 0 && angle == 0 && bracket == 0) {
                groups.emplace_back(group_start, pos_);
                group_start = pos_ + 1;
            }
            ++pos_;
        }
        if (pos_ > group_start || !groups.empty())
            groups.emplace_back(group_start, pos_);
        expect(")");

        for (auto [first, last] : groups) {
            std::size_t i = last;
            while (i > first && (toks_[i - 1].is("]") || toks_[i - 1].is("[")))
                --i;
            if (i == first)
                throw SyntaxError(path_, toks_[first].line, "empty parameter declaration");
            const Token& name = toks_[i - 1];
            if (name.is("this"))
                continue; // receiver parameter
            if (!name.is_identifier())
                throw SyntaxError(path_, name.line, "expected parameter name");
            m.parameter_names.emplace_back(name.text);
        }
    }

    // ---- statements --------------------------------------------------------

    void parse_block_into(std::vector<Node>& out) {
        expect("{");
        while (!check("}")) {
            if (eof())
                fail("unterminated block");
            parse_statement(out);
        }
        expect("}");
    }

    // A braced body belongs to its control statement, so it adds no level
    // of its own.
    void parse_body(Node& owner) {
        if (check("{"))
            parse_block_into(owner.children);
        else
            parse_statement(owner.children);
    }

    void parse_statement(std::vector<Node>& out) {
        std::size_t start = pos_;
        if (check("{")) {
            Node block = make(NodeKind::Block, start);
            parse_block_into(block.children);
            block.span = span(start, pos_ - 1);
            out.push_back(std::move(block));
            return;
        }
        if (accept(";"))
            return;
        if (check("if"))
            return parse_if(out);
        if (check("for"))
            return parse_for(out);
        if (check("while")) {
            Node loop = make(NodeKind::While, start);
            ++pos_;
            parse_condition(out);
            parse_body(loop);
            loop.span = span(start, pos_ - 1);
            out.push_back(std::move(loop));
            return;
        }
        if (check("do")) {
            Node loop = make(NodeKind::Do, start);
            ++pos_;
            parse_body(loop);
            expect("while");
            parse_condition(out);
            expect(";");
            loop.span = span(start, pos_ - 1);
            out.push_back(std::move(loop));
            return;
        }
        if (check("switch"))
            return parse_switch(out);
        if (check("try"))
            return parse_try(out);
        if (check("synchronized") && at(1).is("(")) {
            Node sync = make(NodeKind::Synchronized, start);
            ++pos_;
            parse_condition(out);
            if (!check("{"))
                fail("expected block after synchronized");
            parse_block_into(sync.children);
            sync.span = span(start, pos_ - 1);
            out.push_back(std::move(sync));
            return;
        }
        if (check("else") || check("case") || check("default") || check("catch") || check("finally"))
            fail("unexpected '" + std::string(cur().text) + "'");
        if (cur().is_identifier() && at(1).is(":")) {
            pos_ += 2; // label
            return parse_statement(out);
        }
        if (looks_like_local_type()) {
            skip_modifiers();
            out.push_back(parse_type_decl(start));
            return;
        }
        scan_expression(out, {";"});
        expect(";");
    }

    void parse_condition(std::vector<Node>& out) {
        expect("(");
        scan_expression(out, {")"});
        expect(")");
    }

    void parse_if(std::vector<Node>& out) {
        std::size_t start = pos_;
        Node node = make(NodeKind::If, start);
        ++pos_;
        parse_condition(out);
        parse_body(node);
        if (accept("else")) {
            if (check("if")) {
                node.span = span(start, pos_ - 2);
                out.push_back(std::move(node));
                return parse_if(out);
            }
            parse_body(node);
        }
        node.span = span(start, pos_ - 1);
        out.push_back(std::move(node));
    }

    bool header_has_semicolon() const {
        int depth = 0;
        for (std::size_t k = pos_; k < toks_.size(); ++k) {
            const auto& t = toks_[k];
            if (t.kind == TokenKind::EndOfFile)
                return false;
            if (t.is("(") || t.is("[") || t.is("{"))
                ++depth;
            else if (t.is(")") || t.is("]") || t.is("}")) {
                if (--depth == 0)
                    return false;
            } else if (t.is(";") && depth == 1)
                return true;
        }
        return false;
    }

    void parse_for(std::vector<Node>& out) {
        std::size_t start = pos_;
        ++pos_;
        if (!check("("))
            fail("expected '(' after for");
        Node loop = make(header_has_semicolon() ? NodeKind::For : NodeKind::ForEach, start);
        expect("(");
        while (true) {
            scan_expression(out, {";", ")"});
            if (!accept(";"))
                break;
        }
        expect(")");
        parse_body(loop);
        loop.span = span(start, pos_ - 1);
        out.push_back(std::move(loop));
    }

    void parse_try(std::vector<Node>& out) {
        std::size_t start = pos_;
        Node node = make(NodeKind::Try, start);
        ++pos_;
        if (accept("(")) {
            while (true) {
                scan_expression(out, {";", ")"});
                if (!accept(";"))
                    break;
            }
            expect(")");
        }
        if (!check("{"))
            fail("expected block after try");
        parse_block_into(node.children);
        node.span = span(start, pos_ - 1);
        out.push_back(std::move(node));
        while (check("catch")) {
            std::size_t cstart = pos_;
            Node clause = make(NodeKind::Catch, cstart);
            ++pos_;
            parse_condition(out);
            if (!check("{"))
                fail("expected block after catch");
            parse_block_into(clause.children);
            clause.span = span(cstart, pos_ - 1);
            out.push_back(std::move(clause));
        }
        if (check("finally")) {
            std::size_t fstart = pos_;
            Node fin = make(NodeKind::Finally, fstart);
            ++pos_;
            if (!check("{"))
                fail("expected block after finally");
            parse_block_into(fin.children);
            fin.span = span(fstart, pos_ - 1);
            out.push_back(std::move(fin));
        }
    }

    void parse_switch(std::vector<Node>& out) {
        std::size_t start = pos_;
        Node sw = make(NodeKind::Switch, start);
        ++pos_;
        parse_condition(out);
        expect("{");
        while (!check("}")) {
            if (eof())
                fail("unterminated switch");
            if (check("case")) {
                sw.children.push_back(make(NodeKind::CaseLabel, pos_));
                ++pos_;
                scan_expression(sw.children, {":", "->"});
                parse_case_body_start(sw);
            } else if (accept("default")) {
                parse_case_body_start(sw);
            } else {
                parse_statement(sw.children);
            }
        }
        expect("}");
        sw.span = span(start, pos_ - 1);
        out.push_back(std::move(sw));
    }

    void parse_case_body_start(Node& sw) {
        if (accept("->")) {
            if (check("{")) {
                parse_block_into(sw.children);
            } else {
                scan_expression(sw.children, {";"});
                expect(";");
            }
            return;
        }
        expect(":");
    }

    // ---- expressions -------------------------------------------------------

    static bool contains(Stops stops, std::string_view s) {
        return std::find(stops.begin(), stops.end(), s) != stops.end();
    }

    // Consumes tokens up to (not including) the first stop token at this
    // nesting level, recording decision points, lambdas with block bodies,
    // switch expressions and anonymous classes into `out`.
    void scan_expression(std::vector<Node>& out, Stops stops) {
        int pending_ternary = 0;
        while (true) {
            if (eof())
                fail("unexpected end of file in expression");
            const Token& t = cur();
            if (t.kind == TokenKind::Literal) {
                ++pos_;
                continue;
            }
            if (t.is(":")) {
                if (pending_ternary > 0) {
                    --pending_ternary;
                    ++pos_;
                    continue;
                }
                if (contains(stops, ":"))
                    return;
                ++pos_;
                continue;
            }
            if (contains(stops, t.text))
                return;
            if (t.is("(") || t.is("[")) {
                std::string_view close = t.is("(") ? ")" : "]";
                ++pos_;
                if (close == ")")
                    scan_expression(out, {")"});
                else
                    scan_expression(out, {"]"});
                expect(close);
                continue;
            }
            if (t.is(")") || t.is("]") || t.is("}") || t.is(";"))
                fail("unexpected '" + std::string(t.text) + "' in expression");
            if (t.is("{")) {
                if (prev_is("->")) {
                    std::size_t start = pos_;
                    Node lambda = make(NodeKind::Lambda, start);
                    parse_block_into(lambda.children);
                    lambda.span = span(start, pos_ - 1);
                    out.push_back(std::move(lambda));
                } else {
                    // array initializer
                    ++pos_;
                    scan_expression(out, {"}"});
                    expect("}");
                }
                continue;
            }
            if (t.is("new") && !prev_is("::")) {
                parse_creator(out);
                continue;
            }
            if (t.is("switch")) {
                parse_switch(out);
                continue;
            }
            if (t.is("?")) {
                if (!prev_is("<") && !prev_is(",")) {
                    out.push_back(make(NodeKind::Conditional, pos_));
                    ++pending_ternary;
                }
                ++pos_;
                continue;
            }
            if (t.is("&&")) {
                out.push_back(make(NodeKind::ConditionalAnd, pos_));
            } else if (t.is("||")) {
                out.push_back(make(NodeKind::ConditionalOr, pos_));
            }
            ++pos_;
        }
    }

    void parse_creator(std::vector<Node>& out) {
        expect("new");
        if (check("<"))
            skip_angle();
        while (check("@"))
            skip_annotation();
        if (!cur().is_identifier() && !is_primitive(cur()))
            fail("expected a type after 'new'");
        ++pos_;
        while (true) {
            if (check("<")) {
                skip_angle();
                continue;
            }
            if (check(".")) {
                ++pos_;
                while (check("@"))
                    skip_annotation();
                expect_identifier("type name");
                continue;
            }
            break;
        }
        if (check("["))
            return; // dimensions and initializer are ordinary brackets/braces to the caller
        expect("(");
        scan_expression(out, {")"});
        expect(")");
        if (check("{"))
            out.push_back(parse_anonymous_body());
    }

    std::string_view src_;
    std::string path_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<TypeScope> scopes_;
};

void shift_spans(Node& node, std::size_t offset, int lines) {
    node.span.begin -= std::min(node.span.begin, offset);
    node.span.end -= std::min(node.span.end, offset);
    node.span.begin_line -= lines;
    node.span.end_line -= lines;
    for (auto& child : node.children)
        shift_spans(child, offset, lines);
}

} // namespace

SyntaxTree parse_java(std::string_view source, const std::string& path) {
    SyntaxTree tree;
    tree.path = path;
    tree.root = Parser(source, path).parse_unit();
    return tree;
}

Node parse_member_fragment(std::string_view member_text, const std::string& origin) {
    static constexpr std::string_view kPrefix = "class Fragment {\n";
    std::string wrapped;
    wrapped.reserve(member_text.size() + kPrefix.size() + 3);
    wrapped.append(kPrefix).append(member_text).append("\n}\n");

    SyntaxTree tree;
    try {
        tree = parse_java(wrapped, origin);
    } catch (const SyntaxError& e) {
        throw SyntaxError(origin, std::max(1, e.line() - 1), "unparseable member declaration");
    }
    if (tree.root.children.size() != 1)
        throw SyntaxError(origin, 1, "fragment is not a single member declaration");
    for (auto& member : tree.root.children.front().children) {
        if (member.kind == NodeKind::MethodDeclaration || member.kind == NodeKind::ConstructorDeclaration) {
            Node result = std::move(member);
            shift_spans(result, kPrefix.size(), 1);
            return result;
        }
    }
    throw SyntaxError(origin, 1, "fragment contains no method or constructor declaration");
}

} // namespace smellcloze::java
