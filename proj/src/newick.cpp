#include "treelabel/newick.hpp"

#include "treelabel/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace treelabel {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' || is_space(c);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NewickTopology run() {
        skip_space();
        if (at_end() || peek() == ';') {
            fail(ErrorCode::EmptyTree, "input contains no tree");
        }

        // Explicit stack of open internal nodes; deep caterpillars must not
        // exhaust the call stack.
        std::vector<NodeId> open;
        bool expect_subtree = true;
        while (true) {
            skip_space();
            if (expect_subtree) {
                if (peek_is('(')) {
                    ++pos_;
                    open.push_back(new_node(open.empty() ? std::nullopt : std::optional(open.back()),
                                            false));
                    continue;
                }
                NodeId leaf = new_node(open.empty() ? std::nullopt : std::optional(open.back()), true);
                names_[leaf] = read_name();
                skip_branch_length();
                expect_subtree = false;
            } else {
                if (open.empty()) {
                    break;
                }
                if (peek_is(',')) {
                    ++pos_;
                    expect_subtree = true;
                } else if (peek_is(')')) {
                    ++pos_;
                    NodeId closed = open.back();
                    open.pop_back();
                    skip_space();
                    names_[closed] = read_name();
                    skip_branch_length();
                } else {
                    syntax_error(at_end() ? "unbalanced parentheses" : "expected ',' or ')'");
                }
            }
        }

        skip_space();
        if (!peek_is(';')) {
            syntax_error(peek_is(')') ? "unbalanced parentheses" : "missing ';'");
        }
        ++pos_;
        skip_space();
        if (!at_end()) {
            syntax_error("trailing text after ';'");
        }

        std::vector<bool> leaf_flags(is_leaf_.begin(), is_leaf_.end());
        return NewickTopology{Tree::build(parent_, leaf_flags), std::move(names_)};
    }

private:
    NodeId new_node(std::optional<NodeId> parent, bool leaf) {
        parent_.push_back(parent);
        is_leaf_.push_back(leaf);
        names_.emplace_back();
        return static_cast<NodeId>(parent_.size() - 1);
    }

    std::string read_name() {
        skip_space();
        if (peek_is('\'')) {
            ++pos_;
            std::string name;
            while (true) {
                if (at_end()) {
                    syntax_error("unterminated quoted name");
                }
                char c = text_[pos_++];
                if (c == '\'') {
                    if (peek_is('\'')) {
                        name += '\'';
                        ++pos_;
                        continue;
                    }
                    break;
                }
                name += c;
            }
            return name;
        }
        std::size_t start = pos_;
        while (!at_end() && !is_delimiter(text_[pos_])) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_branch_length() {
        skip_space();
        if (!peek_is(':')) {
            return;
        }
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        while (!at_end() && !is_delimiter(text_[pos_])) {
            ++pos_;
        }
        if (start == pos_) {
            syntax_error("empty branch length");
        }
    }

    void skip_space() {
        while (!at_end() && is_space(text_[pos_])) {
            ++pos_;
        }
        // [comments] are skipped as whitespace
        if (peek_is('[')) {
            auto close = text_.find(']', pos_);
            if (close == std::string_view::npos) {
                syntax_error("unterminated comment");
            }
            pos_ = close + 1;
            skip_space();
        }
    }

    [[noreturn]] void syntax_error(const std::string& what) const {
        fail(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_));
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool peek_is(char c) const { return !at_end() && text_[pos_] == c; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::optional<NodeId>> parent_;
    std::vector<char> is_leaf_;
    std::vector<std::string> names_;
};

std::optional<Label> parse_label(std::string_view name) {
    if (!name.empty() && name.front() == '+') {
        name.remove_prefix(1);
        if (!name.empty() && name.front() == '-') {
            return std::nullopt;
        }
    }
    Label value = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (name.empty() || ec != std::errc() || ptr != name.data() + name.size()) {
        return std::nullopt;
    }
    return value;
}

bool needs_quotes(const std::string& name) {
    for (char c : name) {
        if (is_delimiter(c) || c == '\'' || c == '[' || c == ']') {
            return true;
        }
    }
    return false;
}

} // namespace

NewickTopology parse_newick_topology(std::string_view text) { return Parser(text).run(); }

LabeledTreeDocument parse_newick(std::string_view text, std::string source_name) {
    NewickTopology topo = parse_newick_topology(text);
    std::vector<std::optional<Label>> labels(topo.tree.node_count());
    for (NodeId leaf : topo.tree.leaves()) {
        auto value = parse_label(topo.names[leaf]);
        if (!value) {
            fail(ErrorCode::NonIntegerLeafName,
                 "leaf name '" + topo.names[leaf] + "' is not an integer");
        }
        labels[leaf] = *value;
    }
    LeafLabeling leaf_labels(topo.tree, std::move(labels));
    return LabeledTreeDocument{std::move(topo.tree), std::move(leaf_labels), std::move(source_name)};
}

std::string serialize_newick(const Tree& t, const std::vector<std::string>& names) {
    if (names.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "one name per node is required");
    }
    auto emit_name = [&](std::string& out, NodeId v) {
        if (needs_quotes(names[v])) {
            out += '\'';
            for (char c : names[v]) {
                out += c;
                if (c == '\'') {
                    out += '\'';
                }
            }
            out += '\'';
        } else {
            out += names[v];
        }
    };

    std::string out;
    // (node, next child index) frames
    std::vector<std::pair<NodeId, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        auto kids = t.children(v);
        if (kids.empty()) {
            emit_name(out, v);
            stack.pop_back();
            continue;
        }
        if (next == 0) {
            out += '(';
        } else if (next < kids.size()) {
            out += ',';
        }
        if (next < kids.size()) {
            NodeId child = kids[next++];
            stack.emplace_back(child, 0);
            continue;
        }
        out += ')';
        emit_name(out, v);
        stack.pop_back();
    }
    out += ';';
    return out;
}

std::string serialize_labeled(const LabeledTreeDocument& doc, const Labeling& full) {
    const Tree& t = doc.tree;
    if (full.values.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "labeling covers " + std::to_string(full.values.size()) +
                                              " of " + std::to_string(t.node_count()) + " nodes");
    }
    std::vector<std::string> names(t.node_count());
    for (std::size_t v = 0; v < names.size(); ++v) {
        names[v] = std::to_string(full.values[v]);
    }
    return serialize_newick(t, names);
}

std::string serialize_leaves(const Tree& t, const LeafLabeling& l) {
    std::vector<std::string> names(t.node_count());
    for (NodeId leaf : t.leaves()) {
        names[leaf] = std::to_string(l.label(leaf));
    }
    return serialize_newick(t, names);
}

std::vector<std::string> split_newick_batch(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    bool in_quote = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\'') {
            in_quote = !in_quote;
        } else if (text[i] == ';' && !in_quote) {
            out.emplace_back(text.substr(start, i + 1 - start));
            start = i + 1;
        }
    }
    std::string_view rest = text.substr(start);
    bool blank = true;
    for (char c : rest) {
        blank = blank && is_space(c);
    }
    if (!blank) {
        // unterminated trailing tree; let the parser report it
        out.emplace_back(rest);
    }
    for (auto& s : out) {
        std::size_t b = 0;
        while (b < s.size() && is_space(s[b])) {
            ++b;
        }
        s.erase(0, b);
    }
    return out;
}

} // namespace treelabel
