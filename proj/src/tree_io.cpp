#include "heintree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hein {

ParseError::ParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}

namespace {

// Recursive-descent Newick reader building a raw (possibly degree-2) tree.
class NewickReader {
public:
    explicit NewickReader(std::string_view text) : text_(text) {}

    WeightedTree read() {
        skip_ws();
        if (peek() != '(') throw ParseError("expected '('", pos_);
        int root = new_node();
        read_children(root);
        skip_ws();
        expect(';');
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters after ';'", pos_);

        std::map<int, std::string> labels;
        for (const auto& [node, label] : labels_) labels[node] = label;
        return WeightedTree::from_edges(node_count_, edges_, labels);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int node_count_ = 0;
    std::vector<WeightedTree::Edge> edges_;
    std::vector<std::pair<int, std::string>> labels_;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    int new_node() { return node_count_++; }

    void read_children(int parent) {
        expect('(');
        int children = 0;
        while (true) {
            read_branch(parent);
            ++children;
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        if (children < 2) throw ParseError("internal node needs at least 2 children", pos_);
        expect(')');
    }

    void read_branch(int parent) {
        skip_ws();
        int child = new_node();
        if (peek() == '(') {
            read_children(child);
            skip_ws();
            // An internal node must stay unlabeled: a label here is an error.
            if (peek() != ':' )
                throw ParseError("internal node must be unlabeled and carry ':weight'", pos_);
        } else {
            std::size_t start = pos_;
            std::string label = read_label();
            if (label.empty()) throw ParseError("expected leaf label", start);
            labels_.emplace_back(child, label);
        }
        expect(':');
        Rational w = read_weight();
        edges_.push_back({parent, child, w});
    }

    std::string read_label() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')
                ++pos_;
            else
                break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational read_weight() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == '-' || c == '+')
                ++pos_;
            else
                break;
        }
        if (pos_ == start) throw ParseError("expected weight", start);
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }
};

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

void throw_if_invalid(const WeightedTree& t) {
    std::vector<Violation> violations = validate(t);
    if (violations.empty()) return;
    std::string msg = "parsed tree violates invariants:";
    for (const auto& v : violations) msg += " [" + v.detail + "]";
    throw ParseError(msg, 0);
}

struct Serializer {
    const WeightedTree& t;
    std::string out;

    // Children ordered by smallest contained leaf label.
    void emit_subtree(int v, int parent) {
        std::vector<int> kids;
        for (const auto& [to, w] : t.neighbors(v)) {
            (void)w;
            if (to != parent) kids.push_back(to);
        }
        if (kids.empty()) {
            out += t.label_of(v);
            return;
        }
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            return min_leaf_label_via(t, a, v) < min_leaf_label_via(t, b, v);
        });
        out += '(';
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i) out += ',';
            emit_subtree(kids[i], v);
            out += ':';
            for (const auto& [to, w] : t.neighbors(v))
                if (to == kids[i]) {
                    out += format_rational(w);
                    break;
                }
        }
        out += ')';
    }
};

} // namespace

WeightedTree parse_tree(std::string_view text) {
    // Skip leading whitespace to decide the form.
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.substr(i, 5) == "EDGE " || text.substr(i, 5) == "EDGE\t") {
        std::vector<std::string> tok = split_ws(text.substr(i + 4));
        if (tok.size() != 3) throw ParseError("EDGE form needs exactly 'EDGE x y w'", i);
        Rational w;
        try {
            w = parse_rational(tok[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), i);
        }
        if (tok[0] == tok[1]) throw ParseError("EDGE endpoints must differ", i);
        WeightedTree t = WeightedTree::from_edges(2, {{0, 1, w}}, {{0, tok[0]}, {1, tok[1]}});
        throw_if_invalid(t);
        return t;
    }

    WeightedTree raw = NewickReader(text).read();
    WeightedTree t = suppress_degree2(raw);
    if (t.leaf_count() < 3)
        throw ParseError("Newick form is for trees with >= 3 leaves; use 'EDGE x y w'", 0);
    throw_if_invalid(t);
    return t;
}

std::string serialize_tree(const WeightedTree& t) {
    std::vector<Violation> violations = validate(t);
    for (const auto& v : violations)
        throw std::invalid_argument("cannot serialize invalid tree: " + v.detail);
    for (int v = 0; v < t.node_count(); ++v)
        if (!t.is_leaf(v) && t.degree(v) == 2)
            throw std::invalid_argument("cannot serialize a tree with a degree-2 node; suppress first");

    std::vector<std::string> labels = t.labels_sorted();
    if (labels.size() < 2) throw std::invalid_argument("single-leaf trees are not serializable");
    if (labels.size() == 2)
        return "EDGE " + labels[0] + " " + labels[1] + " " +
               format_rational(leaf_distance(t, labels[0], labels[1])) + "\n";

    // Root at the internal node next to the smallest leaf label: canonical
    // under any internal node numbering.
    int anchor_leaf = *t.node_of(labels[0]);
    int root = t.neighbors(anchor_leaf)[0].first;
    Serializer s{t, {}};
    s.emit_subtree(root, -1);
    s.out += ";\n";
    return s.out;
}

} // namespace hein
