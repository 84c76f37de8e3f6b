#include "loewylab/groupspec.hpp"

#include "loewylab/groupio.hpp"

#include <cctype>

namespace loewylab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GroupPtr parse() {
        skip_ws();
        GroupPtr g = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after group spec");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return text_.substr(start, pos_ - start);
    }

    long number() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::stol(text_.substr(start, pos_ - start));
    }

    std::string path_arg() {
        skip_ws();
        if (peek() == '"' || peek() == '\'') {
            const char quote = text_[pos_++];
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != quote) ++pos_;
            if (pos_ == text_.size()) fail("unterminated quoted path");
            return text_.substr(start, pos_++ - start);
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != ',') ++pos_;
        std::string p = text_.substr(start, pos_ - start);
        while (!p.empty() && std::isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
        if (p.empty()) fail("expected a file path");
        return p;
    }

    GroupPtr parse_spec() {
        const std::size_t at = pos_;
        const std::string name = ident();
        expect('(');
        GroupPtr out;
        try {
            if (name == "cyclic") {
                const long p = number();
                expect(',');
                const long n = number();
                out = cyclic_group(static_cast<int>(p), static_cast<int>(n));
            } else if (name == "dihedral") {
                out = dihedral_group(static_cast<int>(number()));
            } else if (name == "semidihedral") {
                out = semidihedral_group(static_cast<int>(number()));
            } else if (name == "quaternion") {
                out = quaternion_group(static_cast<int>(number()));
            } else if (name == "modular") {
                const long p = number();
                expect(',');
                const long n = number();
                out = modular_maximal_cyclic_group(static_cast<int>(p), static_cast<int>(n));
            } else if (name == "extraspecial") {
                const long p = number();
                expect(',');
                const long order = number();
                expect(',');
                const std::string kind = ident();
                out = extraspecial_group(
                    static_cast<int>(p), static_cast<int>(order),
                    parse_extraspecial_kind(kind, static_cast<int>(p)));
            } else if (name == "direct") {
                GroupPtr a = parse_spec();
                expect(',');
                GroupPtr b = parse_spec();
                out = direct_product(a, b);
            } else if (name == "central") {
                GroupPtr a = parse_spec();
                expect(',');
                GroupPtr b = parse_spec();
                out = central_product(a, b);
            } else if (name == "file") {
                out = load_group_file(path_arg());
            } else {
                pos_ = at;
                fail("unknown constructor '" + name + "'");
            }
        } catch (const SpecParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw SpecParseError(e.what(), at);
        }
        expect(')');
        return out;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupPtr parse_group_spec(const std::string& text) { return Parser(text).parse(); }

namespace {

int parse_word(const GroupPtr& g, const std::string& word, std::size_t base_pos) {
    std::size_t pos = 0;
    int value = 0;  // identity
    auto skip_ws = [&] {
        while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
    };
    skip_ws();
    if (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
        std::size_t end = pos;
        while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
        const long idx = std::stol(word.substr(pos, end - pos));
        pos = end;
        skip_ws();
        if (pos != word.size())
            throw SpecParseError("unexpected input after element index", base_pos + pos);
        if (idx < 0 || idx >= g->order())
            throw SpecParseError("element index out of range", base_pos);
        return static_cast<int>(idx);
    }
    bool first = true;
    while (pos < word.size()) {
        skip_ws();
        if (!first) {
            if (word[pos] != '*')
                throw SpecParseError("expected '*' between generator factors", base_pos + pos);
            ++pos;
            skip_ws();
        }
        first = false;
        const std::size_t start = pos;
        while (pos < word.size() &&
               (std::isalnum(static_cast<unsigned char>(word[pos])) || word[pos] == '_'))
            ++pos;
        if (pos == start)
            throw SpecParseError("expected a generator name", base_pos + pos);
        const std::string gen = word.substr(start, pos - start);
        const int idx = g->named_generator(gen);
        if (idx < 0)
            throw SpecParseError("unknown generator '" + gen + "' for group " + g->name(),
                                 base_pos + start);
        long exp = 1;
        skip_ws();
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t end = pos;
            if (end < word.size() && word[end] == '-') ++end;
            while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
            if (end == pos)
                throw SpecParseError("expected an exponent", base_pos + pos);
            exp = std::stol(word.substr(pos, end - pos));
            pos = end;
        }
        value = g->mul(value, g->power(idx, exp));
        skip_ws();
    }
    return value;
}

}  // namespace

Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    if (trimmed.empty()) return trivial_subgroup(g);
    if (trimmed == "P" || trimmed == "all") return whole_group(g);
    std::vector<int> gens;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
        const std::size_t comma = trimmed.find(',', pos);
        const std::string item =
            trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        gens.push_back(parse_word(g, item, pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return subgroup_generated(g, gens);
}

}  // namespace loewylab
