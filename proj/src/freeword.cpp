#include "knotforms/freeword.hpp"

#include <cctype>

namespace knotforms {

FreeWord FreeWord::generator(int rank, int index, int exponent) {
    FreeWord w(rank);
    w.push_letter(index, exponent);
    return w;
}

void FreeWord::push_letter(int index, int exponent) {
    if (index < 1 || index > rank_) throw RankMismatch("generator index out of range");
    if (exponent != 1 && exponent != -1) throw RankMismatch("letter exponent must be +-1");
    if (!letters_.empty() && letters_.back().first == index &&
        letters_.back().second == -exponent) {
        letters_.pop_back();  // free reduction
        return;
    }
    letters_.emplace_back(index, exponent);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    if (rank_ != o.rank_) throw RankMismatch("word product");
    FreeWord r = *this;
    for (const auto& [i, e] : o.letters_) r.push_letter(i, e);
    return r;
}

FreeWord FreeWord::inverse() const {
    FreeWord r(rank_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.push_letter(it->first, -it->second);
    return r;
}

namespace {

struct WordParser {
    const std::string& s;
    std::size_t i = 0;
    int rank;

    WordParser(const std::string& text, int r) : s(text), rank(r) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }

    // seq := item*                 (product, left to right)
    // item := letter | '[' seq ',' seq ']'
    FreeWord parse_seq(char stop1, char stop2) {
        FreeWord acc(rank);
        for (;;) {
            skip_ws();
            if (i >= s.size() || s[i] == stop1 || s[i] == stop2) return acc;
            char c = s[i];
            if (c == '[') {
                ++i;
                FreeWord left = parse_seq(',', '\0');
                skip_ws();
                if (i >= s.size() || s[i] != ',') fail("expected , in commutator");
                ++i;
                FreeWord right = parse_seq(']', '\0');
                skip_ws();
                if (i >= s.size() || s[i] != ']') fail("expected ] closing commutator");
                ++i;
                acc = acc * commutator(left, right);
            } else if (c >= 'a' && c <= 'z') {
                ++i;
                acc.push_letter(c - 'a' + 1, 1);
            } else if (c >= 'A' && c <= 'Z') {
                ++i;
                acc.push_letter(c - 'A' + 1, -1);
            } else if (c == '1') {
                ++i;  // identity
            } else {
                fail("unexpected character in word");
            }
        }
    }

    FreeWord parse() {
        FreeWord w = parse_seq('\0', '\0');
        skip_ws();
        if (i < s.size()) fail("trailing input");
        return w;
    }
};

}  // namespace

FreeWord parse_word(const std::string& text, int rank) {
    WordParser p(text, rank);
    return p.parse();
}

std::string word_str(const FreeWord& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& [i, e] : w.letters()) {
        if (!out.empty()) out += ' ';
        char base = e > 0 ? 'a' : 'A';
        out += static_cast<char>(base + i - 1);
    }
    return out;
}

}  // namespace knotforms
