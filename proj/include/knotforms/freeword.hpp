#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotforms/errors.hpp"

namespace knotforms {

// Freely reduced word in the free group F_k. Letters are pairs
// (generator index in 1..k, exponent +-1); the empty word is the identity.
class FreeWord {
public:
    explicit FreeWord(int rank) : rank_(rank) {
        if (rank < 1) throw RankMismatch("rank must be positive");
    }

    static FreeWord generator(int rank, int index, int exponent = 1);

    int rank() const { return rank_; }
    const std::vector<std::pair<int, int>>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const FreeWord& o) const {
        return rank_ == o.rank_ && letters_ == o.letters_;
    }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }

    FreeWord operator*(const FreeWord& o) const;  // RankMismatch
    FreeWord inverse() const;

    // Appends a letter with free reduction; building block for parsing.
    void push_letter(int index, int exponent);

private:
    int rank_;
    std::vector<std::pair<int, int>> letters_;
};

inline FreeWord commutator(const FreeWord& w, const FreeWord& v) {
    return w.inverse() * v.inverse() * w * v;
}

inline FreeWord conjugate(const FreeWord& w, const FreeWord& g) {
    return g.inverse() * w * g;
}

// Word syntax: letters a..z (generators 1..26), uppercase for inverses,
// whitespace ignored, and the commutator shorthand "[x,y]" with nesting.
// Every generator used must fit in `rank`.
FreeWord parse_word(const std::string& text, int rank);

// "a b A B" spelling; "1" for the identity.
std::string word_str(const FreeWord& w);

}  // namespace knotforms
