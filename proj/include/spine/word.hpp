#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spine {

struct Letter {
    int gen = 0;
    int sign = 1;

    Letter inverse() const { return {gen, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word in the free group on x_0, ..., x_{rank-1}. Generator indices are
// reduced mod rank when a word is constructed.
class Word {
public:
    Word() = default;
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    void push_back(Letter a);

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int rank_ = 1;
    std::vector<Letter> letters_;
};

int mod(long a, long m);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word shift(const Word& w, long s);
Word inverse(const Word& w);
Word rotate(const Word& w, std::size_t k);
Word concat(const Word& a, const Word& b);

std::vector<long> exponent_vector(const Word& w);

// Smallest representative of w under cyclic permutation and shift, after
// cyclic reduction.
Word normal_form(const Word& w);

// Text syntax "x0 x1^3 x2^-1"; exponents are expanded. The empty string and
// "1" both denote the empty word. Throws std::invalid_argument.
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w, char symbol = 'x');

}  // namespace spine
