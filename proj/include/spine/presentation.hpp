#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spine/word.hpp"

namespace spine {

class CyclicPresentation {
public:
    explicit CyclicPresentation(Word defining_word) : word_(std::move(defining_word)) {}

    int rank() const { return word_.rank(); }
    const Word& defining_word() const { return word_; }
    Word relator(int i) const { return shift(word_, i); }

private:
    Word word_;
};

std::vector<Word> relators(const CyclicPresentation& p);

// Equal up to free reduction, cyclic permutation of the defining word and
// the shift.
bool equivalent(const CyclicPresentation& a, const CyclicPresentation& b);

enum class Family { H, G, F };

struct FamilySpec {
    Family family = Family::H;
    int r = 0;
    int k = 0;
    int l = 0;
    int n = 0;
    int f = 0;

    static FamilySpec H(int r, int n);
    static FamilySpec G(int k, int l, int n, int f);
    static FamilySpec F(int k, int l, int n);

    // Throws std::invalid_argument when the parameters are out of range.
    void validate() const;
    std::string str() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Parses "H:r,n", "G:k,l,n,f" or "F:k,l,n". Throws std::invalid_argument.
FamilySpec parse_family(std::string_view text);

CyclicPresentation build_family(const FamilySpec& spec);

// <x, t | t^n, relators...>. Words have rank 2 with generator 0 = x and
// generator 1 = t.
struct TwoGeneratorPresentation {
    int n = 0;
    std::vector<Word> relators;
};

constexpr int gen_x = 0;
constexpr int gen_t = 1;

std::string format_xt(const Word& w);

TwoGeneratorPresentation shift_extension(int k, int l, int n, int f);

// Kernel of t -> t, x -> t^f, presented on y_i = t^i x t^-(i+f).
CyclicPresentation rewrite_kernel(const TwoGeneratorPresentation& e, int f);

}  // namespace spine
