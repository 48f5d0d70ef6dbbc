#include "spine/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spine {

int mod(long a, long m)
{
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

Word::Word(int rank) : rank_(rank)
{
    if (rank < 1)
        throw std::invalid_argument("word rank must be positive");
}

Word::Word(int rank, std::vector<Letter> letters) : Word(rank)
{
    letters_.reserve(letters.size());
    for (const auto& a : letters)
        push_back(a);
}

void Word::push_back(Letter a)
{
    if (a.sign != 1 && a.sign != -1)
        throw std::invalid_argument("letter sign must be +1 or -1");
    a.gen = mod(a.gen, rank_);
    letters_.push_back(a);
}

bool is_freely_reduced(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1].inverse())
            return false;
    return true;
}

bool is_cyclically_reduced(const Word& w)
{
    if (!is_freely_reduced(w))
        return false;
    return w.size() < 2 || w[0] != w[w.size() - 1].inverse();
}

Word free_reduce(const Word& w)
{
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& a : w.letters()) {
        if (!stack.empty() && stack.back() == a.inverse())
            stack.pop_back();
        else
            stack.push_back(a);
    }
    return Word(w.rank(), std::move(stack));
}

Word cyclic_reduce(const Word& w)
{
    Word r = free_reduce(w);
    const auto& ls = r.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return Word(w.rank(), std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

Word shift(const Word& w, long s)
{
    Word r(w.rank());
    for (const auto& a : w.letters())
        r.push_back({mod(a.gen + s, w.rank()), a.sign});
    return r;
}

Word inverse(const Word& w)
{
    Word r(w.rank());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        r.push_back(it->inverse());
    return r;
}

Word rotate(const Word& w, std::size_t k)
{
    if (w.empty())
        return w;
    k %= w.size();
    std::vector<Letter> ls(w.letters().begin() + k, w.letters().end());
    ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + k);
    return Word(w.rank(), std::move(ls));
}

Word concat(const Word& a, const Word& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("concat of words over different ranks");
    std::vector<Letter> ls = a.letters();
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    return Word(a.rank(), std::move(ls));
}

std::vector<long> exponent_vector(const Word& w)
{
    std::vector<long> v(w.rank(), 0);
    for (const auto& a : w.letters())
        v[a.gen] += a.sign;
    return v;
}

Word normal_form(const Word& w)
{
    Word c = cyclic_reduce(w);
    Word best = c;
    for (std::size_t k = 0; k < c.size(); ++k) {
        Word r = rotate(c, k);
        for (int s = 0; s < c.rank(); ++s) {
            Word t = shift(r, s);
            if (t.letters() < best.letters())
                best = std::move(t);
        }
    }
    return best;
}

Word parse_word(std::string_view text, int rank)
{
    Word w(rank);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        std::size_t i = 0;
        if (!std::isalpha(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("bad token '" + tok + "'");
        ++i;
        if (i < tok.size() && tok[i] == '_')
            ++i;
        std::size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            ++i;
        if (i == start)
            throw std::invalid_argument("missing generator index in '" + tok + "'");
        long gen = std::stol(tok.substr(start, i - start));
        if (gen >= rank)
            throw std::invalid_argument("generator index out of range in '" + tok + "'");
        long exp = 1;
        if (i < tok.size()) {
            if (tok[i] != '^')
                throw std::invalid_argument("bad token '" + tok + "'");
            std::string e = tok.substr(i + 1);
            std::size_t used = 0;
            try {
                exp = std::stol(e, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in '" + tok + "'");
            }
            if (used != e.size())
                throw std::invalid_argument("bad exponent in '" + tok + "'");
        }
        int sign = exp < 0 ? -1 : 1;
        for (long j = 0; j < (exp < 0 ? -exp : exp); ++j)
            w.push_back({static_cast<int>(gen), sign});
    }
    return w;
}

std::string format_word(const Word& w, char symbol)
{
    if (w.empty())
        return "1";
    std::ostringstream out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        long e = static_cast<long>(j - i) * ls[i].sign;
        if (i > 0)
            out << ' ';
        out << symbol << ls[i].gen;
        if (e != 1)
            out << '^' << e;
        i = j;
    }
    return out.str();
}

}  // namespace spine
