#include "spine/presentation.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace spine {

std::vector<Word> relators(const CyclicPresentation& p)
{
    std::vector<Word> rs;
    rs.reserve(p.rank());
    for (int i = 0; i < p.rank(); ++i)
        rs.push_back(p.relator(i));
    return rs;
}

bool equivalent(const CyclicPresentation& a, const CyclicPresentation& b)
{
    return a.rank() == b.rank() && normal_form(a.defining_word()) == normal_form(b.defining_word());
}

FamilySpec FamilySpec::H(int r, int n)
{
    FamilySpec s;
    s.family = Family::H;
    s.r = r;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::G(int k, int l, int n, int f)
{
    FamilySpec s;
    s.family = Family::G;
    s.k = k;
    s.l = l;
    s.n = n;
    s.f = f;
    return s;
}

FamilySpec FamilySpec::F(int k, int l, int n)
{
    FamilySpec s = G(k, l, n, 0);
    s.family = Family::F;
    return s;
}

void FamilySpec::validate() const
{
    switch (family) {
    case Family::H:
        if (n <= 1 || r < 1)
            throw std::invalid_argument("H(r,n) needs n > 1 and r >= 1");
        break;
    case Family::G:
    case Family::F:
        if (n < 2 || k < 1 || l < 1)
            throw std::invalid_argument("G(k,l,n,f) needs n >= 2, k >= 1, l >= 1");
        if (f < 0 || f >= n)
            throw std::invalid_argument("G(k,l,n,f) needs 0 <= f < n");
        if (family == Family::F && f != 0)
            throw std::invalid_argument("F(k,l,n) has f = 0");
        break;
    }
}

std::string FamilySpec::str() const
{
    std::ostringstream out;
    switch (family) {
    case Family::H:
        out << "H:" << r << ',' << n;
        break;
    case Family::G:
        out << "G:" << k << ',' << l << ',' << n << ',' << f;
        break;
    case Family::F:
        out << "F:" << k << ',' << l << ',' << n;
        break;
    }
    return out.str();
}

FamilySpec parse_family(std::string_view text)
{
    auto colon = text.find(':');
    if (colon != 1)
        throw std::invalid_argument("family spec must look like H:r,n, G:k,l,n,f or F:k,l,n");
    std::vector<int> vals;
    std::string_view rest = text.substr(2);
    while (true) {
        auto comma = rest.find(',');
        std::string_view part = rest.substr(0, comma);
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size() || part.empty())
            throw std::invalid_argument("bad number in family spec '" + std::string(text) + "'");
        vals.push_back(v);
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    FamilySpec s;
    switch (text[0]) {
    case 'H':
        if (vals.size() != 2)
            throw std::invalid_argument("H expects r,n");
        s = FamilySpec::H(vals[0], vals[1]);
        break;
    case 'G':
        if (vals.size() != 4)
            throw std::invalid_argument("G expects k,l,n,f");
        s = FamilySpec::G(vals[0], vals[1], vals[2], vals[3]);
        break;
    case 'F':
        if (vals.size() != 3)
            throw std::invalid_argument("F expects k,l,n");
        s = FamilySpec::F(vals[0], vals[1], vals[2]);
        break;
    default:
        throw std::invalid_argument("unknown family '" + std::string(1, text[0]) + "'");
    }
    s.validate();
    return s;
}

CyclicPresentation build_family(const FamilySpec& spec)
{
    spec.validate();
    const int n = spec.n;
    Word w(n);
    if (spec.family == Family::H) {
        for (int j = 0; j < spec.r; ++j)
            w.push_back({j, 1});
        return CyclicPresentation(w);
    }
    const long k = spec.k, l = spec.l, f = spec.f;
    for (long j = 0; j < l; ++j)
        w.push_back({mod(j * f, n), 1});
    for (long j = 0; j < k; ++j)
        w.push_back({mod(l * f + 1 + j * f, n), 1});
    for (long j = l - 1; j >= 0; --j)
        w.push_back({mod(2 + j * f, n), -1});
    return CyclicPresentation(w);
}

std::string format_xt(const Word& w)
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
        out << (ls[i].gen == gen_x ? 'x' : 't');
        if (e != 1)
            out << '^' << e;
        i = j;
    }
    return out.str();
}

namespace {

void append_power(Word& w, int gen, long e)
{
    for (long j = 0; j < (e < 0 ? -e : e); ++j)
        w.push_back({gen, e < 0 ? -1 : 1});
}

}  // namespace

TwoGeneratorPresentation shift_extension(int k, int l, int n, int f)
{
    FamilySpec::G(k, l, n, f).validate();
    TwoGeneratorPresentation e;
    e.n = n;
    Word torsion(2);
    append_power(torsion, gen_t, n);
    Word w(2);
    append_power(w, gen_x, l);
    append_power(w, gen_t, 1);
    append_power(w, gen_x, k);
    append_power(w, gen_t, 1 - static_cast<long>(f) * k);
    append_power(w, gen_x, -l);
    append_power(w, gen_t, -2);
    e.relators = {torsion, free_reduce(w)};
    return e;
}

CyclicPresentation rewrite_kernel(const TwoGeneratorPresentation& e, int f)
{
    const int n = e.n;
    if (n < 2)
        throw std::invalid_argument("rewrite_kernel needs n >= 2");
    if (e.relators.size() != 2)
        throw std::invalid_argument("rewrite_kernel expects exactly one relator besides t^n");
    const Word& rel = e.relators[1];
    long xsum = 0, tsum = 0;
    for (const auto& a : rel.letters())
        (a.gen == gen_x ? xsum : tsum) += a.sign;
    if (mod(static_cast<long>(f) * xsum + tsum, n) != 0)
        throw std::invalid_argument("no retraction x -> t^f kills the relator");

    // Coset t^c; reading x from t^c lands in t^(c+f) and contributes y_c.
    Word y(n);
    long c = 0;
    for (const auto& a : rel.letters()) {
        if (a.gen == gen_t) {
            c += a.sign;
        } else if (a.sign == 1) {
            y.push_back({mod(c, n), 1});
            c += f;
        } else {
            c -= f;
            y.push_back({mod(c, n), -1});
        }
    }
    return CyclicPresentation(free_reduce(y));
}

}  // namespace spine
