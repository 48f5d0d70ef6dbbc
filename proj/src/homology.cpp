#include "spine/homology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spine {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(std::size_t m, long c)
{
    std::vector<BigInt> v(m + 1, 0);
    v[m] += 1;
    v[0] += c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const
{
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const
{
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::mod_cyclic(std::size_t m) const
{
    std::vector<BigInt> v(m, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i % m] += c_[i];
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        BigInt a = abs(c_[i]);
        if (first)
            out << (c_[i] < 0 ? "-" : "");
        else
            out << (c_[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            out << a;
        if (i > 0)
            out << 't';
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

std::string GroupOrder::str() const
{
    return infinite ? std::string("INFINITE") : value.str();
}

GroupOrder AbelianInvariants::order() const
{
    if (free_rank > 0)
        return GroupOrder::infinity();
    BigInt v = 1;
    for (const auto& d : torsion)
        v *= d;
    return GroupOrder::finite(v);
}

std::string AbelianInvariants::str() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& d : torsion) {
        out << (first ? "" : " + ") << "Z_" << d;
        first = false;
    }
    if (free_rank > 0) {
        out << (first ? "" : " + ") << "Z";
        if (free_rank > 1)
            out << '^' << free_rank;
        first = false;
    }
    if (first)
        out << '0';
    return out.str();
}

IntPolynomial representer_polynomial(const CyclicPresentation& p)
{
    auto ev = exponent_vector(p.defining_word());
    std::vector<BigInt> c(ev.begin(), ev.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial family_polynomial(long k, long l, long f)
{
    IntPolynomial a, b;
    for (long j = 0; j < l; ++j)
        a = a + IntPolynomial::monomial(1, j * f);
    for (long j = 0; j < k; ++j)
        b = b + IntPolynomial::monomial(1, l * f + 1 + j * f);
    IntPolynomial one_minus_t2({1, 0, -1});
    return one_minus_t2 * a + b;
}

namespace {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t i = k + 1;
            while (i < n && m[i][k] == 0)
                ++i;
            if (i == n)
                return 0;
            std::swap(m[i], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of a zero polynomial");
    const std::size_t dp = p.degree(), dq = q.degree();
    const std::size_t size = dp + dq;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t j = 0; j <= dp; ++j)
            s[r][r + j] = p.coeff(dp - j);
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t j = 0; j <= dq; ++j)
            s[dq + r][r + j] = q.coeff(dq - j);
    return abs(bareiss_determinant(std::move(s)));
}

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero |entry| in the trailing block, first in row-major order.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                for (std::size_t r = t; r < std::min(rows, cols); ++r)
                    diag.push_back(0);
                return diag;
            }
            std::swap(m[t], m[pi]);
            for (auto& row : m)
                std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Enforce divisibility of the remaining block by the pivot.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                m[t][j] += m[bad][j];
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

AbelianInvariants abelian_invariants(const CyclicPresentation& p)
{
    const int n = p.rank();
    std::vector<std::vector<BigInt>> m;
    for (int i = 0; i < n; ++i) {
        auto ev = exponent_vector(p.relator(i));
        m.emplace_back(ev.begin(), ev.end());
    }
    AbelianInvariants inv;
    for (const auto& d : smith_diagonal(std::move(m))) {
        if (d == 0)
            ++inv.free_rank;
        else if (d > 1)
            inv.torsion.push_back(d);
    }
    return inv;
}

GroupOrder abelianization_order(const CyclicPresentation& p)
{
    IntPolynomial rp = representer_polynomial(p);
    if (rp.is_zero())
        return GroupOrder::infinity();
    BigInt r = resultant(rp, IntPolynomial::binomial(p.rank(), -1));
    return r == 0 ? GroupOrder::infinity() : GroupOrder::finite(r);
}

std::pair<BigInt, BigInt> resultant_split(const IntPolynomial& p, long n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("resultant_split needs even n >= 2");
    return {resultant(p, IntPolynomial::binomial(n / 2, -1)),
            resultant(p, IntPolynomial::binomial(n / 2, 1))};
}

BigInt lucas_value(const FractionalParams& fp, long m)
{
    if (m < 0)
        throw std::invalid_argument("lucas_value needs m >= 0");
    BigInt a = 2, b = fp.k;
    if (m == 0)
        return a;
    const BigInt l2 = BigInt(fp.l) * fp.l;
    for (long i = 1; i < m; ++i) {
        BigInt c = fp.k * b + l2 * a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

bool Lemma42Forms::consistent() const
{
    return res_f0_plus == direct_f0_plus && res_fhalf_plus == direct_fhalf_plus &&
           res_common_minus == direct_f0_minus && res_common_minus == direct_fhalf_minus;
}

namespace {

void check_lemma_hypotheses(const FractionalParams& fp, long n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("n must be even and at least 2");
    if (fp.k < 1 || fp.l < 1 || fp.k % 2 != 0)
        throw std::invalid_argument("k must be positive and even, l positive");
    if (std::gcd(fp.k, fp.l) != 1)
        throw std::invalid_argument("k and l must be coprime");
}

}  // namespace

Lemma42Forms lemma42_closed_forms(const FractionalParams& fp, long n)
{
    check_lemma_hypotheses(fp, n);
    const long m = n / 2;
    const BigInt lm = pow(BigInt(fp.l), static_cast<unsigned>(m));
    const int sign = m % 2 == 0 ? 1 : -1;

    Lemma42Forms r;
    r.res_f0_plus = abs(lm * (sign + 1) + lucas_value(fp, m));
    r.res_fhalf_plus = 2 * lm * (1 + sign);

    IntPolynomial p0 = family_polynomial(fp.k, fp.l, 0);
    IntPolynomial ph = family_polynomial(fp.k, fp.l, m);
    std::tie(r.direct_f0_minus, r.direct_f0_plus) = resultant_split(p0, n);
    std::tie(r.direct_fhalf_minus, r.direct_fhalf_plus) = resultant_split(ph, n);
    r.res_common_minus = r.direct_f0_minus;
    return r;
}

bool distinguish_f0_fhalf(const FractionalParams& fp, long n)
{
    check_lemma_hypotheses(fp, n);
    auto a = abelianization_order(build_family(FamilySpec::G(fp.k, fp.l, n, 0)));
    auto b = abelianization_order(build_family(FamilySpec::G(fp.k, fp.l, n, n / 2)));
    return !(a == b);
}

}  // namespace spine
