#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spine/presentation.hpp"

namespace spine {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial monomial(BigInt c, std::size_t degree);
    // t^m + c
    static IntPolynomial binomial(std::size_t m, long c);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    // Remainder modulo t^m - 1.
    IntPolynomial mod_cyclic(std::size_t m) const;

    std::string str() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Either a finite order or INFINITE.
struct GroupOrder {
    bool infinite = false;
    BigInt value = 0;

    static GroupOrder finite(BigInt v) { return {false, std::move(v)}; }
    static GroupOrder infinity() { return {true, 0}; }
    std::string str() const;
    friend bool operator==(const GroupOrder&, const GroupOrder&) = default;
};

struct AbelianInvariants {
    std::vector<BigInt> torsion;
    int free_rank = 0;

    GroupOrder order() const;
    std::string str() const;
};

struct FractionalParams {
    long k = 1;
    long l = 1;
};

IntPolynomial representer_polynomial(const CyclicPresentation& p);

// (1-t^2)(1 + t^f + ... + t^{(l-1)f}) + t^{lf+1}(1 + t^f + ... + t^{(k-1)f}),
// not reduced modulo t^n - 1.
IntPolynomial family_polynomial(long k, long l, long f);

// |Res(p, q)|; throws std::invalid_argument on a zero polynomial.
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

// Diagonal of the Smith normal form, absolute values, in order.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

AbelianInvariants abelian_invariants(const CyclicPresentation& p);
GroupOrder abelianization_order(const CyclicPresentation& p);

// (Res(p, t^{n/2} - 1), Res(p, t^{n/2} + 1)).
std::pair<BigInt, BigInt> resultant_split(const IntPolynomial& p, long n);

BigInt lucas_value(const FractionalParams& fp, long m);

struct Lemma42Forms {
    BigInt res_f0_plus;
    BigInt res_fhalf_plus;
    BigInt res_common_minus;
    BigInt direct_f0_plus;
    BigInt direct_fhalf_plus;
    BigInt direct_f0_minus;
    BigInt direct_fhalf_minus;

    bool consistent() const;
};

Lemma42Forms lemma42_closed_forms(const FractionalParams& fp, long n);

bool distinguish_f0_fhalf(const FractionalParams& fp, long n);

}  // namespace spine
