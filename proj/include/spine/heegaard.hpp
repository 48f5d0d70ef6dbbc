#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spine/scheme.hpp"

namespace spine {

// One strand joins a point on disc `a` to a point on disc `b`. Points on a
// disc are labelled 1..L, counted against the face orientation from the
// basepoint.
struct Strand {
    std::string a;
    int a_label = 0;
    std::string b;
    int b_label = 0;

    friend auto operator<=>(const Strand&, const Strand&) = default;
};

struct Bundle {
    std::string a;
    std::string b;
    long multiplicity = 0;

    friend bool operator==(const Bundle&, const Bundle&) = default;
};

struct HeegaardDiagram {
    std::vector<std::string> discs;  // cyclic arrangement
    std::vector<Strand> strands;     // sorted

    std::vector<Bundle> bundles() const;
    std::map<std::string, long> degrees() const;
    std::string str() const;

    friend bool operator==(const HeegaardDiagram&, const HeegaardDiagram&) = default;
};

// Each arc of the scheme lies on two faces and becomes a strand between the
// corresponding discs. Strands are stored with the F^+ end first when there
// is one.
HeegaardDiagram heegaard_from_scheme(const FacePairingScheme& s);

// Diagram of the H(r,n) face pairing, discs ordered F_{ir}^+ then F_{ir+1}^-.
// Requires r > 1 and gcd(r,n) = 1.
HeegaardDiagram heegaard_H(int r, int n);

// Index map F_i^s -> F_{i+shift}^s on every strand.
HeegaardDiagram rotate_diagram(const HeegaardDiagram& d, int n, int shift);

// Checks invariance under F_i -> F_{i+r} and folds every disc onto F^+ or F^-.
// Throws std::domain_error naming the first bundle that is not invariant.
HeegaardDiagram rho_quotient(const HeegaardDiagram& d, int n, int r);

// Two discs F^+, F^- with strands (F^+, j) -- (F^-, j+1 mod r), j = 1..r.
HeegaardDiagram canonical_lens_diagram(int r);

}  // namespace spine
