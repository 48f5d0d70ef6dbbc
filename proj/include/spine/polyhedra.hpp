#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spine/presentation.hpp"
#include "spine/scheme.hpp"

namespace spine {

// Cyclic order of the letter positions 0..L-1 around each Whitehead vertex.
// At neg(g) the order is `order`; at pos(g) it is reversed. In alternating
// mode both are reversed again when g is odd.
struct LinkRotation {
    std::vector<int> order;
    bool alternating = false;
};

// Number of faces of the link embedding induced by a rotation.
long link_face_count(const Word& w, const LinkRotation& rot);

// Depth-first search over rotations with order[0] = 0, pruned whenever the
// corners among the placed positions already force positive genus. Returns
// the first rotation whose embedding is spherical and whose dual polyhedron
// passes validate_scheme. Alternating mode needs an even rank.
std::optional<LinkRotation> find_link_rotation(const CyclicPresentation& p, bool alternating);

// Dual polyhedron of the spherical link embedding. Throws std::invalid_argument
// when the rotation is not spherical or the faces cannot be consistently
// oriented.
FacePairingScheme scheme_from_rotation(const CyclicPresentation& p, const LinkRotation& rot);

bool is_supported_shape(long k, long l);

// H(r,n) with r > 1 and gcd(r,n) = 1, or G(k,l,n,f) / F(k,l,n) of a supported
// shape with n >= 4 even, f even and fk = 0 mod n. Throws std::invalid_argument
// otherwise.
FacePairingScheme build_scheme(const FamilySpec& spec);

// n and f even and fk = 0 mod n. Throws std::invalid_argument for n < 4,
// fk = 2 mod n or an unsupported shape.
bool spine_decision(long k, long l, long n, long f);

struct OddFObstruction {
    long duplicated_face_index = 0;  // lf+1 mod n
    bool even = false;
    std::vector<std::string> trace;
};

// Requires n even, fk = 0 mod n, f odd and gcd(k,l) = 1. Throws
// std::invalid_argument otherwise.
OddFObstruction odd_f_obstruction(long k, long l, long n, long f);

}  // namespace spine
