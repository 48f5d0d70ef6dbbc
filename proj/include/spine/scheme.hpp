#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spine/presentation.hpp"

namespace spine {

struct Arc {
    int id = 0;
    int tail = 0;
    int head = 0;
    int label = 0;  // generator index
};

struct FaceSide {
    int arc = 0;
    int dir = 1;  // +1 tail to head, -1 head to tail
    friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

struct Face {
    std::string name;  // F_i^+ or F_i^-
    int relator = 0;
    int sign = 1;
    std::vector<FaceSide> boundary;  // cyclic
    int basepoint = 0;               // boundary index where relator i starts
};

// Boundary 2-sphere of a face-pairing polyhedron. Face 2i is F_i^+ and face
// 2i+1 is F_i^-; pairing[i][j] matches position j of F_i^+ with position j
// of F_i^-, both counted from the basepoints.
struct FacePairingScheme {
    int rank = 0;
    std::vector<std::string> vertices;
    std::vector<Arc> arcs;
    std::vector<Face> faces;
    std::vector<std::vector<std::pair<int, int>>> pairing;

    const Face& plus(int i) const { return faces[2 * i]; }
    const Face& minus(int i) const { return faces[2 * i + 1]; }
    // Arc at relator position j of a face, honouring the basepoint.
    FaceSide side_at(const Face& f, std::size_t j) const;
    int vertex_index(const std::string& name) const;
};

std::string face_name(int i, int sign);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool ok() const;
    const Check* first_failure() const;
    std::string str() const;
};

ValidationReport validate_scheme(const FacePairingScheme& s, const CyclicPresentation& p);

struct ArcOrbit {
    int label = 0;
    std::vector<int> arcs;       // identification cycle
    std::vector<int> relators;   // relator of the face carrying arcs[t] to arcs[t+1]
};

struct OrbitResult {
    std::vector<ArcOrbit> orbits;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
};

OrbitResult edge_orbits(const FacePairingScheme& s);

struct QuotientComplex {
    long V = 0;
    long E = 0;
    long F = 0;
    long C = 1;
    std::vector<int> vertex_orbit;  // smallest vertex of each class
    std::vector<int> arc_orbit;     // index into the orbit list
    std::vector<std::string> errors;

    long euler() const { return V - E + F - C; }
};

QuotientComplex quotient(const FacePairingScheme& s);

bool seifert_threlfall(const FacePairingScheme& s);

// Boundary 1-skeleton.
std::string scheme_to_dot(const FacePairingScheme& s);

}  // namespace spine
