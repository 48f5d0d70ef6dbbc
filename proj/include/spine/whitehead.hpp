#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spine/presentation.hpp"

namespace spine {

// Vertices 0..n-1 are pos(i), n..2n-1 are neg(i).
class WhiteheadGraph {
public:
    using Edge = std::pair<int, int>;  // first <= second

    WhiteheadGraph() = default;
    explicit WhiteheadGraph(int rank);

    int rank() const { return n_; }
    int vertex_count() const { return 2 * n_; }
    int pos(int i) const;
    int neg(int i) const;
    bool is_pos(int v) const { return v < n_; }
    int index(int v) const { return v % n_; }
    std::string vertex_name(int v) const;

    void add_edge(int a, int b, long multiplicity = 1);
    const std::map<Edge, long>& edges() const { return edges_; }
    long multiplicity(int a, int b) const;
    long total_multiplicity() const;
    std::vector<Edge> loops() const;

    friend bool operator==(const WhiteheadGraph&, const WhiteheadGraph&) = default;

private:
    int n_ = 0;
    std::map<Edge, long> edges_;
};

WhiteheadGraph whitehead_graph(const CyclicPresentation& p);
WhiteheadGraph reduce_graph(const WhiteheadGraph& g);
bool is_connected(const WhiteheadGraph& g);
WhiteheadGraph shift_mixed_edges(const WhiteheadGraph& g, long d);
// Index shift i -> i + s on both pos and neg vertices.
WhiteheadGraph shift_graph(const WhiteheadGraph& g, long s);

// Darts 2e and 2e+1 are the two ends of edge e; dart 2e leaves edge_ends[e].first.
struct RotationSystem {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edge_ends;
    std::vector<std::vector<int>> rotation;  // per vertex, darts leaving it in cyclic order

    int tail(int dart) const;
    int head(int dart) const { return tail(dart ^ 1); }
    // Faces as cyclic dart sequences; the successor of d is the dart after
    // d^1 in the rotation at head(d).
    std::vector<std::vector<int>> faces() const;
    int component_count() const;  // isolated vertices count as components
    bool is_spherical() const;     // Euler's formula holds on every component
};

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> embedding;
};

// Loops are ignored; parallel copies are placed side by side so that
// consecutive copies bound 2-gons.
PlanarityResult is_planar(const WhiteheadGraph& g);

bool planarity_criterion_G(long k, long l, long n, long f);

using FaceCensus = std::map<int, long>;
FaceCensus face_census(const RotationSystem& rs);

enum class PatternType { TypeI5, TypeII7, TypeII11, None };
std::string pattern_name(PatternType t);

// Parametric targets: the circulant graph forced by the H word and the
// one forced by the G word.
WhiteheadGraph h_target_graph(long r, int n);
WhiteheadGraph g_target_graph(long k, long l, int n, long f);

PatternType match_family_pattern(const WhiteheadGraph& g, const FamilySpec& spec);

std::string to_dot(const WhiteheadGraph& g);

}  // namespace spine
