#ifndef GALRED_DUALGRAPH_HPP
#define GALRED_DUALGRAPH_HPP

#include "galred/exactlin.hpp"

#include <map>
#include <string>
#include <vector>

namespace galred {

/**
 * Dual graph of a semistable fibre: vertices are components, edges are
 * ordinary double points, and each edge has exactly two endpoints living on
 * the normalisation. Loops and multiple edges are allowed, which is why
 * edges carry explicit endpoint identifiers instead of vertex pairs.
 *
 * phi maps an endpoint to its edge, psi to the vertex it lies on.
 */
struct DualGraph {
    std::vector<std::string> vertices;   // J
    std::vector<std::string> edges;      // I
    std::vector<std::string> endpoints;  // K
    std::map<std::string, std::string> phi;  // K -> I
    std::map<std::string, std::string> psi;  // K -> J

    /// Well-formedness: phi and psi total on K, ids known, and every edge
    /// has exactly two endpoints. Returns the list of violations.
    std::vector<std::string> validate() const;

    /// Identifier lists in sorted order (index spaces for matrices).
    std::vector<std::string> sorted_vertices() const;
    std::vector<std::string> sorted_edges() const;
    std::vector<std::string> sorted_endpoints() const;

    std::size_t connected_components() const;
};

/// Graph automorphism: bijections of K, I, J commuting with phi and psi.
struct GraphAut {
    std::map<std::string, std::string> piK, piI, piJ;

    static GraphAut identity(const DualGraph& g);
    std::vector<std::string> validate(const DualGraph& g) const;
    /// apply this first, then other
    GraphAut compose(const DualGraph& g, const GraphAut& other) const;
    bool operator==(const GraphAut&) const = default;
};

/// Boundary map Z^K -> Z^I x Z^J, endpoint k |-> e_{phi(k)} - e_{psi(k)}.
/// Rows are indexed by K in sorted order; columns are sorted I then sorted J.
IntMatrix boundary_matrix(const DualGraph& g);

/// H_1(graph, Z) as a saturated sublattice of Z^K.
struct H1Lattice {
    IntMatrix basis;     // rows = cycles in Z^K (sorted endpoint order)
    IntMatrix boundary;  // snapshot of the boundary matrix
    std::size_t rank() const { return basis.rows(); }
};
H1Lattice h1_lattice(const DualGraph& g);

/// Permutation matrix of piK on Z^K: P[k][piK(k)] = 1, so v |-> v*P pushes
/// cycle vectors forward and a |-> matrix(a) is a group homomorphism for
/// compose(a, b) = "a then b".
IntMatrix endpoint_permutation_matrix(const DualGraph& g, const GraphAut& a);

/// Action of a on H_1: unimodular integer matrix r with basis*P = r*basis.
IntMatrix action_on_h1(const DualGraph& g, const GraphAut& a, const H1Lattice& l);

/// Orbits of the vertex set under the supplied automorphisms, with a
/// representative (least id) and the supplied elements fixing it.
struct VertexOrbit {
    std::string representative;
    std::vector<std::string> members;            // sorted
    std::vector<std::size_t> stabilizer_indices; // indices into the input list
};
std::vector<VertexOrbit> component_orbits(const DualGraph& g,
                                          const std::vector<GraphAut>& elts);

}  // namespace galred

#endif
