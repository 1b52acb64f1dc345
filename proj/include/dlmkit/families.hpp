#ifndef DLMKIT_FAMILIES_HPP
#define DLMKIT_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlmkit/graph.hpp"
#include "dlmkit/spectrum.hpp"

namespace dlm {

enum class Family {
    complete,
    path,
    cycle,
    star,
    complete_multipartite,
    star_plus_edge,              // K_{1,n-1} + e
    balanced_bipartite_plus_edge, // K_{n/2,n/2} + e, n even
    k2_join_empty,               // K_2 nabla (n-2)K_1
    k1_join_balanced_bipartite,  // K_1 nabla K_{(n-1)/2,(n-1)/2}, n odd
    balanced_tripartite,         // K_{n/3,n/3,n/3}, 3 | n
    j_graph,                     // J(a,b)
};

struct FamilySpec {
    Family family;
    int n = 0;               // ignored for complete_multipartite and j_graph
    std::vector<int> parts;  // complete_multipartite
    int a = 0, b = 0;        // j_graph

    int order() const;
};

/// Canonical labeled construction; parts occupy consecutive id blocks in
/// declaration order, J(a,b) is laid out root, a-side, root, b-side. Throws
/// InvalidArgument when the parameters violate the family's existence
/// conditions (parity, divisibility, minimum sizes).
Graph build(const FamilySpec& spec);

/// The members of the m(dl_1) = n-3 class for n >= 6: K_{2,n-2}, K_{1,n-1}+e,
/// K_{n/2,n/2}+e (n even), K_2 nabla (n-2)K_1, K_1 nabla K_{(n-1)/2,(n-1)/2}
/// (n odd), K_{n/3,n/3,n/3} (3 | n). Duplicate-free up to isomorphism.
std::vector<std::pair<FamilySpec, Graph>> classified_family_members(int n);

/// Exhaustively determined members for n = 4 and n = 5.
std::vector<std::pair<std::string, Graph>> small_n_members(int n);

/// The closed-form distance-Laplacian spectrum of one of the six classified
/// families; throws InvalidArgument for any other spec.
ExactSpectrum closed_form_dl_spectrum(const FamilySpec& spec);

/// CLI-facing names ("k2-join-empty", ...). Returns nothing for unknown names.
std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

} // namespace dlm

#endif
